#include "coflab/hyperbolic.hpp"

#include <cmath>

namespace coflab::hyp {

MoebiusMap::MoebiusMap(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
    normalize();
}

void MoebiusMap::normalize() {
    double det = a * d - b * c;
    if (!(det > 0.0) || !std::isfinite(det)) {
        throw DomainError("MoebiusMap: determinant must be positive and finite");
    }
    double s = std::sqrt(det);
    a /= s;
    b /= s;
    c /= s;
    d /= s;

    // Canonical sign: first entry of magnitude above the noise floor decides.
    const double* entries[4] = {&a, &b, &c, &d};
    for (const double* e : entries) {
        if (std::fabs(*e) > 1e-12) {
            if (*e < 0) {
                a = -a;
                b = -b;
                c = -c;
                d = -d;
            }
            break;
        }
    }
}

double MoebiusMap::frobeniusNorm() const {
    return std::sqrt(a * a + b * b + c * c + d * d);
}

bool MoebiusMap::isIdentity(double tol) const {
    return std::fabs(a - 1.0) < tol && std::fabs(b) < tol && std::fabs(c) < tol &&
           std::fabs(d - 1.0) < tol;
}

MoebiusMap operator*(const MoebiusMap& lhs, const MoebiusMap& rhs) {
    return MoebiusMap(lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
                      lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d);
}

bool MoebiusMap::sameEntries(const MoebiusMap& other, double tol) const {
    return std::fabs(a - other.a) < tol && std::fabs(b - other.b) < tol &&
           std::fabs(c - other.c) < tol && std::fabs(d - other.d) < tol;
}

PointUHP::PointUHP(cplx z_) : z(z_) {
    if (!(z.imag() > 0.0)) throw DomainError("PointUHP: Im z must be positive");
}

PointDisc::PointDisc(cplx z_) : z(z_) {
    if (!(std::abs(z) < 1.0)) throw DomainError("PointDisc: |z| must be < 1");
}

PointUHP apply(const MoebiusMap& map, const PointUHP& z) {
    cplx num = map.a * z.z + map.b;
    cplx den = map.c * z.z + map.d;
    return PointUHP(num / den);
}

cplx derivative(const MoebiusMap& map, cplx z) {
    cplx den = map.c * z + map.d;
    if (std::abs(den) < 1e-300) throw PoleAtPoint("derivative: cz + d vanishes");
    return 1.0 / (den * den);
}

MapClass classify(const MoebiusMap& map) {
    if (map.isIdentity(kClassifyTol)) return MapClass::Identity;
    double t = std::fabs(map.trace());
    if (t > 2.0 + kClassifyTol) return MapClass::Hyperbolic;
    if (t > 2.0 - kClassifyTol) return MapClass::Parabolic;
    return MapClass::Elliptic;
}

double multiplier(const MoebiusMap& map) {
    if (classify(map) != MapClass::Hyperbolic) {
        throw NotHyperbolic("multiplier: map is not hyperbolic");
    }
    double t = std::fabs(map.trace());
    double half = 0.5 * (t + std::sqrt(t * t - 4.0));
    return half * half;
}

double pointPairInvariant(const PointUHP& z, const PointUHP& w) {
    double num = std::norm(z.z - w.z);
    return num / (4.0 * z.z.imag() * w.z.imag());
}

cplx cayleyMap(cplx z) {
    cplx den = 1.0 - z;
    if (std::abs(den) < 1e-300) throw PoleAtPoint("cayley: pole at z = 1");
    return cplx(0.0, 1.0) * (1.0 + z) / den;
}

cplx cayleyDeriv(cplx z) {
    cplx den = 1.0 - z;
    if (std::abs(den) < 1e-300) throw PoleAtPoint("cayleyDeriv: pole at z = 1");
    return cplx(0.0, 2.0) / (den * den);
}

PointUHP cayley(const PointDisc& z) { return PointUHP(cayleyMap(z.z)); }

PointDisc cayleyInv(const PointUHP& z) {
    return PointDisc((z.z - cplx(0.0, 1.0)) / (z.z + cplx(0.0, 1.0)));
}

std::string mapClassName(MapClass cls) {
    switch (cls) {
        case MapClass::Identity: return "identity";
        case MapClass::Hyperbolic: return "hyperbolic";
        case MapClass::Parabolic: return "parabolic";
        case MapClass::Elliptic: return "elliptic";
    }
    return "unknown";
}

} // namespace coflab::hyp
