#pragma once

#include <complex>
#include <string>

#include "coflab/errors.hpp"

namespace coflab::hyp {

using cplx = std::complex<double>;

enum class MapClass { Identity, Hyperbolic, Parabolic, Elliptic };

// Classification tolerance on |tr| - 2. Built-in groups have rational
// entries, so nothing lands inside the ambiguous band.
inline constexpr double kClassifyTol = 1e-9;

// A PSL(2,R) element as a real 2x2 matrix with ad - bc = 1, stored with the
// first nonzero entry of (a,b,c,d) positive so that equality of rounded
// entries identifies elements.
struct MoebiusMap {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    MoebiusMap() = default;
    MoebiusMap(double a_, double b_, double c_, double d_);

    static MoebiusMap identity() { return MoebiusMap(); }

    double trace() const { return a + d; }
    double frobeniusNorm() const;
    MoebiusMap inverse() const { return MoebiusMap(d, -b, -c, a); }
    bool isIdentity(double tol = 1e-12) const;

    friend MoebiusMap operator*(const MoebiusMap& lhs, const MoebiusMap& rhs);
    bool sameEntries(const MoebiusMap& other, double tol = 1e-9) const;

  private:
    void normalize();
};

struct PointUHP {
    cplx z;
    explicit PointUHP(cplx z_);
};

struct PointDisc {
    cplx z;
    explicit PointDisc(cplx z_);
};

PointUHP apply(const MoebiusMap& map, const PointUHP& z);
cplx derivative(const MoebiusMap& map, cplx z);
MapClass classify(const MoebiusMap& map);
double multiplier(const MoebiusMap& map);

// u(z,w) = |z-w|^2 / (4 Im z Im w), invariant under the diagonal action.
double pointPairInvariant(const PointUHP& z, const PointUHP& w);

// h(z) = i(1+z)/(1-z) maps the unit disc onto the upper half-plane.
PointUHP cayley(const PointDisc& z);
PointDisc cayleyInv(const PointUHP& z);
cplx cayleyMap(cplx z);
cplx cayleyDeriv(cplx z);

std::string mapClassName(MapClass cls);

} // namespace coflab::hyp
