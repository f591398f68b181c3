#include "coflab/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace coflab::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos g = 7, n = 9.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

cplx gammaLnCore(cplx z) {
    // requires Re z >= 0.5
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + cplx(i - 1, 0));
    cplx t = z + 6.5;
    return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(x);
}

bool isNonpositiveInteger(cplx z) {
    if (std::fabs(z.imag()) > 1e-14) return false;
    double r = z.real();
    return r <= 1e-14 && std::fabs(r - std::round(r)) < 1e-12;
}

// Bernoulli numbers B_2, B_4, ..., B_16.
constexpr std::array<double, 8> kBernoulliEven = {
    1.0 / 6.0,  -1.0 / 30.0,    1.0 / 42.0,  -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0};

// Euler-Maclaurin zeta and zeta' at real s (used only at s = -1 here, but
// valid for any s where the tail terms decay).
struct ZetaEM {
    double zeta;
    double zetaPrime;
};

ZetaEM zetaWithDerivative(double s, int N, int J) {
    double z = 0.0, zp = 0.0;
    for (int n = 1; n < N; ++n) {
        double ns = std::pow(double(n), -s);
        z += ns;
        zp -= std::log(double(n)) * ns;
    }
    double lnN = std::log(double(N));
    double Nms = std::pow(double(N), -s);

    z += 0.5 * Nms;
    zp -= 0.5 * lnN * Nms;

    double N1ms = std::pow(double(N), 1.0 - s);
    z += N1ms / (s - 1.0);
    zp += -lnN * N1ms / (s - 1.0) - N1ms / ((s - 1.0) * (s - 1.0));

    // Correction terms B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}.
    double fact = 1.0;
    for (int j = 1; j <= J; ++j) {
        fact *= (2.0 * j) * (2.0 * j - 1.0);
        int nf = 2 * j - 1;
        double P = 1.0, Pp = 0.0; // product and its s-derivative
        for (int i = 0; i < nf; ++i) {
            Pp = Pp * (s + i) + P;
            P *= (s + i);
        }
        double Npow = std::pow(double(N), -s - 2.0 * j + 1.0);
        double coeff = kBernoulliEven[j - 1] / fact;
        z += coeff * P * Npow;
        zp += coeff * (Pp - lnN * P) * Npow;
    }
    return {z, zp};
}

} // namespace

cplx gammaLn(cplx z) {
    if (isNonpositiveInteger(z)) {
        throw PoleAtNonpositiveInteger("gammaLn: pole at nonpositive integer");
    }
    if (z.real() >= 0.5) return gammaLnCore(z);
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return std::log(kPi / std::sin(kPi * z)) - gammaLnCore(1.0 - z);
}

double barnesGLn(double z) {
    if (!(z > 0.0)) throw DomainError("barnesGLn: requires z > 0");

    // ln G(x) = ln G(x + m) - sum_{j=0..m-1} ln Gamma(x + j), with x + m large
    // enough for the asymptotic series.
    double shift = 0.0;
    double x = z;
    while (x < kBarnesAsymptoticThreshold + 1.0) {
        shift += std::real(gammaLn(cplx(x, 0.0)));
        x += 1.0;
    }

    // Asymptotic expansion of ln G(w+1) at w = x - 1 (DLMF 5.17.5 form):
    // w^2/4 + w lnGamma(w+1) - (w(w+1)/2 + 1/12) ln w - ln A + sum_k B_{2k+2}/(2k(2k+1)(2k+2) w^{2k}).
    double w = x - 1.0;
    double lnA = 1.0 / 12.0 - zetaPrimeMinusOne();
    double lg = std::real(gammaLn(cplx(w + 1.0, 0.0)));
    double res = 0.25 * w * w + w * lg - (0.5 * w * (w + 1.0) + 1.0 / 12.0) * std::log(w) - lnA;
    double w2 = w * w;
    double wpow = w2;
    for (int k = 1; k <= 6; ++k) {
        double B = kBernoulliEven[k]; // B_{2k+2}
        res += B / (2.0 * k * (2.0 * k + 1.0) * (2.0 * k + 2.0) * wpow);
        wpow *= w2;
    }
    return res - shift;
}

double gamma2Ln(double z, Gamma2Convention conv) {
    double g = barnesGLn(z);
    switch (conv) {
        case Gamma2Convention::VardiFactor:
            return 0.5 * (z - 1.0) * std::log(2.0 * kPi) - g;
        case Gamma2Convention::InverseG:
            return -g;
    }
    return -g;
}

const char* toString(Gamma2Convention conv) {
    return conv == Gamma2Convention::VardiFactor ? "vardi-factor" : "inverse-barnes-g";
}

long alphaResidue(long m, long k) {
    if (m < 2) throw DomainError("alphaResidue: m must be >= 2");
    long r = ((k % m) + m) % m;
    return r == 0 ? m : r;
}

double bernoulli(int deg, double x) {
    switch (deg) {
        case 1: return x - 0.5;
        case 2: return x * x - x + 1.0 / 6.0;
        default: throw UnsupportedDegree("bernoulli: degree must be 1 or 2");
    }
}

double fracResidueNumerator(long m, long n) {
    long r = (((n - 1) % m) + m) % m;
    return double(r);
}

double fracResidue(long m, long n) { return fracResidueNumerator(m, n) / double(m); }

double rootOfUnitySum(RootSumKind kind, long m, long n) {
    if (m < 2) throw DomainError("rootOfUnitySum: m must be >= 2");
    double frac = fracResidue(m, n);
    switch (kind) {
        case RootSumKind::FirstOrder:
            return double(m) * (bernoulli(1, frac) + 0.5 / double(m));
        case RootSumKind::SecondOrder:
            return -0.5 * double(m) * double(m) *
                   (bernoulli(2, frac) - 1.0 / (6.0 * double(m) * double(m)));
    }
    throw DomainError("rootOfUnitySum: bad kind");
}

namespace {

// w^p for w = e^{2 pi i / m}, with the exponent reduced mod m first so the
// phase stays accurate for large p.
cplx unityPower(long m, long p) {
    long r = ((p % m) + m) % m;
    return std::polar(1.0, 2.0 * kPi * double(r) / double(m));
}

// The direct sums are oracles for 1e-12 claims, so they run in long double;
// k^2-sized terms would otherwise leave ~1e-10 of phase-rounding residue.
using lcplx = std::complex<long double>;
constexpr long double kPiL = 3.141592653589793238462643383279502884L;

lcplx unityPowerL(long m, long p) {
    long r = ((p % m) + m) % m;
    long double phi = 2.0L * kPiL * (long double)r / (long double)m;
    return {std::cos(phi), std::sin(phi)};
}

lcplx rootSumTerm(RootSumKind kind, long m, long n, long l) {
    lcplx w = unityPowerL(m, l);
    lcplx den = 1.0L - w;
    lcplx num = unityPowerL(m, l * n);
    return kind == RootSumKind::FirstOrder ? num / den : num / (den * den);
}

} // namespace

cplx rootOfUnitySumDirect(RootSumKind kind, long m, long n) {
    if (m < 2) throw DomainError("rootOfUnitySumDirect: m must be >= 2");
    lcplx total = 0.0L;
    for (long l = 1; 2 * l < m; ++l) {
        lcplx t = rootSumTerm(kind, m, n, l);
        lcplx tc = rootSumTerm(kind, m, n, m - l);
        total += lcplx(t.real() + tc.real(), t.imag() + tc.imag());
    }
    if (m % 2 == 0) total += rootSumTerm(kind, m, n, m / 2);
    return cplx((double)total.real(), (double)total.imag());
}

cplx finiteConvolutionSum(ConvolutionKind kind, long k, long m, long l) {
    if (m < 2) throw DomainError("finiteConvolutionSum: m must be >= 2");
    if (k % m != 0) throw DomainError("finiteConvolutionSum: k must be a multiple of m");
    if (l < 1 || l > m - 1) throw DomainError("finiteConvolutionSum: l must be in [1, m-1]");
    cplx w = unityPower(m, l);
    cplx den2 = (1.0 - w) * (1.0 - w);
    switch (kind) {
        case ConvolutionKind::SK: return 2.0 * double(k) / den2;
        case ConvolutionKind::SS:
            return (double(k) * double(k - 1) - double(k) * double(k + 1) * w) / den2;
    }
    throw DomainError("finiteConvolutionSum: bad kind");
}

cplx finiteConvolutionSumDirect(ConvolutionKind kind, long k, long m, long l) {
    if (m < 2) throw DomainError("finiteConvolutionSumDirect: m must be >= 2");
    if (k % m != 0) throw DomainError("finiteConvolutionSumDirect: k must be a multiple of m");
    if (l < 1 || l > m - 1) throw DomainError("finiteConvolutionSumDirect: l must be in [1, m-1]");
    lcplx total = 0.0L;
    if (kind == ConvolutionKind::SK) {
        for (long s = 1; s <= k - 1; ++s) {
            total += (long double)(s * (k - s)) * unityPowerL(m, l * (s - 1));
        }
    } else {
        for (long s = 2; s <= k; ++s) {
            total += (long double)(s * (s - 1)) * unityPowerL(m, l * (k - s));
        }
    }
    return cplx((double)total.real(), (double)total.imag());
}

double bConstant(long m, long n) {
    if (m < 2) throw DomainError("bConstant: m must be >= 2");
    if (n < 1) throw DomainError("bConstant: n must be >= 1");
    double frac = fracResidue(m, n);
    double dm = double(m);
    return 0.25 * dm * (bernoulli(2, frac) - 1.0 / (6.0 * dm * dm)) -
           0.5 * double(n - 1) * (bernoulli(1, frac) + 0.5 / dm);
}

double bConstantViaRootSums(long m, long n) {
    if (m < 2) throw DomainError("bConstantViaRootSums: m must be >= 2");
    if (n < 1) throw DomainError("bConstantViaRootSums: n must be >= 1");
    cplx s1 = rootOfUnitySumDirect(RootSumKind::FirstOrder, m, n);
    cplx s2 = rootOfUnitySumDirect(RootSumKind::SecondOrder, m, n);
    cplx v = -(s2 + double(n - 1) * s1) / (2.0 * double(m));
    return v.real();
}

double zetaPrimeMinusOne() {
    static const double value = zetaWithDerivative(-1.0, 40, 8).zetaPrime;
    return value;
}

double trigamma(double x) {
    if (!(x > 0.0)) throw DomainError("trigamma: requires x > 0");
    double acc = 0.0;
    while (x < 12.0) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    // psi'(x) ~ 1/x + 1/(2x^2) + sum_k B_{2k} / x^{2k+1}
    double inv = 1.0 / x, inv2 = inv * inv;
    double res = inv + 0.5 * inv2;
    double p = inv * inv2;
    for (int k = 0; k < 5; ++k) {
        res += kBernoulliEven[k] * p;
        p *= inv2;
    }
    return res + acc;
}

} // namespace coflab::specfun
