#pragma once

#include <complex>
#include <optional>

#include "coflab/beltrami.hpp"
#include "coflab/quad.hpp"

namespace coflab::contrib {

using cplx = std::complex<double>;
using beltrami::CuspCoeffs;
using beltrami::EllipticCoeffs;
using quad::QuadSpec;

// Identity contribution -(6n^2-6n+1)/(12 pi) <mu,nu>_WP, with the two
// coefficient groups its derivation splits into.
struct IdentityContribution {
    double total;
    double xyCoefficient; // -(3n-2)/(12 pi)
    double zCoefficient;  // -(n-1)(2n-1)/(4 pi)
};
IdentityContribution identityContribution(int n, double wp);

struct TermMeta {
    double errSum = 0.0;
    double errMax = 0.0;
    long evals = 0;
    long integrals = 0;
    bool allConverged = true;
};

// Parabolic contribution, term by term. X, Y, Z2 are the l-sum series (paired
// over +-l, so each is real); Z1 = (pi/9) <mu,mu>_TZ. The l tail beyond
// ellMax is bounded through the trigamma correction and folded into the
// error channel.
struct ParabolicTerms {
    double X = 0.0;
    double Y = 0.0;
    double Z1 = 0.0;
    double Z2 = 0.0;
    double total = 0.0;
    int ellMax = 0;
    double tailBound = 0.0;
    double errEstimate = 0.0; // quadrature error + tail
    TermMeta meta;
};
ParabolicTerms parabolicTerms(int n, const CuspCoeffs& c, int ellMax, const QuadSpec& spec,
                              ExecPolicy policy = ExecPolicy::Serial);

// n = 1 parabolic term: the y-integral route and the closed form.
struct ParabolicN1 {
    double viaIntegral;
    double closedForm;
    double errEstimate;
};
ParabolicN1 parabolicN1(const CuspCoeffs& c, const QuadSpec& spec);

// Elliptic contribution, term by term. total = X + Y + Z must match the
// boundary terms A0 + B0 + C0 and equals B(m,n) <mu,mu>_TZ.
struct EllipticTerms {
    cplx X{0.0, 0.0};
    cplx Y{0.0, 0.0};
    cplx Z{0.0, 0.0};
    cplx A0{0.0, 0.0};
    cplx B0{0.0, 0.0};
    cplx C0{0.0, 0.0};
    cplx total{0.0, 0.0};
    double boundaryResidual = 0.0; // |total - (A0+B0+C0)|
    double errEstimate = 0.0;
    TermMeta meta;
};
EllipticTerms ellipticTerms(int n, const EllipticCoeffs& e, const QuadSpec& spec,
                            ExecPolicy policy = ExecPolicy::Serial);

struct EllipticN1 {
    double viaIntegral;
    double closedForm;
    double errEstimate;
};
EllipticN1 ellipticN1(const EllipticCoeffs& e, const QuadSpec& spec);

// Q(i, lambda): the post-contour y-integral against its closed form
// (n-1) lambda^{1-n}/(lambda-1) + lambda^{2-n}/(lambda-1)^2.
struct HyperbolicQ {
    double integralValue;
    double closedForm;
    double errEstimate;
};
HyperbolicQ hyperbolicQ(int n, double lambda, const QuadSpec& spec);
double hyperbolicQClosed(int n, double lambda);

// Variation of the local zeta factor prod_k (1 - lambda0^{-k-n}):
// sum_{l>=1} [ (n-1) L^{l(1-n)}/(L^l-1) + L^{l(2-n)}/(L^l-1)^2 ] lDot, with a
// geometric bound on the l tail.
struct LocalZetaVariation {
    double value;
    double tailBound;
    int terms;
};
LocalZetaVariation localZetaVariation(int n, double lambda0, double lDot, int ellMax);

// Per-class factor: Q(i, lambda) * lDot (the closed form).
double perClassVariation(int n, double lambda, double lDot);

// lambdaDot/lambda = (1/pi) int_{S_lambda0} f(zeta)/zeta^2; f must be
// invariant under zeta -> lambda0 zeta and decay like |zeta|^{-2} in x.
quad::QuadResult multiplierVariation(const quad::FnC& f, double lambda0,
                                     const QuadSpec& spec);

// Vanishing checks for the weight-one chain: the strip integral P of the cusp
// datum and the disc moment integral Q of the elliptic datum, both zero by
// the angular/x integration.
struct VanishingChecks {
    cplx P{0.0, 0.0};
    cplx Q{0.0, 0.0};
    double errEstimate = 0.0;
};
VanishingChecks n1VanishingChecks(const CuspCoeffs* c, const EllipticCoeffs* e,
                                  const QuadSpec& spec);

// Slow cross-check: one (l) term of the elliptic X as an unreduced double
// disc integral on a tensor grid, against its radial reduction.
struct FourDSpotCheck {
    cplx fourD;
    cplx radial;
    double relDiff;
    long evals;
};
FourDSpotCheck ellipticX4DSpotCheck(int n, const EllipticCoeffs& e, int l,
                                    ExecPolicy policy = ExecPolicy::Serial);

} // namespace coflab::contrib
