#pragma once

#include <complex>

#include "coflab/errors.hpp"

namespace coflab::specfun {

using cplx = std::complex<double>;

// Principal branch of log Gamma, valid away from the poles at 0, -1, -2, ...
cplx gammaLn(cplx z);

// log of the Barnes G-function on (0, inf), normalized by G(1) = 1 and
// G(z+1) = Gamma(z) G(z). Computed by the large-z asymptotic expansion and
// downward recursion through the functional equation below z = 10.
double barnesGLn(double z);
inline constexpr double kBarnesAsymptoticThreshold = 10.0;

// The double gamma normalization is not unique in the literature; both
// conventions are exposed and determinant reports record which one was used.
//   VardiFactor:  Gamma_2(z) = (2 pi)^{(z-1)/2} / G(z)
//   InverseG:     Gamma_2(z) = 1 / G(z)
enum class Gamma2Convention { VardiFactor, InverseG };
double gamma2Ln(double z, Gamma2Convention conv = Gamma2Convention::VardiFactor);
const char* toString(Gamma2Convention conv);

// Least positive residue of k modulo m, in [1, m] (value m when m | k).
long alphaResidue(long m, long k);

// Bernoulli polynomials B1(x) = x - 1/2, B2(x) = x^2 - x + 1/6.
double bernoulli(int deg, double x);

// Fractional part of (n-1)/m computed in integer arithmetic.
double fracResidue(long m, long n);

enum class RootSumKind { FirstOrder, SecondOrder };

// Closed forms of the root-of-unity sums
//   sum_{l=1}^{m-1} w^{ln} / (1 - w^l)       (FirstOrder)
//   sum_{l=1}^{m-1} w^{ln} / (1 - w^l)^2     (SecondOrder)
// with w = e^{2 pi i / m}; both are real.
double rootOfUnitySum(RootSumKind kind, long m, long n);

// Direct l-sum companion for oracle comparison, with (l, m-l) terms paired
// so the imaginary parts cancel before the total is formed.
cplx rootOfUnitySumDirect(RootSumKind kind, long m, long n);

enum class ConvolutionKind { SK, SS };

// Closed forms of the finite convolution sums (k a multiple of m, w = e^{2 pi i/m}):
//   SK: sum_{s=1}^{k-1} s(k-s) w^{l(s-1)}   = 2k / (1-w^l)^2
//   SS: sum_{s=2}^{k}   s(s-1) w^{l(k-s)}   = (k(k-1) - k(k+1) w^l) / (1-w^l)^2
cplx finiteConvolutionSum(ConvolutionKind kind, long k, long m, long l);
cplx finiteConvolutionSumDirect(ConvolutionKind kind, long k, long m, long l);

// Elliptic-contribution constant
//   B(m,n) = (m/4)[B2({(n-1)/m}) - 1/(6m^2)] - ((n-1)/2)[B1({(n-1)/m}) + 1/(2m)].
double bConstant(long m, long n);

// Equivalent form -(1/2m)[S2(m,n) + (n-1) S1(m,n)] built from the direct
// root-of-unity sums; kept as the dual route for verification.
double bConstantViaRootSums(long m, long n);

// zeta'(-1) = 1/12 - log A (A the Glaisher-Kinkelin constant), evaluated by
// Euler-Maclaurin summation differentiated at s = -1.
double zetaPrimeMinusOne();

// trigamma(x) = sum_{k>=0} (x+k)^{-2}; used for l^{-2} tail corrections.
double trigamma(double x);

} // namespace coflab::specfun
