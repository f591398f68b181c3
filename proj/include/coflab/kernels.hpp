#pragma once

#include <complex>
#include <functional>
#include <span>
#include <utility>

#include "coflab/hyperbolic.hpp"
#include "coflab/quad.hpp"

namespace coflab::kernels {

using cplx = std::complex<double>;
using hyp::PointDisc;
using hyp::PointUHP;

struct KernelParams {
    int n = 0;       // weight
    cplx s = 2.0;    // spectral parameter; series evaluation needs Re s > 0
    int kMax = 8000; // hard cap on series terms

    KernelParams() = default;
    KernelParams(int n_, cplx s_, int kMax_ = 8000) : n(n_), s(s_), kMax(kMax_) {}
};

// Weight-n projection kernel (-1)^n 2^{2n-2}(2n-1)/pi (z - conj w)^{-2n}.
cplx kProj(int n, const PointUHP& z, const PointUHP& w);

// Free Green's kernel of 2(Delta_0 + 2)^{-1}: (2u+1)/(2 pi) log((u+1)/u) - 1/pi.
double greensG(double u);
double greensGDisc(const PointDisc& z, const PointDisc& w);

// Point-pair invariant in disc coordinates, |z-w|^2 / ((1-|z|^2)(1-|w|^2)).
double pointPairInvariantDisc(const PointDisc& z, const PointDisc& w);

struct SeriesValue {
    cplx value = 0.0;
    double tailBound = 0.0;
    int terms = 0;
};

// Resolvent radial profile
//   Psi_{n,s}(u) = (1/4pi) sum_k Gamma(s+k) Gamma(s+2n+k) / (k! Gamma(2s+2n+k)) (u+1)^{-k-s},
// truncated once the geometric tail bound drops below absTol. s = 0 takes the
// logarithmic branch (1/4pi) log(1/u).
SeriesValue resolventPsi(const KernelParams& params, double u, double absTol = 1e-14);

// Free resolvent kernel G_{n,s}(z,w) = Psi_{n,s}(u(z,w)) * (-4)^n (z - conj w)^{-2n}.
cplx freeResolvent(const KernelParams& params, const PointUHP& z, const PointUHP& w,
                   double* tailBound = nullptr);

// Both sides of the derivative identity linking G_{n,0} and G_{n-1,1}:
// closed form -(1/4pi)(z-w)^{-2} (-4)^{n-1} (z - conj w)^{2-2n} against the
// term-wise differentiated Psi_{n-1,1} series.
std::pair<cplx, cplx> resolventDerivIdentity(int n, const PointUHP& z, const PointUHP& w,
                                             double absTol = 1e-12);

// Closed-form kernel of the regularized first variation (upper half-plane and
// disc versions).
cplx xiKernel(cplx zeta, cplx z, cplx w);
cplx xiKernelDisc(cplx zeta, cplx z, cplx w);

// Closed form of the transported second-variation kernel on the disc.
cplx lambdaKernel(cplx z, cplx zeta, cplx eta);

using HoloFn = std::function<cplx(cplx)>;

// Reproducing identity: projected = (3/pi) int_D (1-|w|^2)^2 phi(w) / (1-z conj w)^4,
// direct = phi(z).
std::pair<cplx, cplx> bergmanReproduce(const HoloFn& phi, const PointDisc& z,
                                       const quad::QuadSpec& spec);

using DiscBeltrami = std::function<cplx(cplx)>; // harmonic Beltrami datum on the disc

// First variation of H(z,w) = (z - conj w)^{-2n} against a Beltrami datum
// given in disc coordinates. The default route rewrites the singular integral
// through the xi kernel, so the integrand is regular; the raw route keeps the
// double pole and is evaluated by the pole-aware disc rule (slow, kept as a
// cross-check).
cplx lMuH(const DiscBeltrami& muDisc, int n, const PointUHP& z, const PointUHP& w,
          const quad::QuadSpec& spec);
cplx lMuHRaw(const DiscBeltrami& muDisc, int n, const PointUHP& z, const PointUHP& w,
             const quad::QuadSpec& spec);

// Wirtinger d/d conj(z) of lMuH by central differences in Re z and Im z.
cplx lMuHDBar(const DiscBeltrami& muDisc, int n, const PointUHP& z, const PointUHP& w,
              const quad::QuadSpec& spec, double step = 1e-4);

struct PoincareResult {
    cplx value = 0.0;
    double tailEstimate = 0.0;
    long terms = 0;
    bool shellsDecaying = false;
};

// Poincare sum G_{n,s}(z,w) = sum_gamma G_{n,s}(gamma z, w) gamma'(z)^n over an
// enumerated element set, accumulated in Frobenius-norm shells. The tail
// estimate extrapolates the last shell geometrically; it is reported, never
// certified.
PoincareResult poincareSum(std::span<const hyp::MoebiusMap> elements,
                           const KernelParams& params, const PointUHP& z,
                           const PointUHP& w,
                           ExecPolicy policy = ExecPolicy::Serial);

} // namespace coflab::kernels
