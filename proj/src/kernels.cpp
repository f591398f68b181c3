#include "coflab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "coflab/specfun.hpp"

namespace coflab::kernels {

namespace {

constexpr double kPi = std::numbers::pi;

cplx ipow(cplx base, int n) {
    cplx r = 1.0;
    cplx b = base;
    int e = std::abs(n);
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return n >= 0 ? r : 1.0 / r;
}

double sign_pow(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

} // namespace

cplx kProj(int n, const PointUHP& z, const PointUHP& w) {
    if (n < 1) throw DomainError("kProj: n must be >= 1");
    cplx den = ipow(z.z - std::conj(w.z), 2 * n);
    return sign_pow(n) * std::ldexp(1.0, 2 * n - 2) * (2.0 * n - 1.0) / kPi / den;
}

double greensG(double u) {
    if (!(u > 0.0)) throw CoincidentPoints("greensG: requires u > 0");
    if (u > 8.0) {
        // (1/2pi) sum_{j>=2} (-1)^j (j-1)/(j(j+1)) u^{-j}; the closed form
        // cancels to rounding noise out here.
        double x = 1.0 / u;
        double xp = x * x;
        double s = 0.0;
        for (int j = 2; j < 40; ++j) {
            double term = ((j % 2 == 0) ? 1.0 : -1.0) * double(j - 1) /
                          (double(j) * double(j + 1)) * xp;
            s += term;
            if (std::fabs(term) < 1e-20 * std::fabs(s)) break;
            xp *= x;
        }
        return s / (2.0 * kPi);
    }
    return (2.0 * u + 1.0) / (2.0 * kPi) * std::log1p(1.0 / u) - 1.0 / kPi;
}

double pointPairInvariantDisc(const PointDisc& z, const PointDisc& w) {
    return std::norm(z.z - w.z) / ((1.0 - std::norm(z.z)) * (1.0 - std::norm(w.z)));
}

double greensGDisc(const PointDisc& z, const PointDisc& w) {
    return greensG(pointPairInvariantDisc(z, w));
}

SeriesValue resolventPsi(const KernelParams& params, double u, double absTol) {
    const int n = params.n;
    const cplx s = params.s;
    if (n < 0) throw DomainError("resolventPsi: n must be >= 0");

    if (s == cplx(0.0, 0.0)) {
        if (!(u > 0.0)) throw DomainError("resolventPsi: s = 0 branch requires u > 0");
        SeriesValue out;
        out.value = std::log(1.0 / u) / (4.0 * kPi);
        out.terms = 1;
        return out;
    }
    if (!(s.real() > 0.0)) throw DomainError("resolventPsi: requires Re s > 0");
    if (!(u >= 0.0)) throw DomainError("resolventPsi: requires u >= 0");
    if (s.real() <= 0.5 && u < 0.05) {
        throw DomainError("resolventPsi: u < 0.05 at Re s <= 1/2 loses too many digits");
    }

    const double q = 1.0 / (u + 1.0);
    cplx c = std::exp(specfun::gammaLn(s) + specfun::gammaLn(s + 2.0 * double(n)) -
                      specfun::gammaLn(2.0 * s + 2.0 * double(n)));
    cplx upow = std::pow(cplx(u + 1.0, 0.0), -s);

    cplx sum = 0.0;
    SeriesValue out;
    for (int k = 0; k < params.kMax; ++k) {
        cplx term = c * upow;
        sum += term;
        cplx ratioC = (s + double(k)) * (s + 2.0 * double(n) + double(k)) /
                      ((double(k) + 1.0) * (2.0 * s + 2.0 * double(n) + double(k)));
        double ratio = std::abs(ratioC) * q;
        if (ratio < 1.0) {
            double tail = std::abs(term) * ratio / (1.0 - ratio);
            if (tail < absTol * 4.0 * kPi) {
                out.value = sum / (4.0 * kPi);
                out.tailBound = tail / (4.0 * kPi);
                out.terms = k + 1;
                return out;
            }
        }
        c *= ratioC;
        upow *= q;
    }
    throw TailBoundExceedsTolerance("resolventPsi: series cap reached before tail bound met");
}

cplx freeResolvent(const KernelParams& params, const PointUHP& z, const PointUHP& w,
                   double* tailBound) {
    double u = hyp::pointPairInvariant(z, w);
    SeriesValue psi = resolventPsi(params, u);
    cplx H = ipow(cplx(-4.0, 0.0), params.n) / ipow(z.z - std::conj(w.z), 2 * params.n);
    if (tailBound) *tailBound = psi.tailBound * std::abs(H);
    return psi.value * H;
}

std::pair<cplx, cplx> resolventDerivIdentity(int n, const PointUHP& z, const PointUHP& w,
                                             double absTol) {
    if (n < 1) throw DomainError("resolventDerivIdentity: n must be >= 1");
    if (std::abs(z.z - w.z) < 1e-12) {
        throw CoincidentPoints("resolventDerivIdentity: z and w coincide");
    }

    const cplx zz = z.z, ww = w.z;
    const cplx zb = std::conj(zz), wb = std::conj(ww);

    cplx lhs = -1.0 / (4.0 * kPi) / ((zz - ww) * (zz - ww)) * ipow(cplx(-4.0, 0.0), n - 1) /
               ipow(zz - wb, 2 * n - 2);

    // Term-wise z- then w-derivative of rho^{n-1} d_z [rho^{1-n} Psi_{n-1,1}(u) H_{n-1}].
    const double u = hyp::pointPairInvariant(z, w);
    const cplx uz = -(zb - wb) * (ww - zb) / ((zz - zb) * (zz - zb) * (ww - wb));
    const cplx uw = (zb - wb) * (zz - wb) / ((zz - zb) * (ww - wb) * (ww - wb));
    const cplx uzw = -(zb - wb) * (zb - wb) / ((zz - zb) * (zz - zb) * (ww - wb) * (ww - wb));

    const double y = zz.imag();
    const cplx hFac = ipow(cplx(-4.0, 0.0), n - 1) / ipow(zz - wb, 2 * n - 2);
    const cplx dzH = double(2 - 2 * n) * ipow(cplx(-4.0, 0.0), n - 1) / ipow(zz - wb, 2 * n - 1);
    const double rhoPow = std::pow(y, 2.0 - 2.0 * n); // rho^{n-1} = y^{2-2n}
    const double yPow = std::pow(y, 2.0 * n - 2.0);   // rho^{1-n} = y^{2n-2}
    const cplx dzRho = cplx(0.0, -1.0) * (double(n) - 1.0) * std::pow(y, 2.0 * n - 3.0);

    // Psi_{n-1,1} has coefficients c_k = 1/(4 pi (2n + k - 1)).
    const double q = 1.0 / (u + 1.0);
    double upow1 = q; // (u+1)^{-(k+1)} at k = 0

    cplx sum = 0.0;
    for (int k = 0; k < 40000; ++k) {
        double km1 = double(k + 1), km2 = double(k + 2);
        double c = 1.0 / (4.0 * kPi * (2.0 * n + double(k) - 1.0));
        double p2 = upow1 * q;     // (u+1)^{-k-2}
        double p3 = upow1 * q * q; // (u+1)^{-k-3}

        // d/dw of d/dz [ y^{2n-2} (u+1)^{-k-1} H_{n-1} ]
        cplx term = dzRho * hFac * (-km1) * p2 * uw +
                    yPow * hFac * (-km1) * (-(km2)*p3 * uw * uz + p2 * uzw) +
                    yPow * dzH * (-km1) * p2 * uw;
        sum += c * term;

        double tailScale = std::abs(c * term) * q / std::max(1e-300, 1.0 - q);
        if (k > 4 && tailScale < absTol * 1e-3 * std::max(1.0, std::abs(rhoPow * sum))) break;
        upow1 *= q;
    }
    cplx rhs = rhoPow * sum;
    return {lhs, rhs};
}

cplx xiKernel(cplx zeta, cplx z, cplx w) {
    cplx zb = std::conj(z), wb = std::conj(w);
    cplx d1 = (wb - zb) * (wb - zb);
    cplx t1 = d1 / (ipow(zeta - zb, 2) * ipow(zeta - wb, 2) * ipow(z - wb, 2));
    cplx t2 = 2.0 * d1 * (z - zb) / (ipow(zeta - zb, 3) * (zeta - wb) * ipow(z - wb, 3));
    return t1 + t2;
}

cplx xiKernelDisc(cplx zeta, cplx z, cplx w) {
    cplx zb = std::conj(z), wb = std::conj(w);
    cplx d1 = (wb - zb) * (wb - zb);
    cplx t1 = -d1 / (ipow(1.0 - zeta * zb, 2) * ipow(1.0 - zeta * wb, 2) * ipow(1.0 - z * wb, 2));
    cplx t2 = -2.0 * d1 * (1.0 - std::norm(z)) /
              (ipow(1.0 - zeta * zb, 3) * (1.0 - zeta * wb) * ipow(1.0 - z * wb, 3));
    return t1 + t2;
}

cplx lambdaKernel(cplx z, cplx zeta, cplx eta) {
    cplx zb = std::conj(z), eb = std::conj(eta);
    double om = 1.0 - std::norm(z);
    cplx t1 = 2.0 * om * om / (ipow(1.0 - zeta * zb, 2) * ipow(1.0 - zeta * eb, 2) *
                               ipow(1.0 - z * eb, 2));
    cplx t2 = 2.0 * om * om * om /
              (ipow(1.0 - zeta * zb, 3) * (1.0 - zeta * eb) * ipow(1.0 - z * eb, 3));
    return t1 + t2;
}

std::pair<cplx, cplx> bergmanReproduce(const HoloFn& phi, const PointDisc& z,
                                       const quad::QuadSpec& spec) {
    cplx zz = z.z;
    auto integrand = [&phi, zz](cplx w) {
        double om = 1.0 - std::norm(w);
        return om * om * phi(w) / ipow(1.0 - zz * std::conj(w), 4);
    };
    quad::QuadResult r = quad::integrateDisc(integrand, spec);
    if (!r.converged) throw NotConverged("bergmanReproduce: disc quadrature did not converge");
    return {3.0 / kPi * r.value, phi(z.z)};
}

cplx lMuH(const DiscBeltrami& muDisc, int n, const PointUHP& z, const PointUHP& w,
          const quad::QuadSpec& spec) {
    cplx zz = z.z, ww = w.z, wb = std::conj(w.z);
    auto integrand = [&](cplx v) {
        cplx hv = hyp::cayleyMap(v);
        cplx hp = hyp::cayleyDeriv(v);
        return muDisc(v) * hp * hp * xiKernel(hv, zz, ww);
    };
    quad::QuadResult r = quad::integrateDisc(integrand, spec);
    if (!r.converged) throw NotConverged("lMuH: disc quadrature did not converge");
    return -double(n) / kPi * ipow(zz - wb, 2 - 2 * n) * r.value;
}

cplx lMuHRaw(const DiscBeltrami& muDisc, int n, const PointUHP& z, const PointUHP& w,
             const quad::QuadSpec& spec) {
    cplx zz = z.z, wb = std::conj(w.z);
    cplx v0 = hyp::cayleyInv(z).z;
    auto smooth = [&](cplx v) {
        // h'(v)^2 / (h(v)-z)^2 = (1-v0)^2 / ((1-v)^2 (v-v0)^2); the (v-v0)^-2
        // factor is supplied by the pole-aware rule.
        cplx hv = hyp::cayleyMap(v);
        cplx num = (1.0 - v0) * (1.0 - v0);
        cplx den = (1.0 - v) * (1.0 - v) * ipow(hv - wb, 2);
        return muDisc(v) * num / den;
    };
    quad::QuadResult r = quad::integrateDiscPole2(smooth, v0, spec);
    if (!r.converged) throw NotConverged("lMuHRaw: disc quadrature did not converge");
    return -double(n) / kPi * ipow(zz - wb, 2 - 2 * n) * r.value;
}

cplx lMuHDBar(const DiscBeltrami& muDisc, int n, const PointUHP& z, const PointUHP& w,
              const quad::QuadSpec& spec, double step) {
    auto F = [&](cplx zz) { return lMuH(muDisc, n, PointUHP(zz), w, spec); };
    cplx fx = (F(z.z + step) - F(z.z - step)) / (2.0 * step);
    cplx fy = (F(z.z + cplx(0, step)) - F(z.z - cplx(0, step))) / (2.0 * step);
    return 0.5 * (fx + cplx(0, 1) * fy);
}

PoincareResult poincareSum(std::span<const hyp::MoebiusMap> elements,
                           const KernelParams& params, const PointUHP& z, const PointUHP& w,
                           ExecPolicy policy) {
    if (!(params.s.real() > 1.0)) {
        throw DivergentParameterRegion("poincareSum: requires Re s > 1");
    }

    std::vector<cplx> terms(elements.size());
    std::exception_ptr eptr = nullptr;
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static) num_threads(coflab::maxThreads())
        for (long i = 0; i < (long)elements.size(); ++i) {
            try {
                const auto& g = elements[i];
                PointUHP gz = hyp::apply(g, z);
                cplx der = hyp::derivative(g, z.z);
                terms[i] = freeResolvent(params, gz, w) * ipow(der, params.n);
            } catch (...) {
#pragma omp critical
                {
                    if (!eptr) eptr = std::current_exception();
                }
            }
        }
    } else {
        for (size_t i = 0; i < elements.size(); ++i) {
            const auto& g = elements[i];
            PointUHP gz = hyp::apply(g, z);
            cplx der = hyp::derivative(g, z.z);
            terms[i] = freeResolvent(params, gz, w) * ipow(der, params.n);
        }
    }
    if (eptr) std::rethrow_exception(eptr);

    // Unit-width Frobenius-norm shells, accumulated in element order.
    std::map<int, cplx> shells;
    cplx total = 0.0;
    for (size_t i = 0; i < elements.size(); ++i) {
        int shell = (int)std::floor(elements[i].frobeniusNorm());
        shells[shell] += terms[i];
        total += terms[i];
    }

    PoincareResult out;
    out.value = total;
    out.terms = (long)elements.size();

    // Geometric tail fitted from the last shells.
    std::vector<double> mags;
    for (auto& [shell, v] : shells) mags.push_back(std::abs(v));
    if (mags.size() >= 4) {
        double r1 = mags.back() / std::max(1e-300, mags[mags.size() - 2]);
        double r2 = mags[mags.size() - 2] / std::max(1e-300, mags[mags.size() - 3]);
        double ratio = 0.5 * (r1 + r2);
        if (ratio < 1.0) {
            out.shellsDecaying = true;
            out.tailEstimate = mags.back() * ratio / (1.0 - ratio);
        } else {
            out.tailEstimate = mags.back();
        }
    } else if (!mags.empty()) {
        out.tailEstimate = mags.back();
    }
    return out;
}

} // namespace coflab::kernels
