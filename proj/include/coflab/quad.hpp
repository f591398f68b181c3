#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "coflab/errors.hpp"
#include "coflab/parallel.hpp"

namespace coflab::quad {

using cplx = std::complex<double>;

enum class Transform {
    None,            // finite interval, or auto-select for semi-infinite
    SemiInfExp,      // y = a - log(1-t)/rate, for integrands ~ e^{-rate y}
    SemiInfRational  // y = a + t/(1-t), for power-law decay
};

struct QuadSpec {
    double relTol = 1e-10;
    double absTol = 1e-13;
    long maxEvals = 2'000'000;
    Transform transform = Transform::None;
    double expRate = 1.0; // decay rate used by SemiInfExp
    std::vector<double> singularHints; // integrable log or |.|^{-a} points
    ExecPolicy policy = ExecPolicy::Serial;

    QuadSpec() = default;
    QuadSpec withTol(double rel, double abs) const {
        QuadSpec s = *this;
        s.relTol = rel;
        s.absTol = abs;
        return s;
    }
    QuadSpec withExpRate(double rate) const {
        QuadSpec s = *this;
        s.transform = Transform::SemiInfExp;
        s.expRate = rate;
        return s;
    }
    void validate() const;
};

struct QuadResult {
    cplx value{0.0, 0.0};
    double errEstimate = 0.0;
    long evals = 0;
    bool converged = false;
};

using Fn1D = std::function<cplx(double)>;
using FnC = std::function<cplx(cplx)>;

// Adaptive Gauss-Kronrod over (a, b); b may be +infinity, in which case the
// spec's transform (rational by default) maps onto (0,1). Panels that touch a
// singular hint are integrated by tanh-sinh instead of being subdivided.
QuadResult integrate1D(const Fn1D& f, double a, double b, const QuadSpec& spec);

// Integral of f over the unit disc, polar form: trapezoid in the angle
// (doubled until converged) with an adaptive radial rule per slice. A
// singular point at the origin becomes a radial hint at r = 0.
QuadResult integrateDisc(const FnC& f, const QuadSpec& spec,
                         const std::vector<cplx>& singularPoints = {});

// Integral over the unit disc of f(u)/(u - pole)^2 with f smooth. The double
// pole is integrable only through the angular average, so a small disc around
// the pole is handled by an angle-first decomposition and the remainder in
// polar coordinates centered at the pole.
QuadResult integrateDiscPole2(const FnC& f, cplx pole, const QuadSpec& spec);

// integral_{-inf}^{inf} f(u) e^{2 pi i k u} du for f meromorphic off the real
// line with |f| = O(|u|^{-2}) and poles confined to |Re u| < R. For k != 0 the
// tails are rotated onto vertical rays where the exponential decays; k = 0
// falls back to a tangent-transformed adaptive rule.
QuadResult integrateLineOsc(const FnC& f, double k, const QuadSpec& spec, double R = 2.0);

// integral over the strip {x + iy : yLo < y < yHi} of f, with the x-line
// handled by a tangent transform (decay |zeta|^{-2} or faster required).
QuadResult integrateStrip(const FnC& f, double yLo, double yHi, const QuadSpec& spec);

} // namespace coflab::quad
