#pragma once

#include <complex>
#include <random>

// Shared helpers for the test suites.
namespace testutil {

using cplx = std::complex<double>;

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool closeRel(double a, double b, double relTol) {
    return std::abs(a - b) <= relTol * std::max(1.0, std::abs(b));
}

inline bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned seed = 20240915u) : gen(seed) {}

    double uniform(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(gen);
    }

    // random point in the upper half-plane, moderate height
    cplx uhp(double xSpan = 2.0, double yLo = 0.3, double yHi = 3.0) {
        return {uniform(-xSpan, xSpan), uniform(yLo, yHi)};
    }

    // random point in the disc of radius rMax
    cplx disc(double rMax = 0.7) {
        double r = rMax * std::sqrt(uniform(0.0, 1.0));
        double th = uniform(0.0, 2.0 * 3.14159265358979323846);
        return std::polar(r, th);
    }
};

} // namespace testutil
