#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "coflab/quad.hpp"
#include "testutil.hpp"

using namespace coflab::quad;
using testutil::close;
using cplx = std::complex<double>;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}
} // namespace

TEST_CASE("semi-infinite with exponential decay: int_0^inf e^{-4 pi y} y^4") {
    QuadSpec spec;
    spec.transform = Transform::SemiInfExp;
    spec.expRate = 4.0 * kPi;
    QuadResult r = integrate1D([](double y) { return cplx(std::exp(-4.0 * kPi * y) *
                                                          y * y * y * y); },
                               0.0, kInf, spec);
    double expect = factorial(4) / std::pow(4.0 * kPi, 5); // oracle: r!/(rate)^{r+1}
    CHECK(r.converged);
    CHECK(std::abs(r.value.real() - expect) < 1e-11 * expect);
    CHECK(std::abs(r.value.imag()) < 1e-15);
}

TEST_CASE("semi-infinite with power decay: moment identity r=1, k=3, a=1") {
    QuadSpec spec;
    QuadResult r = integrate1D([](double y) { return cplx(y / std::pow(y + 1.0, 3)); },
                               0.0, kInf, spec);
    CHECK(r.converged);
    CHECK(std::abs(r.value.real() - 0.5) < 1e-10);
}

TEST_CASE("moment identity family: int_0^inf y^r/(y+a)^k = r!(k-r-2)!/(a^{k-r-1}(k-1)!)") {
    QuadSpec spec;
    for (double a : {0.5, 2.0}) {
        for (int rr = 0; rr <= 5; ++rr) {
            for (int k = rr + 2; k <= rr + 6; ++k) {
                QuadResult q = integrate1D(
                    [rr, k, a](double y) { return cplx(std::pow(y, rr) / std::pow(y + a, k)); },
                    0.0, kInf, spec);
                double expect = factorial(rr) * factorial(k - rr - 2) /
                                (std::pow(a, k - rr - 1) * factorial(k - 1));
                CHECK(q.converged);
                CHECK(std::abs(q.value.real() - expect) < 1e-9 * expect);
            }
        }
    }
}

TEST_CASE("log endpoint singularity via hint: int_0^1 ln(1/x) = 1") {
    QuadSpec spec;
    spec.singularHints = {0.0};
    QuadResult r =
        integrate1D([](double x) { return cplx(std::log(1.0 / x)); }, 0.0, 1.0, spec);
    CHECK(std::abs(r.value.real() - 1.0) < 1e-11);
}

TEST_CASE("non-finite integrand is reported") {
    QuadSpec spec;
    CHECK_THROWS_AS(integrate1D([](double x) { return cplx(1.0 / (x - 0.3)); }, 0.3, 1.0, spec),
                    coflab::NonFiniteIntegrand);
}

TEST_CASE("refinement never moves a converged value beyond its error estimate") {
    QuadSpec spec;
    spec.relTol = 1e-7;
    spec.absTol = 1e-9;
    auto f = [](double x) { return cplx(std::cos(7.0 * x) * std::exp(-x)); };
    QuadResult coarse = integrate1D(f, 0.0, 6.0, spec);
    QuadResult fine = integrate1D(f, 0.0, 6.0, spec.withTol(spec.relTol / 10.0, spec.absTol / 10.0));
    CHECK(coarse.converged);
    CHECK(std::abs(coarse.value - fine.value) <= std::max(coarse.errEstimate, 1e-15));
}

TEST_CASE("disc: int (1-|w|^2)^2 = pi/3") {
    QuadSpec spec;
    spec.relTol = 1e-9;
    spec.absTol = 1e-11;
    QuadResult r = integrateDisc([](cplx w) { return cplx(std::pow(1.0 - std::norm(w), 2)); },
                                 spec);
    CHECK(std::abs(r.value.real() - kPi / 3.0) < 1e-10);
}

TEST_CASE("disc moments vanish off the diagonal") {
    QuadSpec spec;
    spec.relTol = 1e-9;
    spec.absTol = 1e-11;
    QuadResult r =
        integrateDisc([](cplx w) { return w * w * std::conj(w); }, spec);
    CHECK(std::abs(r.value) < 1e-10);
}

TEST_CASE("disc radial moments against the beta-integral oracle") {
    QuadSpec spec;
    spec.relTol = 1e-9;
    spec.absTol = 1e-11;
    for (int k = 1; k <= 4; ++k) {
        QuadResult r = integrateDisc(
            [k](cplx w) {
                return cplx(std::pow(std::norm(w), k) * std::pow(1.0 - std::norm(w), 2));
            },
            spec);
        double expect = kPi * (1.0 / (k + 1.0) - 2.0 / (k + 2.0) + 1.0 / (k + 3.0));
        CHECK(std::abs(r.value.real() - expect) < 1e-9 * std::max(1.0, expect));
    }
}

TEST_CASE("disc integral with log singularity at the origin") {
    QuadSpec spec;
    spec.relTol = 1e-9;
    spec.absTol = 1e-11;
    // int_D log(1/|w|^2) = 2 pi int_0^1 r log(1/r^2) dr = pi
    QuadResult r = integrateDisc(
        [](cplx w) { return cplx(std::log(1.0 / std::norm(w))); }, spec, {cplx(0, 0)});
    CHECK(std::abs(r.value.real() - kPi) < 1e-9);
}

TEST_CASE("pole-aware disc rule: principal values") {
    QuadSpec spec;
    spec.relTol = 1e-9;
    spec.absTol = 1e-11;
    cplx z0(0.4, 0.2);
    // f = 1: the symmetric principal value vanishes
    QuadResult r1 = integrateDiscPole2([](cplx) { return cplx(1.0); }, z0, spec);
    CHECK(std::abs(r1.value) < 1e-9);
    // f = u: only the Cauchy-transform part survives, -pi conj(z0)
    QuadResult r2 = integrateDiscPole2([](cplx u) { return u; }, z0, spec);
    CHECK(std::abs(r2.value - (-kPi * std::conj(z0))) < 1e-8);
    // f = (u - z0)^2: plain area
    QuadResult r3 = integrateDiscPole2([z0](cplx u) { return (u - z0) * (u - z0); }, z0, spec);
    CHECK(std::abs(r3.value - cplx(kPi)) < 1e-9);
}

TEST_CASE("oscillatory line integral equals the residue value") {
    QuadSpec spec;
    spec.relTol = 1e-9;
    spec.absTol = 1e-12;
    // int e^{2 pi i k u} (u - i a)^{-2} du = -4 pi^2 k e^{-2 pi k a}
    {
        QuadResult r = integrateLineOsc(
            [](cplx u) { return 1.0 / ((u - cplx(0, 1)) * (u - cplx(0, 1))); }, 1.0, spec);
        double expect = -4.0 * kPi * kPi * std::exp(-2.0 * kPi);
        CHECK(std::abs(r.value.real() - expect) < 1e-8 * std::abs(expect));
        CHECK(std::abs(r.value.imag()) < 1e-10);
    }
    {
        QuadResult r = integrateLineOsc(
            [](cplx u) { return 1.0 / ((u - cplx(0, 2)) * (u - cplx(0, 2))); }, 2.0, spec);
        double expect = -8.0 * kPi * kPi * std::exp(-8.0 * kPi);
        CHECK(std::abs(r.value.real() - expect) < 1e-6 * std::abs(expect));
    }
}

TEST_CASE("rational line integral (k = 0) against the residue oracle") {
    QuadSpec spec;
    spec.relTol = 1e-10;
    spec.absTol = 1e-13;
    // int dx ((zeta - x + iy)^2 (zeta - etab)^2 (x + iy - etab)^2)^{-1}
    //   = -4 pi i / ((zeta - etab + 2iy)^3 (zeta - etab)^2)
    cplx zeta(0.3, 0.8), eta(-0.2, 0.6);
    double y = 0.5;
    cplx etab = std::conj(eta);
    auto f = [zeta, etab, y](cplx x) {
        cplx a = zeta - x + cplx(0, y);
        cplx b = x + cplx(0, y) - etab;
        return 1.0 / (a * a * (zeta - etab) * (zeta - etab) * b * b);
    };
    QuadResult r = integrateLineOsc(f, 0.0, spec);
    cplx expect = -4.0 * kPi * cplx(0, 1) /
                  (std::pow(zeta - etab + cplx(0, 2 * y), 3) * std::pow(zeta - etab, 2));
    CHECK(std::abs(r.value - expect) < 1e-8 * std::abs(expect));
}

TEST_CASE("strip integral of the dilation-invariant datum") {
    QuadSpec spec;
    spec.relTol = 1e-9;
    spec.absTol = 1e-11;
    // int_{S_4} y^2/|zeta|^4 = int_1^4 pi/(2y) dy = (pi/2) log 4
    QuadResult r = integrateStrip(
        [](cplx zeta) {
            double y = zeta.imag();
            return cplx(y * y / std::pow(std::norm(zeta), 2));
        },
        1.0, 4.0, spec);
    CHECK(std::abs(r.value.real() - 0.5 * kPi * std::log(4.0)) < 1e-8);
}

TEST_CASE("spec validation") {
    QuadSpec bad;
    bad.relTol = 0.0;
    CHECK_THROWS_AS(integrate1D([](double) { return cplx(0.0); }, 0, 1, bad),
                    coflab::DomainError);
    QuadSpec small;
    small.maxEvals = 10;
    CHECK_THROWS_AS(integrate1D([](double) { return cplx(0.0); }, 0, 1, small),
                    coflab::DomainError);
}
