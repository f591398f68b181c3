#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "coflab/hyperbolic.hpp"
#include "testutil.hpp"

using namespace coflab::hyp;
using testutil::close;
using testutil::Rng;

namespace {

MoebiusMap randomMap(Rng& rng) {
    // random word in a translation, a dilation and an inversion-like element
    MoebiusMap g = MoebiusMap::identity();
    for (int i = 0; i < 6; ++i) {
        double t = rng.uniform(-1.5, 1.5);
        double s = std::exp(rng.uniform(-0.7, 0.7));
        switch (rng.gen() % 3) {
            case 0: g = g * MoebiusMap(1, t, 0, 1); break;
            case 1: g = g * MoebiusMap(s, 0, 0, 1.0 / s); break;
            default: g = g * MoebiusMap(0, -1, 1, 0); break;
        }
    }
    return g;
}

} // namespace

TEST_CASE("apply: translation, inversion fixed point, dilation") {
    PointUHP i(cplx(0, 1));
    CHECK(close(apply(MoebiusMap(1, 1, 0, 1), i).z, cplx(1, 1), 1e-15));
    CHECK(close(apply(MoebiusMap(0, -1, 1, 0), i).z, cplx(0, 1), 1e-15));
    CHECK(close(apply(MoebiusMap(2, 0, 0, 0.5), i).z, cplx(0, 4), 1e-15));
}

TEST_CASE("derivative values") {
    CHECK(close(derivative(MoebiusMap(1, 1, 0, 1), cplx(0, 1)), cplx(1, 0), 1e-15));
    CHECK(close(derivative(MoebiusMap(0, -1, 1, 0), cplx(0, 1)), cplx(-1, 0), 1e-15));
    CHECK(close(derivative(MoebiusMap(2, 0, 0, 0.5), cplx(0, 1)), cplx(4, 0), 1e-15));
}

TEST_CASE("classification") {
    CHECK(classify(MoebiusMap(1, 1, 0, 1)) == MapClass::Parabolic);
    CHECK(classify(MoebiusMap(0, -1, 1, 0)) == MapClass::Elliptic);
    CHECK(classify(MoebiusMap(2, 0, 0, 0.5)) == MapClass::Hyperbolic);
    CHECK(classify(MoebiusMap(1, 0, 0, 1)) == MapClass::Identity);
    CHECK(classify(MoebiusMap(-1, 0, 0, -1)) == MapClass::Identity);
}

TEST_CASE("multiplier") {
    CHECK(close(multiplier(MoebiusMap(2, 0, 0, 0.5)), 4.0, 1e-12));
    // trace 3: lambda solves sqrt(lambda) + 1/sqrt(lambda) = 3
    double expect = std::pow(0.5 * (3.0 + std::sqrt(5.0)), 2);
    CHECK(close(multiplier(MoebiusMap(2, 1, 1, 1)), expect, 1e-12));
    CHECK(close(multiplier(MoebiusMap(-2, -1, -1, -1)), expect, 1e-12)); // PSL sign
    CHECK_THROWS_AS(multiplier(MoebiusMap(1, 1, 0, 1)), coflab::NotHyperbolic);
}

TEST_CASE("point-pair invariant values") {
    PointUHP i(cplx(0, 1));
    CHECK(pointPairInvariant(i, i) == 0.0);
    CHECK(close(pointPairInvariant(i, PointUHP(cplx(0.6, 1))), 0.36 / 4.0, 1e-15));
    CHECK(close(pointPairInvariant(i, PointUHP(cplx(0, 2))), 0.125, 1e-15));
}

TEST_CASE("cayley transform and transport identities") {
    CHECK(close(cayley(PointDisc(cplx(0, 0))).z, cplx(0, 1), 1e-15));
    CHECK(close(cayleyInv(PointUHP(cplx(0, 1))).z, cplx(0, 0), 1e-15));

    cplx zeta(0.3, 0.0), eta(0.0, 0.1);
    cplx lhs1 = cayleyDeriv(zeta) * cayleyDeriv(eta) /
                std::pow(cayleyMap(zeta) - cayleyMap(eta), 2);
    CHECK(close(lhs1, 1.0 / std::pow(zeta - eta, 2), 1e-12));
    cplx lhs2 = cayleyDeriv(zeta) * std::conj(cayleyDeriv(eta)) /
                std::pow(cayleyMap(zeta) - std::conj(cayleyMap(eta)), 2);
    CHECK(close(lhs2, -1.0 / std::pow(1.0 - zeta * std::conj(eta), 2), 1e-12));

    Rng rng;
    for (int t = 0; t < 50; ++t) {
        cplx w = rng.disc(0.9);
        CHECK(close(cayleyInv(cayley(PointDisc(w))).z, w, 1e-13));
    }
}

TEST_CASE("invariance of u under the group action") {
    Rng rng;
    for (int t = 0; t < 1000; ++t) {
        MoebiusMap g = randomMap(rng);
        PointUHP z(rng.uhp()), w(rng.uhp());
        double u1 = pointPairInvariant(z, w);
        double u2 = pointPairInvariant(apply(g, z), apply(g, w));
        CHECK(std::abs(u1 - u2) <= 1e-10 * (1.0 + u1));
    }
}

TEST_CASE("chain rule for derivatives") {
    Rng rng;
    for (int t = 0; t < 1000; ++t) {
        MoebiusMap g = randomMap(rng);
        MoebiusMap h = randomMap(rng);
        cplx z = rng.uhp();
        cplx lhs = derivative(g * h, z);
        cplx rhs = derivative(g, apply(h, PointUHP(z)).z) * derivative(h, z);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("multiplier is a conjugation invariant") {
    Rng rng;
    for (int t = 0; t < 200; ++t) {
        double lam = rng.uniform(1.5, 9.0);
        MoebiusMap g(std::sqrt(lam), 0, 0, 1.0 / std::sqrt(lam));
        MoebiusMap a = randomMap(rng);
        MoebiusMap conj = a * g * a.inverse();
        CHECK(std::abs(multiplier(conj) - lam) <= 1e-9 * lam);
    }
}

TEST_CASE("normalization: det and canonical sign") {
    MoebiusMap g(-3, 0, 0, -1.0 / 3.0);
    CHECK(g.a > 0);
    CHECK(std::abs(g.a * g.d - g.b * g.c - 1.0) < 1e-12);
    // idempotent
    MoebiusMap g2(g.a, g.b, g.c, g.d);
    CHECK(g.sameEntries(g2, 1e-14));
    CHECK_THROWS_AS(MoebiusMap(1, 0, 0, -1), coflab::DomainError);
}

TEST_CASE("domain checks on points") {
    CHECK_THROWS_AS(PointUHP(cplx(0, -1)), coflab::DomainError);
    CHECK_THROWS_AS(PointDisc(cplx(1.2, 0)), coflab::DomainError);
}
