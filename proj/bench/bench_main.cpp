// Serial vs OpenMP timing for the data-parallel kernels: Poincare element
// sums, the parabolic l-chain and the angular fan-out of disc quadrature.
// The parallel paths fill per-index partials and reduce them in fixed order,
// so both paths must agree exactly; the harness checks that too.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>

#include "coflab/beltrami.hpp"
#include "coflab/contrib.hpp"
#include "coflab/group.hpp"
#include "coflab/kernels.hpp"
#include "coflab/quad.hpp"

using namespace coflab;
using cplx = std::complex<double>;

namespace {

template <typename F>
double timeIt(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool match) {
    std::printf("%-28s %10.3fs %10.3fs %8.2fx   %s\n", name, serial, parallel,
                serial / std::max(1e-9, parallel), match ? "bit-identical" : "MISMATCH");
}

} // namespace

int main() {
    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "openmp", "speedup");

    {
        auto modular = grp::GroupPresentation::modular();
        auto set = grp::enumerateElements(modular, 40.0, 3.0, 4'000'000, ExecPolicy::Parallel);
        kernels::KernelParams params(1, 2.0);
        hyp::PointUHP z(cplx(0.2, 1.5)), w(cplx(-0.4, 0.9));
        kernels::PoincareResult rs, rp;
        double ts = timeIt([&] {
            for (int i = 0; i < 10; ++i)
                rs = kernels::poincareSum(set.elements, params, z, w, ExecPolicy::Serial);
        });
        double tp = timeIt([&] {
            for (int i = 0; i < 10; ++i)
                rp = kernels::poincareSum(set.elements, params, z, w, ExecPolicy::Parallel);
        });
        row("poincare_sum (x10)", ts, tp, rs.value == rp.value);
    }

    {
        beltrami::CuspCoeffs c({cplx(1.0, 0.0), cplx(0.0, 0.5)});
        quad::QuadSpec spec;
        contrib::ParabolicTerms rs, rp;
        double ts = timeIt([&] { rs = contrib::parabolicTerms(2, c, 300, spec, ExecPolicy::Serial); });
        double tp = timeIt([&] { rp = contrib::parabolicTerms(2, c, 300, spec, ExecPolicy::Parallel); });
        row("parabolic_terms l<=300", ts, tp, rs.total == rp.total);
    }

    {
        quad::QuadSpec serialSpec;
        serialSpec.relTol = 1e-9;
        serialSpec.absTol = 1e-12;
        quad::QuadSpec parSpec = serialSpec;
        parSpec.policy = ExecPolicy::Parallel;
        cplx zeta(0.31, 0.2), eta(-0.25, 0.4);
        auto f = [&](cplx w) {
            double om = 1.0 - std::norm(w);
            double g = kernels::greensGDisc(hyp::PointDisc(cplx(0.0, 0.0)), hyp::PointDisc(w));
            return 36.0 * g * om * om /
                   (std::pow(1.0 - zeta * std::conj(w), 4) * std::pow(1.0 - w * std::conj(eta), 4));
        };
        quad::QuadResult rs, rp;
        double ts = timeIt([&] { rs = quad::integrateDisc(f, serialSpec, {cplx(0, 0)}); });
        double tp = timeIt([&] { rp = quad::integrateDisc(f, parSpec, {cplx(0, 0)}); });
        row("disc_quadrature (log hint)", ts, tp, rs.value == rp.value);
    }

    {
        beltrami::EllipticCoeffs e(2);
        e.set(2, cplx(1.0, 0.0));
        e.set(4, cplx(0.5, 0.25));
        contrib::FourDSpotCheck rs, rp;
        double ts = timeIt([&] { rs = contrib::ellipticX4DSpotCheck(2, e, 1, ExecPolicy::Serial); });
        double tp = timeIt([&] { rp = contrib::ellipticX4DSpotCheck(2, e, 1, ExecPolicy::Parallel); });
        row("elliptic_4d_spot_check", ts, tp, rs.fourD == rp.fourD);
    }

    return 0;
}
