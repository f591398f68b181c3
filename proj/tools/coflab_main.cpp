// coflab: kernels, metric pairings and zeta constants for cofinite hyperbolic
// surfaces, with built-in verification suites.

#include <complex>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "coflab/beltrami.hpp"
#include "coflab/contrib.hpp"
#include "coflab/group.hpp"
#include "coflab/kernels.hpp"
#include "coflab/report.hpp"
#include "coflab/specfun.hpp"

namespace {

using cplx = std::complex<double>;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotConverged = 3;

struct EvalArgs {
    std::string target;
    int n = 2;
    int m = 2;
    double s = 2.0;
    double lambda = 4.0;
    double lDot = 1.0;
    int ellMax = 500;
    double traceMax = 10.0;
    long kMax = 256;
    double A = 0.0;
    bool aProvided = false;
    std::string sig;
    std::string coeffs;
    std::string groupFile = "modular";
    std::string gamma2 = "vardi-factor";
    double zUpper = 1.0; // Im of the kernel evaluation point
    double wUpper = 2.0;
    std::string format = "json";
    double tolRel = 1e-10;
    double tolAbs = 1e-13;
    long maxEvals = 2'000'000;
};

json quadMeta(double err, long evals) {
    return json{{"err", err}, {"evals", evals}};
}

int runEval(const EvalArgs& a) {
    using namespace coflab;
    quad::QuadSpec spec;
    spec.relTol = a.tolRel;
    spec.absTol = a.tolAbs;
    spec.maxEvals = a.maxEvals;
    spec.policy = ExecPolicy::Parallel;

    json out;

    if (a.target == "bconst") {
        out["value"] = specfun::bConstant(a.m, a.n);
        out["paper_eq"] = "Thm 7.1";
    } else if (a.target == "area") {
        out["value"] = grp::hyperbolicArea(grp::Signature::parse(a.sig));
        out["paper_eq"] = "sec 2.1";
    } else if (a.target == "dim") {
        out["value"] = grp::dimensionDn(grp::Signature::parse(a.sig), a.n);
        out["paper_eq"] = "eq 3.4.1";
    } else if (a.target == "kernel") {
        hyp::PointUHP z(cplx(0.0, a.zUpper)), w(cplx(0.0, a.wUpper));
        kernels::KernelParams params(a.n, a.s);
        double tail = 0.0;
        cplx v = kernels::freeResolvent(params, z, w, &tail);
        out["value"] = {v.real(), v.imag()};
        out["tail_bound"] = tail;
        out["paper_eq"] = "eq 2.17.6";
    } else if (a.target == "tz-cusp") {
        auto c = beltrami::loadCuspCoeffs(a.coeffs);
        out["value"] = beltrami::tzCuspNorm(c);
        out["paper_eq"] = "eq 2.24.5";
    } else if (a.target == "tz-ell") {
        auto e = beltrami::loadEllipticCoeffs(a.coeffs);
        out["value"] = beltrami::tzEllNorm(e);
        out["paper_eq"] = "eq 2.26.8";
    } else if (a.target == "contrib-parabolic") {
        auto c = beltrami::loadCuspCoeffs(a.coeffs);
        if (a.n == 1) {
            auto r = contrib::parabolicN1(c, spec);
            out["value"] = r.closedForm;
            out["via_integral"] = r.viaIntegral;
            out["err"] = r.errEstimate;
            out["paper_eq"] = "eq 3.9.19";
        } else {
            auto r = contrib::parabolicTerms(a.n, c, a.ellMax, spec, ExecPolicy::Parallel);
            out["value"] = r.total;
            out["terms"] = {{"X", r.X}, {"Y", r.Y}, {"Z1", r.Z1}, {"Z2", r.Z2}};
            out["err"] = r.errEstimate;
            out["tail_bound"] = r.tailBound;
            out["ell_max"] = r.ellMax;
            out["paper_eq"] = "Thm 6.1 / eq 3.4.7";
        }
    } else if (a.target == "contrib-elliptic") {
        auto e = beltrami::loadEllipticCoeffs(a.coeffs);
        if (a.n == 1) {
            auto r = contrib::ellipticN1(e, spec);
            out["value"] = r.closedForm;
            out["via_integral"] = r.viaIntegral;
            out["err"] = r.errEstimate;
            out["paper_eq"] = "eq 3.9.20";
        } else {
            auto r = contrib::ellipticTerms(a.n, e, spec, ExecPolicy::Parallel);
            out["value"] = {r.total.real(), r.total.imag()};
            out["terms"] = {{"X", {r.X.real(), r.X.imag()}},
                            {"Y", {r.Y.real(), r.Y.imag()}},
                            {"Z", {r.Z.real(), r.Z.imag()}},
                            {"A0", {r.A0.real(), r.A0.imag()}},
                            {"B0", {r.B0.real(), r.B0.imag()}},
                            {"C0", {r.C0.real(), r.C0.imag()}}};
            out["boundary_residual"] = r.boundaryResidual;
            out["err"] = r.errEstimate;
            out["paper_eq"] = "Thm 7.1 / eq 3.4.5";
        }
    } else if (a.target == "qhyp") {
        auto r = contrib::hyperbolicQ(a.n, a.lambda, spec);
        out["value"] = r.closedForm;
        out["via_integral"] = r.integralValue;
        out["err"] = r.errEstimate;
        out["paper_eq"] = "Thm 5.3 proof";
    } else if (a.target == "selberg") {
        auto g = grp::GroupPresentation::load(a.groupFile);
        auto r = grp::selbergZ(g, a.s, a.traceMax, a.kMax, ExecPolicy::Parallel);
        out["value"] = r.value;
        out["log_value"] = r.logValue;
        out["classes"] = r.classCount;
        out["trace_max"] = r.traceMax;
        out["incomplete_enumeration"] = r.incompleteEnumeration;
        out["paper_eq"] = "eq 2.23.4";
    } else if (a.target == "detn") {
        grp::DetInput in;
        in.signature = grp::Signature::parse(a.sig);
        in.n = a.n;
        in.A = a.A;
        in.aProvided = a.aProvided;
        in.traceMax = a.traceMax;
        in.kMax = a.kMax;
        in.gamma2 = a.gamma2 == "inverse-barnes-g" ? specfun::Gamma2Convention::InverseG
                                                   : specfun::Gamma2Convention::VardiFactor;
        auto g = grp::GroupPresentation::load(a.groupFile);
        auto r = grp::detDeltaN(in, g, ExecPolicy::Parallel);
        out["value"] = r.value;
        out["log_value"] = r.logDet;
        out["log_cn"] = r.constant.logCn;
        out["B"] = r.constant.B;
        out["D"] = r.constant.D;
        out["gamma2_convention"] = r.constant.gamma2Convention;
        out["zeta"] = {{"log_value", r.zeta.logValue},
                       {"classes", r.zeta.classCount},
                       {"incomplete_enumeration", r.zeta.incompleteEnumeration}};
        out["paper_eq"] = "Thm 5.1 / eq cn";
    } else {
        std::cerr << "unknown eval target: " << a.target << "\n";
        return kExitUsage;
    }

    std::cout << out.dump() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"kernels, Takhtajan-Zograf pairings and Selberg-zeta constants "
                 "for cofinite hyperbolic surfaces"};
    app.require_subcommand(1);

    // verify
    std::string suite = "all";
    std::string outPath;
    std::string format = "json";
    coflab::report::SuiteOptions opts;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "identities|kernels|parabolic|elliptic|hyperbolic|all");
    verify->add_option("--out", outPath, "write the report to this path");
    verify->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--tol-rel", opts.tolRel, "engine relative tolerance");
    verify->add_option("--tol-abs", opts.tolAbs, "engine absolute tolerance");
    verify->add_option("--max-evals", opts.maxEvals, "evaluation budget per integral");
    verify->add_option("--n", opts.n, "weight for the contribution suites");
    verify->add_option("--m", opts.m, "elliptic order for the elliptic suite");
    verify->add_flag("--timing", opts.timing, "record wall-clock seconds per case");
    bool serial = false;
    verify->add_flag("--serial", serial, "disable internal parallelism");

    // eval
    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "evaluate a single quantity");
    eval->add_option("target", ev.target,
                     "kernel|tz-cusp|tz-ell|contrib-parabolic|contrib-elliptic|bconst|qhyp|"
                     "selberg|detn|area|dim")
        ->required();
    eval->add_option("--n", ev.n, "weight");
    eval->add_option("--m", ev.m, "elliptic order");
    eval->add_option("--s", ev.s, "spectral parameter");
    eval->add_option("--lambda", ev.lambda, "multiplier");
    eval->add_option("--ldot", ev.lDot, "multiplier variation input");
    eval->add_option("--lmax", ev.ellMax, "l-sum truncation");
    eval->add_option("--trace-max", ev.traceMax, "class enumeration trace bound");
    eval->add_option("--kmax", ev.kMax, "zeta k cap");
    auto* aOpt = eval->add_option("--A", ev.A, "scattering trace input");
    eval->add_option("--sig", ev.sig, "signature g,q,m1,m2,...");
    eval->add_option("--coeffs", ev.coeffs, "coefficient JSON file");
    eval->add_option("--group", ev.groupFile, "group JSON file or 'modular'");
    eval->add_option("--gamma2-convention", ev.gamma2, "vardi-factor|inverse-barnes-g");
    eval->add_option("--z-height", ev.zUpper, "kernel evaluation height Im z");
    eval->add_option("--w-height", ev.wUpper, "kernel evaluation height Im w");
    eval->add_option("--format", ev.format, "json|csv");
    eval->add_option("--tol-rel", ev.tolRel, "engine relative tolerance");
    eval->add_option("--tol-abs", ev.tolAbs, "engine absolute tolerance");
    eval->add_option("--max-evals", ev.maxEvals, "evaluation budget per integral");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            if (!coflab::report::validSuite(suite)) {
                std::cerr << "unknown suite: " << suite << "\n";
                return kExitUsage;
            }
            if (serial) opts.policy = coflab::ExecPolicy::Serial;
            coflab::report::Report rep = coflab::report::runSuite(suite, opts);
            std::string text = format == "csv" ? coflab::report::toCsv(rep)
                                               : coflab::report::toJson(rep);
            if (!outPath.empty()) {
                std::ofstream out(outPath);
                out << text;
            } else {
                std::cout << text << "\n";
            }
            std::cerr << "suite " << rep.suite << ": " << rep.passed << " passed, "
                      << rep.failed << " failed\n";
            return rep.failed == 0 ? kExitOk : kExitVerifyFailed;
        }
        ev.aProvided = aOpt->count() > 0;
        return runEval(ev);
    } catch (const coflab::NotConverged& e) {
        std::cerr << "not converged: " << e.what() << "\n";
        return kExitNotConverged;
    } catch (const coflab::TailBoundExceedsTolerance& e) {
        std::cerr << "not converged: " << e.what() << "\n";
        return kExitNotConverged;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
