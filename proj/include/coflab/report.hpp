#pragma once

#include <string>
#include <vector>

#include "coflab/parallel.hpp"

namespace coflab::report {

struct Case {
    std::string id;
    std::string paper_eq;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol_abs = 0.0;
    double tol_rel = 0.0;
    bool pass = false;
    long evals = 0;
    double seconds = 0.0;
};

struct Report {
    std::string suite;
    std::vector<Case> cases;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
};

struct SuiteOptions {
    double tolRel = 1e-10; // engine tolerances for the underlying quadratures
    double tolAbs = 1e-13;
    long maxEvals = 2'000'000;
    bool timing = false; // when off, seconds stay 0 so reports are byte-stable
    int n = 2;
    int m = 3;
    ExecPolicy policy = ExecPolicy::Parallel;
};

bool validSuite(const std::string& name);
Report runSuite(const std::string& name, const SuiteOptions& opts);

std::string toJson(const Report& r);
std::string toCsv(const Report& r);

} // namespace coflab::report
