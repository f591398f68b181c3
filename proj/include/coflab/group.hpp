#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coflab/hyperbolic.hpp"
#include "coflab/parallel.hpp"
#include "coflab/specfun.hpp"

namespace coflab::grp {

using hyp::MoebiusMap;

// Surface type (g; q; m_1, ..., m_v).
struct Signature {
    int g = 0;
    int q = 0;
    std::vector<int> orders; // sorted, each >= 2

    Signature() = default;
    Signature(int g_, int q_, std::vector<int> orders_);
    double hyperbolicityDefect() const; // 2g - 2 + q + sum (1 - 1/m)
    static Signature parse(const std::string& text); // "g,q,m1,m2,..."
};

double hyperbolicArea(const Signature& sig);
long dimensionDn(const Signature& sig, int n);

struct GroupPresentation {
    std::string name;
    std::vector<MoebiusMap> generators;
    bool certifiedComplete = false; // enumeration trusted up to the norm bound

    static GroupPresentation modular();
    static GroupPresentation fromJson(const std::string& text);
    static GroupPresentation load(const std::string& path);
};

struct ElementSet {
    std::vector<MoebiusMap> elements;        // sorted by Frobenius norm
    std::vector<std::vector<int>> words;     // generator indices, negatives = inverses
    double normBound = 0.0;
    bool truncatedByBudget = false;
};

// All distinct PSL elements with Frobenius norm <= normBound reachable by
// generator words, deduplicated through the canonical sign and rounded
// entries. The BFS explores a window larger than the bound so that products
// that dip back under it are not lost.
ElementSet enumerateElements(const GroupPresentation& group, double normBound,
                             double windowFactor = 3.0, long maxElements = 4'000'000,
                             ExecPolicy policy = ExecPolicy::Serial);

struct HyperbolicClass {
    MoebiusMap representative;
    double trace = 0.0;
    double multiplier = 1.0;
    std::vector<int> word;
};

struct ClassList {
    std::vector<HyperbolicClass> classes; // sorted by multiplier
    bool incompleteEnumeration = false;
};

// One representative per primitive hyperbolic conjugacy class with
// |tr| <= traceMax. Class identity is decided by trace bucketing plus a
// conjugation search within the enumerated ball; primitivity by the
// cyclically-reduced word power test, confirmed by a matrix root search.
ClassList primitiveHyperbolicClasses(const GroupPresentation& group, double traceMax,
                                     double normBound = 0.0,
                                     ExecPolicy policy = ExecPolicy::Serial);

struct SelbergZResult {
    double value = 1.0;
    double logValue = 0.0;
    long classCount = 0;
    double traceMax = 0.0;
    long kTermsMax = 0;
    bool incompleteEnumeration = false;
};

// Partial Selberg product over the classes found below traceMax; the k-tail
// is accumulated with log1p until the terms fall below 1e-16.
SelbergZResult selbergZ(const GroupPresentation& group, double s, double traceMax,
                        long kMax = 256, ExecPolicy policy = ExecPolicy::Serial);

struct DetInput {
    Signature signature;
    int n = 2;
    double A = 0.0; // scattering trace input, required when q >= 1
    bool aProvided = false;
    double traceMax = 10.0;
    long kMax = 256;
    specfun::Gamma2Convention gamma2 = specfun::Gamma2Convention::VardiFactor;
};

struct DetConstant {
    double logCn = 0.0;
    double B = 0.0;
    double D = 0.0;
    std::map<std::string, double> breakdown; // log of each factor
    std::vector<double> dEllipticCoeffs;     // per-order coefficient of log m in D
    const char* gamma2Convention = "";
};

DetConstant detConstantCn(const DetInput& input);

struct DetResult {
    double logDet = 0.0;
    double value = 0.0;
    DetConstant constant;
    SelbergZResult zeta;
};

// det' of the weight-n Laplacian as C_n Z(n) from the partial product;
// n = 1 is refused because the zero of Z at s = 1 is invisible to partial
// products.
DetResult detDeltaN(const DetInput& input, const GroupPresentation& group,
                    ExecPolicy policy = ExecPolicy::Serial);

} // namespace coflab::grp
