#include "coflab/group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace coflab::grp {

namespace {

constexpr double kPi = std::numbers::pi;

struct EntryKey {
    std::int64_t a, b, c, d;
    bool operator==(const EntryKey&) const = default;
};

struct EntryKeyHash {
    size_t operator()(const EntryKey& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t v : {k.a, k.b, k.c, k.d}) {
            h ^= (std::uint64_t)v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

EntryKey keyOf(const MoebiusMap& g) {
    auto q = [](double x) { return (std::int64_t)std::llround(x * 1e9); };
    return {q(g.a), q(g.b), q(g.c), q(g.d)};
}

} // namespace

Signature::Signature(int g_, int q_, std::vector<int> orders_)
    : g(g_), q(q_), orders(std::move(orders_)) {
    if (g < 0 || q < 0) throw DomainError("Signature: g and q must be >= 0");
    for (int m : orders) {
        if (m < 2) throw DomainError("Signature: elliptic orders must be >= 2");
    }
    std::sort(orders.begin(), orders.end());
    if (!(hyperbolicityDefect() > 0.0)) {
        throw NotHyperbolic("Signature: 2g - 2 + q + sum(1 - 1/m) must be positive");
    }
}

double Signature::hyperbolicityDefect() const {
    double s = 2.0 * g - 2.0 + q;
    for (int m : orders) s += 1.0 - 1.0 / double(m);
    return s;
}

Signature Signature::parse(const std::string& text) {
    std::vector<int> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            vals.push_back(std::stoi(item));
        } catch (...) {
            throw DomainError("signature: bad integer '" + item + "'");
        }
    }
    if (vals.size() < 2) throw DomainError("signature: expected g,q[,m1,m2,...]");
    return Signature(vals[0], vals[1], std::vector<int>(vals.begin() + 2, vals.end()));
}

double hyperbolicArea(const Signature& sig) { return 2.0 * kPi * sig.hyperbolicityDefect(); }

long dimensionDn(const Signature& sig, int n) {
    if (n < 0) throw DomainError("dimensionDn: n must be >= 0");
    if (n == 0) return 1;
    if (n == 1) return sig.g;
    long d = (2L * n - 1) * (sig.g - 1) + (long(n) - 1) * sig.q;
    for (int m : sig.orders) {
        d += (long)std::floor(double(n) * (1.0 - 1.0 / double(m)) + 1e-12);
    }
    return d;
}

GroupPresentation GroupPresentation::modular() {
    GroupPresentation g;
    g.name = "modular";
    g.generators = {MoebiusMap(0, -1, 1, 0), MoebiusMap(1, 1, 0, 1)};
    g.certifiedComplete = true;
    return g;
}

GroupPresentation GroupPresentation::fromJson(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("generators") ||
        !j["generators"].is_array()) {
        throw DomainError("group file: expected object with array field 'generators'");
    }
    GroupPresentation g;
    g.name = j.value("name", "custom");
    if (g.name == "modular") g.certifiedComplete = true;
    for (const auto& item : j["generators"]) {
        if (!item.is_array() || item.size() != 4) {
            throw DomainError("group file: field 'generators' entries must be [a,b,c,d]");
        }
        g.generators.emplace_back(item[0].get<double>(), item[1].get<double>(),
                                  item[2].get<double>(), item[3].get<double>());
    }
    if (g.generators.empty()) throw DomainError("group file: field 'generators' is empty");
    return g;
}

GroupPresentation GroupPresentation::load(const std::string& path) {
    if (path == "modular") return modular();
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open group file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return fromJson(ss.str());
}

ElementSet enumerateElements(const GroupPresentation& group, double normBound,
                             double windowFactor, long maxElements, ExecPolicy policy) {
    if (!(normBound >= std::sqrt(2.0) - 1e-12)) {
        throw DomainError("enumerateElements: norm bound below sqrt(2) is empty");
    }
    const double window = windowFactor * normBound + 2.0;

    // generator list with inverses; word letters are 1-based, negative = inverse
    std::vector<MoebiusMap> steps;
    std::vector<int> letters;
    for (size_t i = 0; i < group.generators.size(); ++i) {
        steps.push_back(group.generators[i]);
        letters.push_back(int(i) + 1);
        steps.push_back(group.generators[i].inverse());
        letters.push_back(-(int(i) + 1));
    }

    struct Item {
        MoebiusMap g;
        std::vector<int> word;
    };

    std::unordered_map<EntryKey, size_t, EntryKeyHash> seen;
    std::vector<Item> all;
    all.push_back({MoebiusMap::identity(), {}});
    seen.emplace(keyOf(all[0].g), 0);

    std::vector<size_t> frontier = {0};
    bool truncated = false;

    while (!frontier.empty() && !truncated) {
        // Expand the frontier; candidate products are computed (in parallel
        // when asked) and merged serially in a fixed order.
        std::vector<Item> candidates(frontier.size() * steps.size());
        if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static) num_threads(coflab::maxThreads())
            for (long idx = 0; idx < (long)candidates.size(); ++idx) {
                size_t fi = idx / steps.size();
                size_t si = idx % steps.size();
                const Item& base = all[frontier[fi]];
                Item it;
                it.g = base.g * steps[si];
                it.word = base.word;
                it.word.push_back(letters[si]);
                candidates[idx] = std::move(it);
            }
        } else {
            for (size_t idx = 0; idx < candidates.size(); ++idx) {
                size_t fi = idx / steps.size();
                size_t si = idx % steps.size();
                const Item& base = all[frontier[fi]];
                candidates[idx].g = base.g * steps[si];
                candidates[idx].word = base.word;
                candidates[idx].word.push_back(letters[si]);
            }
        }

        std::vector<size_t> next;
        for (auto& cand : candidates) {
            if (cand.g.frobeniusNorm() > window) continue;
            EntryKey key = keyOf(cand.g);
            if (seen.contains(key)) continue;
            if ((long)all.size() >= maxElements) {
                truncated = true;
                break;
            }
            seen.emplace(key, all.size());
            next.push_back(all.size());
            all.push_back(std::move(cand));
        }
        frontier = std::move(next);
    }
    if (truncated) {
        throw BudgetExceeded("enumerateElements: element budget exhausted before closure");
    }

    ElementSet out;
    out.normBound = normBound;
    std::vector<size_t> order(all.size());
    for (size_t i = 0; i < all.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        double nx = all[x].g.frobeniusNorm(), ny = all[y].g.frobeniusNorm();
        if (nx != ny) return nx < ny;
        const auto &gx = all[x].g, &gy = all[y].g;
        return std::tie(gx.a, gx.b, gx.c, gx.d) < std::tie(gy.a, gy.b, gy.c, gy.d);
    });
    for (size_t i : order) {
        if (all[i].g.frobeniusNorm() <= normBound + 1e-9) {
            out.elements.push_back(all[i].g);
            out.words.push_back(all[i].word);
        }
    }
    return out;
}

namespace {

// Free cyclic reduction of a word; returns true if the reduced word is a
// proper power (w = v^j, j >= 2) as a cyclic word.
bool wordIsProperPower(std::vector<int> w) {
    // free reduction
    std::vector<int> red;
    for (int x : w) {
        if (!red.empty() && red.back() == -x) {
            red.pop_back();
        } else {
            red.push_back(x);
        }
    }
    // cyclic reduction
    while (red.size() >= 2 && red.front() == -red.back()) {
        red.erase(red.begin());
        red.pop_back();
    }
    size_t n = red.size();
    if (n < 2) return false;
    for (size_t p = 1; p <= n / 2; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (size_t i = p; i < n && periodic; ++i) periodic = red[i] == red[i - p];
        if (periodic) return true;
    }
    return false;
}

// Matrix root search: gamma is a proper power iff some enumerated hyperbolic
// element with the right trace powers to it. traceSorted holds (|trace|,
// element index) pairs in |trace| order.
bool hasMatrixRoot(const MoebiusMap& gamma, const std::vector<MoebiusMap>& elements,
                   const std::vector<std::pair<double, size_t>>& traceSorted) {
    double lam = hyp::multiplier(gamma);
    for (int j = 2; j <= 64; ++j) {
        double root = std::pow(lam, 1.0 / (2.0 * j));
        double tr = root + 1.0 / root;
        if (tr <= 2.0 + 1e-9) break; // j-th root would not be hyperbolic
        auto lo = std::lower_bound(traceSorted.begin(), traceSorted.end(),
                                   std::make_pair(tr - 1e-7, size_t(0)));
        for (auto it = lo; it != traceSorted.end() && it->first < tr + 1e-7; ++it) {
            const MoebiusMap& cand = elements[it->second];
            MoebiusMap p = cand;
            for (int i = 1; i < j; ++i) p = p * cand;
            if (p.sameEntries(gamma, 1e-6)) return true;
        }
    }
    return false;
}

} // namespace

ClassList primitiveHyperbolicClasses(const GroupPresentation& group, double traceMax,
                                     double normBound, ExecPolicy policy) {
    if (!(traceMax > 2.0)) throw DomainError("primitiveHyperbolicClasses: traceMax must be > 2");
    if (normBound <= 0.0) normBound = std::max(2.0 * traceMax, 12.0);

    ElementSet set = enumerateElements(group, normBound, 3.0, 4'000'000, policy);

    ClassList out;
    out.incompleteEnumeration = !group.certifiedComplete;

    std::vector<std::pair<double, size_t>> traceSorted;
    traceSorted.reserve(set.elements.size());
    for (size_t i = 0; i < set.elements.size(); ++i) {
        traceSorted.emplace_back(std::fabs(set.elements[i].trace()), i);
    }
    std::sort(traceSorted.begin(), traceSorted.end());

    // hyperbolic elements under the trace cap, keyed for the conjugation sweep
    std::unordered_map<EntryKey, size_t, EntryKeyHash> pending;
    std::vector<size_t> hyperbolicIdx;
    for (size_t i = 0; i < set.elements.size(); ++i) {
        const auto& g = set.elements[i];
        if (hyp::classify(g) != hyp::MapClass::Hyperbolic) continue;
        if (std::fabs(g.trace()) > traceMax + 1e-12) continue;
        hyperbolicIdx.push_back(i);
        pending.emplace(keyOf(g), i);
    }

    for (size_t idx : hyperbolicIdx) {
        EntryKey selfKey = keyOf(set.elements[idx]);
        if (!pending.contains(selfKey)) continue; // already swept into a class
        const MoebiusMap& rep = set.elements[idx];

        // remove the whole conjugacy orbit (within the ball) from pending
        for (const auto& alpha : set.elements) {
            MoebiusMap conj = alpha * rep * alpha.inverse();
            pending.erase(keyOf(conj));
            MoebiusMap conjInvDir = alpha.inverse() * rep * alpha;
            pending.erase(keyOf(conjInvDir));
        }
        pending.erase(selfKey);

        // primitivity: word power test rejects, matrix root search confirms
        const auto& word = set.words[idx];
        if (wordIsProperPower(word) || hasMatrixRoot(rep, set.elements, traceSorted)) continue;

        HyperbolicClass cls;
        cls.representative = rep;
        cls.trace = rep.trace();
        cls.multiplier = hyp::multiplier(rep);
        cls.word = word;
        out.classes.push_back(std::move(cls));
    }

    std::sort(out.classes.begin(), out.classes.end(),
              [](const HyperbolicClass& x, const HyperbolicClass& y) {
                  return x.multiplier < y.multiplier;
              });
    return out;
}

SelbergZResult selbergZ(const GroupPresentation& group, double s, double traceMax, long kMax,
                        ExecPolicy policy) {
    if (!(s > 1.0)) throw DivergentParameterRegion("selbergZ: requires s > 1");
    ClassList classes = primitiveHyperbolicClasses(group, traceMax, 0.0, policy);

    SelbergZResult out;
    out.traceMax = traceMax;
    out.classCount = (long)classes.classes.size();
    out.incompleteEnumeration = classes.incompleteEnumeration;

    double logZ = 0.0;
    for (const auto& cls : classes.classes) {
        double lam = cls.multiplier;
        for (long k = 0; k < kMax; ++k) {
            double t = std::pow(lam, -(s + double(k)));
            if (t < 1e-16) {
                out.kTermsMax = std::max(out.kTermsMax, k);
                break;
            }
            logZ += std::log1p(-t);
            if (k == kMax - 1) out.kTermsMax = kMax;
        }
    }
    out.logValue = logZ;
    out.value = std::exp(logZ);
    return out;
}

DetConstant detConstantCn(const DetInput& input) {
    const Signature& sig = input.signature;
    const int n = input.n;
    if (n < 1) throw DomainError("detConstantCn: n must be >= 1");
    if (sig.q >= 1 && !input.aProvided) {
        throw MissingA("detConstantCn: the scattering trace A is required when q >= 1");
    }

    DetConstant out;
    out.gamma2Convention = specfun::toString(input.gamma2);
    const double area = hyperbolicArea(sig);
    const double lgamma2n = std::real(specfun::gammaLn(std::complex<double>(2.0 * n, 0.0)));

    double logArea = area / (4.0 * kPi) *
                     ((2.0 * n - 1.0) * std::log(2.0 * kPi) +
                      2.0 * specfun::gamma2Ln(2.0 * n, input.gamma2) +
                      (2.0 * n - 1.0) * lgamma2n);
    out.breakdown["area_factor"] = logArea;

    double logEll = 0.0;
    for (int m : sig.orders) {
        double dm = double(m);
        auto expo = [&](long k) {
            return (2.0 * specfun::alphaResidue(m, k) + 1.0 - dm) / (2.0 * dm);
        };
        double t = expo(-n) * std::log(dm);
        for (int r = 1; r <= m - 1; ++r) {
            t += expo(r - n) *
                 std::real(specfun::gammaLn(std::complex<double>(double(r) / dm, 0.0)));
        }
        for (int r = 0; r <= m - 1; ++r) {
            t += expo(r + n) *
                 std::real(specfun::gammaLn(std::complex<double>((2.0 * n + r) / dm, 0.0)));
        }
        logEll += t;
    }
    out.breakdown["elliptic_factor"] = logEll;

    double logCusp = sig.q / 2.0 * ((2.0 * n - 1.0) * std::log(2.0) - std::log(kPi) - lgamma2n);
    out.breakdown["cusp_factor"] = logCusp;

    double logDn = -double(dimensionDn(sig, n)) * std::log(2.0 * n - 1.0);
    out.breakdown["dimension_factor"] = logDn;

    double logA = sig.q >= 1 ? input.A / 2.0 * std::log(double(n) - 0.5) : 0.0;
    out.breakdown["scattering_factor"] = logA;

    out.B = -area / (2.0 * kPi);
    out.D = area / kPi * specfun::zetaPrimeMinusOne() + sig.q / 2.0 * std::log(2.0 * kPi);
    for (int m : sig.orders) {
        double dm = double(m);
        double am = double(specfun::alphaResidue(m, n));
        double coeff = (dm * dm - 1.0) / (6.0 * dm) - am * (dm - am) / dm;
        out.dEllipticCoeffs.push_back(coeff);
        out.D += coeff * std::log(dm);
    }
    double nHalf = double(n) - 0.5;
    double logExp = out.B * nHalf * nHalf + out.D;
    out.breakdown["exp_factor"] = logExp;

    out.logCn = logArea + logEll + logCusp + logDn + logA + logExp;
    return out;
}

DetResult detDeltaN(const DetInput& input, const GroupPresentation& group, ExecPolicy policy) {
    if (input.n == 1) {
        throw UnsupportedN1(
            "detDeltaN: n = 1 needs the zeta derivative at 1, outside partial products");
    }
    DetResult out;
    out.constant = detConstantCn(input);
    out.zeta = selbergZ(group, double(input.n), input.traceMax, input.kMax, policy);
    out.logDet = out.constant.logCn + out.zeta.logValue;
    out.value = std::exp(out.logDet);
    return out;
}

} // namespace coflab::grp
