#include "coflab/beltrami.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace coflab::beltrami {

namespace {
constexpr double kPi = std::numbers::pi;
}

void EllipticCoeffs::set(int k, cplx value) {
    if (k < 2 || k % m != 0) {
        throw DomainError("EllipticCoeffs: index " + std::to_string(k) +
                          " must be a multiple of m = " + std::to_string(m) + " and >= 2");
    }
    chi[k] = value;
}

cplx evalCusp(const CuspCoeffs& c, const PointUHP& z) {
    double x = z.z.real(), y = z.z.imag();
    cplx sum = 0.0;
    for (int k = 1; k <= c.kMax(); ++k) {
        // e^{-2 pi i k conj z} = e^{-2 pi k y} e^{-2 pi i k x}
        sum += c.at(k) * std::exp(-2.0 * kPi * k * y) * std::polar(1.0, -2.0 * kPi * k * x);
    }
    return y * y * sum;
}

cplx evalElliptic(const EllipticCoeffs& e, const PointDisc& z) {
    double om = 1.0 - std::norm(z.z);
    cplx zb = std::conj(z.z);
    cplx sum = 0.0;
    for (const auto& [k, chi] : e.chi) {
        sum += double(k) * (double(k) * double(k) - 1.0) * chi * std::pow(zb, k - 2);
    }
    return 0.25 * om * om * sum;
}

double tzCuspNorm(const CuspCoeffs& c) {
    double s = 0.0;
    for (int k = 1; k <= c.kMax(); ++k) {
        s += std::norm(c.at(k)) / std::pow(double(k), 5);
    }
    return 3.0 / (128.0 * std::pow(kPi, 5)) * s;
}

cplx tzCuspBilinear(const CuspCoeffs& c, const CuspCoeffs& d) {
    cplx s = 0.0;
    int K = std::max(c.kMax(), d.kMax());
    for (int k = 1; k <= K; ++k) {
        s += c.at(k) * std::conj(d.at(k)) / std::pow(double(k), 5);
    }
    return 3.0 / (128.0 * std::pow(kPi, 5)) * s;
}

double tzEllNorm(const EllipticCoeffs& e) {
    double s = 0.0;
    for (const auto& [k, chi] : e.chi) s += double(k) * std::norm(chi);
    return s;
}

cplx tzEllBilinear(const EllipticCoeffs& e, const EllipticCoeffs& f) {
    cplx s = 0.0;
    for (const auto& [k, chi] : e.chi) s += double(k) * chi * std::conj(f.at(k));
    return s;
}

CuspZeroMode cuspZeroMode(const CuspCoeffs& c, double y) {
    if (!(y > 0.0)) throw DomainError("cuspZeroMode: requires y > 0");
    CuspZeroMode out;
    out.alpha = 2.0 / (3.0 * y) * tzCuspNorm(c);
    double s = 0.0;
    for (int k = 1; k <= c.kMax(); ++k) {
        double ky = kPi * k * y;
        double poly = 1.0 + 4.0 * ky + 8.0 * ky * ky + 8.0 * ky * ky * ky;
        s += std::norm(c.at(k)) / std::pow(double(k), 5) * poly * std::exp(-4.0 * kPi * k * y);
    }
    out.beta = -s / (64.0 * std::pow(kPi, 5) * y);
    return out;
}

double ellipticZeroMode(const EllipticCoeffs& e, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("ellipticZeroMode: requires 0 <= r < 1");
    double om = 1.0 - r * r;
    double sum = 0.0;
    for (const auto& [k, chi] : e.chi) {
        double inner = 0.0;
        for (int s = 1; s <= k - 1; ++s) {
            inner += double(s) * double(s) * std::pow(r, 2 * s - 2);
        }
        inner -= 0.25 * double(k) * double(k - 1) * double(k - 1) * std::pow(r, 2 * k - 2);
        sum += double(k) * std::norm(chi) * inner;
    }
    return 0.5 * om * om * sum;
}

double uPoly(int k, double r) {
    return (2.0 * k * k - 2.0 * k - 1.0) * std::pow(r, k) -
           double(k) * double(k) * std::pow(r, k - 1) -
           double(k - 1) * double(k - 1) * std::pow(r, k + 1) + r + 1.0;
}

double vPolyDirect(int k, double r) {
    double s = 0.0;
    for (int j = 1; j <= k - 1; ++j) s += double(j) * double(j) * std::pow(r, j - 1);
    return s;
}

namespace {

cplx parseComplexPair(const nlohmann::json& j, const char* field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw DomainError(std::string("coefficient file: field '") + field +
                          "' must be a [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open coefficient file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

CuspCoeffs cuspCoeffsFromJson(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("beta") || !j["beta"].is_array()) {
        throw DomainError("coefficient file: expected object with array field 'beta'");
    }
    std::vector<cplx> beta;
    for (const auto& item : j["beta"]) beta.push_back(parseComplexPair(item, "beta"));
    return CuspCoeffs(std::move(beta));
}

EllipticCoeffs ellipticCoeffsFromJson(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("m") || !j["m"].is_number_integer()) {
        throw DomainError("coefficient file: expected object with integer field 'm'");
    }
    EllipticCoeffs e(j["m"].get<int>());
    if (!j.contains("chi") || !j["chi"].is_object()) {
        throw DomainError("coefficient file: expected object field 'chi'");
    }
    for (auto it = j["chi"].begin(); it != j["chi"].end(); ++it) {
        int k = 0;
        try {
            k = std::stoi(it.key());
        } catch (...) {
            throw DomainError("coefficient file: field 'chi' key '" + it.key() +
                              "' is not an integer");
        }
        e.set(k, parseComplexPair(it.value(), "chi"));
    }
    return e;
}

std::string toJson(const CuspCoeffs& c) {
    nlohmann::json j;
    j["beta"] = nlohmann::json::array();
    for (const cplx& b : c.beta) j["beta"].push_back({b.real(), b.imag()});
    return j.dump();
}

std::string toJson(const EllipticCoeffs& e) {
    nlohmann::json j;
    j["m"] = e.m;
    j["chi"] = nlohmann::json::object();
    for (const auto& [k, chi] : e.chi) {
        j["chi"][std::to_string(k)] = {chi.real(), chi.imag()};
    }
    return j.dump();
}

CuspCoeffs loadCuspCoeffs(const std::string& path) { return cuspCoeffsFromJson(slurp(path)); }

EllipticCoeffs loadEllipticCoeffs(const std::string& path) {
    return ellipticCoeffsFromJson(slurp(path));
}

} // namespace coflab::beltrami
