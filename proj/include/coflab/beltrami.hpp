#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "coflab/errors.hpp"
#include "coflab/hyperbolic.hpp"

namespace coflab::beltrami {

using cplx = std::complex<double>;
using hyp::PointDisc;
using hyp::PointUHP;

// Fourier data of a harmonic Beltrami differential at a cusp,
//   mu(z) = y^2 sum_{k>=1} beta_k e^{-2 pi i k conj(z)}.
struct CuspCoeffs {
    std::vector<cplx> beta; // beta[j] is the coefficient of k = j+1

    CuspCoeffs() = default;
    explicit CuspCoeffs(std::vector<cplx> b) : beta(std::move(b)) {
        if (beta.empty()) throw DomainError("CuspCoeffs: at least one coefficient required");
    }
    int kMax() const { return (int)beta.size(); }
    cplx at(int k) const { return (k >= 1 && k <= kMax()) ? beta[k - 1] : cplx(0.0); }
};

// Fourier data at an elliptic fixed point of order m,
//   mu(z) = ((1-|z|^2)^2 / 4) sum_{k >= 2, m | k} (k^3 - k) chi_k conj(z)^{k-2}.
// Only indices divisible by m may be stored.
struct EllipticCoeffs {
    int m = 2;
    std::map<int, cplx> chi;

    EllipticCoeffs() = default;
    explicit EllipticCoeffs(int order) : m(order) {
        if (m < 2) throw DomainError("EllipticCoeffs: order must be >= 2");
    }
    void set(int k, cplx value);
    cplx at(int k) const {
        auto it = chi.find(k);
        return it == chi.end() ? cplx(0.0) : it->second;
    }
};

cplx evalCusp(const CuspCoeffs& c, const PointUHP& z);
cplx evalElliptic(const EllipticCoeffs& e, const PointDisc& z);

// Cusp TZ pairing (3/(128 pi^5)) sum beta_k conj(beta'_k) / k^5.
double tzCuspNorm(const CuspCoeffs& c);
cplx tzCuspBilinear(const CuspCoeffs& c, const CuspCoeffs& d);

// Elliptic TZ pairing sum_k k chi_k conj(chi'_k).
double tzEllNorm(const EllipticCoeffs& e);
cplx tzEllBilinear(const EllipticCoeffs& e, const EllipticCoeffs& f);

// Fourier zero mode of 2(Delta_0+2)^{-1}(mu mubar) at a cusp: c_0(y) =
// alpha(y) + beta(y), with alpha(y) = (2/(3y)) <mu,mu> and beta(y) the
// exponentially decaying part.
struct CuspZeroMode {
    double alpha;
    double beta;
};
CuspZeroMode cuspZeroMode(const CuspCoeffs& c, double y);

// Radial zero mode a_0(r) of 2(Delta_0+2)^{-1}(mu mubar) at an elliptic point.
double ellipticZeroMode(const EllipticCoeffs& e, double r);

// U_k(r) = (2k^2-2k-1) r^k - k^2 r^{k-1} - (k-1)^2 r^{k+1} + r + 1, with
// sum_{s=1}^{k-1} s^2 r^{s-1} = U_k(r) / (1-r)^3.
double uPoly(int k, double r);
double vPolyDirect(int k, double r); // the direct s-sum, oracle for uPoly

// JSON I/O: {"beta": [[re, im], ...]} and {"m": m, "chi": {"k": [re, im]}}.
CuspCoeffs cuspCoeffsFromJson(const std::string& text);
EllipticCoeffs ellipticCoeffsFromJson(const std::string& text);
std::string toJson(const CuspCoeffs& c);
std::string toJson(const EllipticCoeffs& e);
CuspCoeffs loadCuspCoeffs(const std::string& path);
EllipticCoeffs loadEllipticCoeffs(const std::string& path);

} // namespace coflab::beltrami
