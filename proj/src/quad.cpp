#include "coflab/quad.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <queue>

namespace coflab::quad {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    cplx value;
    double err;
    bool fromTanhSinh = false;
};

struct PanelCmp {
    bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

void checkFinite(cplx v, double x) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw NonFiniteIntegrand("integrand returned non-finite value at x = " +
                                 std::to_string(x));
    }
}

Panel evalGK15(const Fn1D& f, double a, double b, long& evals) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    cplx resK = 0.0, resG = 0.0;
    for (int j = 0; j < 8; ++j) {
        if (j == 7) {
            cplx fc = f(c);
            checkFinite(fc, c);
            resK += kWgk[7] * fc;
            resG += kWg[3] * fc;
            ++evals;
            continue;
        }
        double dx = h * kXgk[j];
        cplx f1 = f(c - dx);
        cplx f2 = f(c + dx);
        checkFinite(f1, c - dx);
        checkFinite(f2, c + dx);
        evals += 2;
        resK += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resG += kWg[j / 2] * (f1 + f2);
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = h * resK;
    p.err = std::abs(h * (resK - resG));
    return p;
}

// Tanh-sinh rule for a panel with an integrable endpoint singularity; the
// abscissae never reach the endpoints. Abscissae that round onto the
// endpoints are dropped, which floors the reachable error near 1e-13 for
// log-type singularities.
Panel evalTanhSinh(const Fn1D& f, double a, double b, double absTol, long& evals) {
    const double c = 0.5 * (a + b);
    const double h0 = 0.5 * (b - a);
    const double tMax = 6.5;

    auto node = [](double t, double& x, double& w) {
        double s = 0.5 * kPi * std::sinh(t);
        double sech = 1.0 / std::cosh(s);
        x = std::tanh(s);
        w = 0.5 * kPi * std::cosh(t) * sech * sech;
    };

    auto levelSum = [&](double hstep, bool oddOnly) {
        cplx acc = 0.0;
        double t0 = oddOnly ? hstep : 0.0;
        double dt = oddOnly ? 2.0 * hstep : hstep;
        for (double t = t0; t <= tMax; t += dt) {
            double x, w;
            node(t, x, w);
            if (x >= 1.0) break;
            if (t == 0.0) {
                cplx fv = f(c);
                checkFinite(fv, c);
                ++evals;
                acc += w * fv;
            } else {
                double lo = c - h0 * x, hi = c + h0 * x;
                if (lo <= a || hi >= b) break; // abscissa rounded onto an endpoint
                cplx flo = f(lo), fhi = f(hi);
                checkFinite(flo, lo);
                checkFinite(fhi, hi);
                evals += 2;
                acc += w * (flo + fhi);
            }
        }
        return acc;
    };

    double hstep = 1.0;
    cplx prev = levelSum(hstep, false) * hstep * h0;
    cplx result = prev;
    double err = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= 10; ++level) {
        hstep *= 0.5;
        cplx oddSum = levelSum(hstep, true);
        result = 0.5 * prev + oddSum * hstep * h0;
        err = std::abs(result - prev);
        prev = result;
        if (err < std::max(absTol, 1e-15 * std::abs(result))) break;
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = result;
    p.err = err;
    p.fromTanhSinh = true;
    return p;
}

struct Mapped1D {
    Fn1D g;
    double a = 0.0, b = 0.0;
    std::vector<double> hints;
};

Mapped1D mapProblem(const Fn1D& f, double a, double b, const QuadSpec& spec) {
    Mapped1D m;
    if (std::isfinite(b)) {
        m.g = f;
        m.a = a;
        m.b = b;
        m.hints = spec.singularHints;
        return m;
    }
    Transform tr = spec.transform;
    if (tr == Transform::None) tr = Transform::SemiInfRational;
    if (tr == Transform::SemiInfRational) {
        m.g = [f, a](double t) {
            double om = 1.0 - t;
            return f(a + t / om) / (om * om);
        };
        for (double h : spec.singularHints) {
            if (h >= a && std::isfinite(h)) m.hints.push_back((h - a) / (1.0 + h - a));
        }
    } else {
        double rate = spec.expRate > 0 ? spec.expRate : 1.0;
        m.g = [f, a, rate](double t) {
            double om = 1.0 - t;
            return f(a - std::log(om) / rate) / (rate * om);
        };
        for (double h : spec.singularHints) {
            if (h >= a && std::isfinite(h)) m.hints.push_back(1.0 - std::exp(-rate * (h - a)));
        }
    }
    m.a = 0.0;
    m.b = 1.0;
    m.hints.push_back(1.0); // the mapped decay end
    return m;
}

} // namespace

void QuadSpec::validate() const {
    if (!(relTol > 0.0) || !(absTol > 0.0)) {
        throw DomainError("QuadSpec: tolerances must be positive");
    }
    if (maxEvals < 1000) throw DomainError("QuadSpec: maxEvals must be >= 1000");
}

QuadResult integrate1D(const Fn1D& f, double a, double b, const QuadSpec& spec) {
    spec.validate();
    Mapped1D m = mapProblem(f, a, b, spec);

    std::vector<double> cuts = {m.a, m.b};
    for (double h : m.hints) {
        if (h > m.a && h < m.b) cuts.push_back(h);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto isHint = [&](double x) {
        for (double h : m.hints) {
            if (std::fabs(x - h) < 1e-15 * std::max(1.0, std::fabs(x))) return true;
        }
        return false;
    };

    long evals = 0;
    std::priority_queue<Panel, std::vector<Panel>, PanelCmp> heap;
    cplx total = 0.0;
    double totalErr = 0.0;

    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        double lo = cuts[i], hi = cuts[i + 1];
        Panel p = (isHint(lo) || isHint(hi))
                      ? evalTanhSinh(m.g, lo, hi, spec.absTol * 0.25, evals)
                      : evalGK15(m.g, lo, hi, evals);
        total += p.value;
        totalErr += p.err;
        heap.push(p);
    }

    auto tolMet = [&] {
        return totalErr <= std::max(spec.absTol, spec.relTol * std::abs(total));
    };

    while (!tolMet() && evals < spec.maxEvals && !heap.empty()) {
        Panel worst = heap.top();
        if (worst.fromTanhSinh) break; // tanh-sinh panels are terminal
        heap.pop();
        total -= worst.value;
        totalErr -= worst.err;
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            total += worst.value;
            totalErr += worst.err;
            break;
        }
        Panel left = evalGK15(m.g, worst.a, mid, evals);
        Panel right = evalGK15(m.g, mid, worst.b, evals);
        total += left.value + right.value;
        totalErr += left.err + right.err;
        heap.push(left);
        heap.push(right);
    }

    QuadResult res;
    res.value = total;
    res.errEstimate = totalErr;
    res.evals = evals;
    res.converged = tolMet();
    return res;
}

namespace {

// Periodic trapezoid over the angle with node doubling. Slices are evaluated
// independently (optionally with OpenMP) and reduced in index order, so the
// serial and parallel paths produce bit-identical sums.
struct AngularResult {
    cplx value = 0.0;
    double thetaErr = std::numeric_limits<double>::infinity();
    double sliceErrSum = 0.0; // unweighted; caller scales by 2 pi / nodes
    long nodes = 0;
    long evals = 0;
};

AngularResult angularDoubling(const std::function<QuadResult(double)>& slice,
                              const QuadSpec& spec, int nStart, int nMax) {
    AngularResult out;

    auto evalNodes = [&](const std::vector<double>& thetas) {
        std::vector<cplx> vals(thetas.size());
        std::vector<double> errs(thetas.size(), 0.0);
        std::vector<long> evs(thetas.size(), 0);
        std::exception_ptr eptr = nullptr;
        if (spec.policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(coflab::maxThreads())
            for (long i = 0; i < (long)thetas.size(); ++i) {
                try {
                    QuadResult r = slice(thetas[i]);
                    vals[i] = r.value;
                    errs[i] = r.errEstimate;
                    evs[i] = r.evals;
                } catch (...) {
#pragma omp critical
                    {
                        if (!eptr) eptr = std::current_exception();
                    }
                }
            }
        } else {
            for (size_t i = 0; i < thetas.size(); ++i) {
                QuadResult r = slice(thetas[i]);
                vals[i] = r.value;
                errs[i] = r.errEstimate;
                evs[i] = r.evals;
            }
        }
        if (eptr) std::rethrow_exception(eptr);
        cplx sum = 0.0;
        for (size_t i = 0; i < thetas.size(); ++i) {
            sum += vals[i];
            out.sliceErrSum += errs[i];
            out.evals += evs[i];
        }
        return sum;
    };

    int n = nStart;
    std::vector<double> thetas(n);
    for (int j = 0; j < n; ++j) thetas[j] = 2.0 * kPi * j / n;
    cplx prev = evalNodes(thetas) * (2.0 * kPi / n);

    cplx current = prev;
    while (n < nMax) {
        int n2 = 2 * n;
        std::vector<double> odd(n);
        for (int j = 0; j < n; ++j) odd[j] = 2.0 * kPi * (2 * j + 1) / n2;
        cplx oddSum = evalNodes(odd);
        current = 0.5 * prev + oddSum * (2.0 * kPi / n2);
        out.thetaErr = std::abs(current - prev);
        n = n2;
        prev = current;
        if (out.thetaErr <=
            0.25 * std::max(spec.absTol, spec.relTol * std::abs(current))) {
            break;
        }
    }
    out.value = current;
    out.nodes = n;
    return out;
}

} // namespace

QuadResult integrateDisc(const FnC& f, const QuadSpec& spec,
                         const std::vector<cplx>& singularPoints) {
    spec.validate();
    QuadSpec radialSpec = spec;
    radialSpec.policy = ExecPolicy::Serial;
    radialSpec.transform = Transform::None;
    radialSpec.singularHints.clear();
    radialSpec.relTol = 0.1 * spec.relTol;
    radialSpec.absTol = 0.1 * spec.absTol;
    for (cplx p : singularPoints) radialSpec.singularHints.push_back(std::abs(p));

    auto slice = [&](double theta) {
        cplx dir = std::polar(1.0, theta);
        return integrate1D([&f, dir](double r) { return f(r * dir) * r; }, 0.0, 1.0,
                           radialSpec);
    };

    AngularResult ar = angularDoubling(slice, spec, 16, 4096);
    QuadResult res;
    res.value = ar.value;
    res.errEstimate = ar.thetaErr + ar.sliceErrSum * (2.0 * kPi / ar.nodes);
    res.evals = ar.evals;
    res.converged =
        res.errEstimate <= std::max(spec.absTol, spec.relTol * std::abs(res.value));
    return res;
}

QuadResult integrateDiscPole2(const FnC& f, cplx pole, const QuadSpec& spec) {
    spec.validate();
    double d = 1.0 - std::abs(pole);
    if (!(d > 1e-6)) throw DomainError("integrateDiscPole2: pole must lie inside the disc");
    double eps = 0.5 * d;

    long avgEvals = 0;

    // |u - pole| < eps: the double pole cancels only against the angular
    // average, so integrate the angle first; the radial factor is then O(r)
    // and smooth through zero.
    auto angularAverage = [&](double r) -> cplx {
        int n = 32;
        cplx sum = 0.0;
        for (int j = 0; j < n; ++j) {
            cplx e = std::polar(1.0, 2.0 * kPi * j / n);
            sum += f(pole + r * e) / (e * e);
            ++avgEvals;
        }
        cplx prev = sum / double(n);
        while (n < 8192) {
            int n2 = 2 * n;
            cplx oddSum = 0.0;
            for (int j = 0; j < n; ++j) {
                cplx e = std::polar(1.0, 2.0 * kPi * (2 * j + 1) / n2);
                oddSum += f(pole + r * e) / (e * e);
                ++avgEvals;
            }
            cplx cur = 0.5 * prev + oddSum / double(n2);
            double diff = std::abs(cur - prev);
            prev = cur;
            n = n2;
            if (diff < 0.02 * std::max(spec.absTol, spec.relTol * std::abs(cur))) break;
        }
        return prev * (2.0 * kPi);
    };

    QuadSpec innerSpec = spec;
    innerSpec.transform = Transform::None;
    innerSpec.singularHints.clear();
    innerSpec.relTol = 0.2 * spec.relTol;
    innerSpec.absTol = 0.2 * spec.absTol;
    QuadResult inner =
        integrate1D([&](double r) { return angularAverage(r) / r; }, 0.0, eps, innerSpec);

    // Remainder of the disc in polar coordinates centered at the pole.
    double p2 = std::norm(pole);
    auto slice = [&](double theta) {
        cplx dir = std::polar(1.0, theta);
        double bcos = (std::conj(pole) * dir).real();
        double R = -bcos + std::sqrt(bcos * bcos + (1.0 - p2));
        QuadSpec rs = spec;
        rs.policy = ExecPolicy::Serial;
        rs.transform = Transform::None;
        rs.singularHints.clear();
        rs.relTol = 0.1 * spec.relTol;
        rs.absTol = 0.1 * spec.absTol;
        cplx invDir2 = 1.0 / (dir * dir);
        return integrate1D(
            [&f, pole, dir, invDir2](double r) { return f(pole + r * dir) * invDir2 / r; },
            eps, R, rs);
    };

    AngularResult outer = angularDoubling(slice, spec, 16, 4096);

    QuadResult res;
    res.value = inner.value + outer.value;
    res.errEstimate =
        inner.errEstimate + outer.thetaErr + outer.sliceErrSum * (2.0 * kPi / outer.nodes);
    res.evals = avgEvals + inner.evals + outer.evals;
    res.converged =
        res.errEstimate <= std::max(spec.absTol, spec.relTol * std::abs(res.value));
    return res;
}

QuadResult integrateLineOsc(const FnC& f, double k, const QuadSpec& spec, double R) {
    spec.validate();

    if (k == 0.0) {
        QuadSpec s = spec;
        s.transform = Transform::None;
        s.singularHints = {-0.5 * kPi, 0.5 * kPi};
        return integrate1D(
            [&f](double u) {
                double cu = std::cos(u);
                return f(cplx(std::tan(u), 0.0)) / (cu * cu);
            },
            -0.5 * kPi, 0.5 * kPi, s);
    }

    const double sgn = k > 0 ? 1.0 : -1.0;
    const double twoPiK = 2.0 * kPi * k;
    const double decay = 2.0 * kPi * std::fabs(k);

    QuadSpec mid = spec;
    mid.transform = Transform::None;
    mid.singularHints.clear();
    int panels = std::max(4, (int)std::ceil(4.0 * R * std::fabs(k)));
    QuadResult center;
    center.converged = true;
    for (int j = 0; j < panels; ++j) {
        double lo = -R + 2.0 * R * j / panels;
        double hi = -R + 2.0 * R * (j + 1) / panels;
        QuadSpec ms = mid;
        ms.absTol = spec.absTol / panels;
        QuadResult part = integrate1D(
            [&f, twoPiK](double u) { return f(cplx(u, 0.0)) * std::polar(1.0, twoPiK * u); },
            lo, hi, ms);
        center.value += part.value;
        center.errEstimate += part.errEstimate;
        center.evals += part.evals;
        center.converged = center.converged && part.converged;
    }

    // Tails rotated onto vertical rays u = +-R + i sgn t, where the
    // oscillation turns into decay exp(-2 pi |k| t). Valid because the poles
    // sit inside |Re u| < R and |f| = O(|u|^{-2}).
    QuadSpec ray = spec;
    ray.transform = Transform::SemiInfExp;
    ray.expRate = decay;
    ray.singularHints.clear();
    cplx iSgn(0.0, sgn);
    QuadResult right = integrate1D(
        [&f, R, iSgn, decay](double t) {
            return f(cplx(R, 0.0) + iSgn * t) * std::exp(-decay * t);
        },
        0.0, std::numeric_limits<double>::infinity(), ray);
    QuadResult left = integrate1D(
        [&f, R, iSgn, decay](double t) {
            return f(cplx(-R, 0.0) + iSgn * t) * std::exp(-decay * t);
        },
        0.0, std::numeric_limits<double>::infinity(), ray);

    QuadResult res;
    res.value = center.value + iSgn * (std::polar(1.0, twoPiK * R) * right.value -
                                       std::polar(1.0, -twoPiK * R) * left.value);
    res.errEstimate = center.errEstimate + right.errEstimate + left.errEstimate;
    res.evals = center.evals + right.evals + left.evals;
    res.converged = center.converged && right.converged && left.converged;
    return res;
}

QuadResult integrateStrip(const FnC& f, double yLo, double yHi, const QuadSpec& spec) {
    spec.validate();
    QuadSpec xs = spec;
    xs.transform = Transform::None;
    xs.singularHints = {-0.5 * kPi, 0.5 * kPi};
    xs.relTol = 0.1 * spec.relTol;
    xs.absTol = 0.1 * spec.absTol / std::max(1.0, yHi - yLo);

    long innerEvals = 0;
    double innerErrMax = 0.0;
    auto line = [&](double y) {
        QuadResult r = integrate1D(
            [&f, y](double u) {
                double cu = std::cos(u);
                return f(cplx(std::tan(u), y)) / (cu * cu);
            },
            -0.5 * kPi, 0.5 * kPi, xs);
        innerEvals += r.evals;
        innerErrMax = std::max(innerErrMax, r.errEstimate);
        return r.value;
    };

    QuadSpec ys = spec;
    ys.transform = Transform::None;
    ys.singularHints.clear();
    QuadResult outer = integrate1D([&](double y) { return line(y); }, yLo, yHi, ys);

    QuadResult res;
    res.value = outer.value;
    res.errEstimate = outer.errEstimate + innerErrMax * (yHi - yLo);
    res.evals = outer.evals + innerEvals;
    res.converged =
        res.errEstimate <= std::max(spec.absTol, spec.relTol * std::abs(res.value));
    return res;
}

} // namespace coflab::quad
