#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace minda {

enum class ExtremumMode { Min, Max };

/// Location and value of an extremum of a scalar objective on a circle |z|=r,
/// parametrized by the angle theta.
struct CircleExtremum {
    double theta = 0.0;
    double value = 0.0;
    double r = 0.0;
};

namespace detail {

/// Golden-section refinement of a bracketed minimum of h on [a, b].
inline std::pair<double, double> golden_min(const std::function<double(double)>& h,
                                            double a, double b, double xtol) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = h(x1), f2 = h(x2);
    while (b - a > xtol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = h(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = h(x2);
        }
    }
    double xm = 0.5 * (a + b);
    return {xm, h(xm)};
}

}  // namespace detail

/// Extremum of obj(theta) over a circle of radius r.  The grid pass covers
/// [0, pi] when the objective is symmetric under conjugation (real
/// coefficients) and [0, 2 pi) otherwise; every grid-local extremum is then
/// polished by golden section, so close competing extrema are not missed.
inline CircleExtremum circle_extremum(const std::function<double(double)>& obj, double r,
                                      ExtremumMode mode, bool symmetric = true,
                                      int grid = 2048) {
    if (grid < 8) throw ParameterOutOfRange("circle_extremum needs grid >= 8");
    const double span = symmetric ? std::numbers::pi : 2.0 * std::numbers::pi;
    const double sign = (mode == ExtremumMode::Min) ? 1.0 : -1.0;
    auto h = [&](double t) { return sign * obj(t); };

    std::vector<double> ts(static_cast<std::size_t>(grid) + 1);
    std::vector<double> vs(static_cast<std::size_t>(grid) + 1);
    for (int i = 0; i <= grid; ++i) {
        ts[static_cast<std::size_t>(i)] = span * static_cast<double>(i) / grid;
        vs[static_cast<std::size_t>(i)] = h(ts[static_cast<std::size_t>(i)]);
    }

    double best_t = ts[0], best_v = vs[0];
    auto consider = [&](double t, double v) {
        if (v < best_v) {
            best_v = v;
            best_t = t;
        }
    };
    for (int i = 0; i <= grid; ++i) consider(ts[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(i)]);

    for (int i = 0; i <= grid; ++i) {
        const bool left_ok = (i == 0) || vs[static_cast<std::size_t>(i)] <= vs[static_cast<std::size_t>(i - 1)];
        const bool right_ok = (i == grid) || vs[static_cast<std::size_t>(i)] <= vs[static_cast<std::size_t>(i + 1)];
        if (!(left_ok && right_ok)) continue;
        const double a = ts[static_cast<std::size_t>(std::max(0, i - 1))];
        const double b = ts[static_cast<std::size_t>(std::min(grid, i + 1))];
        if (b - a < 1e-14) continue;
        auto [t, v] = detail::golden_min(h, a, b, 1e-10);
        consider(t, v);
    }
    return {best_t, sign * best_v, r};
}

/// Brent root finder on a bracketing interval [lo, hi] with f(lo) f(hi) <= 0.
inline double find_root_bracketed(const std::function<double(double)>& f, double lo, double hi,
                                  double tol = 1e-12, int max_iter = 200) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw NoSignChange("find_root_bracketed: endpoints do not straddle a root");
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int it = 0; it < max_iter; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 2.2204460492503131e-16 * std::abs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q, r2;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r2 = fb / fc;
                p = s * (2.0 * xm * q * (q - r2) - (b - a) * (r2 - 1.0));
                q = (q - 1.0) * (r2 - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    return b;
}

enum class RadiusMethod { ClosedForm, Bisection, BrentRoot };

inline std::string to_string(RadiusMethod m) {
    switch (m) {
        case RadiusMethod::ClosedForm: return "closed_form";
        case RadiusMethod::Bisection: return "bisection";
        case RadiusMethod::BrentRoot: return "brent_root";
    }
    return "unknown";
}

/// A certified radius: the value, the final bracket that pins it, the bracket
/// tolerance, how it was obtained, and (when available) an independent
/// closed-form cross-check of the same quantity.
struct RadiusResult {
    double value = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double tolerance = 0.0;
    RadiusMethod method = RadiusMethod::Bisection;
    std::optional<double> cross_check{};
};

/// Bisect the transition point of a predicate that is true on [lo, x*) and
/// false on (x*, hi].  A 16-point scan first verifies the single-flip shape;
/// a predicate that flips back throws PredicateNotMonotone.
inline RadiusResult radius_by_bisection(const std::function<bool(double)>& pred, double lo,
                                        double hi, double tol = 1e-9) {
    if (!(lo < hi)) throw ParameterOutOfRange("radius_by_bisection needs lo < hi");
    constexpr int kScan = 16;
    bool seen_false = false;
    double last_true = lo, first_false = hi;
    bool have_false = false;
    for (int i = 0; i < kScan; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / (kScan - 1);
        const bool v = pred(x);
        if (i == 0 && !v)
            throw NoSignChange("radius_by_bisection: predicate already false at lo");
        if (i == kScan - 1 && v)
            throw NoSignChange("radius_by_bisection: predicate still true at hi");
        if (v && seen_false)
            throw PredicateNotMonotone("radius_by_bisection: predicate flipped more than once");
        if (v) {
            last_true = x;
        } else {
            seen_false = true;
            if (!have_false) {
                first_false = x;
                have_false = true;
            }
        }
    }
    double a = last_true, b = first_false;
    while (b - a > tol) {
        const double m = 0.5 * (a + b);
        (pred(m) ? a : b) = m;
    }
    return {0.5 * (a + b), a, b, tol, RadiusMethod::Bisection, std::nullopt};
}

namespace detail {

inline double simpson(const std::function<double(double)>& f, double a, double fa, double b,
                      double fb, double m, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                            double fb, double m, double fm, double whole, double tol, int depth) {
    // The cap leaves room for endpoint singularities in the derivative
    // (a sqrt(1-u) integrand needs ~70 levels at tol 1e-12) while a genuine
    // jump, whose error estimate scales like the tolerance itself, still
    // recurses forever and is caught here.
    if (depth > 96) throw QuadratureFailure("adaptive Simpson hit recursion cap");
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, lm, flm);
    const double right = simpson(f, m, fm, b, fb, rm, frm);
    if (std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f on [a, b] to absolute tolerance tol.
inline double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                 double tol = 1e-12) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = detail::simpson(f, a, fa, b, fb, m, fm);
    return detail::adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, 0);
}

}  // namespace minda
