#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "psi.hpp"
#include "series.hpp"
#include "solve.hpp"

namespace minda {

/// The extremal member f0 of the class attached to a catalog map psi:
/// f0(z) = z exp( sum_{n>=1} B_n z^n / n ), the solution of z f0'/f0 = psi(z).
/// The truncated Taylor series is kept at two orders (N and 2N) so that any
/// value read off the series can be certified by order doubling.
struct ExtremalFunction {
    PsiSpec spec;
    TruncatedSeries series;        // coefficients [0, 1, t2, ..., tN]
    TruncatedSeries series_check;  // same construction at order 2N
    bool has_closed_form = false;
};

namespace detail {

inline TruncatedSeries extremal_series_at(const PsiSpec& spec, int order) {
    const auto B = spec.taylor(order - 1);
    std::vector<cx> a(static_cast<std::size_t>(order));
    for (int n = 1; n < order; ++n)
        a[static_cast<std::size_t>(n)] = B[static_cast<std::size_t>(n - 1)] / static_cast<double>(n);
    const auto e = minda::exp(TruncatedSeries(std::move(a)));
    std::vector<cx> f(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k < order; ++k) f[static_cast<std::size_t>(k + 1)] = e[k];
    return TruncatedSeries(std::move(f));
}

inline double majorant_partial(const TruncatedSeries& s, double r) {
    double acc = 0.0, rp = 1.0;
    for (int n = 0; n <= s.order(); ++n) {
        acc += std::abs(s[n]) * rp;
        rp *= r;
    }
    return acc;
}

}  // namespace detail

inline ExtremalFunction build_extremal(const PsiSpec& spec, int N) {
    if (N < 2) throw ParameterOutOfRange("build_extremal needs N >= 2");
    const bool closed = spec.family() == PsiFamily::Janowski ||
                        spec.family() == PsiFamily::AlphaHalfplane ||
                        spec.family() == PsiFamily::Cardioid ||
                        spec.family() == PsiFamily::Lemniscate;
    return {spec, detail::extremal_series_at(spec, N), detail::extremal_series_at(spec, 2 * N),
            closed};
}

/// Closed-form value of f0 for the families whose target integrates in
/// elementary terms; throws for the series-only families.
inline cx extremal_closed_eval(const ExtremalFunction& f, cx z) {
    const PsiSpec& spec = f.spec;
    switch (spec.family()) {
        case PsiFamily::Janowski: {
            const double D = spec.D(), E = spec.E();
            if (E == 0.0) return z * std::exp(D * z);
            const cx base = 1.0 + E * z;
            if (std::abs(base) < 1e-300) throw BranchCutHit("extremal pole at z = -1/E");
            return z * std::pow(base, (D - E) / E);
        }
        case PsiFamily::AlphaHalfplane: {
            const cx base = 1.0 - z;
            if (std::abs(base) < 1e-300) throw BranchCutHit("extremal pole at z = 1");
            return z * std::pow(base, -2.0 * (1.0 - spec.alpha()));
        }
        case PsiFamily::Cardioid: return z * std::exp(std::exp(z) - 1.0);
        case PsiFamily::Lemniscate: {
            const cx s = std::sqrt(1.0 + z);
            return 4.0 * z * std::exp(2.0 * (s - 1.0)) / ((1.0 + s) * (1.0 + s));
        }
        default: throw Error("no closed form for this extremal function");
    }
}

/// f0(r) for real r in [-1, 1].  Closed forms are exact; the series route is
/// certified by order doubling and throws TruncationNotConverged when the two
/// truncations disagree by more than 1e-10.
inline double extremal_eval_real(const ExtremalFunction& f, double r) {
    if (!(std::abs(r) <= 1.0)) throw ParameterOutOfRange("extremal_eval_real needs |r| <= 1");
    if (f.has_closed_form) return extremal_closed_eval(f, cx{r, 0.0}).real();
    const double a = f.series.eval(cx{r, 0.0}).real();
    const double b = f.series_check.eval(cx{r, 0.0}).real();
    if (std::abs(a - b) > 1e-10)
        throw TruncationNotConverged("extremal series not settled at this radius");
    return b;
}

/// Majorant value r + sum |t_n| r^n, certified by order doubling.
inline double majorant_eval(const ExtremalFunction& f, double r) {
    if (!(0.0 <= r && r <= 1.0)) throw ParameterOutOfRange("majorant_eval needs r in [0, 1]");
    const double a = detail::majorant_partial(f.series, r);
    const double b = detail::majorant_partial(f.series_check, r);
    if (std::abs(a - b) > 1e-10)
        throw TruncationNotConverged("majorant series not settled at this radius");
    return b;
}

/// Uncertified partial sum of the majorant (monotone in the truncation order,
/// which makes it the right tool for bracketing root solves).
inline double majorant_partial(const ExtremalFunction& f, double r) {
    return detail::majorant_partial(f.series, r);
}

/// The radius |f0(-1)| of the largest disk centered at 0 that every class
/// member covers: exp of the integral of (psi(-u) - 1)/u over [0, 1].
/// Rational targets use their closed forms; everything else integrates by
/// adaptive quadrature at tolerance 1e-12.
inline double koebe_radius(const PsiSpec& spec) {
    switch (spec.family()) {
        case PsiFamily::Janowski: {
            const double D = spec.D(), E = spec.E();
            if (E == 0.0) return std::exp(-D);
            return std::pow(1.0 - E, (D - E) / E);
        }
        case PsiFamily::AlphaHalfplane:
            return std::pow(2.0, -2.0 * (1.0 - spec.alpha()));
        default: {
            const double B1 = spec.b1();
            auto g = [&](double u) {
                if (u < 1e-12) return -B1;
                return (spec.eval(cx{-u, 0.0}).real() - 1.0) / u;
            };
            return std::exp(integrate_adaptive(g, 0.0, 1.0, 1e-12));
        }
    }
}

}  // namespace minda
