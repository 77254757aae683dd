#pragma once

#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "extremal.hpp"
#include "psi.hpp"
#include "solve.hpp"

namespace minda {

/// One row of the modulus-bound table for a target map psi at radius r:
/// theta1 minimizes |psi(r e^{i theta})| over [0, pi], min_mod is that
/// minimum, and lower/upper are the sharp growth bounds
///   lower = min_mod * (-f0(-r)) / r,   upper = max_mod * f0(r) / r.
struct DistortionRow {
    double r = 0.0;
    double theta1 = 0.0;
    double min_mod = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

/// Minimum of |psi(r e^{i theta})| over the circle: returns {theta1, value}.
inline std::pair<double, double> min_mod_psi(const PsiSpec& spec, double r) {
    if (!(0.0 < r && r <= 1.0)) throw ParameterOutOfRange("min_mod_psi needs r in (0, 1]");
    auto res = circle_extremum(
        [&](double t) { return std::abs(spec.eval(std::polar(r, t))); }, r, ExtremumMode::Min);
    return {res.theta, res.value};
}

/// Maximum of |psi(r e^{i theta})| over the circle: returns {theta_max, value}.
inline std::pair<double, double> max_mod_psi(const PsiSpec& spec, double r) {
    if (!(0.0 < r && r <= 1.0)) throw ParameterOutOfRange("max_mod_psi needs r in (0, 1]");
    auto res = circle_extremum(
        [&](double t) { return std::abs(spec.eval(std::polar(r, t))); }, r, ExtremumMode::Max);
    return {res.theta, res.value};
}

/// Sharp growth bounds {lower, upper} for |z f'(z)/...|-normalized class
/// members at |z| = r, scaled by the extremal function f0.
inline std::pair<double, double> distortion_bounds(const PsiSpec& spec, double r) {
    if (!(0.0 < r && r <= 1.0)) throw ParameterOutOfRange("distortion_bounds needs r in (0, 1]");
    const auto f0 = build_extremal(spec, 64);
    const double lo = min_mod_psi(spec, r).second * (-extremal_eval_real(f0, -r)) / r;
    const double hi = max_mod_psi(spec, r).second * extremal_eval_real(f0, r) / r;
    return {lo, hi};
}

/// Full table over the given radii (one extremal build shared by all rows).
inline std::vector<DistortionRow> distortion_table(const PsiSpec& spec,
                                                   std::span<const double> radii) {
    const auto f0 = build_extremal(spec, 64);
    std::vector<DistortionRow> rows;
    rows.reserve(radii.size());
    for (double r : radii) {
        if (!(0.0 < r && r <= 1.0))
            throw ParameterOutOfRange("distortion_table needs radii in (0, 1]");
        DistortionRow row;
        row.r = r;
        auto [t1, mn] = min_mod_psi(spec, r);
        row.theta1 = t1;
        row.min_mod = mn;
        row.lower = mn * (-extremal_eval_real(f0, -r)) / r;
        row.upper = max_mod_psi(spec, r).second * extremal_eval_real(f0, r) / r;
        rows.push_back(row);
    }
    return rows;
}

/// |1 + r e^{i theta} exp(r e^{i theta})| through its explicit real form,
/// an independent check of the generic modulus scan for the cardioid map.
inline double cardioid_mod_formula(double r, double theta) {
    const double ec = std::exp(r * std::cos(theta));
    const double phase = theta + r * std::sin(theta);
    return std::sqrt(1.0 + 2.0 * r * ec * std::cos(phase) + r * r * ec * ec);
}

}  // namespace minda
