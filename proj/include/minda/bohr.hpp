#pragma once

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "extremal.hpp"
#include "psi.hpp"
#include "solve.hpp"

namespace minda {

/// Bohr analysis of the class attached to a target map:
///   r_star  radius of the covered disk |w| < |f0(-1)|,
///   r0      root of  majorant(r) = r_star  for the extremal majorant
///           r + sum |t_n| r^n,
///   r_b     the Bohr radius min(r0, 1/3),
///   sharp   whether r_b is attained by f0 itself: r_b = r0 and every
///           extremal coefficient t_n is nonnegative.
struct BohrResult {
    double r_star = 0.0;
    double r0 = 0.0;
    double r_b = 0.0;
    bool sharp = false;
};

/// Generic Bohr computation through the truncated extremal majorant.  Partial
/// sums increase with the truncation order, so the roots at orders N and 2N
/// bracket the limit from above; a gap over 1e-8 escalates the order once
/// (x4) and then gives up with TruncationNotConverged.
inline BohrResult bohr_radius(const PsiSpec& spec, int N = 64) {
    if (N < 4) throw ParameterOutOfRange("bohr_radius needs N >= 4");
    const double rs = koebe_radius(spec);
    auto root_of = [&](const TruncatedSeries& s) {
        return find_root_bracketed(
            [&](double r) { return detail::majorant_partial(s, r) - rs; }, 1e-9, 1.0, 1e-13);
    };
    auto f = build_extremal(spec, N);
    double rA = root_of(f.series), rB = root_of(f.series_check);
    if (std::abs(rA - rB) > 1e-8) {
        f = build_extremal(spec, 4 * N);
        rA = root_of(f.series);
        rB = root_of(f.series_check);
        if (std::abs(rA - rB) > 1e-8)
            throw TruncationNotConverged("Bohr root not settled by order doubling");
    }
    (void)majorant_eval(f, rB);  // certify the majorant value at the root
    const double r0 = rB;
    bool nonneg = true;
    for (int n = 1; n <= f.series_check.order(); ++n)
        if (f.series_check[n].real() < -1e-12) {
            nonneg = false;
            break;
        }
    BohrResult out;
    out.r_star = rs;
    out.r0 = r0;
    out.r_b = std::min(r0, 1.0 / 3.0);
    out.sharp = nonneg && r0 <= 1.0 / 3.0 + 1e-12;
    return out;
}

/// Rational-target Bohr radius through the closed transcendental equations:
///   E = 0:    r exp(D (1 + r)) = 1,
///   E != 0:   r (1 + E r)^{(D-E)/E} = (1 - E)^{(D-E)/E}.
/// Both sides are monotone on (0, 1), so a bracketed solve pins the root.
/// The sharpness flag still checks coefficient positivity numerically, since
/// for E > 0 with non-integer (D-E)/E the binomial coefficients alternate.
inline BohrResult bohr_janowski(double D, double E) {
    const auto spec = PsiSpec::janowski(D, E);  // validates the parameters
    BohrResult out;
    out.r_star = koebe_radius(spec);
    if (E == 0.0) {
        out.r0 = find_root_bracketed(
            [&](double r) { return r * std::exp(D * (1.0 + r)) - 1.0; }, 1e-9, 1.0, 1e-14);
    } else {
        const double p = (D - E) / E;
        const double target = std::pow(1.0 - E, p);
        out.r0 = find_root_bracketed(
            [&](double r) { return r * std::pow(1.0 + E * r, p) - target; }, 1e-9, 1.0, 1e-14);
    }
    out.r_b = std::min(out.r0, 1.0 / 3.0);
    auto f = build_extremal(spec, 64);
    bool nonneg = true;
    for (int n = 1; n <= f.series_check.order(); ++n)
        if (f.series_check[n].real() < -1e-12) {
            nonneg = false;
            break;
        }
    out.sharp = nonneg && out.r0 <= 1.0 / 3.0 + 1e-12;
    return out;
}

/// Roots of the two conjectured closed Bohr equations, where the majorant is
/// taken to coincide with the extremal function itself:
///   cardioid:     r exp(e^r - 1) = exp(1/e - 1),
///   square root:  4 r exp(2 (sqrt(1+r) - 1)) / (1 + sqrt(1+r))^2 = 4 e^{-2}.
struct ConjectureRoots {
    double cardioid = 0.0;
    double lemniscate = 0.0;
};

inline ConjectureRoots conjecture_roots() {
    ConjectureRoots roots;
    roots.cardioid = find_root_bracketed(
        [](double r) { return r * std::exp(std::exp(r) - 1.0) - std::exp(std::exp(-1.0) - 1.0); },
        1e-9, 1.0, 1e-14);
    roots.lemniscate = find_root_bracketed(
        [](double r) {
            const double s = std::sqrt(1.0 + r);
            return 4.0 * r * std::exp(2.0 * (s - 1.0)) / ((1.0 + s) * (1.0 + s)) -
                   4.0 * std::exp(-2.0);
        },
        1e-9, 1.0, 1e-14);
    return roots;
}

}  // namespace minda
