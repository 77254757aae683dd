#pragma once

/// Radius machinery for two benchmark coefficient classes and for partial
/// sums (sections):
///
///   F(z)      = z + 4z^2 + 9z^3 + ...  = z(1+z)/(1-z)^3   (coefficients n^2)
///   H(z; q)   = z / ((1-z)(1-qz))      = sum [n]_q z^n    (q-bracket coefficients)
///   g_k(z)    = z + z^2 + ... + z^k    = (z - z^{k+1})/(1-z)
///
/// For a target curve psi the F-radius (resp. H-radius) is the largest r such
/// that the log-derivative zF'/F (resp. zH'/H) maps the circle |z| = r into
/// the region psi(D).  Radii are located by monotone bisection on the circle
/// membership margin; families that admit a closed form get it attached as a
/// cross-check.  Targets whose image is not convex only support the
/// convolution conclusion up to their radius of convexity, so the reported
/// radius is capped at that value.
///
/// The q-bracket transform z d_q f (the Jackson q-difference analogue of
/// z f') and its Hadamard identity z d_q f = f * H live here as well.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "convolution.hpp"
#include "errors.hpp"
#include "psi.hpp"
#include "series.hpp"
#include "solve.hpp"

namespace minda {

// ---------------------------------------------------------------------------
// Log-derivative evaluators and their closed circle bounds
// ---------------------------------------------------------------------------

/// zF'(z)/F(z) = (1 + 4z + z^2) / (1 - z^2) for F(z) = z(1+z)/(1-z)^3.
inline cx F_logderiv(cx z) {
    const cx den = 1.0 - z * z;
    if (std::abs(den) < 1e-14) throw EvaluatorSingularity("F log-derivative pole at z = +-1");
    return (1.0 + z * (4.0 + z)) / den;
}

/// zH'(z)/H(z) = 1 + z/(1-z) + qz/(1-qz) for H(z; q) = z/((1-z)(1-qz)).
inline cx H_logderiv(cx z, double q) {
    if (!(q > 0.0 && q < 1.0)) throw ParameterOutOfRange("H log-derivative needs q in (0,1)");
    const cx d1 = 1.0 - z, d2 = 1.0 - q * z;
    if (std::abs(d1) < 1e-14 || std::abs(d2) < 1e-14)
        throw EvaluatorSingularity("H log-derivative pole at z = 1 or z = 1/q");
    return 1.0 + z / d1 + q * z / d2;
}

namespace radius_detail {

inline void require_unit_radius(double r, const char* who) {
    if (!(r >= 0.0 && r < 1.0)) throw ParameterOutOfRange(std::string(who) + " needs r in [0,1)");
}

inline void require_q(double q, const char* who) {
    if (!(q > 0.0 && q < 1.0)) throw ParameterOutOfRange(std::string(who) + " needs q in (0,1)");
}

}  // namespace radius_detail

/// min over |z| = r of Re(zF'/F), attained at z = -r: (1 - 4r + r^2)/(1 - r^2).
inline double F_min_real(double r) {
    radius_detail::require_unit_radius(r, "F_min_real");
    return (1.0 - 4.0 * r + r * r) / (1.0 - r * r);
}

/// max over |z| = r of |zF'/F - 1|, attained at z = r: 2r(2 + r)/(1 - r^2).
inline double F_max_dev(double r) {
    radius_detail::require_unit_radius(r, "F_max_dev");
    return 2.0 * r * (2.0 + r) / (1.0 - r * r);
}

/// min over |z| = r of Re(zH'/H), attained at z = -r: (1 - qr^2)/((1+r)(1+qr)).
inline double H_min_real(double r, double q) {
    radius_detail::require_unit_radius(r, "H_min_real");
    radius_detail::require_q(q, "H_min_real");
    return (1.0 - q * r * r) / ((1.0 + r) * (1.0 + q * r));
}

/// max over |z| = r of |zH'/H - 1|, attained at z = r: r(1 + q - 2qr)/((1-r)(1-qr)).
inline double H_max_dev(double r, double q) {
    radius_detail::require_unit_radius(r, "H_max_dev");
    radius_detail::require_q(q, "H_max_dev");
    return r * (1.0 + q - 2.0 * q * r) / ((1.0 - r) * (1.0 - q * r));
}

// ---------------------------------------------------------------------------
// Convexity radius of a target curve
// ---------------------------------------------------------------------------

/// Largest r <= 1 such that psi maps |z| < r onto a convex region, i.e.
/// Re(1 + z psi''/psi') >= 0 throughout |z| < r.  Every catalog family has a
/// zero-free psi' in the open disk, so the criterion is harmonic there and
/// its disk minimum sits on the bounding circle.  Returns 1.0 when the
/// criterion still holds on |z| = 0.999999 (convex-image families).
inline double convexity_radius(const PsiSpec& spec, int theta_grid = 512) {
    auto circle_min = [&](double r) {
        auto obj = [&](double th) {
            const cx z = std::polar(r, th);
            const cx d1 = spec.deriv(z);
            if (std::abs(d1) < 1e-14) return -1e12;
            return (1.0 + z * spec.deriv2(z) / d1).real();
        };
        return circle_extremum(obj, r, ExtremumMode::Min, true, theta_grid).value;
    };
    if (circle_min(0.999999) >= 0.0) return 1.0;
    auto pred = [&](double r) { return circle_min(r) >= 0.0; };
    return radius_by_bisection(pred, 1e-3, 0.999999, 1e-10).value;
}

// ---------------------------------------------------------------------------
// Closed forms (cross-checks)
// ---------------------------------------------------------------------------

namespace radius_detail {

/// Half-plane level alpha for Re w > alpha targets; empty for other shapes.
inline std::optional<double> halfplane_alpha(const PsiSpec& spec) {
    if (spec.family() == PsiFamily::AlphaHalfplane) return spec.alpha();
    if (spec.family() == PsiFamily::Janowski && std::abs(spec.E() + 1.0) < 1e-12)
        return 0.5 * (1.0 - spec.D());
    return std::nullopt;
}

inline double sigmoid_span() {
    return (std::numbers::e - 1.0) / (std::numbers::e + 1.0);  // rightmost point is 1 + this
}

}  // namespace radius_detail

/// Closed-form F-radius where one is known; nullopt otherwise.
///   half-plane Re w > a      : (2 - sqrt(3 + a^2)) / (1 + a)
///   lemniscate               : (sqrt(5) - 2) / (1 + sqrt(2))
///   cardioid                 : (2e - sqrt(4e^2 - 2e + 1)) / (2e - 1)
///   sine                     : (sqrt(4 + s(2+s)) - 2) / (2 + s),   s = sin 1
///   sigmoid                  : (sqrt(4 + b(2+b)) - 2) / (2 + b),   b = (e-1)/(e+1)
///   power sector |arg w|<gpi/2: (2 - sqrt(4 - s^2)) / s,           s = sin(g pi/2)
inline std::optional<double> F_closed_radius(const PsiSpec& spec) {
    if (auto a = radius_detail::halfplane_alpha(spec)) {
        return (2.0 - std::sqrt(3.0 + *a * *a)) / (1.0 + *a);
    }
    switch (spec.family()) {
        case PsiFamily::Lemniscate:
            return (std::sqrt(5.0) - 2.0) / (1.0 + std::numbers::sqrt2);
        case PsiFamily::Cardioid: {
            const double e = std::numbers::e;
            return (2.0 * e - std::sqrt(4.0 * e * e - 2.0 * e + 1.0)) / (2.0 * e - 1.0);
        }
        case PsiFamily::Sine: {
            const double s = std::sin(1.0);
            return (std::sqrt(4.0 + s * (2.0 + s)) - 2.0) / (2.0 + s);
        }
        case PsiFamily::Sigmoid: {
            const double b = radius_detail::sigmoid_span();
            return (std::sqrt(4.0 + b * (2.0 + b)) - 2.0) / (2.0 + b);
        }
        case PsiFamily::PowerHalfplane: {
            const double s = std::sin(spec.gamma() * std::numbers::pi / 2.0);
            return (2.0 - std::sqrt(4.0 - s * s)) / s;
        }
        default: return std::nullopt;
    }
}

/// Threshold below which the H-radius of the half-plane target Re w > alpha
/// is the whole disk: alpha <= (1-q)/(2(1+q)).
inline double H_alpha_threshold(double q) {
    radius_detail::require_q(q, "H_alpha_threshold");
    return (1.0 - q) / (2.0 * (1.0 + q));
}

/// Closed-form H-radius for the half-plane target Re w > alpha: the root of
/// (1 - qr^2) = alpha (1+r)(1+qr), i.e.
///   r = (sqrt(alpha^2 (1-q)^2 + 4q) - alpha(1+q)) / (2q(1+alpha)),
/// clamped to 1 below the whole-disk threshold.
inline double H_alpha_closed_radius(double alpha, double q) {
    radius_detail::require_q(q, "H_alpha_closed_radius");
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw ParameterOutOfRange("H_alpha_closed_radius needs alpha in [0,1)");
    if (alpha <= H_alpha_threshold(q) + 1e-15) return 1.0;
    const double d = alpha * alpha * (1.0 - q) * (1.0 - q) + 4.0 * q;
    return (std::sqrt(d) - alpha * (1.0 + q)) / (2.0 * q * (1.0 + alpha));
}

/// The classical printed variant of H_alpha_closed_radius, whose discriminant
/// reads alpha^2 (1-q^2) + 4q.  Kept verbatim for comparison: it does not
/// satisfy the defining boundary equation (1 - qr^2) = alpha (1+r)(1+qr)
/// whenever alpha(1-q) > 0; the test suite documents the gap.
inline double H_alpha_printed_radius(double alpha, double q) {
    radius_detail::require_q(q, "H_alpha_printed_radius");
    const double d = alpha * alpha * (1.0 - q * q) + 4.0 * q;
    return (std::sqrt(d) - alpha * (1.0 + q)) / (2.0 * q * (1.0 + alpha));
}

/// Closed-form H-radius where one is known; nullopt otherwise.
///   half-plane Re w > a : H_alpha_closed_radius
///   lemniscate          : root of q(1+sqrt2) r^2 - sqrt2 (1+q) r + (sqrt2 - 1) = 0,
///                         i.e. ((1+q) - sqrt(1+q^2)) / (sqrt2 q (sqrt2 + 1))
///   sigmoid             : smaller root of q(2+b) r^2 - (1+q)(1+b) r + b = 0
inline std::optional<double> H_closed_radius(const PsiSpec& spec, double q) {
    radius_detail::require_q(q, "H_closed_radius");
    if (auto a = radius_detail::halfplane_alpha(spec)) return H_alpha_closed_radius(*a, q);
    switch (spec.family()) {
        case PsiFamily::Lemniscate: {
            const double s2 = std::numbers::sqrt2;
            return ((1.0 + q) - std::sqrt(1.0 + q * q)) / (s2 * q * (s2 + 1.0));
        }
        case PsiFamily::Sigmoid: {
            const double b = radius_detail::sigmoid_span();
            const double A = q * (2.0 + b), B = (1.0 + q) * (1.0 + b);
            return (B - std::sqrt(B * B - 4.0 * A * b)) / (2.0 * A);
        }
        default: return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// Radius solvers
// ---------------------------------------------------------------------------

namespace radius_detail {

/// min over |z| = r of the region membership margin of Q(z).
inline double circle_margin(const PsiSpec& spec, const std::function<cx(cx)>& Q, double r,
                            int theta_grid) {
    auto obj = [&](double th) { return signed_margin(spec, Q(std::polar(r, th))); };
    return circle_extremum(obj, r, ExtremumMode::Min, true, theta_grid).value;
}

/// Replace the value by min(value, cap) when the target image is not convex;
/// the convolution conclusion only holds up to the target's convexity radius.
inline RadiusResult apply_convexity_cap(RadiusResult res, const PsiSpec& spec, int theta_grid) {
    if (spec.convex_image()) return res;
    const double cap = convexity_radius(spec, theta_grid);
    if (cap < res.value) {
        res.value = cap;
        res.bracket_lo = res.bracket_hi = cap;
    }
    return res;
}

}  // namespace radius_detail

/// Sharpness margin of the F-radius problem at circle radius r.  For sector
/// targets this is the residual of the containment criterion
/// 4r <= (1+r^2) sin(g pi/2) (the enclosing disk of the circle image against
/// the sector), normalized by 1-r^2; for every other family it is the
/// honest minimum membership margin over the circle.
inline double F_margin(const PsiSpec& spec, double r, int theta_grid = 512) {
    radius_detail::require_unit_radius(r, "F_margin");
    if (spec.family() == PsiFamily::PowerHalfplane) {
        const double s = std::sin(spec.gamma() * std::numbers::pi / 2.0);
        return ((1.0 + r * r) * s - 4.0 * r) / (1.0 - r * r);
    }
    return radius_detail::circle_margin(spec, [](cx z) { return F_logderiv(z); }, r, theta_grid);
}

/// Minimum membership margin of zH'/H over |z| = r.
inline double H_margin(const PsiSpec& spec, double q, double r, int theta_grid = 512) {
    radius_detail::require_unit_radius(r, "H_margin");
    radius_detail::require_q(q, "H_margin");
    return radius_detail::circle_margin(
        spec, [q](cx z) { return H_logderiv(z, q); }, r, theta_grid);
}

/// Largest r such that zF'/F maps |z| = r into psi(D), located by bisection
/// on the circle margin.  Sector targets use the enclosing-disk criterion
/// 4r <= (1+r^2) sin(g pi/2) instead (the class-sharp bound; the raw circle
/// margin of F alone would overshoot it).  Non-convex targets are capped at
/// their convexity radius.  The closed form, when known, rides along as
/// cross_check.
inline RadiusResult F_radius(const PsiSpec& spec, double tol = 1e-9, int theta_grid = 512) {
    const auto closed = F_closed_radius(spec);
    if (spec.family() == PsiFamily::PowerHalfplane) {
        const double s = std::sin(spec.gamma() * std::numbers::pi / 2.0);
        auto residual = [&](double r) { return (1.0 + r * r) * s - 4.0 * r; };
        const double root = find_root_bracketed(residual, 1e-6, 0.999999, 1e-13);
        return {root, 1e-6, 0.999999, 1e-13, RadiusMethod::BrentRoot, closed};
    }
    auto pred = [&](double r) { return F_margin(spec, r, theta_grid) > 0.0; };
    RadiusResult res = radius_by_bisection(pred, 1e-3, 0.98, tol);
    res = radius_detail::apply_convexity_cap(res, spec, theta_grid);
    res.cross_check = closed;
    return res;
}

/// Largest r such that zH'/H maps |z| = r into psi(D).  Half-plane targets
/// with alpha at or below (1-q)/(2(1+q)) admit the whole disk and return 1
/// directly.  Non-convex targets are capped at their convexity radius.
inline RadiusResult H_radius(const PsiSpec& spec, double q, double tol = 1e-11,
                             int theta_grid = 512) {
    radius_detail::require_q(q, "H_radius");
    const auto closed = H_closed_radius(spec, q);
    if (auto a = radius_detail::halfplane_alpha(spec)) {
        if (*a <= H_alpha_threshold(q) + 1e-15)
            return {1.0, 1.0, 1.0, 0.0, RadiusMethod::ClosedForm, closed};
    }
    auto pred = [&](double r) { return H_margin(spec, q, r, theta_grid) > 0.0; };
    RadiusResult res = radius_by_bisection(pred, 1e-3, 1.0 - 1e-6, tol);
    res = radius_detail::apply_convexity_cap(res, spec, theta_grid);
    res.cross_check = closed;
    return res;
}

// ---------------------------------------------------------------------------
// Section (partial sum) radii
// ---------------------------------------------------------------------------

/// g_k(z) = z + z^2 + ... + z^k as a truncated series of matching order.
inline TruncatedSeries section_series(int k) {
    if (k < 1) throw ParameterOutOfRange("section_series needs k >= 1");
    std::vector<cx> c(static_cast<std::size_t>(k) + 1, cx{1.0, 0.0});
    c[0] = cx{};
    return TruncatedSeries(std::move(c));
}

namespace radius_detail {

/// Worst criterion value of the section functional over the closed disk
/// |z| <= r, probed on nested circles.  g_k' can vanish inside the disk
/// (e.g. g_2' at z = -1/2), so the criterion is not harmonic there and the
/// minimum over the single bounding circle would not be monotone in r; the
/// nested sweep restores the defining "holds throughout |z| < r" semantics.
inline double section_disk_margin(int k, const PsiSpec& spec, ConvVariant variant, double r,
                                  int theta_grid, int radial_grid = 32) {
    std::vector<cx> g(static_cast<std::size_t>(k) + 1, cx{1.0, 0.0});
    g[0] = cx{};
    auto horner = [](const std::vector<cx>& c, cx z) {
        cx acc{};
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
        return acc;
    };
    std::vector<cx> g1(static_cast<std::size_t>(k));  // g'
    for (int n = 1; n <= k; ++n) g1[static_cast<std::size_t>(n - 1)] = cx{double(n), 0.0};
    std::vector<cx> g2(g1.size() > 1 ? g1.size() - 1 : 0);  // g''
    for (std::size_t i = 1; i < g1.size(); ++i) g2[i - 1] = double(i) * g1[i];

    double worst = 1e12;
    for (int j = 1; j <= radial_grid; ++j) {
        const double s = r * double(j) / double(radial_grid);
        auto obj = [&](double th) {
            const cx z = std::polar(s, th);
            if (variant == ConvVariant::Starlike) {
                const cx num = horner(g1, z) * z, den = horner(g, z);
                if (std::abs(den) < 1e-14) return -1e12;
                return signed_margin(spec, num / den);
            }
            const cx d1 = horner(g1, z);
            if (std::abs(d1) < 1e-14) return -1e12;
            return signed_margin(spec, 1.0 + z * horner(g2, z) / d1);
        };
        worst = std::min(worst, circle_extremum(obj, s, ExtremumMode::Min, true, theta_grid).value);
        if (worst < -1e-6 && j > radial_grid / 2) break;
    }
    return worst;
}

}  // namespace radius_detail

/// Largest r such that the section g_k = z + ... + z^k satisfies the chosen
/// criterion throughout |z| < r: zg'/g inside psi(D) for the starlike
/// variant, 1 + zg''/g' inside psi(D) for the convex variant.  k = 1 is the
/// identity and admits the whole disk.
inline RadiusResult section_radius(int k, const PsiSpec& spec, ConvVariant variant,
                                   double tol = 1e-9, int theta_grid = 512) {
    if (k < 1) throw ParameterOutOfRange("section_radius needs k >= 1");
    if (k == 1) return {1.0, 1.0, 1.0, 0.0, RadiusMethod::ClosedForm, 1.0};
    auto pred = [&](double r) {
        return radius_detail::section_disk_margin(k, spec, variant, r, theta_grid) > 0.0;
    };
    return radius_by_bisection(pred, 1e-3, 0.999, tol);
}

// ---------------------------------------------------------------------------
// q-bracket transform
// ---------------------------------------------------------------------------

/// [n]_q = (1 - q^n)/(1 - q) = 1 + q + ... + q^{n-1}.
inline double q_bracket(int n, double q) {
    if (n < 1) throw ParameterOutOfRange("q_bracket needs n >= 1");
    radius_detail::require_q(q, "q_bracket");
    return (1.0 - std::pow(q, n)) / (1.0 - q);
}

/// H(z; q) = z + sum_{n>=2} [n]_q z^n as a truncated series.
inline TruncatedSeries H_series(double q, int order) {
    radius_detail::require_q(q, "H_series");
    if (order < 1) throw ParameterOutOfRange("H_series needs order >= 1");
    std::vector<cx> c(static_cast<std::size_t>(order) + 1);
    for (int n = 1; n <= order; ++n) c[static_cast<std::size_t>(n)] = cx{q_bracket(n, q), 0.0};
    return TruncatedSeries(std::move(c));
}

/// z d_q f for the Jackson q-difference d_q f = (f(qz) - f(z))/((q-1)z):
/// coefficient n is multiplied by [n]_q.  Equals f * H(.; q) coefficientwise.
inline TruncatedSeries q_transform(const TruncatedSeries& f, double q) {
    radius_detail::require_q(q, "q_transform");
    conv_detail::require_normalized(f);
    std::vector<cx> c(f.coeffs());
    for (std::size_t n = 2; n < c.size(); ++n) c[n] *= q_bracket(static_cast<int>(n), q);
    return TruncatedSeries(std::move(c));
}

// ---------------------------------------------------------------------------
// Case descriptor (CLI/dispatch convenience)
// ---------------------------------------------------------------------------

enum class RadiusFamily { F_function, H_function, Section };

inline const char* to_string(RadiusFamily f) {
    switch (f) {
        case RadiusFamily::F_function: return "F";
        case RadiusFamily::H_function: return "H";
        case RadiusFamily::Section: return "section";
    }
    return "?";
}

/// One radius problem: which benchmark function, against which target, plus
/// the family parameter (q or k) and the closed-form tag when one applies.
struct RadiusCase {
    RadiusFamily family = RadiusFamily::F_function;
    PsiSpec spec;
    double q = 0.5;                          ///< H_function only
    int k = 2;                               ///< Section only
    ConvVariant variant = ConvVariant::Starlike;  ///< Section only
    std::optional<std::string> closed_form;  ///< formula tag when a closed form exists
};

inline RadiusCase make_radius_case(RadiusFamily family, const PsiSpec& spec, double q = 0.5,
                                   int k = 2, ConvVariant variant = ConvVariant::Starlike) {
    RadiusCase c{family, spec, q, k, variant, std::nullopt};
    if (family == RadiusFamily::H_function) radius_detail::require_q(q, "make_radius_case");
    if (family == RadiusFamily::Section && k < 1)
        throw ParameterOutOfRange("make_radius_case needs k >= 1");
    if (family == RadiusFamily::F_function && F_closed_radius(spec))
        c.closed_form = "F:" + spec.label();
    if (family == RadiusFamily::H_function && H_closed_radius(spec, q))
        c.closed_form = "H:" + spec.label();
    if (family == RadiusFamily::Section && k == 1) c.closed_form = "section:identity";
    return c;
}

inline RadiusResult solve_radius(const RadiusCase& c) {
    switch (c.family) {
        case RadiusFamily::F_function: return F_radius(c.spec);
        case RadiusFamily::H_function: return H_radius(c.spec, c.q);
        case RadiusFamily::Section: return section_radius(c.k, c.spec, c.variant);
    }
    throw ParameterOutOfRange("solve_radius: unknown family");
}

}  // namespace minda
