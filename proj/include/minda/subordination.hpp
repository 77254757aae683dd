#pragma once

/// Second-order subordination hypothesis lab.  The central sufficient
/// condition is
///
///     h(0) = 0,  h'(0) != 0,  Re(1 + z h''(z)/h'(z)) > -1/2  on D,
///
/// under which f f''/(f')^2 ≺ h forces z f'/f into a paired target region.
/// This header provides the four built-in h-families with exact first and
/// second derivatives, the grid checker for the -1/2 condition, the two
/// threshold constants (the quartic root c0 and the quadratic root lambda0),
/// and a sampled subordination verifier over winding-number regions.
///
/// Every family satisfies h = (z p)' identically, where p = (psi - 1)/psi is
/// the subordination target built from the associated curve psi; the radial
/// mean (1/z) int_0^z h(t) dt therefore reproduces p exactly, which the test
/// suite exploits as an oracle.

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "region.hpp"
#include "solve.hpp"

namespace minda {

enum class HFamily { JanPower, LemniscateH, ExpH, AlphaH };

inline const char* to_string(HFamily f) {
    switch (f) {
        case HFamily::JanPower: return "janpower";
        case HFamily::LemniscateH: return "lemniscate_h";
        case HFamily::ExpH: return "exp_h";
        case HFamily::AlphaH: return "alpha_h";
    }
    return "?";
}

/// One built-in h-family with closed-form h, h', h''.
class HSpec {
public:
    /// h = 1 - ((1+Ez)/(1+Dz))^b (1 + S),  S = b z (E-D)/((1+Ez)(1+Dz)).
    static HSpec janpower(double D, double E, double beta) {
        if (!(-1.0 <= E && E < D && D <= 1.0))
            throw ParameterOutOfRange("janpower needs -1 <= E < D <= 1");
        if (!(0.0 < beta && beta <= 1.0))
            throw ParameterOutOfRange("janpower needs 0 < beta <= 1");
        HSpec s(HFamily::JanPower, D, E, beta);
        char buf[96];
        std::snprintf(buf, sizeof buf, "janpower(D=%g,E=%g,beta=%g)", D, E, beta);
        s.label_ = buf;
        return s;
    }

    /// h = 1 - (2 + cz) / (2 (1+cz)^{3/2}).
    static HSpec lemniscate_h(double c) {
        if (!(0.0 < c && c < 1.0)) throw ParameterOutOfRange("lemniscate_h needs c in (0,1)");
        HSpec s(HFamily::LemniscateH, c, 0.0, 0.0);
        char buf[64];
        std::snprintf(buf, sizeof buf, "lemniscate_h(c=%g)", c);
        s.label_ = buf;
        return s;
    }

    /// h = 1 - (1 - lambda z) e^{-lambda z}.
    static HSpec exp_h(double lambda) {
        if (!(0.0 < lambda && lambda <= 1.0))
            throw ParameterOutOfRange("exp_h needs lambda in (0,1]");
        HSpec s(HFamily::ExpH, lambda, 0.0, 0.0);
        char buf[64];
        std::snprintf(buf, sizeof buf, "exp_h(lambda=%g)", lambda);
        s.label_ = buf;
        return s;
    }

    /// h = 2(1-a)((1-2a)z^2 + 2z) / (1 + (1-2a)z)^2.
    static HSpec alpha_h(double alpha) {
        if (!(0.0 <= alpha && alpha < 1.0))
            throw ParameterOutOfRange("alpha_h needs alpha in [0,1)");
        HSpec s(HFamily::AlphaH, alpha, 0.0, 0.0);
        char buf[64];
        std::snprintf(buf, sizeof buf, "alpha_h(alpha=%g)", alpha);
        s.label_ = buf;
        return s;
    }

    HFamily family() const { return fam_; }
    const std::string& label() const { return label_; }
    double D() const { return a_; }
    double E() const { return b_; }
    double beta() const { return c_; }
    double c() const { return a_; }
    double lambda() const { return a_; }
    double alpha() const { return a_; }

    cx h(cx z) const { return eval3(z).h; }
    cx dh(cx z) const { return eval3(z).dh; }
    cx d2h(cx z) const { return eval3(z).d2h; }

    /// The paired subordination target p = (psi - 1)/psi = 1 - 1/psi, where
    /// psi is the curve whose region z f'/f is driven into: a Janowski power,
    /// sqrt(1+cz), e^{lambda z}, or the alpha half-plane map.  Satisfies
    /// h = (z p)' identically.
    cx p_target(cx z) const {
        switch (fam_) {
            case HFamily::JanPower: return 1.0 - pow_ratio(z);
            case HFamily::LemniscateH: return 1.0 - 1.0 / std::sqrt(1.0 + a_ * z);
            case HFamily::ExpH: return 1.0 - std::exp(-a_ * z);
            case HFamily::AlphaH: {
                const double a = 1.0 - 2.0 * a_;
                const cx den = 1.0 + a * z;
                if (std::abs(den) < 1e-14) throw BranchCutHit("alpha_h pole");
                return 1.0 - (1.0 - z) / den;
            }
        }
        return cx{};
    }

private:
    struct Triple {
        cx h, dh, d2h;
    };

    HSpec(HFamily f, double a, double b, double c) : fam_(f), a_(a), b_(b), c_(c) {}

    /// ((1+Ez)/(1+Dz))^beta with pole guards.
    cx pow_ratio(cx z) const {
        const cx P = 1.0 + b_ * z, Q = 1.0 + a_ * z;
        if (std::abs(P) < 1e-14 || std::abs(Q) < 1e-14)
            throw BranchCutHit("janpower pole on the unit circle");
        return std::pow(P / Q, c_);
    }

    Triple eval3(cx z) const {
        switch (fam_) {
            case HFamily::JanPower: {
                const double D = a_, E = b_, b = c_;
                const cx Pu = 1.0 + E * z, Pv = 1.0 + D * z;
                if (std::abs(Pu) < 1e-14 || std::abs(Pv) < 1e-14)
                    throw BranchCutHit("janpower pole on the unit circle");
                const cx u = 1.0 / Pu, v = 1.0 / Pv;
                const cx G = std::pow(Pu / Pv, b);
                const cx g1 = b * (E - D) * u * v;
                const cx w = E * u + D * v;
                const cx g1p = -g1 * w;
                const cx g1pp = -g1p * w + g1 * (E * E * u * u + D * D * v * v);
                const cx S = z * g1, Sp = g1 + z * g1p, Spp = 2.0 * g1p + z * g1pp;
                const cx h = 1.0 - G * (1.0 + S);
                const cx dh = -G * (g1 * (1.0 + S) + Sp);
                const cx d2h = -G * ((g1 * g1 + g1p) * (1.0 + S) + 2.0 * g1 * Sp + Spp);
                return {h, dh, d2h};
            }
            case HFamily::LemniscateH: {
                const double c = a_;
                const cx u = 1.0 + c * z;
                const cx su = std::sqrt(u);
                const cx h = 1.0 - (u + 1.0) / (2.0 * u * su);
                const cx dh = 0.25 * c * (u + 3.0) / (u * u * su);
                const cx d2h = -0.375 * c * c * (u + 5.0) / (u * u * u * su);
                return {h, dh, d2h};
            }
            case HFamily::ExpH: {
                const double l = a_;
                const cx ex = std::exp(-l * z);
                return {1.0 - (1.0 - l * z) * ex, l * (2.0 - l * z) * ex,
                        -l * l * (3.0 - l * z) * ex};
            }
            case HFamily::AlphaH: {
                const double a = 1.0 - 2.0 * a_, A = 2.0 * (1.0 - a_);
                const cx base = 1.0 + a * z;
                if (std::abs(base) < 1e-14) throw BranchCutHit("alpha_h pole");
                const cx b2 = base * base;
                return {A * (a * z * z + 2.0 * z) / b2, 2.0 * A / (b2 * base),
                        -6.0 * a * A / (b2 * b2)};
            }
        }
        return {};
    }

    HFamily fam_;
    double a_, b_, c_;
    std::string label_;
};

// ---------------------------------------------------------------------------
// Condition checker
// ---------------------------------------------------------------------------

/// Real-axis limit of Re(1 + z h''/h') for exp_h as z -> 1:
/// (2 - 4 lambda + lambda^2)/(2 - lambda).  Crosses -1/2 at lambda0.
inline double exp_condition_limit(double lambda) {
    return (2.0 - 4.0 * lambda + lambda * lambda) / (2.0 - lambda);
}

/// Infimum of Re(1 + z h''/h') over the radii ladder {0.1, 0.2, ...}
/// capped at r_max, each sampled at `angles` uniform angles.  The -1/2
/// criterion compares against this value; see bul_condition_holds.
inline double check_bul_condition(const HSpec& h, double r_max = 0.999, int angles = 512) {
    if (!(r_max > 0.0 && r_max <= 0.999))
        throw ParameterOutOfRange("check_bul_condition needs r_max in (0, 0.999]");
    if (angles < 16) throw ParameterOutOfRange("check_bul_condition needs angles >= 16");
    std::vector<double> radii;
    for (double r = 0.1; r < r_max - 1e-12; r += 0.1) radii.push_back(r);
    radii.push_back(r_max);
    double inf = std::numeric_limits<double>::infinity();
    const double two_pi = 2.0 * std::numbers::pi;
    for (double r : radii) {
        for (int i = 0; i < angles; ++i) {
            const cx z = std::polar(r, two_pi * i / angles);
            const cx d1 = h.dh(z);
            if (std::abs(d1) < 1e-12)
                throw EvaluatorSingularity("h' vanishes on the sampling grid");
            inf = std::min(inf, (1.0 + z * h.d2h(z) / d1).real());
        }
    }
    return inf;
}

/// True when the sampled infimum clears -1/2 with a small guard band.
inline bool bul_condition_holds(const HSpec& h, double r_max = 0.999, int angles = 512) {
    return check_bul_condition(h, r_max, angles) > -0.5 + 1e-9;
}

// ---------------------------------------------------------------------------
// Threshold constants
// ---------------------------------------------------------------------------

/// The lemniscate threshold quartic 30 - (75/2) c^2 - (201/32) c^4.
inline double c0_quartic(double c) {
    const double c2 = c * c;
    return 30.0 - 37.5 * c2 - 6.28125 * c2 * c2;
}

/// Unique positive root of the quartic in (0,1), to better than 1e-12.
/// Operationally this is the convexity threshold of lemniscate_h: the grid
/// infimum of Re(1 + z h''/h') crosses zero here (it stays above -1/2 for
/// every admissible c, so the -1/2 criterion alone never binds this family).
inline double constant_c0() {
    return find_root_bracketed(c0_quartic, 0.0, 1.0, 1e-14);
}

/// lambda0 = (9 - sqrt(33))/4, the largest lambda with
/// exp_condition_limit(lambda) >= -1/2.
inline double constant_lambda0() { return (9.0 - std::sqrt(33.0)) / 4.0; }

// ---------------------------------------------------------------------------
// Sampled subordination verifier
// ---------------------------------------------------------------------------

enum class SubVerdict { Pass, Fail, Indeterminate };

inline const char* to_string(SubVerdict v) {
    switch (v) {
        case SubVerdict::Pass: return "Pass";
        case SubVerdict::Fail: return "Fail";
        case SubVerdict::Indeterminate: return "Indeterminate";
    }
    return "?";
}

struct SubordinationReport {
    SubVerdict verdict = SubVerdict::Pass;
    std::optional<cx> witness{};  ///< offending g-value (Fail) or boundary-grazing value
    double witness_r = 0.0;       ///< radius at which the witness was sampled
    double min_margin = std::numeric_limits<double>::infinity();  ///< min distance to the region boundary
};

/// Necessary-condition subordination check g ≺ f on sampled circles: g(0)
/// must match f(0) within 1e-10 and every sampled g(r e^{i theta}) must lie
/// inside the region enclosed by the boundary curve f(e^{i t}) (winding-number
/// membership).  Requires f bounded on the closed disk.  Pass is evidence,
/// not proof; a Fail witness is definitive for the sampled criterion.
inline SubordinationReport subordination_check(const std::function<cx(cx)>& g,
                                               const std::function<cx(cx)>& f,
                                               const std::vector<double>& radii,
                                               int angles = 512, int boundary_samples = 1024,
                                               double boundary_tol = 1e-7) {
    if (radii.empty()) throw ParameterOutOfRange("subordination_check needs at least one radius");
    for (double r : radii)
        if (!(r > 0.0 && r < 1.0))
            throw ParameterOutOfRange("subordination_check radii must lie in (0,1)");
    SubordinationReport rep;
    const cx g0 = g(cx{}), f0 = f(cx{});
    if (std::abs(g0 - f0) > 1e-10) {
        rep.verdict = SubVerdict::Fail;
        rep.witness = g0;
        rep.witness_r = 0.0;
        rep.min_margin = 0.0;
        return rep;
    }
    const auto region = CurveRegion::sample(
        [&](double t) { return f(std::polar(1.0, t)); }, boundary_samples);
    bool saw_indeterminate = false;
    cx ind_witness{};
    double ind_r = 0.0;
    const double two_pi = 2.0 * std::numbers::pi;
    for (double r : radii) {
        for (int i = 0; i < angles; ++i) {
            const cx w = g(std::polar(r, two_pi * i / angles));
            const auto verdict = region.contains(w, boundary_tol);
            rep.min_margin = std::min(rep.min_margin, verdict.margin);
            if (verdict.state == Containment::Outside) {
                rep.verdict = SubVerdict::Fail;
                rep.witness = w;
                rep.witness_r = r;
                return rep;
            }
            if (verdict.state == Containment::Indeterminate && !saw_indeterminate) {
                saw_indeterminate = true;
                ind_witness = w;
                ind_r = r;
            }
        }
    }
    if (saw_indeterminate) {
        rep.verdict = SubVerdict::Indeterminate;
        rep.witness = ind_witness;
        rep.witness_r = ind_r;
    }
    return rep;
}

/// Radial mean (1/z) int_0^z h(t) dt = int_0^1 h(sz) ds by composite Simpson.
/// For the built-in families this equals p_target exactly (h = (z p)'), so
/// the quadrature error is the only gap - handy as an independent oracle.
inline cx h_radial_mean(const HSpec& h, cx z, int panels = 64) {
    if (panels < 2) throw ParameterOutOfRange("h_radial_mean needs panels >= 2");
    if (panels % 2 != 0) ++panels;
    const double step = 1.0 / panels;
    cx acc = h.h(cx{}) + h.h(z);
    for (int i = 1; i < panels; ++i)
        acc += (i % 2 == 1 ? 4.0 : 2.0) * h.h(static_cast<double>(i) * step * z);
    return acc * (step / 3.0);
}

}  // namespace minda
