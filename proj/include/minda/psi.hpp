#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "errors.hpp"
#include "region.hpp"
#include "series.hpp"
#include "solve.hpp"

namespace minda {

enum class PsiFamily {
    Janowski,        // (1 + D z) / (1 + E z)
    AlphaHalfplane,  // (1 + (1-2a) z) / (1 - z), image Re w > a
    Lemniscate,      // sqrt(1 + z), image |w^2 - 1| < 1
    Cardioid,        // 1 + z e^z
    Sine,            // 1 + sin z
    Sigmoid,         // 2 / (1 + e^{-z})
    PowerHalfplane,  // ((1+z)/(1-z))^g, image |arg w| < g pi/2
    Crescent,        // z + sqrt(1 + z^2)
    ExpLambda,       // e^{l z}
    JanowskiPower,   // ((1+Dz)/(1+Ez))^b
};

inline const char* to_string(PsiFamily f) {
    switch (f) {
        case PsiFamily::Janowski: return "janowski";
        case PsiFamily::AlphaHalfplane: return "alpha_halfplane";
        case PsiFamily::Lemniscate: return "lemniscate";
        case PsiFamily::Cardioid: return "cardioid";
        case PsiFamily::Sine: return "sine";
        case PsiFamily::Sigmoid: return "sigmoid";
        case PsiFamily::PowerHalfplane: return "power_halfplane";
        case PsiFamily::Crescent: return "crescent";
        case PsiFamily::ExpLambda: return "exp_lambda";
        case PsiFamily::JanowskiPower: return "janowski_power";
    }
    return "unknown";
}

namespace detail {

/// Signed distance of w to the boundary of the Janowski image: half-plane
/// Re w > (1-D)/2 when E = -1, disk |w-1| < D when E = 0, and otherwise the
/// disk of center (1-DE)/(1-E^2) and radius (D-E)/(1-E^2).
inline double janowski_signed_margin(cx w, double D, double E) {
    if (E == -1.0) return w.real() - (1.0 - D) / 2.0;
    if (E == 0.0) return D - std::abs(w - 1.0);
    const double c = (1.0 - D * E) / (1.0 - E * E);
    const double R = (D - E) / (1.0 - E * E);
    return R - std::abs(w - cx{c, 0.0});
}

/// Signed distance of w to the open sector |arg w| < g pi/2 (vertex at 0).
inline double sector_signed_margin(cx w, double g) {
    const double half = g * std::numbers::pi / 2.0;
    const double r = std::abs(w);
    if (r < 1e-300) return 0.0;
    const double d = half - std::abs(std::arg(w));
    if (d >= 0.0) return r * std::sin(std::min(d, std::numbers::pi / 2.0));
    if (-d < std::numbers::pi / 2.0) return -r * std::sin(-d);
    return -r;
}

inline RegionVerdict signed_to_verdict(double m, double band = 1e-7) {
    if (std::abs(m) < band) return {Containment::Indeterminate, std::abs(m)};
    return {m > 0.0 ? Containment::Inside : Containment::Outside, std::abs(m)};
}

}  // namespace detail

/// A target map psi for the class of starlike functions with z f'(z)/f(z)
/// subordinate to psi.  Every catalog member fixes psi(0) = 1, psi'(0) > 0,
/// and an image psi(D) contained in the right half-plane.
///
/// The class carries analytic evaluators (psi, psi', psi''), real Taylor
/// coefficients, and membership tests for the image region: half-planes,
/// disks and sectors are answered in closed form, bounded non-circular
/// images by the winding number of a cached boundary polyline.
class PsiSpec {
public:
    static PsiSpec janowski(double D, double E) {
        if (!(-1.0 <= E && E < D && D <= 1.0))
            throw ParameterOutOfRange("janowski needs -1 <= E < D <= 1");
        PsiSpec s(PsiFamily::Janowski, D, E, 0.0);
        s.convex_ = true;
        s.bounded_ = E > -1.0;
        char buf[80];
        std::snprintf(buf, sizeof buf, "janowski(D=%g,E=%g)", D, E);
        s.label_ = buf;
        return s;
    }

    static PsiSpec alpha_halfplane(double alpha) {
        if (!(0.0 <= alpha && alpha < 1.0))
            throw ParameterOutOfRange("alpha_halfplane needs 0 <= alpha < 1");
        PsiSpec s(PsiFamily::AlphaHalfplane, alpha, 0.0, 0.0);
        s.convex_ = true;
        s.bounded_ = false;
        char buf[64];
        std::snprintf(buf, sizeof buf, "alpha_halfplane(alpha=%g)", alpha);
        s.label_ = buf;
        return s;
    }

    static PsiSpec lemniscate() {
        PsiSpec s(PsiFamily::Lemniscate, 0.0, 0.0, 0.0);
        s.convex_ = true;
        s.bounded_ = true;
        s.label_ = "lemniscate";
        return s;
    }

    static PsiSpec cardioid() {
        PsiSpec s(PsiFamily::Cardioid, 0.0, 0.0, 0.0);
        s.convex_ = false;
        s.bounded_ = true;
        s.label_ = "cardioid";
        return s;
    }

    static PsiSpec sine() {
        PsiSpec s(PsiFamily::Sine, 0.0, 0.0, 0.0);
        s.convex_ = false;
        s.bounded_ = true;
        s.label_ = "sine";
        return s;
    }

    static PsiSpec sigmoid() {
        PsiSpec s(PsiFamily::Sigmoid, 0.0, 0.0, 0.0);
        s.convex_ = true;
        s.bounded_ = true;
        s.label_ = "sigmoid";
        return s;
    }

    static PsiSpec power_halfplane(double gamma) {
        if (!(0.0 < gamma && gamma <= 1.0))
            throw ParameterOutOfRange("power_halfplane needs 0 < gamma <= 1");
        PsiSpec s(PsiFamily::PowerHalfplane, gamma, 0.0, 0.0);
        s.convex_ = true;
        s.bounded_ = false;
        char buf[64];
        std::snprintf(buf, sizeof buf, "power_halfplane(gamma=%g)", gamma);
        s.label_ = buf;
        return s;
    }

    static PsiSpec crescent() {
        PsiSpec s(PsiFamily::Crescent, 0.0, 0.0, 0.0);
        s.convex_ = false;
        s.bounded_ = true;
        s.label_ = "crescent";
        return s;
    }

    static PsiSpec exp_lambda(double lambda) {
        if (!(0.0 < lambda && lambda <= 1.0))
            throw ParameterOutOfRange("exp_lambda needs 0 < lambda <= 1");
        PsiSpec s(PsiFamily::ExpLambda, lambda, 0.0, 0.0);
        s.convex_ = true;
        s.bounded_ = true;
        char buf[64];
        std::snprintf(buf, sizeof buf, "exp_lambda(lambda=%g)", lambda);
        s.label_ = buf;
        return s;
    }

    static PsiSpec janowski_power(double D, double E, double beta) {
        if (!(-1.0 <= E && E < D && D <= 1.0))
            throw ParameterOutOfRange("janowski_power needs -1 <= E < D <= 1");
        if (!(0.0 < beta && beta <= 1.0))
            throw ParameterOutOfRange("janowski_power needs 0 < beta <= 1");
        PsiSpec s(PsiFamily::JanowskiPower, D, E, beta);
        s.bounded_ = E > -1.0;
        char buf[96];
        std::snprintf(buf, sizeof buf, "janowski_power(D=%g,E=%g,beta=%g)", D, E, beta);
        s.label_ = buf;
        s.convex_ = s.image_convex_by_scan();
        return s;
    }

    PsiFamily family() const { return fam_; }
    const std::string& label() const { return label_; }
    bool convex_image() const { return convex_; }
    bool bounded_image() const { return bounded_; }

    double D() const { return a_; }
    double E() const { return b_; }
    double alpha() const { return a_; }
    double gamma() const { return a_; }
    double lambda() const { return a_; }
    double beta() const { return c_; }

    /// psi'(0), the first Taylor coefficient B1 (always positive).
    double b1() const {
        switch (fam_) {
            case PsiFamily::Janowski: return a_ - b_;
            case PsiFamily::AlphaHalfplane: return 2.0 * (1.0 - a_);
            case PsiFamily::Lemniscate: return 0.5;
            case PsiFamily::Cardioid: return 1.0;
            case PsiFamily::Sine: return 1.0;
            case PsiFamily::Sigmoid: return 0.5;
            case PsiFamily::PowerHalfplane: return 2.0 * a_;
            case PsiFamily::Crescent: return 1.0;
            case PsiFamily::ExpLambda: return a_;
            case PsiFamily::JanowskiPower: return c_ * (a_ - b_);
        }
        return 0.0;
    }

    cx eval(cx z) const {
        switch (fam_) {
            case PsiFamily::Janowski: {
                const cx q = 1.0 + b_ * z;
                if (std::abs(q) < 1e-14) throw BranchCutHit("janowski pole at z = -1/E");
                return (1.0 + a_ * z) / q;
            }
            case PsiFamily::AlphaHalfplane: {
                const cx q = 1.0 - z;
                if (std::abs(q) < 1e-14) throw BranchCutHit("alpha_halfplane pole at z = 1");
                return (1.0 + (1.0 - 2.0 * a_) * z) / q;
            }
            case PsiFamily::Lemniscate: return std::sqrt(1.0 + z);
            case PsiFamily::Cardioid: return 1.0 + z * std::exp(z);
            case PsiFamily::Sine: return 1.0 + std::sin(z);
            case PsiFamily::Sigmoid: return 2.0 / (1.0 + std::exp(-z));
            case PsiFamily::PowerHalfplane: {
                const cx num = 1.0 + z, den = 1.0 - z;
                if (std::abs(den) < 1e-14) throw BranchCutHit("power_halfplane pole at z = 1");
                if (std::abs(num) < 1e-300) return cx{};
                return std::pow(num / den, a_);
            }
            case PsiFamily::Crescent: return z + std::sqrt(1.0 + z * z);
            case PsiFamily::ExpLambda: return std::exp(a_ * z);
            case PsiFamily::JanowskiPower: {
                const cx q = 1.0 + b_ * z;
                if (std::abs(q) < 1e-14) throw BranchCutHit("janowski_power pole at z = -1/E");
                return std::pow((1.0 + a_ * z) / q, c_);
            }
        }
        return cx{};
    }

    cx deriv(cx z) const {
        switch (fam_) {
            case PsiFamily::Janowski: {
                const cx q = 1.0 + b_ * z;
                if (std::abs(q) < 1e-14) throw BranchCutHit("janowski pole at z = -1/E");
                return (a_ - b_) / (q * q);
            }
            case PsiFamily::AlphaHalfplane: {
                const cx q = 1.0 - z;
                if (std::abs(q) < 1e-14) throw BranchCutHit("alpha_halfplane pole at z = 1");
                return 2.0 * (1.0 - a_) / (q * q);
            }
            case PsiFamily::Lemniscate: return 0.5 / std::sqrt(1.0 + z);
            case PsiFamily::Cardioid: return (1.0 + z) * std::exp(z);
            case PsiFamily::Sine: return std::cos(z);
            case PsiFamily::Sigmoid: {
                const cx e = std::exp(-z), q = 1.0 + e;
                return 2.0 * e / (q * q);
            }
            case PsiFamily::PowerHalfplane:
                return eval(z) * (2.0 * a_) / (1.0 - z * z);
            case PsiFamily::Crescent: {
                const cx s = std::sqrt(1.0 + z * z);
                if (std::abs(s) < 1e-14) throw BranchCutHit("crescent branch point at z = +-i");
                return 1.0 + z / s;
            }
            case PsiFamily::ExpLambda: return a_ * std::exp(a_ * z);
            case PsiFamily::JanowskiPower: {
                const cx P = 1.0 + a_ * z, Q = 1.0 + b_ * z;
                return eval(z) * c_ * (a_ / P - b_ / Q);
            }
        }
        return cx{};
    }

    cx deriv2(cx z) const {
        switch (fam_) {
            case PsiFamily::Janowski: {
                const cx q = 1.0 + b_ * z;
                return -2.0 * b_ * (a_ - b_) / (q * q * q);
            }
            case PsiFamily::AlphaHalfplane: {
                const cx q = 1.0 - z;
                return 4.0 * (1.0 - a_) / (q * q * q);
            }
            case PsiFamily::Lemniscate: {
                const cx u = 1.0 + z;
                return -0.25 / (u * std::sqrt(u));
            }
            case PsiFamily::Cardioid: return (2.0 + z) * std::exp(z);
            case PsiFamily::Sine: return -std::sin(z);
            case PsiFamily::Sigmoid: {
                const cx e = std::exp(-z), q = 1.0 + e;
                return 2.0 * e * (e - 1.0) / (q * q * q);
            }
            case PsiFamily::PowerHalfplane: {
                const cx L = 2.0 * a_ / (1.0 - z * z);
                const cx Lp = 4.0 * a_ * z / ((1.0 - z * z) * (1.0 - z * z));
                return eval(z) * (L * L + Lp);
            }
            case PsiFamily::Crescent: {
                const cx u = 1.0 + z * z;
                return 1.0 / (u * std::sqrt(u));
            }
            case PsiFamily::ExpLambda: return a_ * a_ * std::exp(a_ * z);
            case PsiFamily::JanowskiPower: {
                const cx P = 1.0 + a_ * z, Q = 1.0 + b_ * z;
                const cx M = c_ * (a_ / P - b_ / Q);
                const cx Mp = c_ * (-a_ * a_ / (P * P) + b_ * b_ / (Q * Q));
                return eval(z) * (M * M + Mp);
            }
        }
        return cx{};
    }

    /// Taylor coefficients B1..BN of psi about 0 (real for every family).
    std::vector<double> taylor(int N) const {
        if (N < 1) throw ParameterOutOfRange("taylor needs N >= 1");
        std::vector<double> B(static_cast<std::size_t>(N));
        switch (fam_) {
            case PsiFamily::Janowski:
            case PsiFamily::AlphaHalfplane: {
                const double D = (fam_ == PsiFamily::Janowski) ? a_ : 1.0 - 2.0 * a_;
                const double E = (fam_ == PsiFamily::Janowski) ? b_ : -1.0;
                double t = D - E;
                for (int n = 1; n <= N; ++n) {
                    B[static_cast<std::size_t>(n - 1)] = t;
                    t *= -E;
                }
                break;
            }
            case PsiFamily::Lemniscate: {
                double c = 1.0;  // binom(1/2, n) by the ratio recurrence
                for (int n = 1; n <= N; ++n) {
                    c *= (0.5 - static_cast<double>(n - 1)) / static_cast<double>(n);
                    B[static_cast<std::size_t>(n - 1)] = c;
                }
                break;
            }
            case PsiFamily::Cardioid: {
                double f = 1.0;  // 1/(n-1)!
                for (int n = 1; n <= N; ++n) {
                    B[static_cast<std::size_t>(n - 1)] = f;
                    f /= static_cast<double>(n);
                }
                break;
            }
            case PsiFamily::Sine: {
                double f = 1.0;  // 1/n!
                for (int n = 1; n <= N; ++n) {
                    f /= static_cast<double>(n);
                    B[static_cast<std::size_t>(n - 1)] =
                        (n % 2 == 0) ? 0.0 : ((n % 4 == 1) ? f : -f);
                }
                break;
            }
            case PsiFamily::Sigmoid: {
                std::vector<cx> e(static_cast<std::size_t>(N) + 1);
                double f = 1.0;
                for (int n = 0; n <= N; ++n) {
                    e[static_cast<std::size_t>(n)] = (n % 2 == 0 ? f : -f);
                    f /= static_cast<double>(n + 1);
                }
                auto s = 2.0 * (TruncatedSeries::one(N) /
                                (TruncatedSeries::one(N) + TruncatedSeries(std::move(e))));
                for (int n = 1; n <= N; ++n) B[static_cast<std::size_t>(n - 1)] = s[n].real();
                break;
            }
            case PsiFamily::PowerHalfplane: {
                std::vector<cx> m(static_cast<std::size_t>(N) + 1, 2.0);
                m[0] = 1.0;  // (1+z)/(1-z) = 1 + 2z + 2z^2 + ...
                auto s = minda::pow(TruncatedSeries(std::move(m)), a_);
                for (int n = 1; n <= N; ++n) B[static_cast<std::size_t>(n - 1)] = s[n].real();
                break;
            }
            case PsiFamily::Crescent: {
                B[0] = 1.0;
                double c = 1.0;  // binom(1/2, k) at z^{2k}
                for (int k = 1; 2 * k <= N; ++k) {
                    c *= (0.5 - static_cast<double>(k - 1)) / static_cast<double>(k);
                    B[static_cast<std::size_t>(2 * k - 1)] = c;
                }
                break;
            }
            case PsiFamily::ExpLambda: {
                double t = 1.0;
                for (int n = 1; n <= N; ++n) {
                    t *= a_ / static_cast<double>(n);
                    B[static_cast<std::size_t>(n - 1)] = t;
                }
                break;
            }
            case PsiFamily::JanowskiPower: {
                auto num = TruncatedSeries::polynomial({1.0, a_}, N);
                auto den = TruncatedSeries::polynomial({1.0, b_}, N);
                auto s = minda::pow(num / den, c_);
                for (int n = 1; n <= N; ++n) B[static_cast<std::size_t>(n - 1)] = s[n].real();
                break;
            }
        }
        return B;
    }

    /// Uniform samples of the image boundary curve psi(e^{it}).  Bounded
    /// families include t = 0; unbounded families use midpoint-offset angles
    /// so the parametrization never lands on a pole.
    std::vector<cx> boundary_curve(int samples) const {
        if (samples < 8) throw ParameterOutOfRange("boundary_curve needs samples >= 8");
        std::vector<cx> out(static_cast<std::size_t>(samples));
        const double two_pi = 2.0 * std::numbers::pi;
        const double off = bounded_ ? 0.0 : 0.5;
        for (int i = 0; i < samples; ++i) {
            const double t = two_pi * (static_cast<double>(i) + off) / samples;
            out[static_cast<std::size_t>(i)] = eval(std::polar(1.0, t));
        }
        return out;
    }

    /// Membership of w in the open image psi(D).  Half-planes, disks and
    /// sectors are decided analytically; the six bounded non-circular images
    /// go through the winding number of the cached boundary polyline with an
    /// Indeterminate band of 1e-7 around it.
    RegionVerdict region_contains(cx w) const {
        switch (fam_) {
            case PsiFamily::Janowski:
                return detail::signed_to_verdict(detail::janowski_signed_margin(w, a_, b_));
            case PsiFamily::AlphaHalfplane:
                return detail::signed_to_verdict(w.real() - a_);
            case PsiFamily::PowerHalfplane:
                return detail::signed_to_verdict(detail::sector_signed_margin(w, a_));
            case PsiFamily::JanowskiPower: {
                const cx v = (std::abs(w) < 1e-300) ? cx{} : std::pow(w, 1.0 / c_);
                return detail::signed_to_verdict(detail::janowski_signed_margin(v, a_, b_));
            }
            default: break;
        }
        // Bounded star families: the image always sits in the right
        // half-plane, so Re w <= 0 is an immediate rejection.
        const CurveRegion& reg = region();
        if (w.real() <= 1e-12) return {Containment::Outside, reg.distance(w)};
        return reg.contains(w, 1e-7);
    }

    /// Cached boundary polyline (bounded families only): 4096 uniform samples
    /// plus one midpoint-refinement pass at gap 1e-2.
    const CurveRegion& region() const {
        if (!bounded_) throw Error("boundary polyline undefined for an unbounded image");
        std::call_once(cache_->flag, [&] {
            cache_->region = std::make_shared<const CurveRegion>(
                CurveRegion::sample([this](double t) { return eval(std::polar(1.0, t)); }, 4096,
                                    1e-2));
        });
        return *cache_->region;
    }

private:
    PsiSpec(PsiFamily f, double a, double b, double c) : fam_(f), a_(a), b_(b), c_(c) {}

    bool image_convex_by_scan() const {
        double worst = 1e300;
        for (int i = 0; i <= 512; ++i) {
            const double t = std::numbers::pi * static_cast<double>(i) / 512;
            const cx z = std::polar(0.9995, t);
            const cx v = 1.0 + z * deriv2(z) / deriv(z);
            worst = std::min(worst, v.real());
        }
        return worst >= -1e-9;
    }

    struct RegionCache {
        std::once_flag flag;
        std::shared_ptr<const CurveRegion> region;
    };

    PsiFamily fam_;
    double a_ = 0.0, b_ = 0.0, c_ = 0.0;
    bool convex_ = true;
    bool bounded_ = true;
    std::string label_;
    mutable std::shared_ptr<RegionCache> cache_ = std::make_shared<RegionCache>();
};

/// Distance from 1 to the image boundary of a bounded star-shaped catalog
/// image along the ray of direction phi in [0, pi].  All six bounded
/// non-circular members are star-shaped about 1 with a monotone boundary
/// direction profile, so the boundary angle solves by bisection.
inline double boundary_radial_distance(const PsiSpec& spec, double phi) {
    if (!spec.bounded_image())
        throw Error("boundary_radial_distance needs a bounded image");
    const double pi = std::numbers::pi;
    phi = std::clamp(std::abs(phi), 0.0, pi);
    auto direction = [&](double t) {
        const cx u = spec.eval(std::polar(1.0, t)) - cx{1.0, 0.0};
        double a = std::atan2(u.imag(), u.real());
        if (a < 0.0 && u.real() < 0.0) a += 2.0 * pi;  // the t = pi endpoint
        return std::max(a, 0.0);
    };
    double lo = 0.0, hi = pi;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (direction(mid) < phi ? lo : hi) = mid;
    }
    const double t = 0.5 * (lo + hi);
    return std::abs(spec.eval(std::polar(1.0, t)) - cx{1.0, 0.0});
}

/// Signed margin of w relative to the image psi(D): positive inside, negative
/// outside, zero exactly on the boundary.  Half-planes, disks and sectors use
/// their closed-form distances; the bounded star-shaped images use the radial
/// gap seen from the star center 1.  Unlike region_contains this carries no
/// Indeterminate band, which is what radius solvers need to bisect cleanly.
inline double signed_margin(const PsiSpec& spec, cx w) {
    switch (spec.family()) {
        case PsiFamily::Janowski:
            return detail::janowski_signed_margin(w, spec.D(), spec.E());
        case PsiFamily::AlphaHalfplane:
            return w.real() - spec.alpha();
        case PsiFamily::PowerHalfplane:
            return detail::sector_signed_margin(w, spec.gamma());
        case PsiFamily::JanowskiPower: {
            const cx v = (std::abs(w) < 1e-300) ? cx{} : std::pow(w, 1.0 / spec.beta());
            return detail::janowski_signed_margin(v, spec.D(), spec.E());
        }
        default: {
            const cx u = w - cx{1.0, 0.0};
            return boundary_radial_distance(spec, std::abs(std::arg(u))) - std::abs(u);
        }
    }
}

}  // namespace minda
