#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "series.hpp"

namespace minda {

enum class Containment { Inside, Outside, Indeterminate };

inline const char* to_string(Containment c) {
    switch (c) {
        case Containment::Inside: return "inside";
        case Containment::Outside: return "outside";
        case Containment::Indeterminate: return "indeterminate";
    }
    return "unknown";
}

/// Membership verdict together with the distance from the query point to the
/// region boundary (in the coordinates the test was carried out in).
struct RegionVerdict {
    Containment state = Containment::Indeterminate;
    double margin = 0.0;
};

/// A closed Jordan curve stored as a polyline, with point-in-region queries
/// answered by the winding number and a distance-to-boundary guard band:
/// points closer to the polyline than the band report Indeterminate instead
/// of trusting the discretization.
class CurveRegion {
public:
    explicit CurveRegion(std::vector<cx> pts) : p_(std::move(pts)) {
        if (p_.size() < 3) throw ParameterOutOfRange("CurveRegion needs at least 3 points");
        if (std::abs(p_.front() - p_.back()) > 1e-12) p_.push_back(p_.front());
    }

    /// Sample curve(t) at `samples` uniform t in [0, 2 pi), then run one
    /// refinement pass inserting midpoints wherever consecutive image points
    /// are farther apart than max_gap.
    static CurveRegion sample(const std::function<cx(double)>& curve, int samples,
                              double max_gap = 1e-2) {
        if (samples < 16) throw ParameterOutOfRange("CurveRegion::sample needs samples >= 16");
        const double two_pi = 6.283185307179586476925286766559;
        std::vector<double> ts(static_cast<std::size_t>(samples));
        std::vector<cx> ps(static_cast<std::size_t>(samples));
        for (int i = 0; i < samples; ++i) {
            ts[static_cast<std::size_t>(i)] = two_pi * static_cast<double>(i) / samples;
            ps[static_cast<std::size_t>(i)] = curve(ts[static_cast<std::size_t>(i)]);
        }
        std::vector<cx> out;
        out.reserve(ps.size() * 2);
        for (int i = 0; i < samples; ++i) {
            const int j = (i + 1) % samples;
            out.push_back(ps[static_cast<std::size_t>(i)]);
            if (std::abs(ps[static_cast<std::size_t>(j)] - ps[static_cast<std::size_t>(i)]) > max_gap) {
                double tm = 0.5 * (ts[static_cast<std::size_t>(i)] +
                                   (i + 1 < samples ? ts[static_cast<std::size_t>(j)] : two_pi));
                out.push_back(curve(tm));
            }
        }
        out.push_back(out.front());
        return CurveRegion(std::move(out));
    }

    const std::vector<cx>& points() const { return p_; }

    /// Winding number of the polyline around w (standard crossing count).
    int winding(cx w) const {
        int wn = 0;
        for (std::size_t i = 0; i + 1 < p_.size(); ++i) {
            const cx a = p_[i], b = p_[i + 1];
            const double is_left =
                (b.real() - a.real()) * (w.imag() - a.imag()) -
                (w.real() - a.real()) * (b.imag() - a.imag());
            if (a.imag() <= w.imag()) {
                if (b.imag() > w.imag() && is_left > 0.0) ++wn;
            } else {
                if (b.imag() <= w.imag() && is_left < 0.0) --wn;
            }
        }
        return wn;
    }

    /// Euclidean distance from w to the polyline.
    double distance(cx w) const {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < p_.size(); ++i) {
            const cx a = p_[i], d = p_[i + 1] - p_[i];
            const double len2 = std::norm(d);
            double t = 0.0;
            if (len2 > 0.0) {
                t = ((w.real() - a.real()) * d.real() + (w.imag() - a.imag()) * d.imag()) / len2;
                t = std::clamp(t, 0.0, 1.0);
            }
            best = std::min(best, std::abs(w - (a + t * d)));
        }
        return best;
    }

    /// Winding-number membership with an Indeterminate band of width
    /// boundary_tol around the polyline.
    RegionVerdict contains(cx w, double boundary_tol = 1e-7) const {
        const double d = distance(w);
        if (d < boundary_tol) return {Containment::Indeterminate, d};
        return {winding(w) != 0 ? Containment::Inside : Containment::Outside, d};
    }

private:
    std::vector<cx> p_;
};

}  // namespace minda
