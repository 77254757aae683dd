#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace minda {

using cx = std::complex<double>;

inline bool finite(cx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

/// A power series truncated at a fixed order N, stored as coefficients
/// c[0..N] of c0 + c1 z + ... + cN z^N.
///
/// Truncation discipline: every binary operation truncates its result to the
/// smaller of the two operand orders, so a series never advertises more
/// accuracy than both inputs can certify.  Differentiation drops the order by
/// one (a constant differentiates to the zero series of order 0) and
/// antidifferentiation raises it by one.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<cx> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(cx{});
        for (cx v : c_)
            if (!finite(v)) throw ParameterOutOfRange("series coefficient is not finite");
    }

    /// The zero series 0 + 0 z + ... of the given order.
    static TruncatedSeries zero(int order) {
        return TruncatedSeries(std::vector<cx>(static_cast<std::size_t>(order) + 1, cx{}));
    }

    /// The constant series 1 of the given order.
    static TruncatedSeries one(int order) {
        auto s = zero(order);
        s.c_[0] = 1.0;
        return s;
    }

    /// The identity series z of the given order (order must be >= 1).
    static TruncatedSeries identity(int order) {
        if (order < 1) throw ParameterOutOfRange("identity series needs order >= 1");
        auto s = zero(order);
        s.c_[1] = 1.0;
        return s;
    }

    /// A polynomial promoted (zero-padded) or truncated to the given order.
    static TruncatedSeries polynomial(std::initializer_list<cx> coeffs, int order) {
        auto s = zero(order);
        int k = 0;
        for (cx v : coeffs) {
            if (k > order) break;
            s.c_[static_cast<std::size_t>(k++)] = v;
        }
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<cx>& coeffs() const { return c_; }

    /// Coefficient of z^k; indices past the truncation order read as zero.
    cx operator[](int k) const {
        return (k >= 0 && k <= order()) ? c_[static_cast<std::size_t>(k)] : cx{};
    }

    /// Horner evaluation of the truncated polynomial at z.
    cx eval(cx z) const {
        cx acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    TruncatedSeries operator-() const {
        auto r = *this;
        for (cx& v : r.c_) v = -v;
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        auto r = zero(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r.c_[static_cast<std::size_t>(k)] = a[k] + b[k];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + (-b);
    }

    /// Cauchy product truncated to min(order(a), order(b)).
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        auto r = zero(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) {
            cx s{};
            for (int j = 0; j <= k; ++j) s += a[j] * b[k - j];
            r.c_[static_cast<std::size_t>(k)] = s;
        }
        return r;
    }

    friend TruncatedSeries operator*(cx s, const TruncatedSeries& a) {
        auto r = a;
        for (cx& v : r.c_) v *= s;
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, cx s) { return s * a; }

    /// Series division; the denominator needs a nonzero constant term.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (std::abs(b[0]) < 1e-300)
            throw DivisionByZeroConstantTerm("series division by zero constant term");
        auto r = zero(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) {
            cx s = a[k];
            for (int j = 0; j < k; ++j) s -= r.c_[static_cast<std::size_t>(j)] * b[k - j];
            r.c_[static_cast<std::size_t>(k)] = s / b[0];
        }
        return r;
    }

    /// Termwise derivative; order drops by one, a constant maps to zero(0).
    TruncatedSeries derivative() const {
        if (order() == 0) return zero(0);
        auto r = zero(order() - 1);
        for (int k = 1; k <= order(); ++k)
            r.c_[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * c_[static_cast<std::size_t>(k)];
        return r;
    }

    /// Termwise antiderivative with constant 0; order rises by one.
    TruncatedSeries antiderivative() const {
        auto r = zero(order() + 1);
        for (int k = 0; k <= order(); ++k)
            r.c_[static_cast<std::size_t>(k + 1)] = c_[static_cast<std::size_t>(k)] / static_cast<double>(k + 1);
        return r;
    }

private:
    std::vector<cx> c_;
};

/// Hadamard (coefficientwise) product, truncated to the smaller order.
inline TruncatedSeries hadamard(const TruncatedSeries& a, const TruncatedSeries& b) {
    auto r = TruncatedSeries::zero(std::min(a.order(), b.order()));
    std::vector<cx> c(static_cast<std::size_t>(r.order()) + 1);
    for (int k = 0; k <= r.order(); ++k) c[static_cast<std::size_t>(k)] = a[k] * b[k];
    return TruncatedSeries(std::move(c));
}

/// exp of a series with zero constant term, via the standard recurrence
/// E_k = (1/k) sum_{j=1..k} j a_j E_{k-j}.
inline TruncatedSeries exp(const TruncatedSeries& a) {
    if (std::abs(a[0]) > 1e-12)
        throw BadConstantTerm("exp of a series needs constant term 0");
    std::vector<cx> e(static_cast<std::size_t>(a.order()) + 1);
    e[0] = 1.0;
    for (int k = 1; k <= a.order(); ++k) {
        cx s{};
        for (int j = 1; j <= k; ++j) s += static_cast<double>(j) * a[j] * e[static_cast<std::size_t>(k - j)];
        e[static_cast<std::size_t>(k)] = s / static_cast<double>(k);
    }
    return TruncatedSeries(std::move(e));
}

/// log of a series with constant term 1, via
/// k L_k = k a_k - sum_{j=1..k-1} j L_j a_{k-j}.
inline TruncatedSeries log(const TruncatedSeries& a) {
    if (std::abs(a[0] - 1.0) > 1e-12)
        throw BadConstantTerm("log of a series needs constant term 1");
    std::vector<cx> l(static_cast<std::size_t>(a.order()) + 1);
    for (int k = 1; k <= a.order(); ++k) {
        cx s = static_cast<double>(k) * a[k];
        for (int j = 1; j < k; ++j) s -= static_cast<double>(j) * l[static_cast<std::size_t>(j)] * a[k - j];
        l[static_cast<std::size_t>(k)] = s / static_cast<double>(k);
    }
    return TruncatedSeries(std::move(l));
}

/// Real power of a series with constant term 1, via the Miller recurrence
/// k P_k = sum_{m=1..k} ((alpha+1) m - k) a_m P_{k-m}.
inline TruncatedSeries pow(const TruncatedSeries& a, double alpha) {
    if (std::abs(a[0] - 1.0) > 1e-12)
        throw BadConstantTerm("pow of a series needs constant term 1");
    std::vector<cx> p(static_cast<std::size_t>(a.order()) + 1);
    p[0] = 1.0;
    for (int k = 1; k <= a.order(); ++k) {
        cx s{};
        for (int m = 1; m <= k; ++m)
            s += ((alpha + 1.0) * static_cast<double>(m) - static_cast<double>(k)) * a[m] *
                 p[static_cast<std::size_t>(k - m)];
        p[static_cast<std::size_t>(k)] = s / static_cast<double>(k);
    }
    return TruncatedSeries(std::move(p));
}

}  // namespace minda
