#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "minda/series.hpp"

using minda::cx;
using minda::TruncatedSeries;
using Catch::Approx;

namespace {

TruncatedSeries random_series(std::mt19937& rng, int order, cx c0) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cx> c(static_cast<std::size_t>(order) + 1);
    c[0] = c0;
    for (int k = 1; k <= order; ++k) c[static_cast<std::size_t>(k)] = cx{u(rng), u(rng)};
    return TruncatedSeries(std::move(c));
}

double max_coeff_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
    double m = 0.0;
    const int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

}  // namespace

TEST_CASE("polynomial products truncate to the smaller order") {
    auto p = TruncatedSeries::polynomial({1.0, 1.0}, 4);   // 1 + z
    auto q = TruncatedSeries::polynomial({1.0, -1.0}, 4);  // 1 - z
    auto r = p * q;                                        // 1 - z^2
    REQUIRE(r.order() == 4);
    REQUIRE(r[0] == cx{1.0, 0.0});
    REQUIRE(r[1] == cx{0.0, 0.0});
    REQUIRE(r[2] == cx{-1.0, 0.0});
    REQUIRE(r[3] == cx{0.0, 0.0});
    REQUIRE(r[4] == cx{0.0, 0.0});

    SECTION("mixed orders take the minimum") {
        auto s = TruncatedSeries::polynomial({1.0, 2.0, 3.0}, 7);
        REQUIRE((s * TruncatedSeries::one(2)).order() == 2);
        REQUIRE((s + TruncatedSeries::zero(5)).order() == 5);
    }
}

TEST_CASE("division by 1 - z produces the geometric series") {
    auto one = TruncatedSeries::one(3);
    auto den = TruncatedSeries::polynomial({1.0, -1.0}, 3);
    auto g = one / den;
    for (int k = 0; k <= 3; ++k) REQUIRE(g[k].real() == Approx(1.0).margin(1e-14));
}

TEST_CASE("squared geometric ratios reproduce z(1+z)/(1-z)^3") {
    const int N = 5;
    auto z = TruncatedSeries::identity(N);
    auto num = TruncatedSeries::polynomial({0.0, 1.0, 1.0}, N);  // z + z^2
    auto den = TruncatedSeries::polynomial({1.0, -1.0}, N);
    auto lhs = num / (den * den * den);

    // Oracle: coefficient n of z(1+z)/(1-z)^3 is n^2.
    for (int n = 0; n <= N; ++n)
        REQUIRE(lhs[n].real() == Approx(static_cast<double>(n) * n).margin(1e-12));

    SECTION("and equals the Hadamard square of z/(1-z)^2") {
        auto koebe = z / (den * den);
        for (int n = 0; n <= N; ++n)
            REQUIRE(koebe[n].real() == Approx(static_cast<double>(n)).margin(1e-12));
        auto had = hadamard(koebe, koebe);
        REQUIRE(max_coeff_diff(had, lhs) < 1e-12);
    }
}

TEST_CASE("exp of 2 sum z^n/n matches 1/(1-z)^2") {
    const int N = 6;
    std::vector<cx> a(static_cast<std::size_t>(N) + 1);
    for (int n = 1; n <= N; ++n) a[static_cast<std::size_t>(n)] = 2.0 / n;
    auto e = minda::exp(TruncatedSeries(std::move(a)));
    for (int n = 0; n <= N; ++n)
        REQUIRE(e[n].real() == Approx(static_cast<double>(n + 1)).margin(1e-12));
}

TEST_CASE("pow with negative exponent matches the binomial series") {
    auto base = TruncatedSeries::polynomial({1.0, -1.0}, 3);
    auto p = minda::pow(base, -2.0);  // (1-z)^{-2} = 1 + 2z + 3z^2 + 4z^3
    for (int n = 0; n <= 3; ++n)
        REQUIRE(p[n].real() == Approx(static_cast<double>(n + 1)).margin(1e-12));
}

TEST_CASE("exp/log/pow round trips at order 32") {
    std::mt19937 rng(20240817u);
    auto a = random_series(rng, 32, cx{});
    REQUIRE(max_coeff_diff(minda::log(minda::exp(a)), a) < 1e-12);

    auto b = random_series(rng, 32, cx{1.0, 0.0});
    REQUIRE(max_coeff_diff(minda::exp(minda::log(b)), b) < 1e-11);

    SECTION("pow composes additively in the exponent") {
        auto p = minda::pow(b, 0.7) * minda::pow(b, 0.3);
        REQUIRE(max_coeff_diff(p, b) < 1e-11);
    }
    SECTION("pow agrees with exp of scaled log") {
        auto p1 = minda::pow(b, 0.37);
        auto p2 = minda::exp(cx{0.37, 0.0} * minda::log(b));
        REQUIRE(max_coeff_diff(p1, p2) < 1e-11);
    }
}

TEST_CASE("derivative and antiderivative are inverse up to the constant") {
    std::mt19937 rng(77u);
    auto a = random_series(rng, 12, cx{0.3, -0.2});
    auto round = a.antiderivative().derivative();
    REQUIRE(round.order() == a.order());
    REQUIRE(max_coeff_diff(round, a) < 1e-14);

    SECTION("a constant differentiates to the zero series of order 0") {
        auto c = TruncatedSeries::polynomial({3.5}, 0);
        auto d = c.derivative();
        REQUIRE(d.order() == 0);
        REQUIRE(d[0] == cx{0.0, 0.0});
    }
    SECTION("antiderivative raises the order by one") {
        REQUIRE(a.antiderivative().order() == 13);
    }
}

TEST_CASE("Hadamard identities for the convolution unit and the derivative kernel") {
    std::mt19937 rng(4242u);
    auto f = random_series(rng, 16, cx{});

    std::vector<cx> unit(17, cx{1.0, 0.0});
    unit[0] = cx{};  // z/(1-z): the identity for normalized functions
    auto id = hadamard(f, TruncatedSeries(unit));
    REQUIRE(max_coeff_diff(id, f) < 1e-14);

    std::vector<cx> kernel(17);
    for (int n = 0; n <= 16; ++n) kernel[static_cast<std::size_t>(n)] = static_cast<double>(n);
    auto zfp = hadamard(f, TruncatedSeries(kernel));  // z/(1-z)^2 gives z f'
    auto direct = (TruncatedSeries::identity(16) * f.derivative());
    REQUIRE(max_coeff_diff(zfp, direct) < 1e-13);
}

TEST_CASE("Horner evaluation") {
    auto s = TruncatedSeries::polynomial({0.0, 1.0, 1.0}, 2);
    REQUIRE(s.eval(cx{0.5, 0.0}).real() == Approx(0.75).margin(1e-15));
    REQUIRE(s.eval(cx{0.5, 0.0}).imag() == Approx(0.0).margin(1e-15));

    SECTION("evaluation is linear in the series") {
        std::mt19937 rng(11u);
        auto a = random_series(rng, 10, cx{0.1, 0.0});
        auto b = random_series(rng, 10, cx{-0.4, 0.2});
        const cx z{0.3, -0.4};
        const cx lhs = (a + b).eval(z);
        REQUIRE(std::abs(lhs - (a.eval(z) + b.eval(z))) < 1e-13);
    }
    SECTION("product evaluation agrees inside the reliable radius") {
        // Low-order polynomials: the truncated product is exact.
        auto p = TruncatedSeries::polynomial({1.0, 2.0}, 3);
        auto q = TruncatedSeries::polynomial({0.5, 0.0, -1.0}, 3);
        const cx z{0.2, 0.1};
        REQUIRE(std::abs((p * q).eval(z) - p.eval(z) * q.eval(z)) < 1e-14);
    }
}

TEST_CASE("distributivity and division invert multiplication") {
    std::mt19937 rng(90125u);
    for (int trial = 0; trial < 8; ++trial) {
        auto a = random_series(rng, 14, cx{0.2, 0.1});
        auto b = random_series(rng, 14, cx{1.1, -0.3});
        auto c = random_series(rng, 14, cx{-0.7, 0.0});
        REQUIRE(max_coeff_diff((a + b) * c, a * c + b * c) < 1e-12);
        REQUIRE(max_coeff_diff((a * b) / b, a) < 1e-10);
    }
}

TEST_CASE("series preconditions throw typed errors") {
    auto z = TruncatedSeries::identity(4);
    auto one = TruncatedSeries::one(4);

    REQUIRE_THROWS_AS(one / z, minda::DivisionByZeroConstantTerm);
    REQUIRE_THROWS_AS(minda::exp(one), minda::BadConstantTerm);
    REQUIRE_THROWS_AS(minda::log(z), minda::BadConstantTerm);
    REQUIRE_THROWS_AS(minda::pow(z, 0.5), minda::BadConstantTerm);

    SECTION("non-finite coefficients are rejected at construction") {
        std::vector<cx> bad{cx{1.0, 0.0}, cx{std::numeric_limits<double>::quiet_NaN(), 0.0}};
        REQUIRE_THROWS_AS(TruncatedSeries(std::move(bad)), minda::ParameterOutOfRange);
    }
    SECTION("identity needs order at least one") {
        REQUIRE_THROWS_AS(TruncatedSeries::identity(0), minda::ParameterOutOfRange);
    }
}

TEST_CASE("coefficients beyond the truncation order read as zero") {
    auto s = TruncatedSeries::polynomial({1.0, 2.0}, 2);
    REQUIRE(s[5] == cx{0.0, 0.0});
    REQUIRE(s[-1] == cx{0.0, 0.0});
}
