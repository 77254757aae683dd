/// Acceptance gate: one PASS/FAIL line per criterion, pinned tolerances,
/// nonzero exit when any criterion fails.  Every reference number is frozen
/// here rather than recomputed, so a regression in any module flips the
/// corresponding line to FAIL.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "minda/minda.hpp"

namespace {

using minda::cx;
using minda::PsiSpec;
using minda::TruncatedSeries;

constexpr double kPi = std::numbers::pi;

struct Check {
    bool ok = true;
    std::string why;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
    void near(double got, double want, double tol, const std::string& what) {
        if (std::abs(got - want) > tol && ok) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s: got %.12g, want %.12g +/- %.1g", what.c_str(),
                          got, want, tol);
            ok = false;
            why = buf;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Coefficientwise residual of the defining identity z f0'/f0 = psi for a
/// built extremal series, up to the given order.
double logderiv_residual(const PsiSpec& spec, const TruncatedSeries& f0, int upto) {
    const int n = f0.order() - 1;
    std::vector<cx> g(static_cast<std::size_t>(n) + 1), num(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        g[static_cast<std::size_t>(k)] = f0[k + 1];
        num[static_cast<std::size_t>(k)] = (k + 1.0) * f0[k + 1];
    }
    const auto ratio = TruncatedSeries(std::move(num)) / TruncatedSeries(std::move(g));
    const auto B = spec.taylor(upto);
    double worst = 0.0;
    for (int k = 0; k <= upto; ++k) {
        const cx want = k == 0 ? cx{1.0, 0.0} : B[static_cast<std::size_t>(k - 1)];
        worst = std::max(worst, std::abs(ratio[k] - want));
    }
    return worst;
}

// ---------------------------------------------------------------------------

Check criterion_table() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const auto spec = PsiSpec::cardioid();
    const std::vector<double> radii{1.0, 0.8, 2.0 / 3.0, 0.5};
    const auto rows = minda::distortion_table(spec, radii);
    const double th[] = {1.88438, 2.01859, 2.17677, 2.58169};
    const double mn[] = {0.372412, 0.527912, 0.611553, 0.693287};
    const double mm[] = {0.197923, 0.304374, 0.375966, 0.467769};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        c.near(rows[i].theta1, th[i], 1e-3, "theta1 row " + std::to_string(i));
        c.near(rows[i].min_mod, mn[i], 1e-4, "min_mod row " + std::to_string(i));
        c.near(rows[i].lower, mm[i], 1e-4, "m row " + std::to_string(i));
    }
    // Inner regime: below (3 - sqrt 5)/2 the circle minimum sits on the
    // negative axis and closes as 1 - r e^{-r}.
    const double rc = 0.5 * (3.0 - std::sqrt(5.0));
    for (double r : {0.1, 0.3, rc}) {
        const auto [t1, v] = minda::min_mod_psi(spec, r);
        c.near(v, 1.0 - r * std::exp(-r), 1e-10, "inner minimum at r = " + std::to_string(r));
        c.expect(std::abs(t1 - kPi) < 2e-3, "theta1 != pi at r = " + std::to_string(r));
    }
    const double dt = seconds_since(t0);
    c.expect(dt < 2.0, "runtime " + std::to_string(dt) + " s exceeds 2 s");
    return c;
}

Check criterion_bohr() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();

    c.near(minda::bohr_janowski(1.0, -1.0).r0, 3.0 - 2.0 * std::sqrt(2.0), 1e-10,
           "half-plane r0");

    const auto cardioid = minda::bohr_radius(PsiSpec::cardioid());
    c.near(cardioid.r0, 0.349681, 1e-5, "cardioid r0");
    c.near(cardioid.r_b, 1.0 / 3.0, 1e-12, "cardioid r_b");
    c.near(minda::koebe_radius(PsiSpec::cardioid()), 0.531464, 1e-5, "cardioid covered radius");

    const auto lem = minda::bohr_radius(PsiSpec::lemniscate());
    c.near(lem.r0, 0.439229, 1e-4, "lemniscate r0");
    c.near(lem.r_b, 1.0 / 3.0, 1e-12, "lemniscate r_b");
    c.near(minda::koebe_radius(PsiSpec::lemniscate()), 0.541341, 1e-5,
           "lemniscate covered radius");

    c.near(minda::bohr_radius(PsiSpec::alpha_halfplane(0.5)).r0, 1.0 / 3.0, 1e-10,
           "order-1/2 half-plane r0");

    const double dt = seconds_since(t0);
    c.expect(dt < 2.0, "runtime " + std::to_string(dt) + " s exceeds 2 s");
    return c;
}

Check criterion_f_radii() {
    Check c;
    std::vector<PsiSpec> sharp_specs;

    for (double a : {0.0, 0.25, 0.5}) {
        const auto spec = PsiSpec::alpha_halfplane(a);
        const double closed = (2.0 - std::sqrt(3.0 + a * a)) / (1.0 + a);
        c.near(minda::F_radius(spec).value, closed, 1e-6,
               "half-plane radius at alpha = " + std::to_string(a));
        sharp_specs.push_back(spec);
    }
    for (double g : {0.25, 0.5, 0.75}) {
        const auto spec = PsiSpec::power_halfplane(g);
        const double s = std::sin(0.5 * kPi * g);
        const double closed = (2.0 - std::sqrt(4.0 - s * s)) / s;
        c.near(minda::F_radius(spec).value, closed, 1e-6,
               "sector radius at gamma = " + std::to_string(g));
        sharp_specs.push_back(spec);
    }
    c.near(minda::F_radius(PsiSpec::cardioid()).value, 0.0957, 1e-4, "cardioid radius");
    c.near(minda::F_radius(PsiSpec::sine()).value, 0.1858, 1e-4, "sine radius");
    sharp_specs.push_back(PsiSpec::cardioid());
    sharp_specs.push_back(PsiSpec::sine());

    c.near(minda::convexity_radius(PsiSpec::cardioid()), 0.5 * (3.0 - std::sqrt(5.0)), 1e-8,
           "cardioid convexity radius");

    // Boundary-touch sharpness: the containment margin vanishes at each
    // computed radius.
    for (const auto& spec : sharp_specs) {
        const double r = minda::F_radius(spec).value;
        c.expect(std::abs(minda::F_margin(spec, r)) < 1e-6, "touch margin at " + spec.label());
    }
    return c;
}

Check criterion_h_radii() {
    Check c;
    for (double a : {0.25, 0.5, 0.75})
        for (double q : {0.25, 0.5, 0.75}) {
            const auto res = minda::H_radius(PsiSpec::alpha_halfplane(a), q);
            c.near(res.value, minda::H_alpha_closed_radius(a, q), 1e-9,
                   "numeric vs closed at alpha = " + std::to_string(a) +
                       ", q = " + std::to_string(q));
        }

    // Documented counterexample at alpha = q = 1/2: the corrected
    // discriminant a^2 (1-q)^2 + 4q gives 0.457427; the printed variant
    // a^2 (1-q^2) + 4q gives 0.486013 (displayed as 0.486011) and misses the
    // defining boundary equation by over 2e-2.
    const double corrected = minda::H_alpha_closed_radius(0.5, 0.5);
    const double printed = minda::H_alpha_printed_radius(0.5, 0.5);
    c.near(corrected, 0.457427, 1e-6, "corrected closed radius");
    c.near(printed, 0.486011, 1e-5, "printed-variant radius");
    c.expect(printed - corrected > 0.028, "printed and corrected radii must split");
    c.expect(std::abs(minda::H_min_real(corrected, 0.5) - 0.5) < 1e-12,
             "corrected root misses the boundary equation");
    c.expect(std::abs(minda::H_min_real(printed, 0.5) - 0.5) > 0.02,
             "printed root should miss the boundary equation");

    // Threshold clause: alpha <= (1-q)/(2(1+q)) covers the whole disk.
    c.near(minda::H_radius(PsiSpec::alpha_halfplane(0.25), 0.25).value, 1.0, 1e-15,
           "threshold case radius");
    return c;
}

Check criterion_constants() {
    Check c;
    const double c0 = minda::constant_c0();
    c.near(c0, 0.845276, 1e-5, "c0");
    c.expect(std::abs(minda::c0_quartic(c0)) < 1e-10, "c0 quartic residual");
    const double l0 = minda::constant_lambda0();
    c.near(l0, (9.0 - std::sqrt(33.0)) / 4.0, 1e-15, "lambda0 closed form");
    c.expect(std::abs(minda::exp_condition_limit(l0) + 0.5) < 1e-12,
             "lambda0 defining identity");
    return c;
}

Check criterion_properties() {
    Check c;
    std::mt19937 rng(20260823);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    // exp/log roundtrip on random zero-constant series.
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<cx> a(25, cx{});
        for (int k = 1; k <= 24; ++k)
            a[static_cast<std::size_t>(k)] = 0.5 / (k + 1.0) * cx{unit(rng), unit(rng)};
        const TruncatedSeries s{a};
        const auto back = minda::log(minda::exp(s));
        double worst = 0.0;
        for (int k = 0; k <= 24; ++k) worst = std::max(worst, std::abs(back[k] - s[k]));
        c.expect(worst < 1e-12, "exp/log roundtrip drift " + std::to_string(worst));
    }

    // Hadamard identities: f * z/(1-z) = f and f * z/(1-z)^2 = z f'.
    {
        std::vector<cx> a(25, cx{}), ones(25, cx{}), ks(25, cx{});
        a[1] = 1.0;
        for (int k = 2; k <= 24; ++k) a[static_cast<std::size_t>(k)] = cx{unit(rng), unit(rng)};
        for (int k = 1; k <= 24; ++k) {
            ones[static_cast<std::size_t>(k)] = 1.0;
            ks[static_cast<std::size_t>(k)] = static_cast<double>(k);
        }
        const TruncatedSeries f{a};
        const auto id1 = minda::hadamard(f, TruncatedSeries{ones});
        const auto id2 = minda::hadamard(f, TruncatedSeries{ks});
        double worst = 0.0;
        for (int k = 0; k <= 24; ++k) {
            worst = std::max(worst, std::abs(id1[k] - f[k]));
            worst = std::max(worst, std::abs(id2[k] - static_cast<double>(k) * f[k]));
        }
        c.expect(worst < 1e-13, "hadamard identity drift " + std::to_string(worst));
    }

    // Extremal defining identity, coefficientwise, across the catalog.
    const std::vector<PsiSpec> catalog{
        PsiSpec::janowski(1.0, -1.0),  PsiSpec::alpha_halfplane(0.25),
        PsiSpec::lemniscate(),         PsiSpec::cardioid(),
        PsiSpec::sine(),               PsiSpec::sigmoid(),
        PsiSpec::power_halfplane(0.5), PsiSpec::crescent(),
        PsiSpec::exp_lambda(0.75),     PsiSpec::janowski_power(0.75, -0.5, 0.6)};
    for (const auto& spec : catalog) {
        const auto f0 = minda::build_extremal(spec, 24);
        const double resid = logderiv_residual(spec, f0.series, 20);
        c.expect(resid < 1e-10, "extremal identity residual " + std::to_string(resid) + " for " +
                                    spec.label());
    }

    // Convolution direct form vs Hadamard kernel form.
    minda::ConvGrid grid;
    grid.radii = {0.3, 0.6, 0.9};
    grid.angles = 32;
    grid.t_samples = 64;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<cx> a{0.0, 1.0};
        for (int k = 2; k <= 6; ++k) a.push_back(0.1 * cx{unit(rng), unit(rng)} / double(k));
        const TruncatedSeries f{a};
        const auto rep = minda::starlike_nonvanishing(f, PsiSpec::janowski(1.0, -1.0), grid);
        c.expect(rep.pass, "small-tail member failed the sweep");
        c.expect(rep.max_form_gap < 1e-11,
                 "direct/kernel gap " + std::to_string(rep.max_form_gap));
    }

    // Verdict agreement between the sampled sweep and the region oracle.
    {
        std::mt19937 rng2(424242);
        int fails = 0;
        for (int trial = 0; trial < 20; ++trial) {
            const auto spec =
                trial % 2 == 0 ? PsiSpec::janowski(1.0, -1.0) : PsiSpec::lemniscate();
            std::vector<cx> a{0.0, 1.0};
            if (trial == 0) {
                a.push_back(cx{0.9, 0.0});
            } else {
                const int deg = 2 + static_cast<int>(rng2() % 4);
                const double scale = trial % 3 == 0 ? 1.7 : 0.15;
                for (int k = 2; k <= deg; ++k)
                    a.push_back(scale * cx{unit(rng), unit(rng)} / double(k * k - k));
            }
            const TruncatedSeries f{a};
            const auto df = f.derivative();
            bool member = true;
            for (double r : grid.radii) {
                for (std::size_t j = 0; member && j < grid.angles; ++j) {
                    const cx z = std::polar(r, 2.0 * kPi * double(j) / double(grid.angles));
                    const cx fz = f.eval(z) / z;
                    if (std::abs(fz) < 1e-9 ||
                        minda::signed_margin(spec, df.eval(z) / fz) < 0.0)
                        member = false;
                }
                if (!member) break;
            }
            const auto rep = minda::starlike_nonvanishing(f, spec, grid);
            c.expect(rep.pass == member,
                     "verdict mismatch on trial " + std::to_string(trial));
            if (!member) ++fails;
        }
        c.expect(fails > 0 && fails < 20, "sample mix must exercise both verdicts");
    }

    // Coefficient sufficiency below one implies a passing sweep.
    {
        std::mt19937 rng3(5150);
        std::uniform_real_distribution<double> u3(-1.0, 1.0);
        for (int trial = 0; trial < 50; ++trial) {
            const auto spec =
                trial % 2 == 0 ? PsiSpec::janowski(1.0, -1.0) : PsiSpec::lemniscate();
            const auto variant =
                trial % 3 == 0 ? minda::ConvVariant::Convex : minda::ConvVariant::Starlike;
            const int deg = 2 + static_cast<int>(rng3() % 5);
            std::vector<cx> tail;
            for (int k = 2; k <= deg; ++k) tail.push_back(cx{u3(rng3), u3(rng3)});
            const double raw = minda::coeff_sufficiency(tail, spec, variant, 128);
            const double target = 0.35 + 0.55 * std::abs(u3(rng3));
            std::vector<cx> a{0.0, 1.0};
            for (cx v : tail) a.push_back(v * (target / raw));
            const TruncatedSeries f{a};
            const auto rep = variant == minda::ConvVariant::Starlike
                                 ? minda::starlike_nonvanishing(f, spec, grid)
                                 : minda::convex_nonvanishing(f, spec, grid);
            c.expect(rep.pass, "sufficient sample failed on trial " + std::to_string(trial));
        }
    }
    return c;
}

Check criterion_misprints() {
    Check c;

    // (a) Lambda sign in the convolution kernel: k + lam (k-1) reproduces the
    // direct form, k - lam (k-1) does not.
    {
        const int order = 64;
        std::vector<cx> kc(order + 1, cx{});
        for (int k = 1; k <= order; ++k) kc[static_cast<std::size_t>(k)] = double(k);
        const TruncatedSeries koebe{kc};
        const auto df = koebe.derivative();
        const cx w{0.4, 1.1};
        const cx lam = w / (1.0 - w);
        const cx z{-0.37, 0.22};
        const cx direct = df.eval(z) - w * koebe.eval(z) / z;
        std::vector<cx> plus(order + 1, cx{}), minus(order + 1, cx{});
        for (int k = 1; k <= order; ++k) {
            plus[static_cast<std::size_t>(k)] = double(k) + lam * double(k - 1);
            minus[static_cast<std::size_t>(k)] = double(k) - lam * double(k - 1);
        }
        const cx got_plus =
            (1.0 - w) * minda::hadamard(koebe, TruncatedSeries{plus}).eval(z) / z;
        const cx got_minus =
            (1.0 - w) * minda::hadamard(koebe, TruncatedSeries{minus}).eval(z) / z;
        c.expect(std::abs(got_plus - direct) < 1e-10, "implemented lambda sign misses");
        c.expect(std::abs(got_minus - direct) > 0.1, "printed lambda sign should miss");
    }

    // (b) Extremal coefficient formula: the implemented binomial expansion of
    // z (1 + E z)^{(D-E)/E} satisfies the defining identity; the transcribed
    // n-independent infinite product collapses to zero and cannot.
    {
        const double D = 1.0, E = -1.0;
        const auto spec = PsiSpec::janowski(D, E);
        const auto f0 = minda::build_extremal(spec, 16);
        for (int n = 2; n <= 8; ++n)
            c.expect(std::abs(f0.series[n] - cx{double(n), 0.0}) < 1e-10,
                     "implemented t_" + std::to_string(n) + " misses the binomial value");
        c.expect(logderiv_residual(spec, f0.series, 12) < 1e-10,
                 "implemented coefficients miss the defining identity");

        double prod = 1.0, kf = 1.0;
        for (int k = 2; k <= 30; ++k) {
            kf *= double(k - 1);  // (k-1)!
            prod *= (D - double(k - 1) * E) / kf;
        }
        c.expect(std::abs(prod) < 1e-6, "transcribed product should collapse toward zero");
        c.expect(std::abs(prod - f0.series[2].real()) > 1.0,
                 "transcribed value must miss t_2 = D - E");
    }

    // (c) Jackson-derivative discriminant: corrected root solves the boundary
    // equation, printed root does not.
    {
        const double corrected = minda::H_alpha_closed_radius(0.5, 0.5);
        const double printed = minda::H_alpha_printed_radius(0.5, 0.5);
        c.expect(std::abs(minda::H_min_real(corrected, 0.5) - 0.5) < 1e-12,
                 "corrected discriminant misses the boundary equation");
        c.expect(std::abs(minda::H_min_real(printed, 0.5) - 0.5) > 0.02,
                 "printed discriminant should miss the boundary equation");
        c.near(minda::H_radius(PsiSpec::alpha_halfplane(0.5), 0.5).value, corrected, 1e-9,
               "independent numeric root vs corrected closed form");
    }
    return c;
}

}  // namespace

int main() {
    struct Row {
        const char* name;
        Check (*run)();
    };
    const Row rows[] = {
        {"1: cardioid modulus-bound table", criterion_table},
        {"2: Bohr radii", criterion_bohr},
        {"3: convolution radii closed forms", criterion_f_radii},
        {"4: Jackson-derivative radii", criterion_h_radii},
        {"5: subordination constants c0 and lambda0", criterion_constants},
        {"6: property suites", criterion_properties},
        {"7: documented-misprint checks", criterion_misprints},
    };
    bool all = true;
    for (const auto& row : rows) {
        const Check c = row.run();
        if (c.ok)
            std::printf("[PASS] %s\n", row.name);
        else
            std::printf("[FAIL] %s -- %s\n", row.name, c.why.c_str());
        all = all && c.ok;
    }
    return all ? 0 : 1;
}
