/// Command-line front end for the library: verification suites, modulus-bound
/// tables, boundary curves, and radius/Bohr reports as CSV/JSON/SVG.
///
/// Exit codes: 0 success, 1 usage error, 2 verification failure.
/// JSON numbers carry 12 significant digits, CSV columns 6; identical
/// invocations produce byte-identical output.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "minda/minda.hpp"

namespace {

using json = nlohmann::ordered_json;
using minda::cx;
using minda::PsiSpec;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Round to 12 significant digits so the JSON emitter prints a stable,
/// display-precision value.
double j12(double x) {
    if (!std::isfinite(x)) return x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", x);
    return std::strtod(buf, nullptr);
}

std::string fmt6(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

json jcomplex(cx z) { return json::array({j12(z.real()), j12(z.imag())}); }

// ---------------------------------------------------------------------------
// Manifest
// ---------------------------------------------------------------------------

/// Everything one invocation needs: the subcommand, the target-spec selector,
/// output routing, and tolerance overrides.  Unknown spec names are rejected
/// here, before any computation starts.
struct RunManifest {
    std::string command;

    // spec selector
    std::string psi = "janowski";
    double D = 1.0, E = -1.0;
    double alpha = 0.0, gamma = 0.5, beta = 1.0;
    double c = 0.5, lambda = 1.0;

    // command parameters
    std::string family = "F";  // radius: F | H | section
    double q = 0.5;
    int k = 2;
    std::string variant = "starlike";
    std::vector<double> radii;
    int samples = 1024;
    int order = 64;
    std::optional<double> tol;
    std::string coeffs_path;

    // output
    std::string format;  // empty means the subcommand's default
    std::string out_path;

    std::string format_or(const char* def) const { return format.empty() ? def : format; }
};

PsiSpec build_psi(const RunManifest& m) {
    const std::string& n = m.psi;
    if (n == "janowski") return PsiSpec::janowski(m.D, m.E);
    if (n == "alpha" || n == "alpha_halfplane") return PsiSpec::alpha_halfplane(m.alpha);
    if (n == "lemniscate") return PsiSpec::lemniscate();
    if (n == "cardioid") return PsiSpec::cardioid();
    if (n == "sine") return PsiSpec::sine();
    if (n == "sigmoid") return PsiSpec::sigmoid();
    if (n == "power" || n == "power_halfplane") return PsiSpec::power_halfplane(m.gamma);
    if (n == "crescent") return PsiSpec::crescent();
    if (n == "exp" || n == "exp_lambda") return PsiSpec::exp_lambda(m.lambda);
    if (n == "janowski_power") return PsiSpec::janowski_power(m.D, m.E, m.beta);
    throw minda::ParameterOutOfRange("unknown --psi name: " + n);
}

int write_output(const RunManifest& m, const std::string& text) {
    if (m.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(m.out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output path " << m.out_path << "\n";
        return 1;
    }
    f << text;
    return f.good() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

void require_json_format(const RunManifest& m) {
    if (m.format_or("json") != "json")
        throw minda::ParameterOutOfRange("this subcommand only emits json");
}

int run_bohr(const RunManifest& m) {
    require_json_format(m);
    const auto spec = build_psi(m);
    const minda::BohrResult res = spec.family() == minda::PsiFamily::Janowski
                                      ? minda::bohr_janowski(spec.D(), spec.E())
                                      : minda::bohr_radius(spec, m.order);
    json out;
    out["command"] = "bohr";
    out["spec"] = spec.label();
    out["r_star"] = j12(res.r_star);
    out["r0"] = j12(res.r0);
    out["r_b"] = j12(res.r_b);
    out["sharp_flag"] = res.sharp;
    if (spec.family() == minda::PsiFamily::Cardioid)
        out["conjecture_root"] = j12(minda::conjecture_roots().cardioid);
    if (spec.family() == minda::PsiFamily::Lemniscate)
        out["conjecture_root"] = j12(minda::conjecture_roots().lemniscate);
    return write_output(m, out.dump(2) + "\n");
}

int run_radius(const RunManifest& m) {
    require_json_format(m);
    const auto spec = build_psi(m);
    const auto variant =
        m.variant == "convex" ? minda::ConvVariant::Convex : minda::ConvVariant::Starlike;
    minda::RadiusFamily fam;
    if (m.family == "F")
        fam = minda::RadiusFamily::F_function;
    else if (m.family == "H")
        fam = minda::RadiusFamily::H_function;
    else if (m.family == "section")
        fam = minda::RadiusFamily::Section;
    else
        throw minda::ParameterOutOfRange("--family must be F, H, or section");

    const auto rcase = minda::make_radius_case(fam, spec, m.q, m.k, variant);
    minda::RadiusResult res;
    switch (fam) {
        case minda::RadiusFamily::F_function:
            res = minda::F_radius(spec, m.tol.value_or(1e-9));
            break;
        case minda::RadiusFamily::H_function:
            res = minda::H_radius(spec, m.q, m.tol.value_or(1e-11));
            break;
        case minda::RadiusFamily::Section:
            res = minda::section_radius(m.k, spec, variant, m.tol.value_or(1e-9));
            break;
    }

    json out;
    out["command"] = "radius";
    out["family"] = minda::to_string(fam);
    out["spec"] = spec.label();
    if (fam == minda::RadiusFamily::H_function) out["q"] = j12(m.q);
    if (fam == minda::RadiusFamily::Section) {
        out["k"] = m.k;
        out["variant"] = minda::to_string(variant);
    }
    out["value"] = j12(res.value);
    out["bracket"] = json::array({j12(res.bracket_lo), j12(res.bracket_hi)});
    out["tolerance"] = j12(res.tolerance);
    out["method"] = minda::to_string(res.method);
    if (res.cross_check) out["cross_check"] = j12(*res.cross_check);
    if (rcase.closed_form) out["closed_form"] = *rcase.closed_form;
    return write_output(m, out.dump(2) + "\n");
}

std::string distortion_csv(const std::vector<minda::DistortionRow>& rows) {
    std::ostringstream os;
    os << "r,theta1,min_mod,m,upper\n";
    for (const auto& row : rows)
        os << fmt6(row.r) << ',' << fmt6(row.theta1) << ',' << fmt6(row.min_mod) << ','
           << fmt6(row.lower) << ',' << fmt6(row.upper) << '\n';
    return os.str();
}

int run_distortion(const RunManifest& m) {
    const auto spec = build_psi(m);
    std::vector<double> radii = m.radii;
    if (radii.empty()) radii = {1.0, 0.8, 2.0 / 3.0, 0.5};
    const auto rows = minda::distortion_table(spec, radii);
    const std::string fmt = m.format_or("csv");
    if (fmt == "csv") return write_output(m, distortion_csv(rows));
    if (fmt != "json") throw minda::ParameterOutOfRange("distortion formats: csv, json");
    json out;
    out["command"] = "distortion";
    out["spec"] = spec.label();
    out["rows"] = json::array();
    for (const auto& row : rows) {
        json r;
        r["r"] = j12(row.r);
        r["theta1"] = j12(row.theta1);
        r["min_mod"] = j12(row.min_mod);
        r["m"] = j12(row.lower);
        r["upper"] = j12(row.upper);
        out["rows"].push_back(r);
    }
    return write_output(m, out.dump(2) + "\n");
}

int run_member(const RunManifest& m) {
    require_json_format(m);
    json doc;
    if (m.coeffs_path == "-") {
        doc = json::parse(std::cin);
    } else {
        std::ifstream f(m.coeffs_path);
        if (!f) throw minda::ParameterOutOfRange("cannot open --coeffs file: " + m.coeffs_path);
        doc = json::parse(f);
    }
    if (!doc.contains("coefficients") || !doc["coefficients"].is_array())
        throw minda::ParameterOutOfRange("--coeffs JSON needs a \"coefficients\" array");

    // Entries are the Taylor coefficients a1, a2, ... (a1 must equal 1);
    // each is a real number or an [re, im] pair.
    std::vector<cx> c{cx{}};
    for (const auto& e : doc["coefficients"]) {
        if (e.is_number())
            c.emplace_back(e.get<double>(), 0.0);
        else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
            c.emplace_back(e[0].get<double>(), e[1].get<double>());
        else
            throw minda::ParameterOutOfRange("coefficient entries must be numbers or [re, im]");
    }
    const minda::TruncatedSeries f(std::move(c));

    const auto spec = build_psi(m);
    const auto rep = m.variant == "convex" ? minda::convex_nonvanishing(f, spec)
                                           : minda::starlike_nonvanishing(f, spec);
    json out;
    out["command"] = "member";
    out["spec"] = spec.label();
    out["variant"] = m.variant == "convex" ? "convex" : "starlike";
    out["order"] = f.order();
    out["pass"] = rep.pass;
    out["min_abs"] = j12(rep.min_abs);
    out["max_form_gap"] = j12(rep.max_form_gap);
    if (!rep.pass) {
        json w;
        w["z"] = jcomplex(rep.witness.z);
        w["t"] = j12(rep.witness.t);
        w["value"] = jcomplex(rep.witness.value);
        out["witness"] = w;
    }
    const int code = write_output(m, out.dump(2) + "\n");
    if (code != 0) return code;
    return rep.pass ? 0 : 2;
}

/// The second-order subordination hypothesis suite: per-family condition
/// values with their frozen expectations, then the two threshold constants
/// with their defining-identity residuals.  Any mismatch exits 2.
int run_verify(const RunManifest& m, const std::string& suite) {
    if (suite != "bulextn") throw minda::ParameterOutOfRange("unknown verify suite: " + suite);
    using minda::HSpec;

    struct Row {
        HSpec spec;
        double frozen;
        bool expect_holds;
    };
    const double l0 = minda::constant_lambda0();
    const Row rows[] = {
        {HSpec::exp_h(0.5), 0.167610963012, true},
        {HSpec::exp_h(l0), -0.498030004265, true},
        {HSpec::exp_h(1.0), -0.997001998002, false},
        {HSpec::alpha_h(0.0), -0.499249624812, true},
        {HSpec::alpha_h(0.25), 0.000666888963, true},
        {HSpec::alpha_h(0.5), 1.0, true},
        {HSpec::lemniscate_h(0.5), 0.278234742173, true},
        {HSpec::lemniscate_h(0.9), -0.079870444466, true},
        {HSpec::janpower(0.5, -0.5, 0.8), 0.142949064814, true},
        {HSpec::janpower(1.0, -1.0, 0.5), -1.866078274820, false},
    };

    bool all_ok = true;
    std::ostringstream os;
    os << "hypothesis suite: Re(1 + z h''/h') > -1/2 on the sample ladder\n";
    for (const auto& row : rows) {
        const double inf = minda::check_bul_condition(row.spec);
        const bool holds = minda::bul_condition_holds(row.spec);
        const bool ok = holds == row.expect_holds && std::abs(inf - row.frozen) < 1e-6;
        all_ok = all_ok && ok;
        char line[160];
        std::snprintf(line, sizeof line, "  %-34s inf=%+.9f  holds=%-5s  [%s]\n",
                      row.spec.label().c_str(), inf, holds ? "yes" : "no", ok ? "PASS" : "FAIL");
        os << line;
    }

    const double c0 = minda::constant_c0();
    const double resid = std::abs(minda::c0_quartic(c0));
    const double limit = minda::exp_condition_limit(l0);
    const bool c0_ok = std::abs(c0 - 0.845276) < 1e-5 && resid < 1e-10;
    const bool l0_ok =
        std::abs(l0 - (9.0 - std::sqrt(33.0)) / 4.0) < 1e-14 && std::abs(limit + 0.5) < 1e-12;
    all_ok = all_ok && c0_ok && l0_ok;

    char buf[200];
    os << "constants\n";
    std::snprintf(buf, sizeof buf, "  c0      = %.12f  quartic residual %.3e  [%s]\n", c0, resid,
                  c0_ok ? "PASS" : "FAIL");
    os << buf;
    std::snprintf(buf, sizeof buf, "  lambda0 = %.12f  limit %.15f  [%s]\n", l0, limit,
                  l0_ok ? "PASS" : "FAIL");
    os << buf;
    os << (all_ok ? "verify bulextn: PASS\n" : "verify bulextn: FAIL\n");

    const int code = write_output(m, os.str());
    if (code != 0) return code;
    return all_ok ? 0 : 2;
}

int run_curve(const RunManifest& m) {
    const auto spec = build_psi(m);
    if (m.samples < 8) throw minda::ParameterOutOfRange("--samples must be >= 8");
    // Midpoint offsets keep unbounded targets away from their boundary poles.
    std::vector<double> ts;
    std::vector<cx> ws;
    ts.reserve(static_cast<std::size_t>(m.samples));
    for (int i = 0; i < m.samples; ++i) {
        const double t = kTwoPi * (i + 0.5) / m.samples;
        ts.push_back(t);
        ws.push_back(spec.eval(std::polar(1.0, t)));
    }

    const std::string fmt = m.format_or("csv");
    if (fmt == "csv") {
        std::ostringstream os;
        os << "t,re,im\n";
        for (std::size_t i = 0; i < ts.size(); ++i)
            os << fmt6(ts[i]) << ',' << fmt6(ws[i].real()) << ',' << fmt6(ws[i].imag()) << '\n';
        return write_output(m, os.str());
    }
    if (fmt != "svg") throw minda::ParameterOutOfRange("curve formats: csv, svg");

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (cx w : ws) {
        xmin = std::min(xmin, w.real());
        xmax = std::max(xmax, w.real());
        ymin = std::min(ymin, w.imag());
        ymax = std::max(ymax, w.imag());
    }
    const double pad = 0.05 * std::max(xmax - xmin, ymax - ymin);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\""
       << fmt6(xmin - pad) << ' ' << fmt6(-(ymax + pad)) << ' ' << fmt6(xmax - xmin + 2 * pad)
       << ' ' << fmt6(ymax - ymin + 2 * pad) << "\">\n"
       << "  <polygon fill=\"none\" stroke=\"black\" stroke-width=\""
       << fmt6(0.004 * (xmax - xmin + 2 * pad)) << "\" points=\"";
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) os << ' ';
        os << fmt6(ws[i].real()) << ',' << fmt6(-ws[i].imag());
    }
    os << "\"/>\n</svg>\n";
    return write_output(m, os.str());
}

/// The headline tables in one run: the cardioid modulus-bound table, the
/// Bohr-radius report, the closed-form radius catalog, and the subordination
/// constants.
int run_table_all(const RunManifest& m) {
    std::ostringstream os;

    const std::vector<double> radii{1.0, 0.8, 2.0 / 3.0, 0.5};
    os << "# cardioid modulus bounds\n";
    os << distortion_csv(minda::distortion_table(PsiSpec::cardioid(), radii));

    os << "# bohr radii\n";
    os << "spec,r_star,r0,r_b,sharp\n";
    auto bohr_line = [&](const PsiSpec& s, const minda::BohrResult& b) {
        os << s.label() << ',' << fmt6(b.r_star) << ',' << fmt6(b.r0) << ',' << fmt6(b.r_b) << ','
           << (b.sharp ? "yes" : "no") << '\n';
    };
    bohr_line(PsiSpec::janowski(1.0, -1.0), minda::bohr_janowski(1.0, -1.0));
    bohr_line(PsiSpec::cardioid(), minda::bohr_radius(PsiSpec::cardioid()));
    bohr_line(PsiSpec::lemniscate(), minda::bohr_radius(PsiSpec::lemniscate()));
    bohr_line(PsiSpec::alpha_halfplane(0.5), minda::bohr_radius(PsiSpec::alpha_halfplane(0.5)));

    os << "# F-convolution radii\n";
    os << "spec,value,method\n";
    const PsiSpec f_specs[] = {
        PsiSpec::alpha_halfplane(0.0),    PsiSpec::alpha_halfplane(0.25),
        PsiSpec::alpha_halfplane(0.5),    PsiSpec::lemniscate(),
        PsiSpec::cardioid(),              PsiSpec::sine(),
        PsiSpec::sigmoid(),               PsiSpec::power_halfplane(0.25),
        PsiSpec::power_halfplane(0.5),    PsiSpec::power_halfplane(0.75),
    };
    for (const auto& s : f_specs) {
        const auto res = minda::F_radius(s);
        os << s.label() << ',' << fmt6(res.value) << ',' << minda::to_string(res.method) << '\n';
    }

    os << "# q-derivative radii (q = 1/2)\n";
    os << "spec,value,method\n";
    const PsiSpec h_specs[] = {PsiSpec::alpha_halfplane(0.25), PsiSpec::alpha_halfplane(0.5),
                               PsiSpec::alpha_halfplane(0.75), PsiSpec::lemniscate(),
                               PsiSpec::sigmoid()};
    for (const auto& s : h_specs) {
        const auto res = minda::H_radius(s, 0.5);
        os << s.label() << ',' << fmt6(res.value) << ',' << minda::to_string(res.method) << '\n';
    }

    os << "# subordination constants\n";
    const double c0 = minda::constant_c0(), l0 = minda::constant_lambda0();
    os << "c0," << fmt6(c0) << "\nlambda0," << fmt6(l0) << "\nexp_condition_limit(lambda0),"
       << fmt6(minda::exp_condition_limit(l0)) << '\n';
    return write_output(m, os.str());
}

}  // namespace

int main(int argc, char** argv) {
    RunManifest m;
    CLI::App app{"starlike-class computational toolkit"};
    app.require_subcommand(1);

    auto add_psi_flags = [&](CLI::App* cmd) {
        cmd->add_option("--psi", m.psi,
                        "target family: janowski, alpha, lemniscate, cardioid, sine, sigmoid, "
                        "power, crescent, exp, janowski_power");
        cmd->add_option("--D", m.D, "Janowski numerator coefficient");
        cmd->add_option("--E", m.E, "Janowski denominator coefficient");
        cmd->add_option("--alpha", m.alpha, "half-plane level");
        cmd->add_option("--gamma", m.gamma, "sector power");
        cmd->add_option("--beta", m.beta, "Janowski power exponent");
        cmd->add_option("--c", m.c, "lemniscate-h parameter");
        cmd->add_option("--lambda", m.lambda, "exponential rate");
    };
    auto add_out_flags = [&](CLI::App* cmd) {
        cmd->add_option("--format", m.format, "output format");
        cmd->add_option("--out", m.out_path, "write to this path instead of stdout");
    };

    auto* bohr = app.add_subcommand("bohr", "Bohr radius report for a target family");
    add_psi_flags(bohr);
    add_out_flags(bohr);
    bohr->add_option("--order", m.order, "majorant truncation order");

    auto* radius = app.add_subcommand("radius", "starlikeness radius of a benchmark function");
    add_psi_flags(radius);
    add_out_flags(radius);
    radius->add_option("--family", m.family, "benchmark: F, H, or section");
    radius->add_option("--q", m.q, "Jackson parameter for the H benchmark");
    radius->add_option("--k", m.k, "section length");
    radius->add_option("--variant", m.variant, "section variant: starlike or convex");
    radius->add_option("--tol", m.tol, "radius tolerance override");

    auto* dist = app.add_subcommand("distortion", "modulus-bound table over a radius list");
    add_psi_flags(dist);
    add_out_flags(dist);
    dist->add_option("--radii", m.radii, "comma-separated radii in (0, 1]")->delimiter(',');

    auto* member = app.add_subcommand("member", "class membership test for a coefficient file");
    add_psi_flags(member);
    add_out_flags(member);
    member->add_option("--coeffs", m.coeffs_path, "JSON file with a \"coefficients\" array, or -")
        ->required();
    member->add_option("--variant", m.variant, "starlike or convex");

    std::string suite = "bulextn";
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name (bulextn)");
    add_out_flags(verify);

    auto* curve = app.add_subcommand("curve", "boundary curve of the target image");
    add_psi_flags(curve);
    add_out_flags(curve);
    curve->add_option("--samples", m.samples, "boundary sample count");

    auto* table = app.add_subcommand("table-all", "all headline tables in one report");
    add_out_flags(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Help requests exit 0; every genuine usage error maps to exit 1.
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (bohr->parsed()) return run_bohr(m);
        if (radius->parsed()) return run_radius(m);
        if (dist->parsed()) return run_distortion(m);
        if (member->parsed()) return run_member(m);
        if (verify->parsed()) return run_verify(m, suite);
        if (curve->parsed()) return run_curve(m);
        if (table->parsed()) return run_table_all(m);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
