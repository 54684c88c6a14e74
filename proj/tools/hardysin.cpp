#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hardysin/error.hpp"
#include "hardysin/report.hpp"
#include "hardysin/spectral.hpp"
#include "hardysin/suites.hpp"
#include "hardysin/variational.hpp"

using namespace hardysin;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kInvariantFailure = 1, kUsage = 2, kGuard = 3 };

struct Common {
    std::string format = "json";
    std::string output;
};

std::string num(double v) { return report::format_double(v); }

int emit(const report::ReportEnvelope& env, const Common& common) {
    const std::string text = report::render(env, common.format);
    const std::string path = report::resolve_output(common.output, env.command, common.format);
    if (path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(path);
        if (!out) throw DomainError("cannot write report to '" + path + "'");
        out << text;
        std::cerr << "report written to " << path << "\n";
    }
    return env.status == "pass" ? kPass : env.status == "guard" ? kGuard : kInvariantFailure;
}

report::ReportEnvelope envelope(const std::string& command) {
    report::ReportEnvelope env;
    env.command = command;
    env.timestamp = report::utc_timestamp();
    return env;
}

// ------------------------------------------------------------------ eigs

int cmd_eigs(double s, int n, const Common& common) {
    const EigenvalueList list = spectral::eigenvalues(s, n);
    auto env = envelope("eigs");
    env.params = {{"s", num(s)}, {"n", std::to_string(n)}};
    env.results.columns = {"n", "eigenvalue"};
    for (std::size_t i = 0; i < list.values.size(); ++i) {
        env.results.rows.push_back({static_cast<long long>(i), list.values[i]});
    }
    return emit(env, common);
}

// ------------------------------------------------------------------ mfun

int cmd_mfun(double s, double z_re, double z_im, bool verify_quotient, double guard,
             double tol_quotient, const Common& common) {
    const Complex z{z_re, z_im};
    auto env = envelope("mfun");
    env.params = {{"s", num(s)},
                  {"z_re", num(z_re)},
                  {"z_im", num(z_im)},
                  {"verify_quotient", verify_quotient ? "true" : "false"}};
    env.tolerances = {{"pole_guard", guard}};
    const double distance = spectral::eigenvalue_distance(s, z);
    const double root = std::sqrt(std::max(z_re, 0.0));
    const double n = std::max(0.0, std::round(root - 0.5 - s));
    double nearest = (0.5 + s + n) * (0.5 + s + n);
    for (const double m : {n - 1.0, n + 1.0}) {
        if (m < 0.0) continue;
        const double cand = (0.5 + s + m) * (0.5 + s + m);
        if (std::abs(z - cand) < std::abs(z - nearest)) nearest = cand;
    }
    env.results.columns = {"s", "z_re", "z_im", "m_re", "m_im", "nearest_eigenvalue",
                           "eigenvalue_distance", "pole_proximity"};
    env.summary["nearest_eigenvalue"] = nearest;
    env.summary["eigenvalue_distance"] = distance;
    try {
        const MFunctionSample m = spectral::m_function(s, z, guard);
        std::vector<json> row{s, z_re, z_im, m.m.real(), m.m.imag(), nearest, distance, false};
        env.summary["pole_proximity"] = false;
        if (verify_quotient) {
            env.tolerances["quotient"] = tol_quotient;
            const Complex q = spectral::m_function_quotient(s, z);
            const double diff = std::abs(q - m.m);
            env.results.columns.insert(env.results.columns.end(),
                                       {"quotient_re", "quotient_im", "quotient_abs_diff"});
            row.insert(row.end(), {q.real(), q.imag(), diff});
            env.summary["quotient_abs_diff"] = diff;
            if (!(diff < tol_quotient)) env.status = "fail";
        }
        env.results.rows.push_back(row);
    } catch (const NearPoleError& e) {
        env.status = "guard";
        env.summary["pole_proximity"] = true;
        env.notes.push_back(e.what());
        env.results.rows.push_back({s, z_re, z_im, nullptr, nullptr, nearest, distance, true});
        std::cerr << "error: " << e.what() << "\n";
    }
    return emit(env, common);
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, const suites::Tolerances& tol, const Common& common) {
    const std::vector<std::string> names =
        suite == "all" ? suites::suite_names() : std::vector<std::string>{suite};
    const auto results = suites::run_many(names, tol);
    auto env = envelope("verify");
    env.params = {{"suite", suite}};
    env.tolerances = tol;
    env.results.columns = {"suite", "invariant", "value", "relation", "threshold", "passed"};
    bool all = true;
    for (const auto& res : results) {
        std::size_t failed = 0;
        for (const auto& a : res.assertions) {
            env.results.rows.push_back({a.suite, a.invariant, a.value, a.relation, a.threshold,
                                        a.passed});
            if (!a.passed) {
                ++failed;
                std::cerr << "FAIL " << a.suite << "/" << a.invariant << ": " << num(a.value)
                          << " " << a.relation << " " << num(a.threshold) << " does not hold\n";
            }
        }
        env.summary[res.name] = {{"passed", res.passed()},
                                 {"assertions", res.assertions.size()},
                                 {"failed", failed}};
        all = all && res.passed();
    }
    env.status = all ? "pass" : "fail";
    return emit(env, common);
}

// -------------------------------------------------------------- rayleigh

int cmd_rayleigh(const std::string& potential, double coef, double shift, int n_basis,
                 std::optional<double> enrich, const QuadratureSpec& quad, const Common& common) {
    RayleighProblem p;
    p.n_basis = n_basis;
    p.quadrature = quad;
    p.enrichment_eps = enrich;
    p.potential_terms = {{{parse_potential(potential), coef}, 1.0}};
    if (shift != 0.0) p.potential_terms.push_back({{PotentialKind::Constant, shift}, 1.0});
    const GEVPResult g = variational::min_rayleigh(p);

    std::string bound_label;
    double bound = 0.0;
    if (potential == "sine2") {
        bound_label = "1/4";
        bound = 0.25;
    } else if (potential == "x2") {
        bound_label = "lambda_F0/pi^2";
        bound = variational::lambda_F0() / (kPi * kPi);
    } else {
        bound_label = "4 lambda_DN0/pi^2";
        bound = 4.0 * variational::lambda_DN0() / (kPi * kPi);
    }
    auto env = envelope("rayleigh");
    env.params = {{"potential", potential},
                  {"coef", num(coef)},
                  {"shift", num(shift)},
                  {"n_basis", std::to_string(n_basis)},
                  {"nodes_per_panel", std::to_string(quad.nodes_per_panel)},
                  {"panels", std::to_string(quad.panels)}};
    if (enrich) env.params["enrich_eps"] = num(*enrich);
    env.results.columns = {"potential", "coef", "shift", "n_basis", "min_eigenvalue",
                           "residual_norm", "bound_label", "bound"};
    env.results.rows.push_back({potential, coef, shift, static_cast<long long>(n_basis),
                                g.min_eigenvalue, g.residual_norm, bound_label, bound});
    env.summary = {{"min_eigenvalue", g.min_eigenvalue},
                   {"residual_norm", g.residual_norm},
                   {"bound_label", bound_label},
                   {"bound", bound},
                   {"min_minus_bound", g.min_eigenvalue - bound}};
    return emit(env, common);
}

// ------------------------------------------------------------------ lamb

int cmd_lamb(const Common& common) {
    const BesselConstants bc = spectral::bessel_constants();
    // First positive root of the printed "+" map, for comparison.
    double lo = 3.0;
    double hi = 4.0;
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        if ((spectral::lamb_map_plus(mid) > 0.0) == (spectral::lamb_map_plus(lo) > 0.0)) lo = mid;
        else hi = mid;
    }
    auto env = envelope("lamb");
    env.results.columns = {"step", "lo", "hi"};
    for (std::size_t i = 0; i < bc.lamb_trace.size(); ++i) {
        env.results.rows.push_back(
            {static_cast<long long>(i), bc.lamb_trace[i].lo, bc.lamb_trace[i].hi});
    }
    env.summary = {{"lamb_sqrt", bc.lamb_sqrt},
                   {"lambda_DN0", bc.lambda_DN0},
                   {"j01", bc.j01},
                   {"lambda_F0", bc.lambda_F0},
                   {"lambda_F0_over_pi2", bc.lambda_F0 / (kPi * kPi)},
                   {"four_lambda_DN0_over_pi2", 4.0 * bc.lambda_DN0 / (kPi * kPi)},
                   {"plus_map_first_root", 0.5 * (lo + hi)}};
    env.notes.push_back(
        "lambda_DN0 is the square of the first positive root of J0(u) - 2u J1(u), which gives "
        "the Dirichlet condition at 0 and the Neumann condition at 1 for x^{1/2} J0(u x); the "
        "map J0(u) + 2u J1(u) has its first positive root near 3.6997 instead");
    return emit(env, common);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerics for the singular Schroedinger operator -d^2/dx^2 + (s^2 - 1/4)/sin^2 x"};
    app.set_version_flag("--version", HARDYSIN_VERSION);
    app.set_config("--config", "", "Read options from a key = value file");
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--format", common.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--output", common.output,
                   "Report file (relative paths resolve against $HARDYSIN_OUTPUT_DIR)");

    double s = 0.0;
    int n = 4;
    auto* eigs = app.add_subcommand("eigs", "Friedrichs eigenvalues [(1/2) + s + n]^2");
    eigs->add_option("--s", s, "Parameter s >= 0")->required()->check(CLI::NonNegativeNumber);
    eigs->add_option("--n", n, "Largest index n")->capture_default_str()->check(CLI::NonNegativeNumber);

    double z_re = 0.0;
    double z_im = 0.0;
    bool verify_quotient = false;
    double guard = spectral::kPoleGuard;
    double tol_quotient = 1e-5;
    auto* mfun = app.add_subcommand("mfun", "Closed-form m-function m_{0,0,s}(z)");
    mfun->add_option("--s", s, "Parameter s in [0, 1)")->required()->check(CLI::Range(0.0, 1.0));
    mfun->add_option("--z-re", z_re, "Re z")->required();
    mfun->add_option("--z-im", z_im, "Im z")->capture_default_str();
    mfun->add_flag("--verify-quotient", verify_quotient,
                   "Cross-check against -theta~(z, pi)/phi~(z, pi)");
    mfun->add_option("--tol-pole-guard", guard, "Pole guard radius")->capture_default_str();
    mfun->add_option("--tol-quotient", tol_quotient, "Quotient agreement tolerance")
        ->capture_default_str();

    std::string suite;
    suites::Tolerances tol = suites::default_tolerances();
    auto* verify = app.add_subcommand("verify", "Run an invariant suite");
    std::vector<std::string> choices = suites::suite_names();
    choices.emplace_back("all");
    verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(choices));
    for (auto& [key, value] : tol) {
        std::string flag = "--tol-" + key;
        std::replace(flag.begin(), flag.end(), '_', '-');
        verify->add_option(flag, value, "Tolerance '" + key + "'")->capture_default_str();
    }

    std::string potential;
    double coef = 0.25;
    double shift = 0.0;
    int n_basis = 200;
    std::optional<double> enrich;
    QuadratureSpec quad;
    auto* rayleigh = app.add_subcommand("rayleigh", "Minimal Rayleigh quotient in the sine basis");
    rayleigh->add_option("--potential", potential, "sine2, x2 or dist2")
        ->required()
        ->check(CLI::IsMember({"sine2", "x2", "dist2"}));
    rayleigh->add_option("--coef", coef, "Potential coefficient")->capture_default_str();
    rayleigh->add_option("--shift", shift, "Constant subtracted in the form")->capture_default_str();
    rayleigh->add_option("--n-basis", n_basis, "Number of sine modes")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    rayleigh->add_option("--enrich-eps", enrich, "Add sin(x)^{1/2 + eps} to the basis")
        ->check(CLI::Range(1e-4, 1.0));
    rayleigh->add_option("--nodes-per-panel", quad.nodes_per_panel)->capture_default_str();
    rayleigh->add_option("--panels", quad.panels)->capture_default_str();

    auto* lamb = app.add_subcommand("lamb", "Bessel-operator constants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*eigs) return cmd_eigs(s, n, common);
        if (*mfun) return cmd_mfun(s, z_re, z_im, verify_quotient, guard, tol_quotient, common);
        if (*verify) return cmd_verify(suite, tol, common);
        if (*rayleigh) return cmd_rayleigh(potential, coef, shift, n_basis, enrich, quad, common);
        if (*lamb) return cmd_lamb(common);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kGuard;
    }
    return kUsage;
}
