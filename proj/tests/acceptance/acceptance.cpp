// Acceptance run: one PASS/FAIL line per criterion, tolerances pinned below.
//
//   acceptance [--expect-fail 9,...]
//
// Exit status is 0 when the set of failing criteria equals the expected set.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hardysin/boundary_values.hpp"
#include "hardysin/closed_form.hpp"
#include "hardysin/corpus.hpp"
#include "hardysin/error.hpp"
#include "hardysin/spectral.hpp"
#include "hardysin/suites.hpp"
#include "hardysin/variational.hpp"

using namespace hardysin;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Pinned tolerances.
constexpr double kPoleTol = 1e-8;
constexpr double kPoleSeconds = 10.0;
constexpr double kWronskianTol = 1e-8;
constexpr double kWronskianSeconds = 5.0;
constexpr double kDeterminantTol = 1e-12;
constexpr double kSymmetryTol = 1e-14;
constexpr double kTrialTol = 1e-8;
constexpr double kReferenceTol = 1e-8;
constexpr double kConstantTol = 5e-4;
constexpr double kBesselZeroTol = 1e-8;
constexpr double kGapTol = 1e-9;
constexpr double kStrictGap = 1e-6;
constexpr double kIdentityTol = 1e-8;
constexpr double kAsymptoticTol = 1e-5;

// Minimal Rayleigh quotients of the 1/sin^2 form from an independent
// discretization (exact sine-basis matrices; enrichment entries by scipy
// QAWS quadrature; LAPACK generalized eigensolver).
struct Reference {
    int n;
    double sine2;
    double enriched;
};
constexpr Reference kReference[] = {
    {25, 0.40352338064848775, 0.25484293923634865},
    {50, 0.3895708903173586, 0.25482764650109435},
    {100, 0.377296950660982, 0.254811544727842},
    {200, 0.36700162993369484, 0.2547955508316112},
    {400, 0.3582435178968137, 0.254779663117628},
};
constexpr double kEnrichEps = 0.01;
constexpr double kProbeShift = 0.01;

struct Outcome {
    bool passed = false;
    std::string detail;
    std::vector<std::string> extra;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome spectrum() {
    const auto t0 = std::chrono::steady_clock::now();
    double err = 0.0;
    bool counts = true;
    for (const double s : {0.0, 0.2, 0.5, 0.8}) {
        const auto poles = spectral::scan_poles(s, 0.0, (s + 5.5) * (s + 5.5));
        const auto eig = spectral::eigenvalues(s, 4);
        if (poles.size() != eig.values.size()) {
            counts = false;
            continue;
        }
        for (std::size_t n = 0; n < poles.size(); ++n) {
            err = std::max(err, std::fabs(poles[n] - eig.values[n]));
        }
    }
    const double t = seconds_since(t0);
    return {counts && err < kPoleTol && t < kPoleSeconds,
            "max |pole - [(1/2)+s+n]^2| = " + fmt(err) + " < " + fmt(kPoleTol) +
                (counts ? "" : ", pole count mismatch") + "; " + fmt(t) + " s < " +
                fmt(kPoleSeconds) + " s",
            {}};
}

Outcome wronskian() {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<double> grid;
    for (int i = 1; i <= 20; ++i) grid.push_back(kPi * i / 21.0);
    double w = 0.0;
    for (const double s : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9}) {
        for (const Complex z : {Complex{0.0, 0.0}, Complex{1.0, 0.0}, Complex{2.0, 1.0},
                                Complex{-3.0, 0.0}, Complex{10.0, -4.0}}) {
            for (const Complex v : closed_form::wronskian_y(SpectralParam::make(s), z, grid)) {
                w = std::max(w, std::abs(v + 1.0));
            }
        }
    }
    const double t = seconds_since(t0);
    return {w < kWronskianTol && t < kWronskianSeconds,
            "max |W + 1| = " + fmt(w) + " < " + fmt(kWronskianTol) + " over 6 s x 5 z x 20 x; " +
                fmt(t) + " s < " + fmt(kWronskianSeconds) + " s",
            {}};
}

Outcome boundary_table() {
    double det = 0.0;
    double sym = 0.0;
    for (const double s : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9}) {
        for (const Complex z : {Complex{0.0, 0.0}, Complex{1.0, 0.0}, Complex{2.0, 1.0},
                                Complex{-3.0, 0.0}, Complex{10.0, -4.0}}) {
            const BoundaryTable t = closed_form::boundary_table(SpectralParam::make(s), z);
            det = std::max(det, std::abs(t.determinant() + 1.0));
            sym = std::max({sym, std::abs(t.y1_pi + t.y1_0), std::abs(t.y1p_pi - t.y1p_0),
                            std::abs(t.y2_pi - t.y2_0), std::abs(t.y2p_pi + t.y2p_0)});
        }
    }
    return {det < kDeterminantTol && sym < kSymmetryTol,
            "|det + 1| = " + fmt(det) + " < " + fmt(kDeterminantTol) + ", symmetry defect " +
                fmt(sym) + " < " + fmt(kSymmetryTol),
            {}};
}

RayleighProblem sine2_problem(int n) {
    RayleighProblem p;
    p.n_basis = n;
    p.potential_terms = {{{PotentialKind::InverseSine2, 0.25}, 1.0}};
    return p;
}

Outcome hardy_refinement() {
    bool above = true;
    bool decreasing = true;
    double ref_err = 0.0;
    double prev = kInf;
    double probe = kInf;
    std::ostringstream minima;
    std::ostringstream probes;
    for (const Reference& r : kReference) {
        const double m = variational::min_rayleigh(sine2_problem(r.n)).min_eigenvalue;
        above = above && m > 0.25;
        decreasing = decreasing && m < prev;
        prev = m;
        ref_err = std::max(ref_err, std::fabs(m - r.sine2));
        minima << " N=" << r.n << ":" << fmt(m);

        RayleighProblem e = sine2_problem(r.n);
        e.enrichment_eps = kEnrichEps;
        const double em = variational::min_rayleigh(e).min_eigenvalue;
        ref_err = std::max(ref_err, std::fabs(em - r.enriched));
        e.potential_terms.push_back({{PotentialKind::Constant, 0.25 + kProbeShift}, 1.0});
        const double pm = variational::min_rayleigh(e).min_eigenvalue;
        probe = std::min(probe, pm);
        probes << " N=" << r.n << ":" << fmt(pm);
    }
    double trial = 0.0;
    for (const double eps : {0.5, 0.1, 0.01}) {
        const auto [quad, closed] = variational::trial_quotient(eps);
        trial = std::max(trial, std::fabs(quad - closed));
    }
    const bool ok = above && decreasing && ref_err < kReferenceTol && trial < kTrialTol && probe < 0.0;
    return {ok,
            std::string("minima > 1/4: ") + (above ? "yes" : "no") +
                ", strictly decreasing: " + (decreasing ? "yes" : "no") +
                ", |min - reference| = " + fmt(ref_err) + " < " + fmt(kReferenceTol) +
                ", |trial - (1/4 + eps/2)| = " + fmt(trial) + " < " + fmt(kTrialTol) +
                ", shifted probe min = " + fmt(probe) + " < 0",
            {"sine basis minima:" + minima.str(),
             "probe (basis + sin^{1/2+" + fmt(kEnrichEps) + "}, constant 1/4+" + fmt(kProbeShift) +
                 "):" + probes.str()}};
}

Outcome constants() {
    const BesselConstants bc = spectral::bessel_constants();
    const double dn = std::fabs(bc.lambda_DN0 - 0.885);
    const double f0 = std::fabs(bc.lambda_F0 - 5.783);
    const double j = std::fabs(bc.lambda_F0 - bc.j01 * bc.j01);
    // First zero of J0, independent of the bisection above.
    const double jref = std::fabs(bc.lambda_F0 - 2.404825557695773 * 2.404825557695773);
    return {dn <= kConstantTol && f0 <= kConstantTol && j < kBesselZeroTol && jref < kBesselZeroTol,
            "lambda_DN0 = " + fmt(bc.lambda_DN0) + " (off " + fmt(dn) + "), lambda_F0 = " +
                fmt(bc.lambda_F0) + " (off " + fmt(f0) + ") within " + fmt(kConstantTol) +
                "; |lambda_F0 - j01^2| = " + fmt(jref) + " < " + fmt(kBesselZeroTol),
            {}};
}

Outcome strictness() {
    using V = InequalityVariant;
    double min_gap = kInf;
    double min_normalized = kInf;
    int evaluated = 0;
    int skipped = 0;
    const auto fs = corpus::load();
    for (const TestFunction& f : fs) {
        const double n2 = variational::norm_squared(f);
        for (const V v : {V::InverseX2, V::InverseDist2, V::Sine2PlusQuarter, V::X2PlusBessel, V::Dist2PlusMixedBessel, V::X2LeftVanishing}) {
            try {
                const double gap = variational::inequality_gap(f, v);
                min_gap = std::min(min_gap, gap);
                min_normalized = std::min(min_normalized, gap / n2);
                ++evaluated;
            } catch (const AdmissibilityError&) {
                ++skipped;
            }
        }
    }
    return {fs.size() == 12 && min_gap >= -kGapTol && min_normalized > kStrictGap,
            "min gap = " + fmt(min_gap) + " >= -" + fmt(kGapTol) + ", min gap/||f||^2 = " +
                fmt(min_normalized) + " > " + fmt(kStrictGap) + " (" + std::to_string(evaluated) +
                " pairs, " + std::to_string(skipped) + " inadmissible)",
            {}};
}

Outcome completion_identities_check() {
    struct Window {
        double r0, r1, R;
    };
    const Window windows[] = {{0.1, 3.0, 4.0}, {0.05, 1.5, 3.5}, {0.5, 3.1, 10.0}};
    auto fs = corpus::load();
    double b10 = 0.0;
    double b11 = 0.0;
    double b9 = kInf;
    for (const TestFunction& f : fs) {
        for (const double s : {0.0, 0.3, 0.7}) {
            for (const Window& w : windows) {
                const auto a = variational::completion_identities(f, s, w.r0, w.r1, w.R);
                b10 = std::max(b10, a.log_residual);
                b11 = std::max(b11, a.power_residual);
                b9 = std::min(b9, a.combined_gap);
            }
        }
    }
    fs.push_back(corpus::make("sqrt_log", {}, "sqrt_log"));
    int bound_fail = 0;
    int monotone_fail = 0;
    int checked = 0;
    for (const TestFunction& f : fs) {
        if (!f.vanishes_at_0) continue;
        for (const double s : {0.0, 0.3}) {
            const LimitReport lr = variational::limit_checks(f, s, 4.0);
            ++checked;
            if (!lr.bound_holds) ++bound_fail;
            if (!lr.log_decreasing || !lr.sqrt_decreasing) ++monotone_fail;
        }
    }
    return {b10 < kIdentityTol && b11 < kIdentityTol && b9 >= -kGapTol && bound_fail == 0 &&
                monotone_fail == 0,
            "log-weight residual " + fmt(b10) + ", power-weight residual " + fmt(b11) + " < " +
                fmt(kIdentityTol) + ", combined bound gap " + fmt(b9) + " >= -" + fmt(kGapTol) +
                ", energy bound failures " + std::to_string(bound_fail) + ", non-monotone quotients " +
                std::to_string(monotone_fail) + " of " + std::to_string(checked),
            {}};
}

Outcome asymptotics() {
    using namespace closed_form;
    const std::vector<double> xs{1e-2, 1e-3, 1e-4};
    double worst = 0.0;
    std::ostringstream per;
    for (const double s : {0.0, 0.25, 0.75}) {
        const SpectralParam sp = SpectralParam::make(s);
        const auto pr = second_order_coefficient(
            [&](double x) { return eval_principal_0(sp, x).value.real() / std::pow(x, 0.5 + s); },
            xs, false);
        SecondOrderEstimate np;
        if (s > 0.0) {
            np = second_order_coefficient(
                [&](double x) {
                    return eval_nonprincipal_0(sp, x).value.real() / (std::pow(x, 0.5 - s) / (2.0 * s));
                },
                xs, false);
        } else {
            const double K = log_solution_offset();
            np = second_order_coefficient(
                [&](double x) {
                    return (eval_nonprincipal_0(sp, x).value.real() -
                            K * eval_principal_0(sp, x).value.real()) /
                           (std::sqrt(x) * std::log(1.0 / x));
                },
                xs, true);
        }
        const double ep = std::fabs(pr.coefficient - asymptotic_coefficient(true, s));
        const double en = std::fabs(np.coefficient - asymptotic_coefficient(false, s));
        worst = std::max({worst, ep, en});
        per << " s=" << s << ":" << fmt(ep) << "/" << fmt(en);
    }
    return {worst < kAsymptoticTol,
            "max |c - (4s^2-1)/(48 +- 48s)| = " + fmt(worst) + " < " + fmt(kAsymptoticTol),
            {"principal/nonprincipal errors:" + per.str()}};
}

Outcome special_functions() {
    const suites::SuiteResult r = suites::run("specfun");
    bool ok = true;
    std::ostringstream d;
    std::vector<std::string> extra;
    for (const auto& a : r.assertions) {
        // The connection-model line is a diagnostic beyond the stated invariants.
        if (a.invariant == "gauss_connection_model_rel") {
            extra.push_back("diagnostic " + a.invariant + " = " + fmt(a.value) + " " + a.relation +
                            " " + fmt(a.threshold) + (a.passed ? " (ok)" : " (violated)"));
            continue;
        }
        ok = ok && a.passed;
        d << (d.tellp() > 0 ? ", " : "") << a.invariant << " " << fmt(a.value)
          << (a.passed ? "" : " [over " + fmt(a.threshold) + "]");
    }
    return {ok, d.str(), extra};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hardysin acceptance criteria"};
    std::vector<int> expected;
    app.add_option("--expect-fail", expected, "Criteria known to fail")->delimiter(',');
    CLI11_PARSE(app, argc, argv);

    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "spectrum reproduction", spectrum},
        {2, "Wronskian identity", wronskian},
        {3, "boundary table determinant and symmetries", boundary_table},
        {4, "Hardy refinement", hardy_refinement},
        {5, "Bessel constants", constants},
        {6, "inequality strictness", strictness},
        {7, "square-completion identities", completion_identities_check},
        {8, "endpoint asymptotics", asymptotics},
        {9, "special-function identities", special_functions},
    };

    std::set<int> failed;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const Error& e) {
            o = {false, std::string("error: ") + e.what(), {}};
        }
        if (!o.passed) failed.insert(c.id);
        std::printf("%s  criterion %d  %s: %s  [%.1f s]\n", o.passed ? "PASS" : "FAIL", c.id,
                    c.title, o.detail.c_str(), seconds_since(t0));
        for (const auto& line : o.extra) std::printf("      %s\n", line.c_str());
        std::fflush(stdout);
    }

    const std::set<int> want(expected.begin(), expected.end());
    std::printf("%zu of %zu criteria pass", criteria.size() - failed.size(), criteria.size());
    if (!want.empty()) {
        std::printf("; expected failures:");
        for (const int id : want) std::printf(" %d", id);
    }
    std::printf("\n");
    return failed == want ? 0 : 1;
}
