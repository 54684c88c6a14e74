#include "hardysin/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <random>
#include <sstream>

#include "hardysin/boundary_values.hpp"
#include "hardysin/closed_form.hpp"
#include "hardysin/corpus.hpp"
#include "hardysin/error.hpp"
#include "hardysin/spectral.hpp"
#include "hardysin/variational.hpp"

namespace hardysin::suites {
namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr double kInf = std::numeric_limits<double>::infinity();

class Recorder {
public:
    Recorder(std::string suite, const Tolerances& tol) : tol_(tol) { result_.name = std::move(suite); }

    double tol(const std::string& key) const {
        const auto it = tol_.find(key);
        if (it == tol_.end()) throw DomainError("unknown tolerance key '" + key + "'");
        return it->second;
    }

    void check(const std::string& invariant, double value, const std::string& relation,
               double threshold) {
        bool ok = false;
        if (relation == "<") ok = value < threshold;
        else if (relation == "<=") ok = value <= threshold;
        else if (relation == ">") ok = value > threshold;
        else if (relation == ">=") ok = value >= threshold;
        result_.assertions.push_back({result_.name, invariant, value, relation, threshold, ok});
    }

    // value < tol(key)
    void below(const std::string& invariant, double value, const std::string& key) {
        check(invariant, value, "<", tol(key));
    }

    SuiteResult take() { return std::move(result_); }

private:
    const Tolerances& tol_;
    SuiteResult result_;
};

std::string report_name(double s) {
    std::ostringstream out;
    out << s;
    return out.str();
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Random complex sample away from the integers.
std::vector<Complex> gamma_sample(std::mt19937_64& rng, int count) {
    std::uniform_real_distribution<double> re(-10.0, 10.0);
    std::uniform_real_distribution<double> im(-3.0, 3.0);
    std::vector<Complex> out;
    while (static_cast<int>(out.size()) < count) {
        const Complex z{re(rng), im(rng)};
        if (std::abs(z - std::round(z.real())) < 0.05) continue;
        out.push_back(z);
    }
    return out;
}

// ---------------------------------------------------------------- specfun

SuiteResult run_specfun(const Tolerances& tol) {
    using namespace specfun;
    Recorder r("specfun", tol);
    std::mt19937_64 rng(kSeed);
    const auto zs = gamma_sample(rng, 200);

    double refl = 0.0;
    double drefl = 0.0;
    double grec = 0.0;
    double drec = 0.0;
    for (const Complex z : zs) {
        const Complex target = kPi / sin_pi(z);
        refl = std::max(refl, std::abs(gamma(z) * gamma(1.0 - z) - target) / std::abs(target));
        drefl = std::max(drefl, std::abs(digamma(1.0 - z) - digamma(z) - kPi * cot_pi(z)));
        const Complex g1 = gamma(z + 1.0);
        grec = std::max(grec, std::abs(g1 - z * gamma(z)) / std::abs(g1));
        const Complex d1 = digamma(z + 1.0);
        drec = std::max(drec, std::abs(d1 - digamma(z) - 1.0 / z) / std::max(1.0, std::abs(d1)));
    }
    r.below("gamma_reflection_rel", refl, "reflection");
    r.below("digamma_reflection_abs", drefl, "digamma_reflection");
    r.below("gamma_recurrence_rel", grec, "recurrence");
    r.below("digamma_recurrence_rel", drec, "recurrence");

    // Gauss value at x = 1 - 1e-6 against Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)).
    std::uniform_real_distribution<double> pre(-1.5, 1.5);
    std::uniform_real_distribution<double> pim(-0.5, 0.5);
    std::uniform_real_distribution<double> gap(0.2, 2.0);
    SeriesConfig near_one;
    near_one.max_terms = 200'000'000;
    near_one.target_rel_err = 1e-12;
    const double t = 1e-6;
    double gauss = 0.0;
    double corrected = 0.0;
    for (int i = 0; i < 50; ++i) {
        const Complex a{pre(rng), pim(rng)};
        const Complex b{pre(rng), pim(rng)};
        const double delta = gap(rng);
        const Complex c = a + b + delta;
        const Complex f = hyp2f1_series(a, b, c, 1.0 - t, near_one);
        const Complex g1 = gamma(c) * rgamma(c - a) * rgamma(c - b) * gamma(Complex{delta, 0.0});
        gauss = std::max(gauss, rel(f, g1));
        // Two leading terms of each half of the x -> 1 - x connection formula.
        const Complex g2 = gamma(c) * gamma(Complex{-delta, 0.0}) * rgamma(a) * rgamma(b);
        const Complex model = g1 * (1.0 + a * b / (1.0 - delta) * t) +
                              g2 * std::pow(t, delta) * (1.0 + (c - a) * (c - b) / (1.0 + delta) * t);
        corrected = std::max(corrected, rel(f, model));
    }
    r.below("gauss_limit_rel", gauss, "gauss_limit");
    r.below("gauss_connection_model_rel", corrected, "gauss_model");

    // d/dx 2F1 against a 4th-order central difference.
    std::uniform_real_distribution<double> cre(0.5, 2.5);
    double diff = 0.0;
    const double h = 1e-3;
    for (int i = 0; i < 6; ++i) {
        const Complex a{pre(rng), pim(rng)};
        const Complex b{pre(rng), pim(rng)};
        const Complex c{cre(rng), pim(rng)};
        for (const double x : {0.1, 0.3, 0.45}) {
            const auto F = [&](double y) { return hyp2f1_series(a, b, c, y); };
            const Complex fd =
                (-F(x + 2 * h) + 8.0 * F(x + h) - 8.0 * F(x - h) + F(x - 2 * h)) / (12.0 * h);
            diff = std::max(diff, rel(hyp2f1_derivative(a, b, c, x), fd));
        }
    }
    r.below("hyp2f1_derivative_vs_fd", diff, "differentiation");
    return r.take();
}

// ------------------------------------------------------------- closedform

SuiteResult run_closedform(const Tolerances& tol) {
    using namespace closed_form;
    Recorder r("closedform", tol);
    const std::vector<double> svals{0.0, 0.1, 0.25, 0.5, 0.75, 0.9};
    const std::vector<Complex> zvals{{0.0, 0.0}, {1.0, 0.0}, {2.0, 1.0}, {-3.0, 0.0}};

    std::vector<double> grid;
    for (int i = 1; i <= 20; ++i) grid.push_back(kPi * i / 21.0);
    double w = 0.0;
    double det = 0.0;
    double sym = 0.0;
    for (const double s : svals) {
        const SpectralParam sp = SpectralParam::make(s);
        for (const Complex z : zvals) {
            for (const Complex v : wronskian_y(sp, z, grid)) w = std::max(w, std::abs(v + 1.0));
            const BoundaryTable t = boundary_table(sp, z);
            det = std::max(det, std::abs(t.determinant() + 1.0));
            sym = std::max({sym, std::abs(t.y1_pi + t.y1_0), std::abs(t.y1p_pi - t.y1p_0),
                            std::abs(t.y2_pi - t.y2_0), std::abs(t.y2p_pi + t.y2p_0)});
        }
    }
    r.below("wronskian_max_abs", w, "wronskian");
    r.below("table_determinant_abs", det, "determinant");
    r.below("table_symmetry_abs", sym, "symmetry");

    // ODE residual by a 5-point stencil.
    double ode = 0.0;
    const double h = 1e-3;
    for (const double s : {0.0, 0.3, 0.7}) {
        const SpectralParam sp = SpectralParam::make(s);
        for (const Complex z : {Complex{1.0, 0.0}, Complex{2.0, 1.0}}) {
            for (const SolutionKind kind : {SolutionKind::Y1, SolutionKind::Y2, SolutionKind::Phi,
                                            SolutionKind::Theta, SolutionKind::PrincipalAt0,
                                            SolutionKind::NonprincipalAt0,
                                            SolutionKind::PrincipalAtPi,
                                            SolutionKind::NonprincipalAtPi}) {
                const bool zero_energy = kind == SolutionKind::PrincipalAt0 ||
                                         kind == SolutionKind::NonprincipalAt0 ||
                                         kind == SolutionKind::PrincipalAtPi ||
                                         kind == SolutionKind::NonprincipalAtPi;
                const Complex energy = zero_energy ? Complex{0.0, 0.0} : z;
                for (int i = 0; i <= 10; ++i) {
                    const double x = 0.2 + (kPi - 0.4) * i / 10.0;
                    const auto y = [&](double xx) { return evaluate(kind, sp, z, xx).value; };
                    const Complex y0 = y(x);
                    const Complex d2 = (-y(x + 2 * h) + 16.0 * y(x + h) - 30.0 * y0 +
                                        16.0 * y(x - h) - y(x - 2 * h)) /
                                       (12.0 * h * h);
                    const Complex res = -d2 + (potential(s, x) - energy) * y0;
                    ode = std::max(ode, std::abs(res) / std::max(1.0, std::abs(y0)));
                }
            }
        }
    }
    r.below("ode_residual_rel", ode, "ode_residual");

    // Branch seams at sin^2 x = 1/2.
    double seam_v = 0.0;
    double seam_d = 0.0;
    for (const double s : {0.0, 0.25, 0.5, 0.75}) {
        const SpectralParam sp = SpectralParam::make(s);
        const Branch edge = s == 0.0 ? Branch::LogSeries : Branch::EndpointSeries;
        for (const Complex z : {Complex{0.0, 0.0}, Complex{1.0, 0.0}, Complex{2.0, 1.0}}) {
            for (const int j : {1, 2}) {
                for (const double x : {kPi / 4.0, 3.0 * kPi / 4.0}) {
                    const SolutionEval a = eval_y(j, sp, z, x, Branch::MidpointSeries);
                    const SolutionEval b = eval_y(j, sp, z, x, edge);
                    seam_v = std::max(seam_v, std::abs(a.value - b.value));
                    seam_d = std::max(seam_d, std::abs(a.derivative - b.derivative));
                }
            }
        }
    }
    r.below("seam_value_abs", seam_v, "seam_value");
    r.below("seam_derivative_abs", seam_d, "seam_derivative");

    // Second-order coefficients of the endpoint asymptotics.
    const std::vector<double> xs{1e-2, 1e-3, 1e-4};
    for (const double s : {0.0, 0.25, 0.75}) {
        const SpectralParam sp = SpectralParam::make(s);
        const double q = 0.5 + s;
        const auto pr = second_order_coefficient(
            [&](double x) { return eval_principal_0(sp, x).value.real() / std::pow(x, q); }, xs,
            false);
        r.below("asymptotic_principal_s" + report_name(s),
                std::fabs(pr.coefficient - asymptotic_coefficient(true, s)), "asymptotic");
        SecondOrderEstimate np;
        if (s > 0.0) {
            np = second_order_coefficient(
                [&](double x) {
                    return eval_nonprincipal_0(sp, x).value.real() /
                           (std::pow(x, 0.5 - s) / (2.0 * s));
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
        r.below("asymptotic_nonprincipal_s" + report_name(s),
                std::fabs(np.coefficient - asymptotic_coefficient(false, s)), "asymptotic");
    }

    // Generalized boundary values of y1, y2 against the closed-form table.
    double bv = 0.0;
    for (const double s : {0.2, 0.5, 0.8}) {
        const SpectralParam sp = SpectralParam::make(s);
        for (const Complex z : {Complex{0.0, 0.0}, Complex{1.3, 0.0}}) {
            const BoundaryTable t = boundary_table(sp, z);
            const GeneralizedBV b1 = extract_bv([&](double x) { return eval_y(1, sp, z, x).value; }, sp);
            const GeneralizedBV b2 = extract_bv([&](double x) { return eval_y(2, sp, z, x).value; }, sp);
            bv = std::max({bv, std::abs(b1.g0 - t.y1_0), std::abs(b1.g0p - t.y1p_0),
                           std::abs(b1.gpi - t.y1_pi), std::abs(b1.gpip - t.y1p_pi),
                           std::abs(b2.g0 - t.y2_0), std::abs(b2.g0p - t.y2p_0),
                           std::abs(b2.gpi - t.y2_pi), std::abs(b2.gpip - t.y2p_pi)});
        }
    }
    r.below("bv_table_consistency_abs", bv, "bv_consistency");

    // Linearity of the extraction.
    {
        const SpectralParam sp = SpectralParam::make(0.5);
        const Complex z{1.3, 0.0};
        const Complex alpha{0.7, -0.4};
        const Complex beta{-1.2, 0.9};
        const auto f = [&](double x) { return eval_y(1, sp, z, x).value; };
        const auto g = [&](double x) { return eval_y(2, sp, z, x).value; };
        const GeneralizedBV bf = extract_bv(f, sp);
        const GeneralizedBV bg = extract_bv(g, sp);
        const GeneralizedBV bl =
            extract_bv([&](double x) { return alpha * f(x) + beta * g(x); }, sp);
        const double lin = std::max({std::abs(bl.g0 - (alpha * bf.g0 + beta * bg.g0)),
                                     std::abs(bl.g0p - (alpha * bf.g0p + beta * bg.g0p)),
                                     std::abs(bl.gpi - (alpha * bf.gpi + beta * bg.gpi)),
                                     std::abs(bl.gpip - (alpha * bf.gpip + beta * bg.gpip))});
        r.below("bv_linearity_abs", lin, "bv_linearity");
    }

    // Limit quotients of principal solutions along the extraction sequence.
    {
        const SpectralParam s0 = SpectralParam::make(0.0);
        const SpectralParam s3 = SpectralParam::make(0.3);
        double rises_log = 0.0;
        double rises_sqrt = 0.0;
        double prev_log = kInf;
        double prev_sqrt = kInf;
        for (int k = 0; k < 8; ++k) {
            const double x = 1e-2 * std::ldexp(1.0, -k);
            const double ql = std::abs(eval_principal_0(s0, x).value) / std::sqrt(x * std::log(kPi / x));
            const double qs = std::abs(eval_principal_0(s3, x).value) / std::sqrt(x);
            if (ql > prev_log) rises_log += 1.0;
            if (qs > prev_sqrt) rises_sqrt += 1.0;
            prev_log = ql;
            prev_sqrt = qs;
        }
        r.check("log_quotient_increases_s0", rises_log, "<=", 0.0);
        r.check("sqrt_quotient_increases_s0.3", rises_sqrt, "<=", 0.0);
    }
    return r.take();
}

// --------------------------------------------------------------- spectral

SuiteResult run_spectral(const Tolerances& tol) {
    Recorder r("spectral", tol);
    double pole_err = 0.0;
    double count_mismatch = 0.0;
    double residue_flips = 0.0;
    for (const double s : {0.0, 0.2, 0.5, 0.8}) {
        const auto poles = spectral::scan_poles(s, 0.0, (s + 5.5) * (s + 5.5));
        const auto eig = spectral::eigenvalues(s, 4);
        if (poles.size() != eig.values.size()) {
            count_mismatch += 1.0;
            continue;
        }
        for (std::size_t n = 0; n < poles.size(); ++n) {
            pole_err = std::max(pole_err, std::fabs(poles[n] - eig.values[n]));
            // (z - lambda_n) m(z) on both sides of the pole: same sign, negative.
            const double d = 1e-5;
            const double right = d * spectral::m_function(s, eig.values[n] + d).m.real();
            const double left = -d * spectral::m_function(s, eig.values[n] - d).m.real();
            if (!(right < 0.0 && left < 0.0)) residue_flips += 1.0;
        }
    }
    r.check("pole_count_mismatches", count_mismatch, "<=", 0.0);
    r.below("pole_vs_eigenvalue_abs", pole_err, "eigenvalue");
    r.check("residue_sign_flips", residue_flips, "<=", 0.0);

    std::mt19937_64 rng(kSeed + 1);
    std::uniform_real_distribution<double> zre(-5.0, 40.0);
    std::uniform_real_distribution<double> zim(0.1, 5.0);
    std::uniform_real_distribution<double> sd(0.0, 0.95);
    double conj = 0.0;
    std::vector<Complex> upper;
    for (int i = 0; i < 50; ++i) {
        const double s = i % 5 == 0 ? 0.0 : sd(rng);
        const Complex z{zre(rng), zim(rng)};
        upper.push_back(z);
        conj = std::max(conj, std::abs(spectral::m_function(s, std::conj(z)).m -
                                       std::conj(spectral::m_function(s, z).m)));
    }
    r.below("conjugate_symmetry_abs", conj, "conjugate");
    double herglotz_failures = 0.0;
    for (const double s : {0.0, 0.3, 0.8}) {
        if (!spectral::herglotz_check(s, upper)) herglotz_failures += 1.0;
    }
    r.check("herglotz_failures", herglotz_failures, "<=", 0.0);

    double quotient = 0.0;
    for (const double s : {0.0, 0.3}) {
        const auto eig = spectral::eigenvalues(s, 1);
        for (int k = 1; k <= 5; ++k) {
            const double z = eig.values[0] + (eig.values[1] - eig.values[0]) * k / 6.0;
            const Complex closed = spectral::m_function(s, z).m;
            quotient = std::max(quotient, rel(spectral::m_function_quotient(s, z), closed));
        }
    }
    r.below("m_closed_vs_quotient_rel", quotient, "quotient");

    const BesselConstants bc = spectral::bessel_constants();
    r.below("lambda_DN0_vs_0.885", std::fabs(bc.lambda_DN0 - 0.885), "constant");
    r.below("lambda_F0_vs_5.783", std::fabs(bc.lambda_F0 - 5.783), "constant");
    r.below("lambda_F0_vs_j01_squared", std::fabs(bc.lambda_F0 - 2.404825557695773 * 2.404825557695773),
            "bessel_zero");
    r.check("lamb_root_lower", bc.lamb_sqrt, ">", 0.9);
    r.check("lamb_root_upper", bc.lamb_sqrt, "<", 1.0);

    // K0 map on a combination of f0-type functions: K0 = 2 - 0.5.
    {
        const double x = 1e-8;
        const auto a = spectral::f0_eval(bc.lambda_DN0, x);
        const auto b = spectral::f0_eval(bc.lambda_F0, x);
        const double f = 2.0 * a.first - 0.5 * b.first;
        const double df = 2.0 * a.second - 0.5 * b.second;
        r.below("K0_value_limit_abs", std::fabs(f / std::sqrt(x) - 1.5), "k0_limit");
        r.below("K0_derivative_limit_abs", std::fabs(std::sqrt(x) * df - 0.75), "k0_limit");
    }
    return r.take();
}

// ------------------------------------------------------------------ hardy

RayleighProblem sine_problem(int n, PotentialKind kind) {
    RayleighProblem p;
    p.n_basis = n;
    p.potential_terms = {{{kind, 0.25}, 1.0}};
    return p;
}

SuiteResult run_hardy(const Tolerances& tol) {
    Recorder r("hardy", tol);
    const std::vector<int> sizes{25, 50, 100, 200, 400};
    const double bound_F = variational::lambda_F0() / (kPi * kPi);
    const double bound_DN = 4.0 * variational::lambda_DN0() / (kPi * kPi);
    const double margin = r.tol("bessel_margin");

    double prev_sin = kInf;
    double prev_x2 = kInf;
    double prev_d2 = kInf;
    double rises = 0.0;
    double worst_residual = 0.0;
    double min_sin400 = 0.0;
    double probe = kInf;
    double enriched400 = 0.0;
    for (const int n : sizes) {
        const GEVPResult g = variational::min_rayleigh(sine_problem(n, PotentialKind::InverseSine2));
        r.check("gevp_min_sine2_N" + std::to_string(n), g.min_eigenvalue, ">", 0.25);
        if (!(g.min_eigenvalue < prev_sin)) rises += 1.0;
        prev_sin = g.min_eigenvalue;
        worst_residual = std::max(worst_residual, g.residual_norm / std::fabs(g.min_eigenvalue));
        min_sin400 = g.min_eigenvalue;

        const GEVPResult gx = variational::min_rayleigh(sine_problem(n, PotentialKind::InverseX2));
        r.check("gevp_min_x2_N" + std::to_string(n), gx.min_eigenvalue, ">", bound_F - margin);
        if (!(gx.min_eigenvalue < prev_x2)) rises += 1.0;
        prev_x2 = gx.min_eigenvalue;

        const GEVPResult gd =
            variational::min_rayleigh(sine_problem(n, PotentialKind::InverseDistance2));
        r.check("gevp_min_dist2_N" + std::to_string(n), gd.min_eigenvalue, ">", bound_DN - margin);
        if (!(gd.min_eigenvalue < prev_d2)) rises += 1.0;
        prev_d2 = gd.min_eigenvalue;

        RayleighProblem shifted = sine_problem(n, PotentialKind::InverseSine2);
        shifted.enrichment_eps = 0.01;
        enriched400 = variational::min_rayleigh(shifted).min_eigenvalue;
        shifted.potential_terms.push_back({{PotentialKind::Constant, 0.25 + 0.01}, 1.0});
        probe = std::min(probe, variational::min_rayleigh(shifted).min_eigenvalue);
    }
    r.check("gevp_minima_non_decreasing_steps", rises, "<=", 0.0);
    r.below("gevp_residual_rel", worst_residual, "residual");
    r.check("sandwich_pure_sine_N400", min_sin400, "<", r.tol("sandwich_upper"));
    r.check("sandwich_enriched_N400", enriched400, "<", r.tol("sandwich_upper"));
    r.check("sandwich_enriched_N400_lower", enriched400, ">", 0.25);
    r.check("shifted_constant_probe_min", probe, "<", 0.0);

    double trial = 0.0;
    for (const double eps : {0.5, 0.1, 0.01}) {
        const auto [quad, closed] = variational::trial_quotient(eps);
        trial = std::max(trial, std::fabs(quad - closed));
    }
    r.below("trial_quotient_vs_closed", trial, "trial");

    std::vector<double> grid;
    for (int i = 1; i < 10000; ++i) grid.push_back(kPi * i / 10000.0);
    const ChainReport chain = variational::comparison_chain(grid);
    r.check("chain_sin_minus_d", chain.max_sin_minus_d, "<=", 0.0);
    r.check("chain_d_minus_x", chain.max_d_minus_x, "<=", 0.0);
    r.check("chain_invx2_minus_invd2", chain.max_invx2_minus_invd2, "<=", 0.0);
    r.check("chain_invd2_minus_invsin2", chain.max_invd2_minus_invsin2, "<=", 0.0);

    double min_gap = kInf;
    double min_normalized = kInf;
    using V = InequalityVariant;
    for (const TestFunction& f : corpus::load()) {
        const double n2 = variational::norm_squared(f);
        for (const V v : {V::InverseX2, V::InverseDist2, V::Sine2PlusQuarter, V::X2PlusMixedBessel, V::X2PlusBessel,
                          V::Dist2PlusMixedBessel, V::X2LeftVanishing}) {
            double gap = 0.0;
            try {
                gap = variational::inequality_gap(f, v);
            } catch (const AdmissibilityError&) {
                continue;
            }
            min_gap = std::min(min_gap, gap);
            min_normalized = std::min(min_normalized, gap / n2);
        }
    }
    r.check("corpus_min_gap", min_gap, ">=", -r.tol("gap"));
    r.check("corpus_min_normalized_gap", min_normalized, ">", r.tol("strict_gap"));
    return r.take();
}

// ------------------------------------------------------------- identities

SuiteResult run_identities(const Tolerances& tol) {
    Recorder r("identities", tol);
    struct Window {
        double r0, r1, R;
    };
    const std::vector<Window> windows{{0.1, 3.0, 4.0}, {0.05, 1.5, 3.5}, {0.5, 3.1, 10.0}};
    std::vector<TestFunction> fs = corpus::load();
    double b10 = 0.0;
    double b11 = 0.0;
    double b9 = kInf;
    double rhs = kInf;
    for (const TestFunction& f : fs) {
        for (const double s : {0.0, 0.3, 0.7}) {
            for (const Window& w : windows) {
                const CompletionIdentities a = variational::completion_identities(f, s, w.r0, w.r1, w.R);
                b10 = std::max(b10, a.log_residual);
                b11 = std::max(b11, a.power_residual);
                b9 = std::min(b9, a.combined_gap);
                rhs = std::min({rhs, a.log_value, a.power_value});
            }
        }
    }
    r.below("log_identity_residual_abs", b10, "identity");
    r.below("power_identity_residual_abs", b11, "identity");
    r.check("combined_bound_min_gap", b9, ">=", -r.tol("gap"));
    r.check("identity_min_value", rhs, ">=", -r.tol("gap"));

    fs.push_back(corpus::make("sqrt_log", {}, "sqrt_log"));
    double bound_failures = 0.0;
    double monotone_failures = 0.0;
    for (const TestFunction& f : fs) {
        if (!f.vanishes_at_0) continue;
        for (const double s : {0.0, 0.3}) {
            const LimitReport lr = variational::limit_checks(f, s, 4.0);
            if (!lr.bound_holds) bound_failures += 1.0;
            if (!lr.log_decreasing || !lr.sqrt_decreasing) monotone_failures += 1.0;
        }
    }
    r.check("energy_bound_failures", bound_failures, "<=", 0.0);
    r.check("limit_quotient_monotone_failures", monotone_failures, "<=", 0.0);
    return r.take();
}

}  // namespace

bool SuiteResult::passed() const {
    return std::all_of(assertions.begin(), assertions.end(),
                       [](const Assertion& a) { return a.passed; });
}

Tolerances default_tolerances() {
    return {
        {"reflection", 1e-10},     {"digamma_reflection", 1e-10},
        {"recurrence", 1e-11},     {"gauss_limit", 1e-4},
        {"gauss_model", 1e-8},     {"differentiation", 1e-8},
        {"wronskian", 1e-8},       {"determinant", 1e-12},
        {"symmetry", 1e-14},       {"ode_residual", 1e-5},
        {"seam_value", 1e-9},      {"seam_derivative", 1e-7},
        {"asymptotic", 1e-5},      {"bv_consistency", 1e-5},
        {"bv_linearity", 1e-8},    {"eigenvalue", 1e-8},
        {"conjugate", 1e-12},      {"quotient", 1e-5},
        {"constant", 5e-4},        {"bessel_zero", 1e-8},
        {"k0_limit", 1e-6},        {"bessel_margin", 1e-3},
        {"residual", 1e-8},        {"sandwich_upper", 0.27},
        {"trial", 1e-8},           {"gap", 1e-9},
        {"strict_gap", 1e-6},      {"identity", 1e-8},
    };
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"specfun", "closedform", "spectral", "hardy",
                                                "identities"};
    return names;
}

SuiteResult run(const std::string& name, const Tolerances& tol) {
    using Runner = SuiteResult (*)(const Tolerances&);
    static const std::map<std::string, Runner> runners{
        {"specfun", run_specfun}, {"closedform", run_closedform}, {"spectral", run_spectral},
        {"hardy", run_hardy},     {"identities", run_identities},
    };
    const auto it = runners.find(name);
    if (it == runners.end()) throw DomainError("unknown suite '" + name + "'");
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult out = it->second(tol);
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

std::vector<SuiteResult> run_many(const std::vector<std::string>& names, const Tolerances& tol) {
    std::vector<std::future<SuiteResult>> jobs;
    for (const auto& name : names) {
        jobs.push_back(std::async(std::launch::async, [&tol, name] { return run(name, tol); }));
    }
    std::vector<SuiteResult> out;
    for (auto& job : jobs) out.push_back(job.get());
    return out;
}

}  // namespace hardysin::suites
