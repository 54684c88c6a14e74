#include "hardysin/closed_form.hpp"

#include <cmath>
#include <string>

#include "hardysin/error.hpp"
#include "hardysin/quadrature.hpp"

namespace hardysin {

SpectralParam SpectralParam::make(double s) {
    if (!std::isfinite(s) || s < 0.0) {
        throw DomainError("SpectralParam: s must be finite and nonnegative, got " +
                          std::to_string(s));
    }
    return {s, s < 1.0 ? Classification::LimitCircle : Classification::LimitPoint};
}

std::string to_string(SolutionKind kind) {
    switch (kind) {
        case SolutionKind::PrincipalAt0: return "principal_0";
        case SolutionKind::NonprincipalAt0: return "nonprincipal_0";
        case SolutionKind::PrincipalAtPi: return "principal_pi";
        case SolutionKind::NonprincipalAtPi: return "nonprincipal_pi";
        case SolutionKind::Y1: return "y1";
        case SolutionKind::Y2: return "y2";
        case SolutionKind::Phi: return "phi";
        case SolutionKind::Theta: return "theta";
        case SolutionKind::FactorPrincipal: return "factor_principal";
        case SolutionKind::FactorSecond: return "factor_second";
    }
    return "unknown";
}

std::string to_string(Branch branch) {
    switch (branch) {
        case Branch::EndpointSeries: return "endpoint_series";
        case Branch::MidpointSeries: return "midpoint_series";
        case Branch::LogSeries: return "log_series";
        case Branch::Quadrature: return "quadrature";
    }
    return "unknown";
}

Complex BoundaryTable::determinant() const { return y1_0 * y2p_0 - y1p_0 * y2_0; }

namespace closed_form {
namespace {

using specfun::hyp2f1_derivative;
using specfun::hyp2f1_series;
using specfun::rgamma;

constexpr double kSqrtPi = 1.77245385090551602730;
// pi - fl(pi), so that (fl(pi) - x) + kPiLow is the distance to the true pi.
constexpr double kPiLow = 1.2246467991473532e-16;
constexpr double kQuadTol = 1e-11;

void require_interior(double x, const char* op) {
    if (!(x > 0.0 && x < kPi)) {
        throw DomainError(std::string(op) + ": x must lie in (0, pi), got " + std::to_string(x));
    }
}

void require_limit_circle(const SpectralParam& s, const char* op) {
    if (!s.limit_circle()) {
        throw DomainError(std::string(op) + ": requires s in [0, 1), got " +
                          std::to_string(s.s));
    }
}

double reflect(double x) { return (kPi - x) + kPiLow; }

double cos_exact(double x) { return x == kPi / 2 ? 0.0 : std::cos(x); }

struct Term {
    Complex value;
    Complex derivative;
};

// S^r F(a, b; c; S^2) and its x-derivative.
Term endpoint_term(double r, Complex a, Complex b, Complex c, double S, double C,
                   const SeriesConfig& cfg) {
    const double w = S * S;
    const Complex F = hyp2f1_series(a, b, c, w, cfg);
    const Complex dF = hyp2f1_derivative(a, b, c, w, cfg);
    const double Sr = std::pow(S, r);
    return {Sr * F, r * std::pow(S, r - 1.0) * C * F + Sr * dF * (2.0 * S * C)};
}

struct Family {
    double alpha0;   // 1/2 for y1, 3/2 for y2
    double gamma_c;  // Gamma(alpha0)
};

Family family(int j) {
    if (j == 1) return {0.5, kSqrtPi};
    if (j == 2) return {1.5, kSqrtPi / 2};
    throw DomainError("eval_y: j must be 1 or 2");
}

// Applies the cos(x) prefactor of y2.
Term with_prefactor(int j, const Term& t, double S, double C) {
    if (j == 1) return t;
    return {C * t.value, -S * t.value + C * t.derivative};
}

Term midpoint_series(int j, double s, Complex w, double S, double C,
                     const SeriesConfig& cfg) {
    const Family fam = family(j);
    const Complex a = (fam.alpha0 - s + w) / 2.0;
    const Complex b = (fam.alpha0 - s - w) / 2.0;
    const Complex c{fam.alpha0, 0.0};
    const double t = C * C;
    const double p = (1.0 - 2.0 * s) / 2.0;
    const Complex F = hyp2f1_series(a, b, c, t, cfg);
    const Complex dF = hyp2f1_derivative(a, b, c, t, cfg);
    const double Sp = std::pow(S, p);
    const Term base{Sp * F, p * std::pow(S, p - 1.0) * C * F + Sp * dF * (-2.0 * S * C)};
    return with_prefactor(j, base, S, C);
}

Term endpoint_series(int j, double s, Complex w, double S, double C,
                     const SeriesConfig& cfg) {
    const Family fam = family(j);
    const double p = (1.0 - 2.0 * s) / 2.0;
    const double q = (1.0 + 2.0 * s) / 2.0;
    const Complex A = fam.gamma_c * specfun::gamma(Complex{s, 0.0}) *
                      rgamma((fam.alpha0 + s + w) / 2.0) * rgamma((fam.alpha0 + s - w) / 2.0);
    const Complex B = fam.gamma_c * specfun::gamma(Complex{-s, 0.0}) *
                      rgamma((fam.alpha0 - s + w) / 2.0) * rgamma((fam.alpha0 - s - w) / 2.0);
    const Term t1 = endpoint_term(p, (fam.alpha0 - s + w) / 2.0, (fam.alpha0 - s - w) / 2.0,
                                  Complex{1.0 - s, 0.0}, S, C, cfg);
    const Term t2 = endpoint_term(q, (fam.alpha0 + s + w) / 2.0, (fam.alpha0 + s - w) / 2.0,
                                  Complex{1.0 + s, 0.0}, S, C, cfg);
    const Term base{A * t1.value + B * t2.value, A * t1.derivative + B * t2.derivative};
    return with_prefactor(j, base, S, C);
}

// rgamma(a) (a)_n psi(a + n), continued through the poles of psi.
Complex weighted_digamma(Complex a, Complex rga, Complex poch_a, std::int64_t n) {
    const Complex an = a + static_cast<double>(n);
    if (specfun::is_nonpositive_integer(an)) {
        return poch_a * poch_a * specfun::digamma_over_gamma(an);
    }
    if (rga == Complex{0.0, 0.0}) return {0.0, 0.0};
    return rga * poch_a * specfun::digamma(an);
}

Term log_series(int j, Complex w, double S, double C, const SeriesConfig& cfg) {
    const Family fam = family(j);
    const Complex a = (fam.alpha0 + w) / 2.0;
    const Complex b = (fam.alpha0 - w) / 2.0;
    const Complex rga = rgamma(a);
    const Complex rgb = rgamma(b);
    const double ell = 2.0 * std::log(S);
    const double S2 = S * S;

    Complex poch_a{1.0, 0.0};
    Complex poch_b{1.0, 0.0};
    double inv_fact2 = 1.0;  // 1/(n!)^2
    double psi_n1 = -kEulerGamma;  // psi(n + 1)
    double power = 1.0;  // S^{2n}
    Complex sum{0.0, 0.0};
    Complex dsum{0.0, 0.0};
    const double settle = std::abs(a) + std::abs(b) + 2.0;
    int quiet = 0;
    for (std::int64_t n = 0; n < cfg.max_terms; ++n) {
        const double nd = static_cast<double>(n);
        if (n > 0) {
            poch_a *= a + (nd - 1.0);
            poch_b *= b + (nd - 1.0);
            inv_fact2 /= nd * nd;
            psi_n1 += 1.0 / nd;
            power *= S2;
        }
        const Complex L = rga * rgb * poch_a * poch_b * inv_fact2;
        const Complex P = (rga * rgb * poch_a * poch_b * (2.0 * psi_n1) -
                           rgb * poch_b * weighted_digamma(a, rga, poch_a, n) -
                           rga * poch_a * weighted_digamma(b, rgb, poch_b, n)) *
                          inv_fact2;
        const Complex coeff = P - L * ell;
        const Complex term = coeff * power;
        // d/dx of (P - L ln S^2) S^{2n}
        const Complex dterm = -L * (2.0 * C / S) * power + coeff * (2.0 * nd) * (power / S) * C;
        sum += term;
        dsum += dterm;
        if (nd > settle && std::abs(term) <= cfg.target_rel_err * std::abs(sum) &&
            std::abs(dterm) <= cfg.target_rel_err * std::abs(dsum)) {
            if (++quiet >= 2) {
                const double sq = std::sqrt(S);
                const Term base{fam.gamma_c * sq * sum,
                                fam.gamma_c * (0.5 * C / sq * sum + sq * dsum)};
                return with_prefactor(j, base, S, C);
            }
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError("eval_y: logarithmic series did not converge");
}

double principal_direct_value(double s, double S, double C, double* derivative) {
    const double q = (1.0 + 2.0 * s) / 2.0;
    const double alpha = 0.25 + s / 2.0;
    const Term t = endpoint_term(q, alpha, alpha, 1.0 + s, S, C, {});
    *derivative = t.derivative.real();
    return t.value.real();
}

// Integrand 1/u^2 - 1/t of the s = 0 reduction of order.
double log_offset_integrand(double t) {
    const SpectralParam s0 = SpectralParam::make(0.0);
    const double u = eval_principal_0(s0, t).value.real();
    return 1.0 / (u * u) - 1.0 / t;
}

// int_x^c dt / u(t)^2 for x in (0, pi/2] and c in (0, pi).
double log_reduction_integral(double x, double c) {
    const double smooth = quadrature::adaptive(log_offset_integrand, x, c, kQuadTol).value;
    return smooth + std::log(c / x);
}

// int_y^{pi/2} sin(t)^{-2q} dt for y in (0, pi/2], on a logarithmic scale.
double factor_integral(double q, double y) {
    if (y >= kPi / 2) return 0.0;
    const auto integrand = [q](double u) {
        const double t = std::exp(u);
        return std::pow(std::sin(t), -2.0 * q) * t;
    };
    return quadrature::adaptive(integrand, std::log(y), std::log(kPi / 2), kQuadTol).value;
}

}  // namespace

double potential(double s, double x) {
    const double S = std::sin(x);
    return (s * s - 0.25) / (S * S);
}

SolutionEval eval_y(int j, const SpectralParam& s, Complex z, double x,
                    std::optional<Branch> forced, const SeriesConfig& cfg) {
    require_limit_circle(s, "eval_y");
    require_interior(x, "eval_y");
    family(j);
    const Complex w = std::sqrt(z);
    const double S = std::sin(x);
    const double C = cos_exact(x);

    Branch branch;
    if (forced) {
        branch = *forced;
        if (branch == Branch::Quadrature) {
            throw DomainError("eval_y: no quadrature branch for y1, y2");
        }
        if (branch == Branch::EndpointSeries && s.s == 0.0) {
            throw DomainError("eval_y: endpoint series requires s > 0");
        }
        if (branch == Branch::LogSeries && s.s != 0.0) {
            throw DomainError("eval_y: log series requires s = 0");
        }
    } else if (C * C <= 0.5) {
        branch = Branch::MidpointSeries;
    } else {
        branch = s.s == 0.0 ? Branch::LogSeries : Branch::EndpointSeries;
    }

    Term t;
    switch (branch) {
        case Branch::MidpointSeries: t = midpoint_series(j, s.s, w, S, C, cfg); break;
        case Branch::EndpointSeries: t = endpoint_series(j, s.s, w, S, C, cfg); break;
        default: t = log_series(j, w, S, C, cfg); break;
    }
    return {t.value, t.derivative, x, z, branch};
}

BoundaryTable boundary_table(const SpectralParam& s, Complex z) {
    require_limit_circle(s, "boundary_table");
    const Complex w = std::sqrt(z);
    BoundaryTable t;
    if (s.s > 0.0) {
        const double sv = s.s;
        const Complex g1 = specfun::gamma(Complex{1.0 + sv, 0.0});
        const Complex gm = specfun::gamma(Complex{-sv, 0.0});
        t.y1_0 = 2.0 * kSqrtPi * g1 * rgamma((0.5 + sv + w) / 2.0) * rgamma((0.5 + sv - w) / 2.0);
        t.y1p_0 = kSqrtPi * gm * rgamma((0.5 - sv + w) / 2.0) * rgamma((0.5 - sv - w) / 2.0);
        t.y2_0 = kSqrtPi * g1 * rgamma((1.5 + sv + w) / 2.0) * rgamma((1.5 + sv - w) / 2.0);
        t.y2p_0 = kSqrtPi * gm / 2.0 * rgamma((1.5 - sv + w) / 2.0) *
                  rgamma((1.5 - sv - w) / 2.0);
    } else {
        const Complex a1 = (0.5 + w) / 2.0;
        const Complex b1 = (0.5 - w) / 2.0;
        const Complex a2 = (1.5 + w) / 2.0;
        const Complex b2 = (1.5 - w) / 2.0;
        const auto log_part = [](Complex a, Complex b) {
            // rg(a) rg(b) [2 gamma_E + psi(a) + psi(b)], entire in z
            const Complex ra = rgamma(a);
            const Complex rb = rgamma(b);
            return 2.0 * kEulerGamma * ra * rb + specfun::digamma_over_gamma(a) * rb +
                   ra * specfun::digamma_over_gamma(b);
        };
        t.y1_0 = 2.0 * kSqrtPi * rgamma(a1) * rgamma(b1);
        t.y1p_0 = -kSqrtPi * log_part(a1, b1);
        t.y2_0 = kSqrtPi * rgamma(a2) * rgamma(b2);
        t.y2p_0 = -kSqrtPi * log_part(a2, b2) / 2.0;
    }
    t.y1_pi = -t.y1_0;
    t.y1p_pi = t.y1p_0;
    t.y2_pi = t.y2_0;
    t.y2p_pi = -t.y2p_0;
    return t;
}

std::pair<SolutionEval, SolutionEval> eval_phi_theta(const SpectralParam& s, Complex z,
                                                     double x) {
    const BoundaryTable t = boundary_table(s, z);
    const SolutionEval y1 = eval_y(1, s, z, x);
    const SolutionEval y2 = eval_y(2, s, z, x);
    SolutionEval phi{t.y2_0 * y1.value - t.y1_0 * y2.value,
                     t.y2_0 * y1.derivative - t.y1_0 * y2.derivative, x, z, y1.branch};
    SolutionEval theta{t.y1p_0 * y2.value - t.y2p_0 * y1.value,
                       t.y1p_0 * y2.derivative - t.y2p_0 * y1.derivative, x, z, y1.branch};
    return {phi, theta};
}

std::vector<Complex> wronskian_y(const SpectralParam& s, Complex z,
                                 const std::vector<double>& x_grid) {
    std::vector<Complex> out;
    out.reserve(x_grid.size());
    for (double x : x_grid) {
        const SolutionEval y1 = eval_y(1, s, z, x);
        const SolutionEval y2 = eval_y(2, s, z, x);
        out.push_back(y1.value * y2.derivative - y1.derivative * y2.value);
    }
    return out;
}

SolutionEval eval_principal_0(const SpectralParam& s, double x) {
    require_limit_circle(s, "eval_principal_0");
    require_interior(x, "eval_principal_0");
    if (x <= kPi / 4) {
        double d = 0.0;
        const double v = principal_direct_value(s.s, std::sin(x), std::cos(x), &d);
        return {v, d, x, 0.0, Branch::EndpointSeries};
    }
    SolutionEval phi = eval_phi_theta(s, 0.0, x).first;
    phi.value = phi.value.real();
    phi.derivative = phi.derivative.real();
    return phi;
}

double log_solution_offset(double c) {
    if (!(c > 0.0 && c < kPi)) {
        throw DomainError("log_solution_offset: c must lie in (0, pi)");
    }
    if (c == kPi / 2) {
        static const double cached =
            std::log(c) + quadrature::adaptive(log_offset_integrand, 0.0, c, kQuadTol).value;
        return cached;
    }
    return std::log(c) + quadrature::adaptive(log_offset_integrand, 0.0, c, kQuadTol).value;
}

SolutionEval eval_nonprincipal_0(const SpectralParam& s, double x, double c) {
    require_limit_circle(s, "eval_nonprincipal_0");
    require_interior(x, "eval_nonprincipal_0");
    if (s.s > 0.0) {
        if (x <= kPi / 4) {
            const double S = std::sin(x);
            const double C = std::cos(x);
            const double p = (1.0 - 2.0 * s.s) / 2.0;
            const double beta = 0.25 - s.s / 2.0;
            const Term t = endpoint_term(p, beta, beta, 1.0 - s.s, S, C, {});
            const double k = 1.0 / (2.0 * s.s);
            return {k * t.value.real(), k * t.derivative.real(), x, 0.0, Branch::EndpointSeries};
        }
        SolutionEval theta = eval_phi_theta(s, 0.0, x).second;
        theta.value = theta.value.real();
        theta.derivative = theta.derivative.real();
        return theta;
    }
    if (!(c > 0.0 && c < kPi)) {
        throw DomainError("eval_nonprincipal_0: base point c must lie in (0, pi)");
    }
    const SolutionEval u = eval_principal_0(s, x);
    const double uv = u.value.real();
    const double ud = u.derivative.real();
    if (x <= kPi / 2) {
        const double I = log_reduction_integral(x, c);
        return {uv * I, ud * I - 1.0 / uv, x, 0.0, Branch::Quadrature};
    }
    // Past pi/2 continue through the normalized system: uhat = theta + K u.
    const double K = log_solution_offset(c);
    const SolutionEval theta = eval_phi_theta(s, 0.0, x).second;
    return {theta.value.real() + K * uv, theta.derivative.real() + K * ud, x, 0.0,
            Branch::Quadrature};
}

SolutionEval eval_principal_pi(const SpectralParam& s, double x) {
    require_interior(x, "eval_principal_pi");
    const SolutionEval r = eval_principal_0(s, reflect(x));
    return {r.value, -r.derivative, x, 0.0, r.branch};
}

SolutionEval eval_nonprincipal_pi(const SpectralParam& s, double x, double c) {
    require_interior(x, "eval_nonprincipal_pi");
    const SolutionEval r = eval_nonprincipal_0(s, reflect(x), c == kPi / 2 ? c : reflect(c));
    return {-r.value, r.derivative, x, 0.0, r.branch};
}

std::pair<double, double> factor_pair(const SpectralParam& s, const AnalyticTestFunction& f,
                                      double x) {
    require_interior(x, "factor_pair");
    const double k = s.s + 0.5;
    const double S = std::sin(x);
    const double cot = std::cos(x) / S;
    const double csc2 = 1.0 / (S * S);
    const double v = f.f(x);
    const double d1 = f.df(x);
    const double d2 = f.d2f(x);
    // g = delta_s f = f' - k cot f, then delta_s^+ g = -g' - k cot g
    const double g = d1 - k * cot * v;
    const double dg = d2 - k * (-csc2 * v + cot * d1);
    const double lhs = -dg - k * cot * g;
    const double rhs = -d2 + (s.s * s.s - 0.25) * csc2 * v - k * k * v;
    return {lhs, rhs};
}

SolutionEval eval_factor_principal(const SpectralParam& s, double x) {
    require_interior(x, "eval_factor_principal");
    const double q = (1.0 + 2.0 * s.s) / 2.0;
    const double S = std::sin(x);
    return {std::pow(S, q), q * std::pow(S, q - 1.0) * std::cos(x), x, 0.0,
            Branch::EndpointSeries};
}

SolutionEval eval_factor_second(const SpectralParam& s, double x) {
    require_interior(x, "eval_factor_second");
    const double q = (1.0 + 2.0 * s.s) / 2.0;
    const double S = std::sin(x);
    const double Sq = std::pow(S, q);
    double J = 0.0;
    if (x <= kPi / 2) {
        J = factor_integral(q, x);
    } else {
        J = -factor_integral(q, reflect(x));
    }
    const double value = Sq * J;
    const double cot = cos_exact(x) / S;
    return {value, q * cot * value - 1.0 / Sq, x, 0.0, Branch::Quadrature};
}

double asymptotic_coefficient(bool principal, double s) {
    const double num = 4.0 * s * s - 1.0;
    return principal ? num / (48.0 + 48.0 * s) : num / (48.0 - 48.0 * s);
}

SolutionEval evaluate(SolutionKind kind, const SpectralParam& s, Complex z, double x) {
    switch (kind) {
        case SolutionKind::PrincipalAt0: return eval_principal_0(s, x);
        case SolutionKind::NonprincipalAt0: return eval_nonprincipal_0(s, x);
        case SolutionKind::PrincipalAtPi: return eval_principal_pi(s, x);
        case SolutionKind::NonprincipalAtPi: return eval_nonprincipal_pi(s, x);
        case SolutionKind::Y1: return eval_y(1, s, z, x);
        case SolutionKind::Y2: return eval_y(2, s, z, x);
        case SolutionKind::Phi: return eval_phi_theta(s, z, x).first;
        case SolutionKind::Theta: return eval_phi_theta(s, z, x).second;
        case SolutionKind::FactorPrincipal: return eval_factor_principal(s, x);
        case SolutionKind::FactorSecond: return eval_factor_second(s, x);
    }
    throw DomainError("evaluate: unknown solution kind");
}

}  // namespace closed_form
}  // namespace hardysin
