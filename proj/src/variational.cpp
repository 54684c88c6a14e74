#include "hardysin/variational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "hardysin/error.hpp"
#include "hardysin/specfun.hpp"
#include "hardysin/spectral.hpp"

namespace hardysin {
namespace {

constexpr double kPiLow = 1.2246467991473532e-16;

double distance_to_boundary(double x) { return x <= kPi / 2.0 ? x : (kPi - x) + kPiLow; }

// g with v = 1/g^2 for the singular potentials; 1 for the constant one.
double inverse_root(PotentialKind kind, double x) {
    switch (kind) {
        case PotentialKind::InverseSine2: return std::sin(x);
        case PotentialKind::InverseX2: return x;
        case PotentialKind::InverseDistance2: return distance_to_boundary(x);
        case PotentialKind::Constant: return 1.0;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

// coefficient * v(x) * sin(x)^2, bounded on (0, pi).
double times_sine2(const PotentialSpec& pot, double x) {
    const double sn = std::sin(x);
    if (pot.kind == PotentialKind::Constant) return pot.coefficient * sn * sn;
    const double r = sn / inverse_root(pot.kind, x);
    return pot.coefficient * r * r;
}

struct NodeSet {
    std::vector<double> x;
    std::vector<double> w;
};

NodeSet composite_nodes(const quadrature::CompositeConfig& cfg) {
    const auto breaks = quadrature::breakpoints(0.0, kPi, quadrature::Grading::Both, cfg);
    const quadrature::Rule& rule = quadrature::gauss_legendre(cfg.nodes_per_panel);
    NodeSet out;
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double c = 0.5 * (breaks[p] + breaks[p + 1]);
        const double h = 0.5 * (breaks[p + 1] - breaks[p]);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            out.x.push_back(c + h * rule.nodes[i]);
            out.w.push_back(h * rule.weights[i]);
        }
    }
    return out;
}

// Runs body(m) for m in [0, count) on a few threads; each m writes its own slot.
template <typename Body>
void parallel_for(int count, Body body) {
    const int threads =
        std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, 16);
    if (threads == 1 || count < 64) {
        for (int m = 0; m < count; ++m) body(m);
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (int m = t; m < count; m += threads) body(m);
        });
    }
    for (auto& th : pool) th.join();
}

// C_m = int v (cos(mx) - b_m) with b_m = 1 (m even) or cos x (m odd); the
// baselines cancel in V_jk = (C_{|j-k|} - C_{j+k}) / 2.
std::vector<double> cosine_moments(const NodeSet& nodes, const std::vector<double>& v,
                                   int m_max) {
    std::vector<double> moments(static_cast<std::size_t>(m_max) + 1, 0.0);
    bool failed = false;
    parallel_for(m_max + 1, [&](int m) {
        std::vector<double> terms(nodes.x.size());
        for (std::size_t i = 0; i < nodes.x.size(); ++i) {
            const double x = nodes.x[i];
            double diff;
            if (m % 2 == 0) {
                const double sh = std::sin(0.5 * m * x);
                diff = -2.0 * sh * sh;
            } else {
                diff = -2.0 * std::sin(0.5 * (m + 1) * x) * std::sin(0.5 * (m - 1) * x);
            }
            terms[i] = nodes.w[i] * v[i] * diff;
        }
        const double value = quadrature::pairwise_sum(terms);
        if (!std::isfinite(value)) failed = true;
        moments[static_cast<std::size_t>(m)] = value;
    });
    if (failed) throw QuadratureError("assemble: non-finite potential moment");
    return moments;
}

quadrature::CompositeConfig composite_config(const QuadratureSpec& spec, int n_basis) {
    quadrature::CompositeConfig cfg;
    cfg.nodes_per_panel = spec.nodes_per_panel;
    // About 20 radians of the highest frequency 2N per panel; even count keeps pi/2 a break.
    const int needed = static_cast<int>(std::ceil(2.0 * n_basis * kPi / 20.0));
    int panels = std::max(spec.panels, needed);
    if (panels % 2 != 0) ++panels;
    cfg.panels = panels;
    cfg.validate();
    return cfg;
}

double integrate_open(const quadrature::Integrand& f, const quadrature::CompositeConfig& cfg = {}) {
    return quadrature::integrate_singular(f, 0.0, kPi, true, true, cfg);
}

void add_enrichment(const RayleighProblem& problem, const quadrature::CompositeConfig& base,
                    AssembledForms& forms) {
    const int n = problem.n_basis;
    const double eps = *problem.enrichment_eps;
    const double p = 0.5 + eps;
    const auto e = static_cast<Eigen::Index>(n);
    const double i2p = variational::sine_power_integral(2.0 * p);
    const double i2p2 = variational::sine_power_integral(2.0 * p - 2.0);
    forms.M(e, e) = i2p;
    forms.K(e, e) = p * p * (i2p2 - i2p);

    bool all_symmetric = true;
    double v_ee = 0.0;
    for (const auto& term : problem.potential_terms) {
        const PotentialSpec& pot = term.potential;
        all_symmetric = all_symmetric && pot.symmetric();
        double value;
        switch (pot.kind) {
            case PotentialKind::InverseSine2: value = pot.coefficient * i2p2; break;
            case PotentialKind::Constant: value = pot.coefficient * i2p; break;
            default: {
                // (0, pi/2): subtract x^{2p-2}, whose integral is closed form.
                const double half = kPi / 2.0;
                const double left =
                    quadrature::integrate_singular(
                        [p](double x) {
                            return std::pow(x, 2.0 * p - 2.0) *
                                   std::expm1(2.0 * p * std::log(std::sin(x) / x));
                        },
                        0.0, half, true, false, base) +
                    std::pow(half, 2.0 * p - 1.0) / (2.0 * p - 1.0);
                const double right =
                    pot.kind == PotentialKind::InverseDistance2
                        ? left
                        : quadrature::integrate(
                              [p](double t) {
                                  const double x = kPi - t;
                                  return std::pow(std::sin(t), 2.0 * p) / (x * x);
                              },
                              0.0, half, quadrature::Grading::Left, base);
                value = pot.coefficient * (left + right);
            }
        }
        v_ee += term.weight * value;
    }
    forms.V(e, e) = v_ee;

    quadrature::CompositeConfig cross = base;
    cross.panels = std::max(64, base.panels / 2);
    std::vector<double> m_col(static_cast<std::size_t>(n), 0.0);
    std::vector<double> v_col(static_cast<std::size_t>(n), 0.0);
    bool failed = false;
    parallel_for(n, [&](int idx) {
        const int k = idx + 1;
        // The enrichment is symmetric about pi/2; sin(kx) is odd about it for even k.
        if (all_symmetric && k % 2 == 0) return;
        try {
            const auto y = [p](double x) { return std::pow(std::sin(x), p); };
            const double mk = integrate_open([&](double x) { return y(x) * std::sin(k * x); },
                                             cross);
            double vk = 0.0;
            for (const auto& term : problem.potential_terms) {
                const PotentialSpec& pot = term.potential;
                const double value =
                    pot.kind == PotentialKind::Constant
                        ? pot.coefficient * mk
                        : integrate_open(
                              [&](double x) {
                                  const double sn = std::sin(x);
                                  return times_sine2(pot, x) * std::sin(k * x) / sn *
                                         std::pow(sn, p - 1.0);
                              },
                              cross);
                vk += term.weight * value;
            }
            m_col[static_cast<std::size_t>(idx)] = mk;
            v_col[static_cast<std::size_t>(idx)] = vk;
        } catch (const QuadratureError&) {
            failed = true;
        }
    });
    if (failed) throw QuadratureError("assemble: enrichment cross terms did not converge");
    for (int idx = 0; idx < n; ++idx) {
        const double k = idx + 1.0;
        const double mk = m_col[static_cast<std::size_t>(idx)];
        const double vk = v_col[static_cast<std::size_t>(idx)];
        forms.M(idx, e) = forms.M(e, idx) = mk;
        forms.K(idx, e) = forms.K(e, idx) = k * k * mk;
        forms.V(idx, e) = forms.V(e, idx) = vk;
    }
}

// Point sample of a test function, with the distances the potentials need.
struct Sample {
    double f, df, x, dist, sine;
};

// int_0^pi g(sample) dx, split at pi/2; the right half runs in t = pi - x.
double split_integral(const TestFunction& tf, const std::function<double(const Sample&)>& g) {
    const double half = kPi / 2.0;
    const double left = quadrature::integrate_singular(
        [&](double x) { return g({tf.f(x), tf.df(x), x, x, std::sin(x)}); }, 0.0, half, true,
        false);
    const double right = quadrature::integrate_singular(
        [&](double t) {
            const double x = (kPi - t) + kPiLow;
            const double v = tf.f_reflected ? tf.f_reflected(t) : tf.f(kPi - t);
            const double d = tf.df_reflected ? tf.df_reflected(t) : tf.df(kPi - t);
            return g({v, d, x, t, std::sin(t)});
        },
        0.0, half, true, false);
    return left + right;
}

bool non_increasing_tail(const std::vector<double>& q, std::size_t count) {
    if (q.size() < 2) return true;
    const std::size_t start = q.size() > count ? q.size() - count : 0;
    for (std::size_t i = start + 1; i < q.size(); ++i) {
        if (q[i] > q[i - 1] * (1.0 + 1e-12)) return false;
    }
    return true;
}

}  // namespace

double PotentialSpec::operator()(double x) const {
    switch (kind) {
        case PotentialKind::InverseSine2: {
            const double sn = std::sin(x);
            return coefficient / (sn * sn);
        }
        case PotentialKind::InverseX2: return coefficient / (x * x);
        case PotentialKind::InverseDistance2: {
            const double d = distance_to_boundary(x);
            return coefficient / (d * d);
        }
        case PotentialKind::Constant: return coefficient;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

std::string to_string(PotentialKind kind) {
    switch (kind) {
        case PotentialKind::InverseSine2: return "sine2";
        case PotentialKind::InverseX2: return "x2";
        case PotentialKind::InverseDistance2: return "dist2";
        case PotentialKind::Constant: return "const";
    }
    return "unknown";
}

PotentialKind parse_potential(const std::string& name) {
    if (name == "sine2") return PotentialKind::InverseSine2;
    if (name == "x2") return PotentialKind::InverseX2;
    if (name == "dist2") return PotentialKind::InverseDistance2;
    if (name == "const") return PotentialKind::Constant;
    throw DomainError("unknown potential '" + name + "' (expected sine2, x2, dist2 or const)");
}

std::string to_string(InequalityVariant v) {
    switch (v) {
        case InequalityVariant::InverseX2: return "x2";
        case InequalityVariant::InverseDist2: return "dist2";
        case InequalityVariant::Sine2PlusQuarter: return "sine2+1/4";
        case InequalityVariant::X2PlusMixedBessel: return "x2+lambda_DN0/pi^2, left end";
        case InequalityVariant::X2PlusBessel: return "x2+lambda_F0/pi^2";
        case InequalityVariant::Dist2PlusMixedBessel: return "dist2+4 lambda_DN0/pi^2";
        case InequalityVariant::X2LeftVanishing: return "x2, left end";
    }
    return "unknown";
}

void RayleighProblem::validate() const {
    if (n_basis < 1) throw DomainError("RayleighProblem: n_basis must be at least 1");
    if (quadrature.nodes_per_panel < 2 || quadrature.panels < 1) {
        throw DomainError("RayleighProblem: invalid quadrature configuration");
    }
    for (const auto& term : potential_terms) {
        if (!std::isfinite(term.weight) || !std::isfinite(term.potential.coefficient)) {
            throw DomainError("RayleighProblem: non-finite potential weight or coefficient");
        }
    }
    if (enrichment_eps) {
        if (!(*enrichment_eps > 0.0 && *enrichment_eps <= 1.0)) {
            throw DomainError("RayleighProblem: enrichment eps must lie in (0, 1]");
        }
        if (*enrichment_eps < 1e-4) {
            throw QuadratureError("RayleighProblem: enrichment eps below 1e-4 is not resolved");
        }
    }
}

namespace variational {

double sine_power_integral(double a) {
    if (!(a > -1.0)) throw DomainError("sine_power_integral: need a > -1");
    using specfun::log_gamma;
    const double lg = log_gamma(Complex{(a + 1.0) / 2.0, 0.0}).real() -
                      log_gamma(Complex{a / 2.0 + 1.0, 0.0}).real();
    return std::sqrt(kPi) * std::exp(lg);
}

AssembledForms assemble(const RayleighProblem& problem) {
    problem.validate();
    const int n = problem.n_basis;
    const int size = n + (problem.enrichment_eps ? 1 : 0);
    AssembledForms forms;
    forms.K = Eigen::MatrixXd::Zero(size, size);
    forms.M = Eigen::MatrixXd::Zero(size, size);
    forms.V = Eigen::MatrixXd::Zero(size, size);
    for (int k = 1; k <= n; ++k) {
        forms.K(k - 1, k - 1) = k * k * kPi / 2.0;
        forms.M(k - 1, k - 1) = kPi / 2.0;
    }

    const quadrature::CompositeConfig cfg = composite_config(problem.quadrature, n);
    const NodeSet nodes = composite_nodes(cfg);
    std::vector<double> v(nodes.x.size(), 0.0);
    bool has_variable = false;
    double constant = 0.0;
    for (const auto& term : problem.potential_terms) {
        if (term.potential.kind == PotentialKind::Constant) {
            constant += term.weight * term.potential.coefficient;
            continue;
        }
        has_variable = true;
        for (std::size_t i = 0; i < nodes.x.size(); ++i) {
            v[i] += term.weight * term.potential(nodes.x[i]);
        }
    }
    if (has_variable) {
        const std::vector<double> c = cosine_moments(nodes, v, 2 * n);
        for (int j = 1; j <= n; ++j) {
            for (int k = j; k <= n; ++k) {
                const double value = 0.5 * (c[static_cast<std::size_t>(k - j)] -
                                             c[static_cast<std::size_t>(j + k)]);
                forms.V(j - 1, k - 1) = value;
                forms.V(k - 1, j - 1) = value;
            }
        }
    }
    for (int k = 0; k < n; ++k) forms.V(k, k) += constant * kPi / 2.0;

    if (problem.enrichment_eps) add_enrichment(problem, cfg, forms);
    return forms;
}

GEVPResult solve_min(const AssembledForms& forms) {
    const Eigen::MatrixXd A = forms.K - forms.V;
    const Eigen::LLT<Eigen::MatrixXd> llt(forms.M);
    if (llt.info() != Eigen::Success) {
        throw NumericalError("solve_min: mass matrix is not positive definite");
    }
    const Eigen::MatrixXd B = llt.matrixL().solve(A);
    Eigen::MatrixXd C = llt.matrixL().solve(B.transpose());
    C = 0.5 * (C + C.transpose()).eval();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(C);
    if (es.info() != Eigen::Success) throw NumericalError("solve_min: eigensolver failed");
    GEVPResult out;
    out.min_eigenvalue = es.eigenvalues()(0);
    out.coefficients = llt.matrixU().solve(es.eigenvectors().col(0));
    out.residual_norm =
        (A * out.coefficients - out.min_eigenvalue * (forms.M * out.coefficients)).norm();
    out.n_basis = static_cast<int>(A.rows());
    return out;
}

GEVPResult min_rayleigh(const RayleighProblem& problem) {
    GEVPResult out = solve_min(assemble(problem));
    out.n_basis = problem.n_basis;
    return out;
}

std::pair<double, double> trial_quotient(double eps) {
    if (!std::isfinite(eps) || eps <= 0.0 || eps > 1.0) {
        throw DomainError("trial_quotient: eps must lie in (0, 1]");
    }
    if (eps < 1e-4) {
        throw QuadratureError("trial_quotient: eps below 1e-4 is not resolved by the quadrature");
    }
    const double p = 0.5 + eps;
    const double two_eps = 2.0 * eps;
    const double scale = std::pow(kPi / 2.0, two_eps) / two_eps;
    // Half of the numerator through x = (pi/2) u^{1/(2 eps)}, which absorbs sin^{2 eps - 1}.
    const auto mapped = [&](double u) {
        const double x = (kPi / 2.0) * std::pow(u, 1.0 / two_eps);
        const double sinc = x == 0.0 ? 1.0 : std::sin(x) / x;
        const double c = std::cos(x);
        return scale * std::pow(sinc, two_eps - 1.0) * (p * p * c * c - 0.25);
    };
    quadrature::CompositeConfig cfg;
    cfg.panels = 256;
    const double numerator = 2.0 * quadrature::integrate(mapped, 0.0, 1.0,
                                                         quadrature::Grading::Both, cfg);
    const double denominator =
        integrate_open([p](double x) { return std::pow(std::sin(x), 2.0 * p); });
    return {numerator / denominator, 0.25 + eps / 2.0};
}

double lambda_DN0() {
    static const double value = spectral::bessel_constants().lambda_DN0;
    return value;
}

double lambda_F0() {
    static const double value = spectral::bessel_constants().lambda_F0;
    return value;
}

double norm_squared(const TestFunction& f) {
    return split_integral(f, [](const Sample& p) { return p.f * p.f; });
}

double inequality_gap(const TestFunction& f, InequalityVariant variant) {
    const bool needs_pi = variant != InequalityVariant::X2PlusMixedBessel &&
                          variant != InequalityVariant::X2LeftVanishing;
    if (!f.vanishes_at_0 || (needs_pi && !f.vanishes_at_pi)) {
        throw AdmissibilityError("inequality_gap: '" + f.label + "' is not admissible for (" +
                                 to_string(variant) + ")");
    }
    const double kinetic = split_integral(f, [](const Sample& p) { return p.df * p.df; });
    const auto weighted = [&](PotentialKind kind) {
        return split_integral(f, [kind](const Sample& p) {
            const double g = kind == PotentialKind::InverseSine2 ? p.sine
                             : kind == PotentialKind::InverseX2  ? p.x
                                                                 : p.dist;
            const double q = p.f / g;
            return q * q;
        });
    };
    switch (variant) {
        case InequalityVariant::InverseX2:
        case InequalityVariant::X2LeftVanishing:
            return kinetic - 0.25 * weighted(PotentialKind::InverseX2);
        case InequalityVariant::InverseDist2:
            return kinetic - 0.25 * weighted(PotentialKind::InverseDistance2);
        case InequalityVariant::Sine2PlusQuarter:
            return kinetic - 0.25 * weighted(PotentialKind::InverseSine2) -
                   0.25 * norm_squared(f);
        case InequalityVariant::X2PlusMixedBessel:
            return kinetic - 0.25 * weighted(PotentialKind::InverseX2) -
                   lambda_DN0() / (kPi * kPi) * norm_squared(f);
        case InequalityVariant::X2PlusBessel:
            return kinetic - 0.25 * weighted(PotentialKind::InverseX2) -
                   lambda_F0() / (kPi * kPi) * norm_squared(f);
        case InequalityVariant::Dist2PlusMixedBessel:
            return kinetic - 0.25 * weighted(PotentialKind::InverseDistance2) -
                   4.0 * lambda_DN0() / (kPi * kPi) * norm_squared(f);
    }
    throw DomainError("inequality_gap: unknown variant");
}

ChainReport comparison_chain(const std::vector<double>& x_grid) {
    ChainReport r;
    r.max_sin_minus_d = -std::numeric_limits<double>::infinity();
    r.max_d_minus_x = r.max_sin_minus_d;
    r.max_invx2_minus_invd2 = r.max_sin_minus_d;
    r.max_invd2_minus_invsin2 = r.max_sin_minus_d;
    for (const double x : x_grid) {
        if (!(x > 0.0 && x < kPi)) throw DomainError("comparison_chain: x must lie in (0, pi)");
        const double s = std::sin(x);
        const double d = distance_to_boundary(x);
        r.max_sin_minus_d = std::max(r.max_sin_minus_d, s - d);
        r.max_d_minus_x = std::max(r.max_d_minus_x, d - x);
        r.max_invx2_minus_invd2 = std::max(r.max_invx2_minus_invd2, 1.0 / (x * x) - 1.0 / (d * d));
        r.max_invd2_minus_invsin2 =
            std::max(r.max_invd2_minus_invsin2, 1.0 / (d * d) - 1.0 / (s * s));
        ++r.points;
    }
    return r;
}

CompletionIdentities completion_identities(const TestFunction& f, double s, double r0, double r1,
                                     double R) {
    if (!(s >= 0.0 && s < 1.0)) throw DomainError("completion_identities: s must lie in [0, 1)");
    if (!(r0 > 0.0 && r0 < r1 && r1 < R && r1 <= kPi)) {
        throw DomainError("completion_identities: need 0 < r0 < r1 < R and r1 <= pi");
    }
    const double k = s + 0.5;
    const auto integral = [&](const quadrature::Integrand& g) {
        return quadrature::integrate(g, r0, r1, quadrature::Grading::None);
    };
    const auto bracket = [&](const std::function<double(double)>& g) { return g(r1) - g(r0); };
    const auto L = [R](double x) { return std::log(R / x); };

    CompletionIdentities out;
    // |f' - (s + 1/2) f / x|^2 integrated, and its rewriting.
    const double alpha2 = integral([&](double x) {
        const double a = f.df(x) - k * f.f(x) / x;
        return a * a;
    });
    const double b11 = integral([&](double x) {
                           const double v = f.f(x);
                           const double d = f.df(x);
                           return d * d + (s * s - 0.25) * v * v / (x * x);
                       }) -
                       k * bracket([&](double x) { return f.f(x) * f.f(x) / x; });
    out.power_residual = std::fabs(alpha2 - b11);
    out.power_value = b11;

    const double weighted = integral([&](double x) {
        const double v = f.f(x);
        const double g = f.df(x) - v / (2.0 * x) + v / (2.0 * x * L(x));
        return g * g;
    });
    const double b10 =
        integral([&](double x) {
            const double v = f.f(x);
            const double d = f.df(x);
            const double l = L(x);
            return d * d - v * v / (4.0 * x * x) - v * v / (4.0 * x * x * l * l);
        }) -
        bracket([&](double x) { return f.f(x) * f.f(x) / (2.0 * x); }) +
        bracket([&](double x) { return f.f(x) * f.f(x) / (2.0 * x * L(x)); });
    out.log_residual = std::fabs(weighted - b10);
    out.log_value = b10;

    const double lower =
        s * s * integral([&](double x) { return f.f(x) * f.f(x) / (x * x); }) +
        0.25 * integral([&](double x) {
            const double l = L(x);
            return f.f(x) * f.f(x) / (x * x * l * l);
        }) -
        s * bracket([&](double x) { return f.f(x) * f.f(x) / x; }) -
        bracket([&](double x) { return f.f(x) * f.f(x) / (2.0 * x * L(x)); });
    out.combined_gap = alpha2 - lower;
    return out;
}

LimitReport limit_checks(const TestFunction& f, double s, double R) {
    if (!(s >= 0.0 && s < 1.0)) throw DomainError("limit_checks: s must lie in [0, 1)");
    if (!(R > 0.1)) throw DomainError("limit_checks: R must exceed 0.1");
    if (!f.vanishes_at_0) {
        throw AdmissibilityError("limit_checks: '" + f.label + "' does not vanish at 0");
    }
    LimitReport out;
    out.bound_holds = true;
    for (int k = 0; k <= 12; ++k) {
        const double x = 0.1 * std::ldexp(1.0, -k);
        const double v = std::fabs(f.f(x));
        out.x.push_back(x);
        out.quotient_log.push_back(v / std::sqrt(x * std::log(R / x)));
        out.quotient_sqrt.push_back(v / std::sqrt(x));
        const double energy = quadrature::integrate_singular(
            [&](double t) {
                const double d = f.df(t);
                return d * d;
            },
            0.0, x, true, false);
        const double slack = std::sqrt(x) * std::sqrt(energy) - v;
        out.bound_slack.push_back(slack);
        out.bound_holds = out.bound_holds && slack >= -1e-12 * std::max(1.0, v);
    }
    out.log_decreasing = non_increasing_tail(out.quotient_log, 6);
    out.sqrt_decreasing = non_increasing_tail(out.quotient_sqrt, 6);
    return out;
}

}  // namespace variational
}  // namespace hardysin
