#pragma once

// Rayleigh-Ritz machinery for the Hardy-type quadratic forms on (0, pi):
//   Q(f) = int |f'|^2 - sum_i w_i c_i int v_i |f|^2,
// discretized in the sine basis sin(kx), k = 1..N, optionally enriched with
// the trial function sin(x)^{1/2 + eps}.

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hardysin/quadrature.hpp"

namespace hardysin {

enum class PotentialKind { InverseSine2, InverseX2, InverseDistance2, Constant };

struct PotentialSpec {
    PotentialKind kind = PotentialKind::InverseSine2;
    double coefficient = 1.0;

    // coefficient * v(x)
    double operator()(double x) const;
    // Symmetric under x -> pi - x.
    bool symmetric() const { return kind != PotentialKind::InverseX2; }
};

std::string to_string(PotentialKind kind);
PotentialKind parse_potential(const std::string& name);

struct WeightedPotential {
    PotentialSpec potential;
    double weight = 1.0;
};

struct QuadratureSpec {
    int nodes_per_panel = 32;
    int panels = 64;
};

struct RayleighProblem {
    int n_basis = 1;
    std::vector<WeightedPotential> potential_terms;
    QuadratureSpec quadrature;
    // Adds sin(x)^{1/2 + eps} as an extra basis function when set.
    std::optional<double> enrichment_eps;

    void validate() const;
};

struct AssembledForms {
    Eigen::MatrixXd K;  // stiffness
    Eigen::MatrixXd V;  // sum_i w_i * (potential matrix i)
    Eigen::MatrixXd M;  // mass
};

struct GEVPResult {
    double min_eigenvalue = 0.0;
    Eigen::VectorXd coefficients;  // M-normalized
    double residual_norm = 0.0;
    int n_basis = 0;
};

struct TestFunction {
    std::string label;
    std::function<double(double)> f;
    std::function<double(double)> df;
    std::function<double(double)> d2f;
    // f(pi - t) and f'(pi - t) as functions of t, accurate for small t;
    // optional, f(pi - t) is used when unset.
    std::function<double(double)> f_reflected;
    std::function<double(double)> df_reflected;
    bool vanishes_at_0 = true;
    bool vanishes_at_pi = true;
};

// int |f'|^2 >= (1/4) int |f|^2 w + c int |f|^2 for the weight w and constant c:
//   InverseX2             w = 1/x^2,   c = 0
//   InverseDist2          w = 1/d^2,   c = 0, d = min(x, pi - x)
//   Sine2PlusQuarter      w = 1/sin^2, c = 1/4
//   X2PlusMixedBessel     w = 1/x^2,   c = lambda_DN0/pi^2, f(0) = 0 only
//   X2PlusBessel          w = 1/x^2,   c = lambda_F0/pi^2
//   Dist2PlusMixedBessel  w = 1/d^2,   c = 4 lambda_DN0/pi^2
//   X2LeftVanishing       w = 1/x^2,   c = 0, f(0) = 0 only
// All other variants require f(0) = f(pi) = 0.
enum class InequalityVariant {
    InverseX2,
    InverseDist2,
    Sine2PlusQuarter,
    X2PlusMixedBessel,
    X2PlusBessel,
    Dist2PlusMixedBessel,
    X2LeftVanishing
};

std::string to_string(InequalityVariant v);

struct ChainReport {
    double max_sin_minus_d = 0.0;      // expected <= 0
    double max_d_minus_x = 0.0;        // expected <= 0
    double max_invx2_minus_invd2 = 0.0;  // expected <= 0
    double max_invd2_minus_invsin2 = 0.0;  // expected <= 0
    std::size_t points = 0;
};

// Square-completion identities on [r0, r1], L(x) = ln(R/x):
//   power:  int |f' - (s + 1/2) f/x|^2
//             = int [|f'|^2 + (s^2 - 1/4)|f|^2/x^2] - (s + 1/2) [|f|^2/x]_{r0}^{r1}
//   log:    int |f' - f/(2x) + f/(2x L)|^2
//             = int [|f'|^2 - |f|^2/(4x^2) - |f|^2/(4x^2 L^2)]
//               - [|f|^2/(2x)] + [|f|^2/(2x L)]
// and the combined lower bound on the power square.
struct CompletionIdentities {
    double log_residual = 0.0;    // |left - right| of the log identity
    double power_residual = 0.0;  // |left - right| of the power identity
    double combined_gap = 0.0;    // expected >= 0
    double log_value = 0.0;       // right side of the log identity, expected >= 0
    double power_value = 0.0;     // right side of the power identity, expected >= 0
};

struct LimitReport {
    std::vector<double> x;
    std::vector<double> quotient_log;   // |f| / [x ln(R/x)]^{1/2}
    std::vector<double> quotient_sqrt;  // |f| / x^{1/2}
    std::vector<double> bound_slack;    // x^{1/2} ||f'||_{L2(0,x)} - |f(x) - f(0)|
    bool log_decreasing = false;        // over the last six points
    bool sqrt_decreasing = false;
    bool bound_holds = false;
};

namespace variational {

// Integral of sin^a over (0, pi), a > -1.
double sine_power_integral(double a);

AssembledForms assemble(const RayleighProblem& problem);

// Minimal eigenpair of (K - V) u = lambda M u.
GEVPResult solve_min(const AssembledForms& forms);
GEVPResult min_rayleigh(const RayleighProblem& problem);

// Rayleigh quotient [int |f'|^2 - (1/4) int f^2/sin^2] / int f^2 of
// f = sin(x)^{(1+2 eps)/2}: (quadrature value, closed form 1/4 + eps/2).
std::pair<double, double> trial_quotient(double eps);

double lambda_DN0();
double lambda_F0();

// LHS - RHS of the selected inequality, by quadrature.
double inequality_gap(const TestFunction& f, InequalityVariant variant);
// int_0^pi f^2.
double norm_squared(const TestFunction& f);

ChainReport comparison_chain(const std::vector<double>& x_grid);

CompletionIdentities completion_identities(const TestFunction& f, double s, double r0, double r1,
                                     double R);

LimitReport limit_checks(const TestFunction& f, double s, double R);

}  // namespace variational
}  // namespace hardysin
