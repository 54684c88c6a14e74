#pragma once

// One-dimensional quadrature used throughout the library:
//   * composite Gauss-Legendre on panels graded geometrically toward chosen
//     endpoints (fixed rule, deterministic pairwise summation),
//   * an endpoint-singular variant that maps each singular end through
//     t = a + L exp(1 - 1/v), which turns algebraic and logarithmic
//     endpoint singularities into smooth, rapidly decaying integrands,
//   * adaptive Gauss-Kronrod for the solution integrals.

#include <functional>
#include <span>
#include <vector>

namespace hardysin::quadrature {

using Integrand = std::function<double(double)>;

struct Rule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
};

// Gauss-Legendre rule with n points (Newton iteration on P_n).
const Rule& gauss_legendre(int n);

// Sum in a fixed binary-tree order; result is independent of how the caller
// later parallelises the production of the terms.
double pairwise_sum(std::span<const double> terms);

struct CompositeConfig {
    int nodes_per_panel = 32;
    int panels = 64;
    // Number of geometric refinements of the outermost panel toward a graded
    // endpoint, and the ratio between successive sub-panels.
    int grading_levels = 24;
    double grading_ratio = 0.5;

    void validate() const;
};

enum class Grading { None, Left, Right, Both };

// Panel breakpoints on [a, b]: `panels` uniform panels, with the outermost
// panel(s) subdivided geometrically toward the graded end(s).
std::vector<double> breakpoints(double a, double b, Grading grading,
                                const CompositeConfig& cfg = {});

// Composite Gauss-Legendre over the given breakpoints.
double integrate_panels(const Integrand& f, std::span<const double> breaks,
                        const CompositeConfig& cfg = {});

double integrate(const Integrand& f, double a, double b,
                 Grading grading = Grading::Both, const CompositeConfig& cfg = {});

// Integral of f over [a, b] where f may be singular (but integrable) at the
// flagged endpoints. The interval is split at its midpoint; singular halves
// are mapped through t = end +/- L exp(1 - 1/v), v in (0, 1].
double integrate_singular(const Integrand& f, double a, double b, bool left_singular,
                          bool right_singular, const CompositeConfig& cfg = {});

struct AdaptiveResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Adaptive 31-point Gauss-Kronrod. Throws QuadratureError if the error
// estimate exceeds rel_tol times the larger of |value| and the L1 norm.
AdaptiveResult adaptive(const Integrand& f, double a, double b, double rel_tol = 1e-11,
                        unsigned max_depth = 30);

}  // namespace hardysin::quadrature
