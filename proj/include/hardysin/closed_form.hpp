#pragma once

// Closed-form solutions of tau_s y = z y on (0, pi), where
//   tau_s = -d^2/dx^2 + (s^2 - 1/4) / sin^2(x).
//
// y1, y2 are evaluated with a region split so that every hypergeometric
// argument stays <= 1/2: the cos^2 series near pi/2, the sin^2 connection
// expansion near the endpoints (s > 0) and the logarithmic series (s = 0).

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hardysin/specfun.hpp"

namespace hardysin {

enum class Classification { LimitCircle, LimitPoint };

struct SpectralParam {
    double s = 0.0;
    Classification classification = Classification::LimitCircle;

    // Validates s >= 0 and derives the endpoint classification.
    static SpectralParam make(double s);

    bool limit_circle() const { return classification == Classification::LimitCircle; }
};

enum class SolutionKind {
    PrincipalAt0,
    NonprincipalAt0,
    PrincipalAtPi,
    NonprincipalAtPi,
    Y1,
    Y2,
    Phi,
    Theta,
    FactorPrincipal,
    FactorSecond
};

enum class Branch { EndpointSeries, MidpointSeries, LogSeries, Quadrature };

std::string to_string(SolutionKind kind);
std::string to_string(Branch branch);

struct SolutionEval {
    Complex value;
    Complex derivative;
    double x = 0.0;
    Complex z;
    Branch branch = Branch::MidpointSeries;
};

struct BoundaryTable {
    Complex y1_0, y1p_0, y2_0, y2p_0;
    Complex y1_pi, y1p_pi, y2_pi, y2p_pi;

    // y1(0) y2'(0) - y1'(0) y2(0); equals -1.
    Complex determinant() const;
};

// A real test function with analytic first and second derivatives.
struct AnalyticTestFunction {
    std::function<double(double)> f;
    std::function<double(double)> df;
    std::function<double(double)> d2f;
};

namespace closed_form {

// Potential (s^2 - 1/4)/sin^2(x).
double potential(double s, double x);

// Principal and nonprincipal solutions of tau_s u = 0 at x = 0 and x = pi.
// c is the base point of the s = 0 reduction-of-order integral.
SolutionEval eval_principal_0(const SpectralParam& s, double x);
SolutionEval eval_nonprincipal_0(const SpectralParam& s, double x, double c = kPi / 2);
SolutionEval eval_principal_pi(const SpectralParam& s, double x);
SolutionEval eval_nonprincipal_pi(const SpectralParam& s, double x, double c = kPi / 2);

// Fundamental system y_j(z, x), j in {1, 2}. `forced` selects a branch
// instead of the region split (used for seam checks).
SolutionEval eval_y(int j, const SpectralParam& s, Complex z, double x,
                    std::optional<Branch> forced = std::nullopt,
                    const SeriesConfig& cfg = {});

BoundaryTable boundary_table(const SpectralParam& s, Complex z);

// Normalized system with phi~(0) = 0, phi~'(0) = 1, theta~(0) = 1, theta~'(0) = 0.
std::pair<SolutionEval, SolutionEval> eval_phi_theta(const SpectralParam& s, Complex z,
                                                     double x);

// y1 y2' - y1' y2 at each grid point.
std::vector<Complex> wronskian_y(const SpectralParam& s, Complex z,
                                 const std::vector<double>& x_grid);

// ((delta_s^+ delta_s f)(x), (tau_s f)(x) - (s + 1/2)^2 f(x)).
std::pair<double, double> factor_pair(const SpectralParam& s, const AnalyticTestFunction& f,
                                      double x);

// y_s(x) = sin(x)^{(1+2s)/2} and the second solution
// yhat_s(x) = sin(x)^{(1+2s)/2} int_x^{pi/2} sin(t)^{-(1+2s)} dt.
SolutionEval eval_factor_principal(const SpectralParam& s, double x);
SolutionEval eval_factor_second(const SpectralParam& s, double x);

// Constant K with uhat_{0,0} = theta_{0,0}(0, .) + K u_{0,0} for base point c:
// K = ln(c) + int_0^c (1/u^2 - 1/t) dt.
double log_solution_offset(double c = kPi / 2);

// Second-order coefficient in value = leading * (1 + c x^2 + ...):
// (4s^2 - 1)/(48 + 48 s) for principal and (4s^2 - 1)/(48 - 48 s) for
// nonprincipal solutions.
double asymptotic_coefficient(bool principal, double s);

// Dispatch by kind. z is ignored for the z = 0 families.
SolutionEval evaluate(SolutionKind kind, const SpectralParam& s, Complex z, double x);

}  // namespace closed_form
}  // namespace hardysin
