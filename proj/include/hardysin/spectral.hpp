#pragma once

// Friedrichs spectrum of tau_s on (0, pi), the singular Weyl-Titchmarsh-Kodaira
// m-function m_{0,0,s}, and the Bessel-operator constants.

#include <utility>
#include <vector>

#include "hardysin/boundary_values.hpp"
#include "hardysin/specfun.hpp"

namespace hardysin {

struct MFunctionSample {
    Complex z;
    Complex m;
    double s = 0.0;
};

struct EigenvalueList {
    double s = 0.0;
    std::vector<double> values;
    int n_max = 0;
};

struct BracketStep {
    double lo = 0.0;
    double hi = 0.0;
};

struct BesselConstants {
    double lamb_sqrt = 0.0;   // first positive root u* of lamb_map
    double lambda_DN0 = 0.0;  // u*^2
    double j01 = 0.0;         // first positive zero of J0
    double lambda_F0 = 0.0;   // j01^2
    std::vector<BracketStep> lamb_trace;
};

namespace spectral {

inline constexpr double kPoleGuard = 1e-9;

// [(1/2) + s + n]^2 for n = 0..n_max.
EigenvalueList eigenvalues(double s, int n_max);

// Distance from z to the nearest Friedrichs eigenvalue.
double eigenvalue_distance(double s, Complex z);

// Closed-form m_{0,0,s}(z). Throws NearPoleError within `guard` of an eigenvalue.
MFunctionSample m_function(double s, Complex z, double guard = kPoleGuard);

// -theta~(z, pi) / phi~(z, pi) through numerical boundary-value extraction.
Complex m_function_quotient(double s, Complex z, const ExtractionConfig& cfg = {});

// Roots of 1/m on (z_min, z_max): grid bracketing then bisection.
std::vector<double> scan_poles(double s, double z_min, double z_max, double step = 0.05,
                               double tol = 1e-10);

// True iff Im m(z) > 0 at every sample (all samples need Im z > 0).
bool herglotz_check(double s, const std::vector<Complex>& z_samples);

// J0(u) - 2u J1(u); its first positive root squared is lambda_{D,N,0}.
double lamb_map(double u);
// J0(u) + 2u J1(u), exposed for comparison.
double lamb_map_plus(double u);

BesselConstants bessel_constants();

// f0(lambda, x) = x^{1/2} J0(lambda^{1/2} x) and its x-derivative.
std::pair<double, double> f0_eval(double lambda, double x);

}  // namespace spectral
}  // namespace hardysin
