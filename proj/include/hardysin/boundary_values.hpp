#pragma once

// Generalized (Rellich-type) boundary values of a function in the maximal
// domain of tau_s, s in [0, 1).
//
// At x = 0 the function is fitted, by least squares on a geometric sample
// x_k = first_scale * base^{-k}, to the two endpoint families
//   s > 0:  g~(0) (2s)^{-1} x^{(1-2s)/2} (1 + a x^2 + b x^4) + g~'(0) x^{(1+2s)/2} (1 + c x^2 + d x^4)
//   s = 0:  g~(0) x^{1/2} ln(1/x) (1 + ...) + g~'(0) x^{1/2} (1 + ...)
// and symmetrically at x = pi in the distance pi - x.

#include <functional>
#include <vector>

#include "hardysin/closed_form.hpp"

namespace hardysin {

struct GeneralizedBV {
    Complex g0;
    Complex g0p;
    Complex gpi;
    Complex gpip;
    double est_err = 0.0;
};

struct ExtractionConfig {
    double base = 2.0;
    double first_scale = 1e-2;
    int depth = 8;
    // Number of terms kept per endpoint family (leading term included).
    int terms = 3;
    // Relative least-squares residual above which the function is deemed not
    // to follow the endpoint model.
    double residual_tol = 1e-6;

    void validate() const;
};

using SampledFunction = std::function<Complex(double)>;

GeneralizedBV extract_bv(const SampledFunction& f, const SpectralParam& s,
                         const ExtractionConfig& cfg = {});

// True iff |g~(0)| <= tol and |g~(pi)| <= tol.
bool friedrichs_membership(const GeneralizedBV& bv, double tol = 1e-5);

struct SecondOrderEstimate {
    double coefficient = 0.0;      // c in ratio = 1 + c x^2 + ...
    double log_coefficient = 0.0;  // b in ratio = 1 + (c + b / ln x) x^2 + ... (log model)
    double increment = 0.0;        // change against the two-point estimate
};

// Extracts the x^2 coefficient of ratio(x) = value / leading_term from
// samples at the given points (three or more, decreasing) by eliminating the
// higher-order corrections. With `log_model` the correction is c + b/ln(x).
SecondOrderEstimate second_order_coefficient(const std::function<double(double)>& ratio,
                                             const std::vector<double>& xs, bool log_model);

}  // namespace hardysin
