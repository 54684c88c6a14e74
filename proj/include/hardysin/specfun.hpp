#pragma once

// Special-function kernel: complex log-gamma, gamma, digamma, Pochhammer
// symbol, the Gauss hypergeometric series on [0, 1) and Bessel J0/J1.
//
// All functions are pure and thread-safe.

#include <complex>
#include <cstdint>

namespace hardysin {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;

struct SeriesConfig {
    double target_rel_err = 1e-13;
    std::int64_t max_terms = 5000;

    // Throws DomainError when a field is out of range.
    void validate() const;
};

namespace specfun {

// Principal branch of log Gamma(z); imaginary part in (-pi, pi].
Complex log_gamma(Complex z);
Complex gamma(Complex z);

// 1/Gamma(z). Entire, so defined (as zero) at the nonpositive integers.
Complex rgamma(Complex z);

Complex digamma(Complex z);

// psi(z)/Gamma(z), continued through the poles of psi where it takes the
// value (-1)^(k+1) k! at z = -k.
Complex digamma_over_gamma(Complex z);

// Rising factorial (z)_n by direct product.
Complex pochhammer(Complex z, std::int64_t n);

// sin(pi z), cos(pi z) and cot(pi z) with exact reduction by the nearest
// integer, so that zeros at the integers are resolved to full precision.
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);
Complex cot_pi(Complex z);

// True when z is exactly a nonpositive integer.
bool is_nonpositive_integer(Complex z);

// Sum_{n>=0} (a)_n (b)_n / ((c)_n n!) x^n for 0 <= x < 1.
Complex hyp2f1_series(Complex a, Complex b, Complex c, double x,
                      const SeriesConfig& cfg = {});

// d/dx F(a,b;c;x) = (ab/c) F(a+1,b+1;c+1;x).
Complex hyp2f1_derivative(Complex a, Complex b, Complex c, double x,
                          const SeriesConfig& cfg = {});

// Bessel function of the first kind, order 0 or 1, real argument.
double bessel_j(int order, double x);

}  // namespace specfun
}  // namespace hardysin
