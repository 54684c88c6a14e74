#include "hardysin/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "hardysin/error.hpp"

namespace hardysin {

void SeriesConfig::validate() const {
    if (!(target_rel_err > 0.0)) {
        throw DomainError("SeriesConfig: target_rel_err must be positive");
    }
    if (max_terms < 1) {
        throw DomainError("SeriesConfig: max_terms must be at least 1");
    }
}

namespace specfun {
namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;

// B_{2k} for k = 1..10.
constexpr std::array<double, 10> kBernoulliEven = {
    1.0 / 6.0,       -1.0 / 30.0,      1.0 / 42.0,   -1.0 / 30.0,
    5.0 / 66.0,      -691.0 / 2730.0,  7.0 / 6.0,    -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0};

// Stirling's series is used once |z| exceeds this radius.
constexpr double kStirlingRadius = 15.0;
// Digamma asymptotics are used once Re z exceeds this value.
constexpr double kDigammaShift = 10.0;

Complex wrap_imag(Complex w) {
    double im = std::remainder(w.imag(), 2.0 * kPi);
    if (im <= -kPi) im += 2.0 * kPi;
    return {w.real(), im};
}

// Analytic log Gamma for Re z >= 1/2 (no branch normalisation).
Complex log_gamma_right(Complex z) {
    Complex shift_log{0.0, 0.0};
    while (std::abs(z) < kStirlingRadius) {
        shift_log += std::log(z);
        z += 1.0;
    }
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex series{0.0, 0.0};
    Complex power = inv;
    for (std::size_t k = 0; k < kBernoulliEven.size(); ++k) {
        const double n = 2.0 * static_cast<double>(k + 1);
        series += kBernoulliEven[k] / (n * (n - 1.0)) * power;
        power *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + kLogSqrt2Pi + series - shift_log;
}

// log(sin(pi z)) without overflow for large |Im z|.
Complex log_sin_pi(Complex z) {
    if (std::abs(z.imag()) < 20.0) {
        return std::log(sin_pi(z));
    }
    // sin(pi z) = e^{-i pi z}(1 - e^{2 i pi z})/(2i) for Im z > 0 and the
    // mirror image below the axis.
    const Complex i{0.0, 1.0};
    if (z.imag() > 0.0) {
        return -i * kPi * z - std::log(2.0 * i) +
               std::log(1.0 - std::exp(2.0 * i * kPi * z));
    }
    return i * kPi * z - std::log(-2.0 * i) +
           std::log(1.0 - std::exp(-2.0 * i * kPi * z));
}

Complex digamma_right(Complex z) {
    Complex shift{0.0, 0.0};
    while (z.real() < kDigammaShift) {
        shift += 1.0 / z;
        z += 1.0;
    }
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex series{0.0, 0.0};
    Complex power = inv2;
    for (std::size_t k = 0; k < 8; ++k) {
        const double n = 2.0 * static_cast<double>(k + 1);
        series += kBernoulliEven[k] / n * power;
        power *= inv2;
    }
    return std::log(z) - 0.5 * inv - series - shift;
}

std::string describe(Complex z) {
    return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

}  // namespace

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

Complex sin_pi(Complex z) {
    const double n = std::round(z.real());
    const Complex r{z.real() - n, z.imag()};
    const Complex v = std::sin(kPi * r);
    return std::fmod(std::abs(n), 2.0) == 1.0 ? -v : v;
}

Complex cos_pi(Complex z) {
    const double n = std::round(z.real());
    const Complex r{z.real() - n, z.imag()};
    const Complex v = std::cos(kPi * r);
    return std::fmod(std::abs(n), 2.0) == 1.0 ? -v : v;
}

Complex cot_pi(Complex z) {
    if (std::abs(z.imag()) > 20.0) {
        return z.imag() > 0.0 ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
    }
    return cos_pi(z) / sin_pi(z);
}

Complex log_gamma(Complex z) {
    if (is_nonpositive_integer(z)) {
        throw PoleError("log_gamma: pole at " + describe(z));
    }
    if (z.real() >= 0.5) {
        return wrap_imag(log_gamma_right(z));
    }
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    const Complex w = std::log(kPi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
    return wrap_imag(w);
}

Complex gamma(Complex z) {
    const Complex g = std::exp(log_gamma(z));
    if (z.imag() == 0.0) return {g.real(), 0.0};
    return g;
}

Complex rgamma(Complex z) {
    if (is_nonpositive_integer(z)) return {0.0, 0.0};
    const Complex g = std::exp(-log_gamma(z));
    if (z.imag() == 0.0) return {g.real(), 0.0};
    return g;
}

Complex digamma(Complex z) {
    if (is_nonpositive_integer(z)) {
        throw PoleError("digamma: pole at " + describe(z));
    }
    if (z.real() < 0.5) {
        // psi(1-z) - psi(z) = pi cot(pi z)
        return digamma_right(1.0 - z) - kPi * cot_pi(z);
    }
    return digamma_right(z);
}

Complex digamma_over_gamma(Complex z) {
    if (is_nonpositive_integer(z)) {
        const auto k = static_cast<int>(-z.real());
        double factorial = 1.0;
        for (int j = 2; j <= k; ++j) factorial *= j;
        return {(k % 2 == 0 ? -1.0 : 1.0) * factorial, 0.0};
    }
    return digamma(z) * rgamma(z);
}

Complex pochhammer(Complex z, std::int64_t n) {
    if (n < 0) throw DomainError("pochhammer: n must be nonnegative");
    Complex p{1.0, 0.0};
    for (std::int64_t k = 0; k < n; ++k) p *= z + static_cast<double>(k);
    return p;
}

Complex hyp2f1_series(Complex a, Complex b, Complex c, double x,
                      const SeriesConfig& cfg) {
    cfg.validate();
    if (!(x >= 0.0 && x < 1.0)) {
        throw DomainError("hyp2f1_series: argument must lie in [0, 1)");
    }
    if (is_nonpositive_integer(c)) {
        throw DomainError("hyp2f1_series: c is a nonpositive integer");
    }
    Complex sum{1.0, 0.0};
    Complex term{1.0, 0.0};
    if (x == 0.0) return sum;

    // Past this index the term ratio is monotone and tends to x.
    const double settle = std::max({std::abs(a), std::abs(b), std::abs(c)}) + 2.0;
    for (std::int64_t n = 0; n < cfg.max_terms; ++n) {
        const double nd = static_cast<double>(n);
        const Complex ratio = (a + nd) * (b + nd) / ((c + nd) * (nd + 1.0)) * x;
        term *= ratio;
        sum += term;
        if (term == Complex{0.0, 0.0}) return sum;  // terminating series
        if (nd > settle) {
            const double r = std::max(std::abs(ratio), x);
            if (r < 1.0 && std::abs(term) * r / (1.0 - r) <=
                               cfg.target_rel_err * std::abs(sum)) {
                return sum;
            }
        }
    }
    throw ConvergenceError("hyp2f1_series: no convergence within " +
                           std::to_string(cfg.max_terms) + " terms at x = " +
                           std::to_string(x));
}

Complex hyp2f1_derivative(Complex a, Complex b, Complex c, double x,
                          const SeriesConfig& cfg) {
    if (is_nonpositive_integer(c)) {
        throw DomainError("hyp2f1_derivative: c is a nonpositive integer");
    }
    return a * b / c * hyp2f1_series(a + 1.0, b + 1.0, c + 1.0, x, cfg);
}

namespace {

// Ascending series in extended precision; the terms reach e^x/sqrt(2 pi x)
// in magnitude, so the working precision must absorb that cancellation.
double bessel_j_ascending(int order, double x) {
    const long double half = static_cast<long double>(x) / 2.0L;
    const long double q = -half * half;
    long double term = order == 0 ? 1.0L : half;
    long double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<long double>(k) * static_cast<long double>(k + order));
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum) && std::fabs(term) < 1e-22L) break;
    }
    return static_cast<double>(sum);
}

// Hankel's large-argument expansion.
double bessel_j_asymptotic(int order, double x) {
    const double mu = 4.0 * order * order;
    double p = 1.0;
    double q = 0.0;
    double a = 1.0;  // a_k(nu) / x^k
    double last = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 60; ++k) {
        a *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
        const double mag = std::fabs(a);
        if (mag > last) break;  // series has started to diverge
        last = mag;
        // k = 1,2,3,... contribute to Q, P, Q, P with signs +, -, -, +
        const int r = k % 4;
        if (r == 1) q += a;
        else if (r == 2) p -= a;
        else if (r == 3) q -= a;
        else p += a;
        if (mag < 1e-18) break;
    }
    const double chi = x - (0.5 * order + 0.25) * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

constexpr double kBesselCrossover = 17.0;

}  // namespace

double bessel_j(int order, double x) {
    if (order != 0 && order != 1) {
        throw DomainError("bessel_j: only orders 0 and 1 are supported");
    }
    if (!std::isfinite(x)) throw DomainError("bessel_j: argument must be finite");
    const double ax = std::fabs(x);
    const double v = ax <= kBesselCrossover ? bessel_j_ascending(order, ax)
                                            : bessel_j_asymptotic(order, ax);
    return (order == 1 && x < 0.0) ? -v : v;
}

}  // namespace specfun
}  // namespace hardysin
