#include "hardysin/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

#include "hardysin/closed_form.hpp"
#include "hardysin/error.hpp"

namespace hardysin::spectral {
namespace {

void require_limit_circle(double s, const char* op) {
    if (!(s >= 0.0 && s < 1.0)) {
        throw DomainError(std::string(op) + ": requires s in [0, 1), got " + std::to_string(s));
    }
}

// m without the pole guard; may be infinite or NaN exactly at an eigenvalue.
Complex m_raw(double s, Complex z) {
    using specfun::digamma;
    using specfun::rgamma;
    const Complex w = std::sqrt(z);
    if (s == 0.0) {
        return -(4.0 * kEulerGamma + digamma((0.5 + w) / 2.0) + digamma((0.5 - w) / 2.0) +
                 digamma((1.5 + w) / 2.0) + digamma((1.5 - w) / 2.0)) /
               4.0;
    }
    const Complex pref =
        specfun::gamma(Complex{-s, 0.0}) / (4.0 * specfun::gamma(Complex{1.0 + s, 0.0}));
    // Gamma(A+)Gamma(A-)/(Gamma(B+)Gamma(B-)) written with reciprocal gammas.
    const auto ratio = [&](double shift) {
        return rgamma((shift - s + w) / 2.0) * rgamma((shift - s - w) / 2.0) /
               (rgamma((shift + s + w) / 2.0) * rgamma((shift + s - w) / 2.0));
    };
    return pref * (ratio(1.5) + ratio(0.5));
}

// 1/m on the real axis, zero where m is infinite.
double inverse_m(double s, double z) {
    Complex m;
    try {
        m = m_raw(s, Complex{z, 0.0});
    } catch (const PoleError&) {
        return 0.0;
    }
    if (!std::isfinite(m.real())) return 0.0;
    return 1.0 / m.real();
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol,
              std::vector<BracketStep>* trace) {
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw RootError("bisect: no sign change on [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
    }
    if (trace != nullptr) trace->push_back({lo, hi});
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (trace != nullptr) trace->push_back({lo, hi});
    }
    return 0.5 * (lo + hi);
}

}  // namespace

EigenvalueList eigenvalues(double s, int n_max) {
    if (!std::isfinite(s) || s < 0.0) throw DomainError("eigenvalues: s must be nonnegative");
    if (n_max < 0) throw DomainError("eigenvalues: n_max must be nonnegative");
    EigenvalueList out{s, {}, n_max};
    for (int n = 0; n <= n_max; ++n) {
        const double r = 0.5 + s + n;
        out.values.push_back(r * r);
    }
    return out;
}

double eigenvalue_distance(double s, Complex z) {
    // sqrt(lambda_n) = 1/2 + s + n; nearest n in the square-root scale, checked both ways.
    const double root = std::sqrt(std::max(z.real(), 0.0));
    const double guess = std::max(0.0, std::floor(root - 0.5 - s));
    double best = std::numeric_limits<double>::infinity();
    for (double n = std::max(0.0, guess - 1.0); n <= guess + 2.0; n += 1.0) {
        const double r = 0.5 + s + n;
        best = std::min(best, std::abs(z - Complex{r * r, 0.0}));
    }
    return best;
}

MFunctionSample m_function(double s, Complex z, double guard) {
    require_limit_circle(s, "m_function");
    const double d = eigenvalue_distance(s, z);
    if (d < guard) {
        std::ostringstream msg;
        msg << "m_function: z is within " << d << " of an eigenvalue (guard " << guard << ")";
        throw NearPoleError(msg.str());
    }
    const Complex m = m_raw(s, z);
    if (!std::isfinite(m.real()) || !std::isfinite(m.imag())) {
        throw NumericalError("m_function: non-finite value");
    }
    return {z, m, s};
}

Complex m_function_quotient(double s, Complex z, const ExtractionConfig& cfg) {
    const SpectralParam sp = SpectralParam::make(s);
    const auto phi = [&](double x) { return closed_form::eval_phi_theta(sp, z, x).first.value; };
    const auto theta = [&](double x) {
        return closed_form::eval_phi_theta(sp, z, x).second.value;
    };
    const GeneralizedBV bphi = extract_bv(phi, sp, cfg);
    const GeneralizedBV btheta = extract_bv(theta, sp, cfg);
    return -btheta.gpi / bphi.gpi;
}

std::vector<double> scan_poles(double s, double z_min, double z_max, double step, double tol) {
    require_limit_circle(s, "scan_poles");
    if (!(z_min < z_max)) throw DomainError("scan_poles: need z_min < z_max");
    if (!(step > 0.0) || !(tol > 0.0)) throw DomainError("scan_poles: step and tol must be > 0");
    const auto h = [s](double z) { return inverse_m(s, z); };
    std::vector<double> roots;
    const auto n = static_cast<long>(std::ceil((z_max - z_min) / step));
    double a = z_min;
    double ha = h(a);
    for (long k = 1; k <= n; ++k) {
        const double b = std::min(z_min + static_cast<double>(k) * step, z_max);
        const double hb = h(b);
        // m increases between poles, so 1/m falls through zero at a pole and
        // jumps from -inf to +inf at a zero of m.
        if (ha > 0.0 && hb <= 0.0) {
            const double r = bisect(h, a, b, tol, nullptr);
            if (r > z_min + kPoleGuard && r < z_max - kPoleGuard) roots.push_back(r);
        }
        a = b;
        ha = hb;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool herglotz_check(double s, const std::vector<Complex>& z_samples) {
    for (const Complex& z : z_samples) {
        if (!(z.imag() > 0.0)) {
            throw DomainError("herglotz_check: samples must have positive imaginary part");
        }
        if (!(m_function(s, z).m.imag() > 0.0)) return false;
    }
    return true;
}

double lamb_map(double u) {
    if (u < 0.0) throw DomainError("lamb_map: u must be nonnegative");
    return specfun::bessel_j(0, u) - 2.0 * u * specfun::bessel_j(1, u);
}

double lamb_map_plus(double u) {
    if (u < 0.0) throw DomainError("lamb_map_plus: u must be nonnegative");
    return specfun::bessel_j(0, u) + 2.0 * u * specfun::bessel_j(1, u);
}

BesselConstants bessel_constants() {
    BesselConstants out;
    out.lamb_sqrt = bisect(lamb_map, 0.0, 2.4, 1e-15, &out.lamb_trace);
    out.lambda_DN0 = out.lamb_sqrt * out.lamb_sqrt;
    out.j01 = bisect([](double x) { return specfun::bessel_j(0, x); }, 2.0, 3.0, 1e-15, nullptr);
    out.lambda_F0 = out.j01 * out.j01;
    return out;
}

std::pair<double, double> f0_eval(double lambda, double x) {
    if (!(lambda >= 0.0)) throw DomainError("f0_eval: lambda must be nonnegative");
    if (!(x > 0.0 && x <= kPi)) throw DomainError("f0_eval: x must lie in (0, pi]");
    const double k = std::sqrt(lambda);
    const double sx = std::sqrt(x);
    const double j0 = specfun::bessel_j(0, k * x);
    const double j1 = specfun::bessel_j(1, k * x);
    return {sx * j0, 0.5 / sx * j0 - sx * k * j1};
}

}  // namespace hardysin::spectral
