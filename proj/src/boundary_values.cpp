#include "hardysin/boundary_values.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "hardysin/error.hpp"

namespace hardysin {
namespace {

constexpr double kPiLow = 1.2246467991473532e-16;

struct EndpointFit {
    Complex value;       // coefficient of the nonprincipal-type leading term
    Complex derivative;  // coefficient of the principal-type leading term
    double change = 0.0;
};

// Columns: nonprincipal family (terms), then principal family (terms).
Eigen::MatrixXd design(const std::vector<double>& xi, double s, bool at_pi, int terms) {
    const auto n = static_cast<Eigen::Index>(xi.size());
    Eigen::MatrixXd A(n, 2 * terms);
    const double p = (1.0 - 2.0 * s) / 2.0;
    const double q = (1.0 + 2.0 * s) / 2.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = xi[static_cast<std::size_t>(i)];
        for (int k = 0; k < terms; ++k) {
            const double x2k = std::pow(x, 2.0 * k);
            double lead;
            if (s > 0.0) {
                lead = std::pow(x, p) / (2.0 * s);
                if (at_pi) lead = -lead;
            } else {
                lead = std::sqrt(x) * (at_pi ? std::log(x) : std::log(1.0 / x));
            }
            A(i, k) = lead * x2k;
            A(i, terms + k) = (s > 0.0 ? std::pow(x, q) : std::sqrt(x)) * x2k;
        }
    }
    return A;
}

EndpointFit fit_endpoint(const std::vector<double>& xi, const std::vector<Complex>& values,
                         double s, bool at_pi, const ExtractionConfig& cfg) {
    const auto n = static_cast<Eigen::Index>(xi.size());
    Eigen::VectorXd re(n);
    Eigen::VectorXd im(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        re(i) = values[static_cast<std::size_t>(i)].real();
        im(i) = values[static_cast<std::size_t>(i)].imag();
    }

    const auto solve = [&](int terms, double* residual) {
        Eigen::MatrixXd A = design(xi, s, at_pi, terms);
        Eigen::VectorXd scale = A.colwise().norm().transpose();
        for (Eigen::Index j = 0; j < A.cols(); ++j) A.col(j) /= scale(j);
        const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
        Eigen::VectorXd cr = qr.solve(re);
        Eigen::VectorXd ci = qr.solve(im);
        if (residual != nullptr) {
            const double rr = (A * cr - re).norm();
            const double ri = (A * ci - im).norm();
            const double denom = std::max(std::hypot(re.norm(), im.norm()), 1e-300);
            *residual = std::hypot(rr, ri) / denom;
        }
        cr.array() /= scale.array();
        ci.array() /= scale.array();
        return std::pair<Complex, Complex>{Complex{cr(0), ci(0)},
                                           Complex{cr(terms), ci(terms)}};
    };

    double residual = 0.0;
    const auto full = solve(cfg.terms, &residual);
    if (!(residual <= cfg.residual_tol)) {
        throw ExtrapolationError("extract_bv: relative residual " + std::to_string(residual) +
                                 " at " + (at_pi ? "pi" : "0") +
                                 " exceeds tolerance; function does not follow the endpoint "
                                 "model");
    }
    const auto reduced = solve(cfg.terms - 1, nullptr);
    const double change =
        std::max(std::abs(full.first - reduced.first), std::abs(full.second - reduced.second));
    return {full.first, full.second, change};
}

}  // namespace

void ExtractionConfig::validate() const {
    if (!(base > 1.0) || !(first_scale > 0.0 && first_scale < 1.0) || depth < 3 || terms < 2 ||
        2 * terms > depth || !(residual_tol > 0.0)) {
        throw DomainError("ExtractionConfig: invalid parameters");
    }
}

GeneralizedBV extract_bv(const SampledFunction& f, const SpectralParam& s,
                         const ExtractionConfig& cfg) {
    cfg.validate();
    if (!s.limit_circle()) {
        throw DomainError("extract_bv: generalized boundary values need s in [0, 1)");
    }
    std::vector<double> xi0;
    std::vector<double> xipi;
    std::vector<Complex> v0;
    std::vector<Complex> vpi;
    for (int k = 0; k < cfg.depth; ++k) {
        const double x = cfg.first_scale * std::pow(cfg.base, -k);
        xi0.push_back(x);
        v0.push_back(f(x));
        const double xr = kPi - x;
        xipi.push_back((kPi - xr) + kPiLow);
        vpi.push_back(f(xr));
    }
    const EndpointFit left = fit_endpoint(xi0, v0, s.s, false, cfg);
    const EndpointFit right = fit_endpoint(xipi, vpi, s.s, true, cfg);
    return {left.value, left.derivative, right.value, right.derivative,
            std::max(left.change, right.change)};
}

bool friedrichs_membership(const GeneralizedBV& bv, double tol) {
    return std::abs(bv.g0) <= tol && std::abs(bv.gpi) <= tol;
}

SecondOrderEstimate second_order_coefficient(const std::function<double(double)>& ratio,
                                             const std::vector<double>& xs, bool log_model) {
    if (xs.size() < 3) {
        throw DomainError("second_order_coefficient: need at least three sample points");
    }
    const auto n = static_cast<Eigen::Index>(xs.size());
    Eigen::MatrixXd A(n, 3);
    Eigen::VectorXd r(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = xs[static_cast<std::size_t>(i)];
        if (!(x > 0.0 && x < 1.0)) {
            throw DomainError("second_order_coefficient: sample points must lie in (0, 1)");
        }
        r(i) = (ratio(x) - 1.0) / (x * x);
        A(i, 0) = 1.0;
        A(i, 1) = log_model ? 1.0 / std::log(x) : x * x;
        A(i, 2) = log_model ? x * x : x * x * x * x;
    }
    const Eigen::VectorXd full = A.colPivHouseholderQr().solve(r);
    // Same model without its last correction, on the smallest two points.
    const Eigen::MatrixXd A2 = A.bottomRows(2).leftCols(2);
    const Eigen::VectorXd two = A2.colPivHouseholderQr().solve(r.tail(2));
    SecondOrderEstimate out;
    out.coefficient = full(0);
    out.log_coefficient = log_model ? full(1) : 0.0;
    out.increment = std::fabs(full(0) - two(0));
    return out;
}

}  // namespace hardysin
