#include "hardysin/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "hardysin/error.hpp"

namespace hardysin::quadrature {
namespace {

constexpr double kPi = 3.14159265358979323846;

Rule build_rule(int n) {
    Rule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-like starting guess for the i-th root, largest first.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) {
                p1 = x;
                p0 = 1.0;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        // Recompute the derivative at the converged root.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

}  // namespace

const Rule& gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: need at least one node");
    static std::mutex mutex;
    static std::map<int, Rule> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

double pairwise_sum(std::span<const double> terms) {
    if (terms.size() <= 8) {
        double s = 0.0;
        for (double t : terms) s += t;
        return s;
    }
    const std::size_t half = terms.size() / 2;
    return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

void CompositeConfig::validate() const {
    if (nodes_per_panel < 1 || panels < 1 || grading_levels < 0 ||
        !(grading_ratio > 0.0 && grading_ratio < 1.0)) {
        throw DomainError("CompositeConfig: invalid quadrature parameters");
    }
}

std::vector<double> breakpoints(double a, double b, Grading grading,
                                const CompositeConfig& cfg) {
    cfg.validate();
    const double h = (b - a) / cfg.panels;
    const bool left = grading == Grading::Left || grading == Grading::Both;
    const bool right = grading == Grading::Right || grading == Grading::Both;

    std::vector<double> pts;
    pts.push_back(a);
    if (left) {
        double d = h;
        std::vector<double> inner;
        for (int k = 0; k < cfg.grading_levels; ++k) {
            d *= cfg.grading_ratio;
            inner.push_back(a + d);
        }
        pts.insert(pts.end(), inner.rbegin(), inner.rend());
    }
    for (int k = 1; k < cfg.panels; ++k) pts.push_back(a + k * h);
    if (right) {
        std::vector<double> inner;
        double d = h;
        for (int k = 0; k < cfg.grading_levels; ++k) {
            d *= cfg.grading_ratio;
            inner.push_back(b - d);
        }
        pts.insert(pts.end(), inner.begin(), inner.end());
    }
    pts.push_back(b);
    return pts;
}

double integrate_panels(const Integrand& f, std::span<const double> breaks,
                        const CompositeConfig& cfg) {
    const Rule& rule = gauss_legendre(cfg.nodes_per_panel);
    std::vector<double> terms;
    terms.reserve(breaks.size() * rule.nodes.size());
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double lo = breaks[p];
        const double hi = breaks[p + 1];
        if (!(hi > lo)) continue;
        const double half = 0.5 * (hi - lo);
        const double mid = 0.5 * (hi + lo);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            terms.push_back(rule.weights[i] * half * f(mid + half * rule.nodes[i]));
        }
    }
    const double value = pairwise_sum(terms);
    if (!std::isfinite(value)) {
        throw QuadratureError("composite quadrature produced a non-finite value");
    }
    return value;
}

double integrate(const Integrand& f, double a, double b, Grading grading,
                 const CompositeConfig& cfg) {
    if (a == b) return 0.0;
    if (a > b) return -integrate(f, b, a, grading, cfg);
    const auto breaks = breakpoints(a, b, grading, cfg);
    return integrate_panels(f, breaks, cfg);
}

namespace {

// Integral over [end, end + sign*L] of f with a possible singularity at `end`,
// through t = end + sign * L * exp(1 - 1/v).
double singular_half(const Integrand& f, double end, double length, double sign,
                     const CompositeConfig& cfg) {
    const Integrand mapped = [&](double v) {
        const double d = length * std::exp(1.0 - 1.0 / v);
        // Below this the mapped point carries no usable digits; integrable
        // singularities contribute less than 1e-10 there.
        if (d < 1e-280) return 0.0;
        const double val = f(end + sign * d);
        return val * d / (v * v);
    };
    CompositeConfig inner = cfg;
    inner.grading_levels = std::max(cfg.grading_levels, 30);
    return integrate(mapped, 0.0, 1.0, Grading::Left, inner);
}

}  // namespace

double integrate_singular(const Integrand& f, double a, double b, bool left_singular,
                          bool right_singular, const CompositeConfig& cfg) {
    if (a == b) return 0.0;
    if (a > b) return -integrate_singular(f, b, a, right_singular, left_singular, cfg);
    const double mid = 0.5 * (a + b);
    const double half = mid - a;
    const double lo = left_singular ? singular_half(f, a, half, +1.0, cfg)
                                    : integrate(f, a, mid, Grading::Left, cfg);
    const double hi = right_singular ? singular_half(f, b, half, -1.0, cfg)
                                     : integrate(f, mid, b, Grading::Right, cfg);
    return lo + hi;
}

AdaptiveResult adaptive(const Integrand& f, double a, double b, double rel_tol,
                        unsigned max_depth) {
    if (a == b) return {};
    double err = 0.0;
    double l1 = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, a, b, max_depth, rel_tol, &err, &l1);
    if (!std::isfinite(value) || err > rel_tol * std::max(std::fabs(value), l1) + 1e-300) {
        throw QuadratureError("adaptive quadrature: error estimate " + std::to_string(err) +
                              " exceeds tolerance for value " + std::to_string(value));
    }
    return {value, err};
}

}  // namespace hardysin::quadrature
