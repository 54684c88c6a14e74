#include <doctest.h>

#include <cmath>
#include <numeric>

#include "hardysin/error.hpp"
#include "hardysin/quadrature.hpp"
#include "hardysin/specfun.hpp"

using namespace hardysin;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
    for (const int n : {1, 2, 5, 16, 32}) {
        CAPTURE(n);
        const auto& rule = quadrature::gauss_legendre(n);
        const double wsum = std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0);
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
        // Degree 2n - 1 is exact: int_{-1}^{1} x^{2n-2} = 2 / (2n - 1).
        double moment = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            moment += rule.weights[i] * std::pow(rule.nodes[i], 2 * n - 2);
        }
        CHECK(moment == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
        CHECK(std::is_sorted(rule.nodes.begin(), rule.nodes.end()));
    }
    CHECK_THROWS_AS(quadrature::gauss_legendre(0), DomainError);
}

TEST_CASE("pairwise summation is order-stable") {
    std::vector<double> terms(1000, 0.1);
    CHECK(quadrature::pairwise_sum(terms) == doctest::Approx(100.0).epsilon(1e-15));
}

TEST_CASE("graded breakpoints refine toward the flagged ends") {
    quadrature::CompositeConfig cfg;
    cfg.panels = 4;
    cfg.grading_levels = 3;
    const auto pts = quadrature::breakpoints(0.0, 1.0, quadrature::Grading::Left, cfg);
    REQUIRE(pts.size() == 4 + 1 + 3);
    CHECK(pts[1] == doctest::Approx(0.25 / 8.0));
    CHECK(pts.back() == 1.0);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
}

TEST_CASE("composite and singular integration") {
    CHECK(quadrature::integrate([](double x) { return std::sin(x); }, 0.0, kPi) ==
          doctest::Approx(2.0).epsilon(1e-14));
    // int_0^1 x^{-1/2} = 2 and int_0^1 ln x = -1.
    CHECK(quadrature::integrate_singular([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                                         true, false) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(quadrature::integrate_singular([](double x) { return std::log(x); }, 0.0, 1.0, true,
                                         false) == doctest::Approx(-1.0).epsilon(1e-12));
    // Reversed limits flip the sign.
    CHECK(quadrature::integrate([](double x) { return x; }, 1.0, 0.0) ==
          doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("adaptive Gauss-Kronrod") {
    const auto r = quadrature::adaptive([](double x) { return std::exp(-x * x); }, 0.0, 3.0);
    CHECK(r.value == doctest::Approx(0.5 * std::sqrt(kPi) * std::erf(3.0)).epsilon(1e-13));
    CHECK(r.error_estimate < 1e-10);
}
