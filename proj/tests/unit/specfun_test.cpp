#include <doctest.h>

#include <cmath>

#include "hardysin/error.hpp"
#include "hardysin/specfun.hpp"
#include "oracle.hpp"

using namespace hardysin;
using oracle::C;
using oracle::close;

TEST_CASE("gamma and reciprocal gamma match reference values") {
    CHECK(close(specfun::gamma({0.3, 0.7}), {0.30968625674374916, -0.85678775293927057}, 1e-13));
    CHECK(close(specfun::gamma({-2.5, 0.5}), {-0.33387520352243234, -0.20645730796360841}, 1e-13));
    CHECK(close(specfun::rgamma({-3.2, 0.0}), {1.4512599876819996, 0.0}, 1e-13));
    CHECK(std::abs(specfun::rgamma({-4.0, 0.0})) == 0.0);
    CHECK(close(specfun::gamma({6.0, 0.0}), {120.0, 0.0}, 1e-14));
}

TEST_CASE("gamma rejects nonpositive integers") {
    CHECK_THROWS_AS(specfun::gamma({-3.0, 0.0}), PoleError);
    CHECK_THROWS_AS(specfun::digamma({0.0, 0.0}), PoleError);
}

TEST_CASE("digamma matches reference values") {
    CHECK(close(specfun::digamma({-2.5, 0.5}), {1.1165080219699073, 2.7175825969005915}, 1e-13));
    CHECK(close(specfun::digamma({7.25, 0.0}), {1.910453526883736, 0.0}, 1e-14));
    CHECK(close(specfun::digamma({1.0, 0.0}), {-kEulerGamma, 0.0}, 1e-15));
}

TEST_CASE("digamma over gamma is continuous through the poles") {
    // psi(z)/Gamma(z) -> (-1)^(k+1) k! at z = -k.
    CHECK(close(specfun::digamma_over_gamma({-3.0, 0.0}), {6.0, 0.0}, 1e-14));
    const C near = specfun::digamma_over_gamma({-3.0 + 1e-7, 0.0});
    CHECK(close(near, {6.0, 0.0}, 1e-5));
}

TEST_CASE("pochhammer and trigonometric helpers") {
    CHECK(close(specfun::pochhammer({0.5, 0.0}, 3), {0.5 * 1.5 * 2.5, 0.0}, 1e-15));
    CHECK(close(specfun::pochhammer({-2.0, 0.0}, 4), {0.0, 0.0}, 1e-15));
    CHECK(std::abs(specfun::sin_pi({7.0, 0.0})) == 0.0);
    CHECK(std::abs(specfun::cos_pi({2.5, 0.0})) < 1e-16);
    CHECK(specfun::is_nonpositive_integer({-2.0, 0.0}));
    CHECK_FALSE(specfun::is_nonpositive_integer({-2.0, 1e-300}));
}

TEST_CASE("hypergeometric series matches reference values") {
    CHECK(close(specfun::hyp2f1_series({0.3, 0.1}, -0.4, 1.2, 0.45),
                {0.95072503766442745, -0.016849495674023907}, 1e-13));
    CHECK(close(specfun::hyp2f1_series(1.25, 0.75, 0.5, 0.3), {1.9035267324744045, 0.0}, 1e-13));
    // Terminating series.
    CHECK(close(specfun::hyp2f1_series(-2.0, 1.0, 1.0, 0.5), {0.25, 0.0}, 1e-15));
}

TEST_CASE("hypergeometric series enforces its domain and budget") {
    CHECK_THROWS_AS(specfun::hyp2f1_series(0.5, 0.5, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(specfun::hyp2f1_series(0.5, 0.5, -2.0, 0.3), DomainError);
    SeriesConfig tight;
    tight.max_terms = 5;
    CHECK_THROWS_AS(specfun::hyp2f1_series(0.5, 0.5, 1.0, 0.9, tight), ConvergenceError);
    SeriesConfig bad;
    bad.target_rel_err = -1.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("Bessel J0 and J1 across the small and large argument branches") {
    const double x[] = {1.5, 11.5, 17.0, 25.0};
    const double j0[] = {0.51182767173591813, -0.067653948111665228, -0.16985425215118355,
                         0.096266783275958116};
    const double j1[] = {0.55793650791009964, -0.22837862066532347, -0.09766849275778065,
                         -0.1253502495802899};
    for (int i = 0; i < 4; ++i) {
        CAPTURE(x[i]);
        CHECK(std::fabs(specfun::bessel_j(1, x[i]) - j1[i]) < 1e-12);
        CHECK(std::fabs(specfun::bessel_j(0, x[i]) - j0[i]) < 1e-12);
    }
    CHECK(specfun::bessel_j(1, -1.5) == doctest::Approx(-0.55793650791009964));
    CHECK_THROWS_AS(specfun::bessel_j(2, 1.0), DomainError);
}
