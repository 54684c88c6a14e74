#include <doctest.h>

#include <cmath>

#include "hardysin/closed_form.hpp"
#include "hardysin/error.hpp"
#include "oracle.hpp"

using namespace hardysin;
using oracle::C;
using oracle::close;

namespace {

struct Sample {
    double s;
    C z;
    double x;
    C y1, y1p, y2, y2p;
};

const Sample kSamples[] = {
    {0.3, {2.0, 1.0}, 0.2,
     {-0.52896832333951996, -0.38151706155541215}, {1.3850169604255984, -0.21418262757451901},
     {0.52454538465039257, -0.26117791093215005}, {0.83489260604583266, 0.29407918103872887}},
    {0.3, {2.0, 1.0}, 2.9,
     {-0.4692345218785041, -0.38813363617250351}, {-1.4807044192706329, 0.10748111507485528},
     {-0.55646828866983057, 0.24817008186274312}, {0.70371612974926246, 0.32849345403029921}},
    {0.0, {1.7, 0.0}, 0.1,
     {-0.4576885833010348, 0.0}, {0.59198754912768366, 0.0},
     {0.4575419174728282, 0.0}, {1.5930938814187175, 0.0}},
    {0.0, {1.7, 0.0}, 1.2,
     {0.86853226627129243, 0.0}, {0.69525362193318261, 0.0},
     {0.35435917850023481, 0.0}, {-0.86770581468189526, 0.0}},
    {0.75, {-3.0, 0.0}, 0.05,
     {11.404860676907209, 0.0}, {-66.179972432721043, 0.0},
     {6.1646778602360718, 0.0}, {-35.859991843226659, 0.0}},
};

}  // namespace

TEST_CASE("fundamental system matches reference values in every region") {
    for (const Sample& c : kSamples) {
        CAPTURE(c.s);
        CAPTURE(c.x);
        const SpectralParam sp = SpectralParam::make(c.s);
        const SolutionEval y1 = closed_form::eval_y(1, sp, c.z, c.x);
        const SolutionEval y2 = closed_form::eval_y(2, sp, c.z, c.x);
        CHECK(close(y1.value, c.y1, 1e-11));
        CHECK(close(y1.derivative, c.y1p, 1e-10));
        CHECK(close(y2.value, c.y2, 1e-11));
        CHECK(close(y2.derivative, c.y2p, 1e-10));
    }
}

TEST_CASE("boundary table matches the gamma and digamma closed forms") {
    const BoundaryTable t = closed_form::boundary_table(SpectralParam::make(0.3), {2.0, 1.0});
    CHECK(close(t.y1_0, {-0.93866183101664385, -0.32139975132735161}, 1e-12));
    CHECK(close(t.y1p_0, {2.1259026611807172, -0.059440993079151691}, 1e-12));
    CHECK(close(t.y2_0, {0.312140302847458, -0.36590483506718086}, 1e-12));
    CHECK(close(t.y2p_0, {0.60156758778231102, 0.64249796800245956}, 1e-12));
    CHECK(close(t.determinant(), {-1.0, 0.0}, 1e-12));

    const BoundaryTable l = closed_form::boundary_table(SpectralParam::make(0.0), {1.7, 0.0});
    CHECK(close(l.y1_0, {-0.89393826087173351, 0.0}, 1e-12));
    CHECK(close(l.y1p_0, {0.60055935740512752, 0.0}, 1e-12));
    CHECK(close(l.y2_0, {0.20580537609618237, 0.0}, 1e-12));
    CHECK(close(l.y2p_0, {0.9803827556575592, 0.0}, 1e-12));
    CHECK(close(l.y1_pi, -l.y1_0, 0.0));
    CHECK(close(l.y2p_pi, -l.y2p_0, 0.0));
}

TEST_CASE("Wronskian of the fundamental system is -1") {
    std::vector<double> grid;
    for (int i = 1; i < 30; ++i) grid.push_back(kPi * i / 30.0);
    for (const double s : {0.0, 0.4}) {
        for (const C w : closed_form::wronskian_y(SpectralParam::make(s), {3.0, -2.0}, grid)) {
            CHECK(std::abs(w + 1.0) < 1e-9);
        }
    }
}

TEST_CASE("zero-energy solutions for s = 0") {
    const SpectralParam sp = SpectralParam::make(0.0);
    const double xs[] = {0.3, 1.0, 2.0, 3.0};
    const double u[] = {0.546691412902354033, 0.978166825437582639, 1.26720459018615634,
                        0.965908282276803490};
    const double uh[] = {0.935244992245802830, 0.476338218310138388, -0.360679258233367355,
                         -0.926420483662895491};
    for (int i = 0; i < 4; ++i) {
        CAPTURE(xs[i]);
        CHECK(std::fabs(closed_form::eval_principal_0(sp, xs[i]).value.real() - u[i]) < 1e-11);
        CHECK(std::fabs(closed_form::eval_nonprincipal_0(sp, xs[i]).value.real() - uh[i]) < 1e-11);
    }
    CHECK(closed_form::log_solution_offset() == doctest::Approx(0.508645214884939309).epsilon(1e-12));
}

TEST_CASE("zero-energy solutions for s > 0") {
    struct Row {
        double s, x, u, uh;
    };
    const Row rows[] = {
        {0.25, 0.1, 0.17780570092577154, 1.1244482514802421},
        {0.25, 1.0, 0.98679925711023508, 1.9566241122947861},
        {0.25, 2.5, 1.7372771239402431, 2.0485095117841917},
        {0.75, 0.1, 0.056242506419595538, 1.1867548988251297},
        {0.75, 1.0, 1.01598893982856, 0.73837932552360612},
        {0.75, 2.5, 3.7032601922242424, 0.99983747586608353},
    };
    for (const Row& r : rows) {
        CAPTURE(r.s);
        CAPTURE(r.x);
        const SpectralParam sp = SpectralParam::make(r.s);
        CHECK(std::fabs(closed_form::eval_principal_0(sp, r.x).value.real() - r.u) < 1e-10);
        CHECK(std::fabs(closed_form::eval_nonprincipal_0(sp, r.x).value.real() - r.uh) < 1e-10);
    }
}

TEST_CASE("principal solutions at pi mirror those at 0") {
    const SpectralParam sp = SpectralParam::make(0.3);
    const SolutionEval a = closed_form::eval_principal_0(sp, 0.7);
    const SolutionEval b = closed_form::eval_principal_pi(sp, kPi - 0.7);
    CHECK(close(b.value, a.value, 1e-13));
    CHECK(close(b.derivative, -a.derivative, 1e-13));
}

TEST_CASE("factorization pair vanishes on sin^{(1+2s)/2}") {
    const double s = 0.3;
    const double q = 0.5 + s;
    AnalyticTestFunction f{
        [q](double x) { return std::pow(std::sin(x), q); },
        [q](double x) { return q * std::pow(std::sin(x), q - 1.0) * std::cos(x); },
        [q](double x) {
            const double sn = std::sin(x);
            return q * (q - 1.0) * std::pow(sn, q - 2.0) * std::cos(x) * std::cos(x) -
                   q * std::pow(sn, q);
        }};
    for (const double x : {0.4, 1.3, 2.6}) {
        const auto [factored, shifted] = closed_form::factor_pair(SpectralParam::make(s), f, x);
        CHECK(std::fabs(factored) < 1e-12);
        CHECK(std::fabs(shifted) < 1e-12);
    }
}

TEST_CASE("asymptotic coefficients and domain checks") {
    CHECK(closed_form::asymptotic_coefficient(true, 0.0) == doctest::Approx(-1.0 / 48.0));
    CHECK(closed_form::asymptotic_coefficient(false, 0.25) ==
          doctest::Approx((4 * 0.0625 - 1.0) / (48.0 - 12.0)));
    CHECK_THROWS_AS(SpectralParam::make(-0.1), DomainError);
    CHECK(SpectralParam::make(1.5).classification == Classification::LimitPoint);
    CHECK_THROWS_AS(closed_form::eval_principal_0(SpectralParam::make(0.2), 0.0), DomainError);
    CHECK_THROWS_AS(closed_form::eval_y(3, SpectralParam::make(0.2), {1.0, 0.0}, 1.0), DomainError);
}
