#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hcz/gl2_hc.hpp"
#include "hcz/numeric.hpp"

using namespace hcz;

TEST_CASE("Lanczos gamma") {
    CHECK(gamma_num(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
    CHECK(gamma_num(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK(gamma_num(-0.25) == doctest::Approx(-4.0 * gamma_num(0.75)).epsilon(1e-13));
    CHECK(gamma_num(-0.25) == doctest::Approx(std::tgamma(-0.25)).epsilon(1e-12));
    CHECK_THROWS_WITH_AS(gamma_num(-2.0), doctest::Contains("PoleArgument"), Error);
    CHECK_THROWS_WITH_AS(gamma_num(0.0), doctest::Contains("PoleArgument"), Error);
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> xs(-6.5, 12.0);
    for (int t = 0; t < 200; ++t) {
        double x = xs(rng);
        if (std::abs(x - std::round(x)) < 1e-3 && x < 0.5) continue;
        double g = gamma_num(x);
        CHECK(g == doctest::Approx(std::tgamma(x)).epsilon(1e-12));
        CHECK(gamma_num(x + 1) == doctest::Approx(x * g).epsilon(1e-12));
    }
}

TEST_CASE("numeric evaluation of Gamma expressions") {
    GammaExpr e = ge_mul(GammaExpr::gamma(Q(3, 2)), GammaExpr::gamma(Q(2), -1));
    e.pi_half = 1;
    CHECK(ge_eval_numeric(e, 0.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-13));
    CHECK(ge_eval_numeric(GammaExpr::identity(), 3.7) == 1.0);
    CHECK(ge_eval_numeric(Lambda(0), 0.5) == doctest::Approx(-4.0).epsilon(1e-12));
    double near5 = 5.0 - 1e-6;
    CHECK(ge_eval_numeric(Lambda(0), near5) == doctest::Approx(lambda_closed_form(near5, 0)).epsilon(1e-6));
}

TEST_CASE("quadrature anchors") {
    CHECK(intertwine_quadrature(4.0, 0).real() == doctest::Approx(std::numbers::pi / 2).epsilon(1e-10));
    CHECK(intertwine_quadrature(3.0, 0).real() == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(std::abs(intertwine_quadrature(3.0, 0).imag()) < 1e-12);
    CHECK_THROWS_WITH_AS(intertwine_quadrature(0.5, 0), doctest::Contains("ConvergenceFailure"), Error);
}

TEST_CASE("quadrature against the symbolic intertwiner") {
    // I(nu) = i^eps T_st(nu)
    for (double z : {2.5, 3.0, 4.0, 5.5}) {
        for (int nu : {0, 2, -2, 4, -4}) {
            auto q = intertwine_quadrature(z, nu);
            double s = ge_eval_numeric(T_st(0, nu), z);
            CHECK(q.real() == doctest::Approx(s).epsilon(1e-6));
            CHECK(std::abs(q.imag()) <= 1e-8 * std::max(1.0, std::abs(s)));
        }
        for (int nu : {1, -1, 3, -3}) {
            auto q = intertwine_quadrature(z, nu);
            double s = ge_eval_numeric(T_st(1, nu), z);
            CHECK(q.imag() == doctest::Approx(s).epsilon(1e-6));
            CHECK(std::abs(q.real()) <= 1e-8 * std::max(1.0, std::abs(s)));
        }
    }
    // endpoint singularity for 1 < z < 2
    CHECK(intertwine_quadrature(1.5, 0).real() == doctest::Approx(ge_eval_numeric(T_st(0, 0), 1.5)).epsilon(1e-6));
}
