#include <doctest.h>

#include <cmath>
#include <random>

#include "hcz/gl2_hc.hpp"
#include "hcz/numeric.hpp"

using namespace hcz;

namespace {

KVector random_vector(std::mt19937& rng, int parity) {
    std::uniform_int_distribution<int> nu(-4, 4), c(-3, 3), cnt(1, 3);
    KVector v;
    for (int k = cnt(rng); k > 0; --k) {
        int x = 2 * nu(rng) + parity;
        v.c[x] += GPoly(GaussianRational(Rational(c(rng)), Rational(c(rng))));
    }
    v.prune();
    return v;
}

std::vector<int> pole_points(int eps, int nu, int window) {
    std::vector<int> out;
    for (const auto& p : poles_of_Tst(eps, nu, window)) {
        CHECK(p.order == 1);
        out.push_back(p.z);
    }
    return out;
}

}  // namespace

TEST_CASE("action on the Phi basis") {
    ModuleParam p4{4, Rational(0)};
    CHECK(act(LieOp::Pplus, KVector::basis(0), p4).c.at(2) == GPoly(GaussianRational(4)));
    CHECK(act(LieOp::Pminus, KVector::basis(2), p4).c.at(0) == GPoly(GaussianRational(2)));
    ModuleParam p2{2, Rational(1)};
    CHECK(act(LieOp::Pminus, KVector::basis(2), p2).c.empty());
    CHECK(act(LieOp::Y, KVector::basis(0), p2).c.empty());
    CHECK(act(LieOp::Y, KVector::basis(3), p2).c.at(3) == GPoly(GaussianRational(Rational(0), Rational(3))));
}

TEST_CASE("matrix realization") {
    // P+ = H + iV, P- = H - iV
    Mat2 h = lie_matrix(LieOp::H), v = lie_matrix(LieOp::V), pp = lie_matrix(LieOp::Pplus),
         pm = lie_matrix(LieOp::Pminus);
    for (int k = 0; k < 4; ++k) {
        CHECK(pp[k] == h[k] + GaussianRational::I() * v[k]);
        CHECK(pm[k] == h[k] - GaussianRational::I() * v[k]);
    }
}

TEST_CASE("brackets are represented, symbolic and algebraic z") {
    std::mt19937 rng(11);
    for (int t = 0; t < 6; ++t) {
        int parity = t % 2;
        KVector v = random_vector(rng, parity);
        for (ModuleParam p : {ModuleParam{std::nullopt, Rational(1, 2)}, ModuleParam{4, Rational(0)},
                              ModuleParam{-3, Rational(1)}})
            for (LieOp a : kAllLieOps)
                for (LieOp b : kAllLieOps) CHECK_MESSAGE(bracket_check(a, b, v, p), lie_op_name(a) << "," << lie_op_name(b));
    }
}

TEST_CASE("finite dimensional submodules") {
    for (int l : {0, -2, -4, -6}) {
        auto r = invariant_submodule(l);
        CHECK(r.dimension == -l + 1);
        CHECK(r.ops_closed);
        CHECK(r.quotient_splits);
        CHECK(r.ktypes.front() == l);
        CHECK(r.ktypes.back() == -l);
    }
    CHECK(invariant_submodule(-2).ktypes == std::vector<int>{-2, 0, 2});
    CHECK_THROWS_WITH_AS(invariant_submodule(2), doctest::Contains("NotNegative"), Error);
}

TEST_CASE("discrete series submodules") {
    for (int l : {0, 2, 4}) CHECK(discrete_series_check(l));
    // off the cohomological point the kernels disappear
    ModuleParam p{5, Rational(0)};
    CHECK_FALSE(act(LieOp::Pminus, KVector::basis(2), p).c.empty());
}

TEST_CASE("T_st examples") {
    CHECK(ge_eval_at(T_st(0, 0), Rational(4)) == PiRational{2, Rational(1, 2)});
    CHECK(ge_eval_at(T_st(1, 1), Rational(3)) == PiRational{2, Rational(1, 2)});
    GammaExpr step = ge_div(T_st(0, 2), T_st(0, 0));
    CHECK(step.factors.empty());
    CHECK(step.prefactor == QRatFun(QPoly(2) - QPoly::z(), QPoly::z()));
    // recursion downward
    GammaExpr down = ge_div(T_st(0, -2), T_st(0, 0));
    CHECK(down.prefactor == QRatFun(QPoly(2) - QPoly::z(), QPoly::z()));
    CHECK_THROWS_WITH_AS(T_st(0, 1), doctest::Contains("ParityMismatch"), Error);
}

TEST_CASE("pole sets") {
    CHECK(pole_points(0, 0, 5) == std::vector<int>{-5, -3, -1, 1});
    CHECK(pole_points(1, 1, 5) == std::vector<int>{-4, -2, 0});
    for (int eps : {0, 1}) {
        std::vector<int> expect;
        for (int z = 1 - eps; z >= -7; z -= 2) expect.insert(expect.begin(), z);
        for (int nu : {eps, eps + 2, eps - 2, eps + 6, eps - 6}) CHECK(pole_points(eps, nu, 7) == expect);
    }
}

TEST_CASE("Lambda and the composite") {
    CHECK(ge_eval_at(Lambda(0), Rational(1, 2)) == PiRational{0, Rational(-4)});
    CHECK(composite_check(0, 10));
    CHECK(composite_check(1, 10));
    for (int l : {0, 2, 4}) CHECK(ge_order_at_zero(ge_shift(Lambda(0), Rational(l + 2))) > 0);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> zs(1.1, 7.9);
    for (int t = 0; t < 20; ++t) {
        double z = zs(rng);
        int eps = t % 2;
        if (std::abs(std::remainder(z + eps, 2.0)) > 0.98) continue;  // tan blows up
        double a = ge_eval_numeric(Lambda(eps), z), b = lambda_closed_form(z, eps);
        CHECK(std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("normalized operator") {
    CHECK(ge_eval_at(T_norm(0, 0), Rational(3)) == PiRational{0, Rational(2)});
    for (int eps : {0, 1})
        for (int nu : {eps, eps + 2, eps - 4})
            for (int z0 = -7; z0 <= 7; ++z0) CHECK(ge_order_at_zero(ge_shift(T_norm(eps, nu), Rational(z0))) >= 0);
    // l-1 even, eps = 0: rational value
    CHECK(ge_eval_at(T_norm(0, 0), Rational(5)).pi_half == 0);
}

TEST_CASE("comparison constants") {
    auto c0 = compare_constants(0);
    CHECK(c0.first == PiRational{2, Rational(1)});
    CHECK(c0.stated_first == PiRational{2, Rational(1)});
    CHECK(c0.stated_second == PiRational{2, Rational(1, 2)});
    CHECK(c0.second == PiRational{2, Rational(-2)});
    for (int l = 0; l <= 8; ++l) {
        int eps = l % 2;
        auto c = compare_constants(l);
        int s1 = ((l - eps) / 2) % 2 ? -1 : 1, s2 = ((l + 2 - eps) / 2) % 2 ? -1 : 1;
        CHECK(c.first == PiRational{2, Rational(s1, 1 << l)});
        CHECK(c.second == PiRational{2, Rational(s2 * (2 << l))});
    }
}

TEST_CASE("first cohomology") {
    auto h = H1_cohomology(2, Rational(1));
    CHECK(h.eta_signs == std::pair<int, int>{1, -1});
    CHECK(H1_cohomology(2, Rational(2)).eta_signs == std::pair<int, int>{-1, 1});
    CHECK(H1_cohomology(2, Rational(0)).eta_signs == std::pair<int, int>{-1, 1});
    auto h0 = H1_cohomology(0, Rational(0));
    CHECK(h0.omega.gen == 1);
    CHECK(h0.omega.nu == 2);
    CHECK(h0.omega.mu == 0);
    CHECK(h0.omega_bar.gen == -1);
    CHECK(h0.omega_bar.nu == -2);
    for (int l = 0; l <= 6; ++l) {
        auto m = cohomology_matches(l, 1);
        REQUIRE(m.size() == 2);
        for (const auto& c : m) {
            CHECK(c.nu == c.gen * (l + 2));
            CHECK(c.mu == -c.gen * l);
        }
        CHECK(cohomology_matches(l, 0).empty());
        CHECK(cohomology_matches(l, 2).empty());
    }
    CHECK_THROWS_WITH_AS(H1_cohomology(2, Rational(1, 2)), doctest::Contains("ParityViolation"), Error);
}
