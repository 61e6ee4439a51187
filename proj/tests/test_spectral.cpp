#include <doctest.h>

#include <random>

#include "hcz/gln_spectral.hpp"

using namespace hcz;

namespace {

std::vector<Rational> ints(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

std::vector<Rational> random_self_dual(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> c(0, 9);
    std::vector<Rational> a(n - 1);
    for (int i = 0; i < n / 2; ++i) a[i] = a[n - 2 - i] = c(rng);
    if (n % 2 == 0) a[n / 2 - 1] = 2 * c(rng);  // keeps a_{n/2} - 2d even with d = 0
    return a;
}

}  // namespace

TEST_CASE("w_un patterns") {
    CHECK(perm_inverse(w_un(4)) == Perm{1, 4, 2, 3});
    CHECK(perm_inverse(w_un(5)) == Perm{1, 5, 2, 4, 3});
    CHECK(w_un(2) == perm_identity(2));
    for (int n = 1; n <= 12; ++n) {
        CHECK(perm_length(w_un(n)) == w_un_length_formula(n));
        CHECK(is_kostant(w_un(n), circ_block_sizes(n)));
    }
}

TEST_CASE("lowest degree identity") {
    CHECK(b_lowest(2) == 1);
    CHECK(b_lowest(5) == 6);
    CHECK(b_lowest(8) == 16);
    for (int n = 2; n <= 12; ++n) CHECK(b_lowest(n) == n / 2 + perm_length(w_un(n)));
}

TEST_CASE("cuspidal parameters at small weights") {
    auto p4 = cuspidal_params(ints({0, 0, 0}), Rational(0));
    CHECK(p4.b == std::vector<Integer>{2, 0});
    CHECK(p4.c == std::vector<Rational>{Q(-1), Q(1)});
    auto p3 = cuspidal_params(ints({0, 0}), Rational(0));
    CHECK(p3.b == std::vector<Integer>{1});
    CHECK(p3.c == std::vector<Rational>{Q(-1, 2), Q(1)});
    auto p6 = cuspidal_params(ints({1, 2, 3, 2, 1}), Q(1, 2));
    CHECK(p6.b == std::vector<Integer>{13, 9, 3});
    CHECK(p6.b_n == 9);
    // a_3 = 3 is odd, so d = 0 is excluded
    CHECK_THROWS_WITH_AS(cuspidal_params(ints({1, 2, 3, 2, 1}), Rational(0)), doctest::Contains("ParityError"), Error);
    CHECK(p6.l_wun == 6);
    CHECK_THROWS_WITH_AS(cuspidal_params(ints({1, 0, 0}), Rational(0)), doctest::Contains("NotSelfDual"), Error);
    CHECK_THROWS_WITH_AS(cuspidal_params(ints({0, 1, 0}), Rational(0)), doctest::Contains("ParityError"), Error);
}

TEST_CASE("closed forms agree with the dot action") {
    std::mt19937 rng(17);
    for (int t = 0; t < 50; ++t) {
        int n = 2 + t % 7;
        auto a = random_self_dual(rng, n);
        auto p = cuspidal_params(a, Rational(0));
        CHECK(p.b == cuspidal_b_closed(a));
        CHECK(p.c == c_closed(n));
        // the determinant twist balances: block sums add up to n*d
        Rational total(0);
        for (const auto& z : p.zeta_mu) total += z;
        CHECK(total == 0);
    }
    // twisting by d shifts every centre by d and leaves b alone
    auto p = cuspidal_params(ints({1, 3, 1}), Rational(1, 2));
    CHECK(p.b == cuspidal_b_closed(ints({1, 3, 1})));
    CHECK(p.c == c_closed(4));
}

TEST_CASE("minimal K-types") {
    auto p4 = cuspidal_params(ints({0, 0, 0}), Rational(0));
    CHECK(minimal_k_type(p4, 1) == std::vector<Integer>{4, 2});
    CHECK(minimal_k_type(p4, -1) == std::vector<Integer>{4, -2});
    CHECK(minimal_k_type(cuspidal_params(ints({0, 0}), Rational(0)), -1) == std::vector<Integer>{3});
    auto p6 = cuspidal_params(ints({1, 2, 3, 2, 1}), Q(1, 2));
    CHECK(minimal_k_type(p6, -1) == std::vector<Integer>{15, 11, -5});
    CHECK_THROWS_WITH_AS(minimal_k_type(p4, 0), doctest::Contains("BadSign"), Error);
}

TEST_CASE("compact Weyl group orbits") {
    CHECK(wc_orbit_class({1, -1}, 5) == 0);
    CHECK(wc_orbit_class({1, -1}, 4) == -1);
    CHECK(wc_orbit_class({-1, -1}, 4) == wc_orbit_class({1, 1}, 4));
}

TEST_CASE("u-cohomology") {
    std::map<int, std::map<int, int>> expect{{2, {{0, 1}}}, {3, {{1, 1}}}, {4, {{2, 2}}}, {5, {{4, 2}}}, {6, {{6, 6}}}};
    for (int n = 2; n <= 6; ++n) {
        std::vector<Rational> a(n - 1, Rational(0));
        auto u = u_cohomology_degrees(a, Rational(0));
        CHECK(u.by_block_sums == expect[n]);
        REQUIRE(u.infinitesimal.size() == 1);
        CHECK(u.infinitesimal[0] == w_un(n));
    }
    std::mt19937 rng(5);
    for (int t = 0; t < 10; ++t) {
        int n = 2 + t % 5;
        auto u = u_cohomology_degrees(random_self_dual(rng, n), Rational(0));
        REQUIRE(u.infinitesimal.size() == 1);
        CHECK(u.infinitesimal[0] == w_un(n));
        for (const auto& [deg, cnt] : u.by_block_sums) CHECK(deg == perm_length(w_un(n)));
    }
    CHECK_THROWS_WITH_AS(u_cohomology_degrees(std::vector<Rational>(6, Rational(0)), Rational(0)),
                         doctest::Contains("RankTooLarge"), Error);
}

TEST_CASE("eta sign") {
    CHECK(eta_sign(ints({0, 2, 0}), Rational(1)) == 1);
    CHECK(eta_sign(ints({0, 2, 0}), Rational(0)) == -1);
    CHECK(eta_sign(ints({0, 2, 0}), Rational(2)) == -eta_sign(ints({0, 2, 0}), Rational(1)));
    CHECK_THROWS_WITH_AS(eta_sign(ints({0, 0}), Rational(0)), doctest::Contains("ParityError"), Error);
}
