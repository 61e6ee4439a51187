#include <doctest.h>

#include <random>

#include "hcz/json_io.hpp"

using namespace hcz;

namespace {

template <class T>
T round_trip(const T& x) {
    std::string text = Json(x).dump();
    return Json::parse(text).get<T>();
}

}  // namespace

TEST_CASE("GammaExpr records") {
    GammaExpr t = T_st(0, 2);
    Json j = t;
    CHECK(j.at("pi_half") == 1);
    CHECK(j.at("gammas").size() == 2);
    CHECK(round_trip(t) == t);
    GammaExpr refl = ge_mul(T_st(1, 1), GammaExpr::gamma(Q(1, 3), 2, -1));
    CHECK(round_trip(refl) == refl);
    bool saw_orient = false;
    Json jr = refl;
    for (const auto& g : jr.at("gammas")) saw_orient |= g.contains("orient");
    CHECK(saw_orient);
    auto parsed = Json::parse(R"j({"prefactor": "(1)/(2)", "pi_half": 2, "gammas": [{"shift": "1/2", "exp": -1}]})j")
                      .get<GammaExpr>();
    CHECK(parsed == ge_mul(GammaExpr::constant(Q(1, 2), 2), GammaExpr::gamma(Q(1, 2), -1)));
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> e(0, 1), nu(-3, 3);
    for (int t2 = 0; t2 < 20; ++t2) {
        int eps = e(rng);
        GammaExpr x = ge_shift(T_norm(eps, 2 * nu(rng) + eps), Q(nu(rng), 2));
        CHECK(round_trip(x) == x);
    }
}

TEST_CASE("spectral parameters") {
    auto p = cuspidal_params({Q(1), Q(2), Q(3), Q(2), Q(1)}, Q(1, 2));
    Json j = p;
    CHECK(j.at("b") == Json{13, 9, 3});
    CHECK(j.at("d") == "1/2");
    CHECK(j.at("minimal_k_type").at("-1") == Json{15, 11, -5});
    CHECK(round_trip(p) == p);
    auto p3 = cuspidal_params({Q(0), Q(0)}, Q(0));
    CHECK(round_trip(p3) == p3);
}

TEST_CASE("intertwiner reports") {
    for (auto [N, n, lam] : {std::tuple{3, 2, "0,0"}, {5, 2, "0,0,0,0"}, {5, 3, "1,0,0,1"}}) {
        auto r = factorize(first_admissible(N, n, parse_lambda(lam, N)));
        Json j = r;
        CHECK(j.at("factors").size() == static_cast<std::size_t>(r.d_U));
        CHECK(j.at("factors").at(0).contains("gamma"));
        CHECK(round_trip(r) == r);
    }
    auto r = factorize(first_admissible(5, 2, parse_lambda("4,0,0,4", 5)), true);
    CHECK(Json(r).at("even_transfers") == 1);
    CHECK(round_trip(r) == r);
    CHECK(Json(factorize(first_admissible(5, 2, parse_lambda("0,0,0,0", 5)))).at("rational") == "12/35");
}

TEST_CASE("rank-one reports") {
    auto h = H1_cohomology(2, Rational(1));
    auto h2 = round_trip(h);
    CHECK(h2.eta_signs == h.eta_signs);
    CHECK(h2.omega.nu == h.omega.nu);
    auto c = compare_constants(3);
    auto c2 = round_trip(c);
    CHECK(c2.first == c.first);
    CHECK(c2.stated_second == c.stated_second);
}

TEST_CASE("malformed records") {
    CHECK_THROWS(Json::parse(R"j({"prefactor": "1", "pi_half": 0, "gammas": [{"shift": "x", "exp": 1}]})j").get<GammaExpr>());
    CHECK_THROWS(Json::parse(R"j({"pi_half": 0})j").get<GammaExpr>());
    CHECK_THROWS_WITH_AS(json_q(Json("1/0")), doctest::Contains("ParseError"), Error);
}
