#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hcz/root_weyl.hpp"

using namespace hcz;

namespace {

// Coefficients of the Gaussian binomial [N choose n]_q.
std::vector<long> q_binomial(int N, int n) {
    // recurrence [N,n] = [N-1,n-1] + q^n [N-1,n]
    std::map<std::pair<int, int>, std::vector<long>> memo;
    std::function<std::vector<long>(int, int)> rec = [&](int a, int b) -> std::vector<long> {
        if (b == 0 || b == a) return {1};
        auto key = std::make_pair(a, b);
        if (memo.count(key)) return memo[key];
        auto x = rec(a - 1, b - 1), y = rec(a - 1, b);
        std::vector<long> out(std::max(x.size(), y.size() + b), 0);
        for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
        for (std::size_t i = 0; i < y.size(); ++i) out[i + b] += y[i];
        return memo[key] = out;
    };
    return rec(N, n);
}

long binom(int N, int n) {
    long r = 1;
    for (int k = 1; k <= n; ++k) r = r * (N - n + k) / k;
    return r;
}

}  // namespace

TEST_CASE("dot action examples") {
    Coords lam = parse_lambda("3;1/2", 2);
    CHECK(dot_action(perm_identity(2), lam) == lam);
    // s_1 . (l gamma_1) = -(l+2) gamma_1
    Coords l0 = parse_lambda("4", 2);
    CHECK(gamma_coeffs(dot_action({2, 1}, l0))[0] == -6);
    CHECK(dot_action({1, 3, 2}, Coords(3, Q(0))) == Coords{Q(0), Q(-1), Q(1)});
}

TEST_CASE("weight text forms") {
    Coords c = parse_lambda("1,2,1;1/2", 4);
    CHECK(gamma_coeffs(c) == std::vector<Rational>{Q(1), Q(2), Q(1)});
    CHECK(det_twist(c) == Q(1, 2));
    CHECK(parse_lambda(format_lambda(c), 4) == c);
    CHECK(parse_coords(format_coords(c)) == c);
    CHECK(format_perm(parse_perm("[3,1,2]")) == "[3,1,2]");
    CHECK_THROWS(parse_perm("[1,1,2]"));
    CHECK_THROWS(parse_lambda("1,2", 4));
}

TEST_CASE("kostant sets") {
    CHECK(kostant_set(4, maximal(4, 2)).size() == 6);
    CHECK(kostant_set(2, maximal(2, 1)).size() == 2);
    int balanced = 0;
    for (const auto& w : kostant_set(3, maximal(3, 2))) balanced += is_balanced(w, 3, 2);
    CHECK(balanced == 1);
    balanced = 0;
    for (const auto& w : kostant_set(4, maximal(4, 2))) balanced += is_balanced(w, 4, 2);
    CHECK(balanced == 2);
    CHECK_FALSE(is_balanced(perm_identity(3), 3, 1));
    CHECK_THROWS_WITH_AS(is_balanced(perm_identity(4), 4, 1), doctest::Contains("OddDimension"), Error);
}

TEST_CASE("kostant counts and q-binomials, N <= 8") {
    for (int N = 2; N <= 8; ++N)
        for (int n = 1; n < N; ++n) {
            auto ks = kostant_set(N, maximal(N, n));
            CHECK(static_cast<long>(ks.size()) == binom(N, n));
            std::vector<long> gen(n * (N - n) + 1, 0);
            for (const auto& w : ks) gen[perm_length(w)]++;
            CHECK(gen == q_binomial(N, n));
            // every inversion lies in the unipotent radical
            for (const auto& w : ks)
                for (const auto& r : inversion_set(w)) CHECK((r.i <= n && r.j > n));
        }
}

TEST_CASE("complement") {
    CHECK(complement(perm_identity(5), 5, 2) == w_Q(5, 2));
    CHECK(complement(w_P(5, 2), 5, 2) == perm_identity(5));
    for (int N = 2; N <= 6; ++N)
        for (int n = 1; n < N; ++n)
            for (const auto& w : kostant_set(N, maximal(N, n))) {
                Perm wp = complement(w, N, n);
                CHECK(is_kostant(wp, maximal(N, N - n)));
                CHECK(perm_length(w) + perm_length(wp) == n * (N - n));
                CHECK(complement_back(wp, N, n) == w);
                if ((n * (N - n)) % 2 == 0 && is_balanced(w, N, n)) CHECK(is_balanced(wp, N, N - n));
            }
    CHECK_THROWS_WITH_AS(complement({2, 3, 1}, 3, 2), doctest::Contains("NotKostant"), Error);
}

TEST_CASE("w_P factorization examples") {
    auto f31 = wp_factorization(3, 1);
    CHECK(f31.word == std::vector<int>{1, 2});
    CHECK(f31.betas == std::vector<Root>{{1, 2}, {1, 3}});
    auto f32 = wp_factorization(3, 2);
    CHECK(f32.word == std::vector<int>{2, 1});
    CHECK(f32.betas == std::vector<Root>{{2, 3}, {1, 3}});
    auto f21 = wp_factorization(2, 1);
    CHECK(f21.word == std::vector<int>{1});
}

TEST_CASE("w_P factorization invariants, N <= 6") {
    for (int N = 2; N <= 6; ++N)
        for (int n = 1; n < N; ++n) {
            auto f = wp_factorization(N, n);
            const int d = n * (N - n);
            REQUIRE(static_cast<int>(f.word.size()) == d);
            CHECK(f.word.front() == n);
            CHECK(f.word.back() == N - n);
            CHECK(f.prefixes.back() == w_P(N, n));
            std::set<std::pair<int, int>> seen;
            for (int k = 1; k <= d; ++k) {
                const Root& b = f.betas[k - 1];
                CHECK((b.i <= n && b.j > n));
                seen.insert({b.i, b.j});
                // x_{k-1}(alpha_r) = beta_k
                const Perm& x = f.prefixes[k - 1];
                int r = f.word[k - 1];
                CHECK(Root{x[r - 1], x[r]} == b);
                auto inv = inversion_set(f.prefixes[k]);
                std::set<std::pair<int, int>> invs;
                for (const auto& a : inv) invs.insert({a.i, a.j});
                std::set<std::pair<int, int>> first;
                for (int j = 0; j < k; ++j) first.insert({f.betas[j].i, f.betas[j].j});
                CHECK(invs == first);
            }
            CHECK(static_cast<int>(seen.size()) == d);
        }
}

TEST_CASE("heights, pairings and even-h counts") {
    CHECK(h_of_root({3, 4}) == 0);
    CHECK(h_of_root({1, 3}) == 1);
    CHECK(h_of_root({1, 5}) == 3);
    Coords r = rho(6);
    for (int i = 1; i < 6; ++i) CHECK(pairing({i, i + 1}, r) == 1);
    CHECK(pairing({2, 5}, delta(6)) == 0);
    for (int N = 2; N <= 8; ++N)
        for (int n = 1; n < N; ++n) {
            Coords g = gamma_n(N, n);
            int even = 0;
            for (const auto& b : wp_factorization(N, n).betas) {
                CHECK(pairing(b, g) == 1);
                even += h_of_root(b) % 2 == 0;
            }
            if ((n * (N - n)) % 2 == 0) CHECK(2 * even == n * (N - n));
        }
}

TEST_CASE("enumeration guard") {
    CHECK_THROWS_WITH_AS(kostant_set(11, maximal(11, 5)), doctest::Contains("RankTooLarge"), Error);
}
