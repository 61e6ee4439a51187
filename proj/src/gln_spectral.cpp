#include "hcz/gln_spectral.hpp"

#include <algorithm>
#include <cstdlib>

namespace hcz {

Perm w_un(int n) {
    if (n < 1) throw Error("BadRank", "w_un needs n >= 1");
    Perm inv(n);
    for (int k = 1; k <= n; ++k) {
        int j = (k + 1) / 2;
        inv[k - 1] = k % 2 ? j : n + 1 - j;
    }
    return perm_inverse(inv);
}

int w_un_length_formula(int n) { return n % 2 == 0 ? n * (n - 2) / 4 : (n - 1) * (n - 1) / 4; }

std::vector<std::vector<int>> circ_blocks(int n) {
    std::vector<std::vector<int>> out;
    for (int j = 1; 2 * j <= n; ++j) out.push_back({2 * j - 1, 2 * j});
    if (n % 2) out.push_back({n});
    return out;
}

std::vector<int> circ_block_sizes(int n) {
    std::vector<int> s;
    for (const auto& b : circ_blocks(n)) s.push_back(static_cast<int>(b.size()));
    return s;
}

bool is_self_dual(const std::vector<Rational>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != a[a.size() - 1 - i]) return false;
    return true;
}

namespace {

void check_parity(const std::vector<Rational>& a, const Rational& d) {
    int n = static_cast<int>(a.size()) + 1;
    if (n % 2) return;
    Rational e = a[n / 2 - 1] - 2 * d;
    if (!is_integer(e) || to_long(e) % 2 != 0)
        throw Error("ParityError", "a_{n/2} - 2d must be even");
}

std::vector<Rational> block_sums(const Coords& v, int n) {
    std::vector<Rational> s;
    for (const auto& b : circ_blocks(n)) {
        Rational t(0);
        for (int i : b) t += v[i - 1];
        s.push_back(t);
    }
    return s;
}

}  // namespace

std::vector<Integer> cuspidal_b_closed(const std::vector<Rational>& a) {
    int n = static_cast<int>(a.size()) + 1;
    std::vector<Integer> b;
    for (int j = 1; 2 * j <= n; ++j) {
        Rational v = n - 2 * j;
        if (n % 2 == 0) {
            for (int i = j; i <= n / 2 - 1; ++i) v += 2 * a[i - 1];
            v += a[n / 2 - 1];
        } else {
            for (int i = j; i <= (n - 1) / 2; ++i) v += 2 * a[i - 1];
        }
        b.push_back(floor_q(v));
    }
    return b;
}

std::vector<Rational> c_closed(int n) {
    std::vector<Rational> c;
    for (int j = 1; 2 * j <= n; ++j) c.push_back(Q(2 * (2 * j - 1) - n, 2));
    if (n % 2) c.push_back(Q(n - 1, 2));
    for (auto& x : c) x.canonicalize();
    return c;
}

SpectralParams cuspidal_params(const std::vector<Rational>& a, const Rational& d) {
    SpectralParams p;
    p.n = static_cast<int>(a.size()) + 1;
    if (p.n < 2) throw Error("BadRank", "cuspidal parameters need n >= 2");
    if (!is_self_dual(a)) throw Error("NotSelfDual", "a_i must equal a_{n-i}");
    check_parity(a, d);
    p.a = a;
    p.d = d;
    p.lambda = coords_from(a, d);
    p.wun = w_un(p.n);
    p.mu = dot_action(p.wun, p.lambda);
    for (const auto& blk : circ_blocks(p.n)) {
        if (blk.size() == 2) {
            Rational diff = p.mu[blk[0] - 1] - p.mu[blk[1] - 1];
            if (!is_integer(diff)) throw Error("ParityError", "non-integral cuspidal parameter");
            p.b.push_back(floor_q(diff));
            p.c.push_back((p.mu[blk[0] - 1] + p.mu[blk[1] - 1]) / 2 - d);
        } else {
            p.c.push_back(p.mu[blk[0] - 1] - d);
        }
    }
    p.zeta_mu = block_sums(p.mu, p.n);
    p.circ_r = p.n / 2;
    p.l_wun = perm_length(p.wun);
    p.b_n = b_lowest(p.n);
    p.regular = std::all_of(a.begin(), a.end(), [](const Rational& x) { return x > 0; });
    return p;
}

std::vector<Integer> minimal_k_type(const SpectralParams& p, int eps) {
    if (eps != 1 && eps != -1) throw Error("BadSign", "eps must be +1 or -1");
    for (std::size_t k = 1; k < p.b.size(); ++k)
        if (!(p.b[k - 1] > p.b[k])) throw Error("DominanceFailure", "cuspidal parameters not strictly decreasing");
    std::vector<Integer> out;
    for (const auto& b : p.b) out.push_back(b + 2);
    if (!out.empty() && p.n % 2 == 0) out.back() *= eps;
    return out;
}

int wc_orbit_class(const std::vector<int>& signs, int n) {
    if (n % 2) return 0;
    int s = 1;
    for (int e : signs) s *= e;
    return s;
}

UCohomology u_cohomology_degrees(const std::vector<Rational>& a, const Rational& d) {
    int n = static_cast<int>(a.size()) + 1;
    int limit = std::getenv("HCZ_MAX_N") ? max_rank() : 6;
    if (n > limit) throw Error("RankTooLarge", "u-cohomology enumeration limited to n <= " + std::to_string(limit));
    Coords lambda = coords_from(a, d);
    Perm wu = w_un(n);
    Coords mu = dot_action(wu, lambda);
    auto target = block_sums(mu, n);
    Coords r = rho(n), shifted(n);
    for (int k = 0; k < n; ++k) shifted[k] = lambda[k] + r[k];
    auto sorted_blocks = [&](const Coords& v) {
        std::vector<std::vector<Rational>> out;
        for (const auto& blk : circ_blocks(n)) {
            std::vector<Rational> x;
            for (int i : blk) x.push_back(v[i - 1]);
            std::sort(x.begin(), x.end());
            out.push_back(x);
        }
        return out;
    };
    auto inf_target = sorted_blocks(act(wu, shifted));
    UCohomology out;
    for (const auto& w : kostant_set(n, circ_block_sizes(n))) {
        if (block_sums(dot_action(w, lambda), n) == target) out.by_block_sums[perm_length(w)]++;
        if (sorted_blocks(act(w, shifted)) == inf_target) out.infinitesimal.push_back(w);
    }
    return out;
}

int eta_sign(const std::vector<Rational>& a, const Rational& d) {
    int n = static_cast<int>(a.size()) + 1;
    if (n % 2) throw Error("ParityError", "eta sign needs n even");
    check_parity(a, d);
    Rational e = (a[n / 2 - 1] - 2 * d) / 2;
    return to_long(e) % 2 ? -1 : 1;
}

}  // namespace hcz
