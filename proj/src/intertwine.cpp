#include "hcz/intertwine.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>

#include "hcz/gl2_hc.hpp"
#include "hcz/gln_spectral.hpp"

namespace hcz {

Rational gamma_coefficient(const Coords& v, int k) {
    const int N = static_cast<int>(v.size());
    Rational mean = det_twist(v);
    Rational s1 = std::accumulate(v.begin(), v.begin() + k, Rational(0));
    return Q(N, k * (N - k)) * (s1 - mean * k);
}

bool essentially_self_dual(const Coords& block) {
    Rational mean = det_twist(block);
    for (std::size_t i = 0; i < block.size(); ++i)
        if (block[i] - mean != -(block[block.size() - 1 - i] - mean)) return false;
    return true;
}

namespace {

Coords slice(const Coords& v, int from, int to) { return Coords(v.begin() + from, v.begin() + to); }

Coords shifted_by_rho(const Perm& w, const Coords& lambda) {
    Coords r = rho(static_cast<int>(lambda.size())), out = lambda;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += r[k];
    return act(w, out);
}

}  // namespace

BalancedDatum balanced_datum(int N, int n, const Perm& w, const Coords& lambda) {
    if (static_cast<int>(lambda.size()) != N || static_cast<int>(w.size()) != N)
        throw Error("BadInput", "rank mismatch");
    for (const auto& a : gamma_coeffs(lambda))
        if (a < 0) throw Error("NotDominant", "lambda must be dominant");
    if (!is_kostant(w, maximal(N, n))) throw Error("NotKostant", format_perm(w) + " is not in W^P");
    BalancedDatum bd;
    bd.N = N;
    bd.n = n;
    bd.np = N - n;
    bd.w = w;
    bd.lambda = lambda;
    if (!is_balanced(w, N, n))
        throw AssumptionError("NotBalanced", "a", "l(w) = " + std::to_string(perm_length(w)) + " != d_U/2");
    bd.mu_tilde = dot_action(w, lambda);
    if (!essentially_self_dual(slice(bd.mu_tilde, 0, n)) || !essentially_self_dual(slice(bd.mu_tilde, n, N)))
        throw AssumptionError("NotSelfDual", "b", "Levi blocks of w.lambda are not essentially self dual");
    Coords v = shifted_by_rho(w, lambda);
    bd.b_w_lambda = gamma_coefficient(v, n);
    if (bd.b_w_lambda > 0)
        throw AssumptionError("NotNegativeChamber", "c", "b(w,lambda) = " + to_str(bd.b_w_lambda) + " > 0");
    bd.wprime = complement(w, N, n);
    bd.mu_tilde_prime = dot_action(bd.wprime, lambda);
    bd.d_w = gamma_coefficient(bd.mu_tilde, n);
    bd.d_wprime = gamma_coefficient(bd.mu_tilde_prime, N - n);
    bd.weight_w = 0;
    for (int i = 1; i < N; ++i)
        if (i != n) bd.weight_w += v[i - 1] - v[i];
    auto a = gamma_coeffs(lambda);
    bd.regular = std::all_of(a.begin(), a.end(), [](const Rational& x) { return x > 0; });
    return bd;
}

std::vector<Perm> admissible_elements(int N, int n, const Coords& lambda) {
    std::vector<Perm> out;
    for (const auto& w : kostant_set(N, maximal(N, n))) {
        if (2 * perm_length(w) != n * (N - n)) continue;
        try {
            balanced_datum(N, n, w, lambda);
            out.push_back(w);
        } catch (const AssumptionError&) {
        }
    }
    return out;
}

BalancedDatum first_admissible(int N, int n, const Coords& lambda) {
    if ((n * (N - n)) % 2) throw AssumptionError("NotBalanced", "a", "d_U is odd, no balanced element exists");
    std::string worst = "a";
    std::string msg = "no balanced Kostant element";
    for (const auto& w : kostant_set(N, maximal(N, n))) {
        if (2 * perm_length(w) != n * (N - n)) continue;
        try {
            return balanced_datum(N, n, w, lambda);
        } catch (const AssumptionError& e) {
            if (e.which() > worst) {
                worst = e.which();
                msg = e.what();
            }
        }
    }
    throw AssumptionError("NoAdmissibleElement", worst, msg);
}

bool theorem_hypothesis(int N, int n) { return (n % 2) != ((N - n) % 2); }

namespace {

// w_un.(mu + 2 rho_circ) on one Levi block.
Coords block_chi(const Coords& blk) {
    const int m = static_cast<int>(blk.size());
    Coords u = dot_action(w_un(m), blk);
    for (const auto& b : circ_blocks(m))
        if (b.size() == 2) {
            u[b[0] - 1] += 1;
            u[b[1] - 1] -= 1;
        }
    return u;
}

// Same construction on the contragredient with reversed coordinates.
Coords block_chi_mirrored(const Coords& blk) {
    Coords dual(blk.rbegin(), blk.rend());
    for (auto& x : dual) x = -x;
    Coords o = block_chi(dual);
    Coords out(o.rbegin(), o.rend());
    for (auto& x : out) x = -x;
    return out;
}

}  // namespace

Coords chi_from(const BalancedDatum& bd) {
    if (!theorem_hypothesis(bd.N, bd.n))
        throw AssumptionError("Hypothesis", "hypothesis", "one Levi block must be even and the other odd");
    Coords chi = block_chi(slice(bd.mu_tilde, 0, bd.n));
    Coords lower = block_chi_mirrored(slice(bd.mu_tilde, bd.n, bd.N));
    chi.insert(chi.end(), lower.begin(), lower.end());
    for (int i = 1; i <= bd.n; ++i)
        for (int j = bd.n + 1; j <= bd.N; ++j)
            if (!is_integer(pairing({i, j}, chi)))
                throw Error("NonIntegralPairing", "<(e_" + std::to_string(i) + "-e_" + std::to_string(j) + ")^vee, chi> is not integral");
    return chi;
}

std::vector<FactorData> factor_data(const BalancedDatum& bd, const Coords& chi) {
    WordFactorization wf = wp_factorization(bd.N, bd.n);
    Coords g = gamma_n(bd.N, bd.n);
    std::vector<FactorData> out;
    for (std::size_t k = 0; k < wf.betas.size(); ++k) {
        const Root& beta = wf.betas[k];
        if (pairing(beta, g) != 1) throw Error("Internal", "line z*gamma_n meets a factor with slope != 1");
        Rational c = -pairing(beta, chi);
        if (!is_integer(c)) throw Error("NonIntegralPairing", "pairing with " + beta.str());
        FactorData fd;
        fd.k = static_cast<int>(k) + 1;
        fd.beta = beta;
        fd.r = wf.word[k];
        fd.c = to_long(c);
        fd.h = h_of_root(beta);
        fd.eps = ((fd.c % 2) + 2) % 2;
        fd.m = (fd.h % 2 == 1 && fd.c + fd.eps + fd.h - 1 <= 0) ? 1 : 0;
        fd.m_even = (fd.h % 2 == 0 && fd.c + fd.eps + fd.h <= 0) ? 1 : 0;
        out.push_back(fd);
    }
    return out;
}

GammaExpr factor_gamma(const FactorData& fd, bool strip, bool transfer_even) {
    long s = fd.c + fd.eps + fd.h;
    GammaExpr e = ge_mul(GammaExpr::gamma(Q(s - 1, 2)), GammaExpr::gamma(Q(s, 2), -1));
    e.pi_half = 1;
    if (strip && fd.m) e.prefactor = QRatFun(QPoly::z());
    if (transfer_even && fd.m_even) e.prefactor = QRatFun(QPoly(1), QPoly::z());
    return ge_canonicalize(e);
}

GammaExpr stripped_product(const std::vector<FactorData>& fds, bool transfer_even) {
    GammaExpr prod;
    for (const auto& fd : fds) prod = ge_mul(prod, factor_gamma(fd, true, transfer_even));
    return ge_canonicalize(prod);
}

IntertwinerReport prefactor_product(const std::vector<FactorData>& fds, bool transfer_even) {
    IntertwinerReport r;
    r.d_U = static_cast<int>(fds.size());
    if (r.d_U % 2) throw Error("OddDU", "d_U = " + std::to_string(r.d_U) + " is odd");
    r.factors = fds;
    r.transfer_even = transfer_even;
    GammaExpr prod;
    for (const auto& fd : fds) {
        GammaExpr e = factor_gamma(fd, true, transfer_even);
        r.factor_exprs.push_back(e);
        prod = ge_mul(prod, e);
        r.total_mk += static_cast<int>(fd.m);
        r.even_h_count += fd.h % 2 == 0;
        r.even_transfers += static_cast<int>(fd.m_even);
    }
    r.prefactor = ge_canonicalize(prod);
    r.order_at_zero = ge_order_at_zero(r.prefactor);
    if (r.order_at_zero != 0)
        throw Error("UnexpectedPole", "stripped product has " + std::string(r.order_at_zero > 0 ? "a zero" : "a pole") +
                                          " of order " + std::to_string(std::abs(r.order_at_zero)) + " at z=0");
    PiRational v = ge_eval_at_zero(r.prefactor);
    r.pi_half = v.pi_half;
    r.rational_value = v.value;
    return r;
}

IntertwinerReport prefactor_product(const BalancedDatum& bd, const Coords& chi, bool transfer_even) {
    if ((bd.n * bd.np) % 2) throw Error("OddDU", "d_U is odd");
    IntertwinerReport r = prefactor_product(factor_data(bd, chi), transfer_even);
    r.N = bd.N;
    r.n = bd.n;
    r.w = bd.w;
    r.chi = chi;
    r.regular = bd.regular;
    return r;
}

bool cross_check_gl2_chain(const BalancedDatum& bd, const Coords& chi) {
    if (bd.N != 3) throw Error("BadInput", "chain cross-check is defined for N = 3");
    auto fds = factor_data(bd, chi);
    GammaExpr chain;
    for (const auto& fd : fds) {
        GammaExpr step = ge_shift(T_st(static_cast<int>(fd.eps), static_cast<int>(fd.eps)), Rational(fd.c + fd.h));
        if (fd.m) step = ge_mul(step, GammaExpr::rational(QRatFun(QPoly::z())));
        chain = ge_mul(chain, step);
    }
    return ge_canonicalize(chain) == prefactor_product(bd, chi).prefactor;
}

std::vector<Coords> random_admissible_lambdas(int N, int n, int count, unsigned seed, int max_coeff) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(0, max_coeff);
    std::set<Coords> seen;
    std::vector<Coords> out;
    for (int attempt = 0; attempt < 4000 && static_cast<int>(out.size()) < count; ++attempt) {
        std::vector<Rational> a(N - 1);
        for (int i = 0; i < (N - 1 + 1) / 2; ++i) a[i] = a[N - 2 - i] = coef(rng);
        for (const Rational& d : {Rational(0), Q(1, 2)}) {
            Coords lam = coords_from(a, d);
            if (!std::all_of(lam.begin(), lam.end(), [](const Rational& x) { return is_integer(x); })) continue;
            if (seen.count(lam) || admissible_elements(N, n, lam).empty()) continue;
            seen.insert(lam);
            out.push_back(lam);
            break;
        }
    }
    return out;
}

}  // namespace hcz
