#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcz/gamma_expr.hpp"
#include "hcz/root_weyl.hpp"

namespace hcz {

struct BalancedDatum {
    int N = 0, n = 0, np = 0;
    Perm w, wprime;
    Coords lambda, mu_tilde, mu_tilde_prime;
    Rational b_w_lambda;    // gamma_n coefficient of w(lambda+rho)
    Rational d_w, d_wprime; // gamma_n (resp. gamma_n') coefficient of w.lambda (resp. w'.lambda)
    Rational weight_w;      // sum of the Levi b_i of w(lambda+rho)
    bool regular = true;
};

// gamma_k coefficient of v for the maximal parabolic with first block k.
Rational gamma_coefficient(const Coords& v, int k);
bool essentially_self_dual(const Coords& block);

// Throws AssumptionError (a: NotBalanced, b: NotSelfDual, c: NotNegativeChamber), NotDominant.
BalancedDatum balanced_datum(int N, int n, const Perm& w, const Coords& lambda);
// All balanced w in W^P satisfying a)-c) for lambda, lexicographic.
std::vector<Perm> admissible_elements(int N, int n, const Coords& lambda);
// First admissible element, or AssumptionError naming the first assumption that fails for all w.
BalancedDatum first_admissible(int N, int n, const Coords& lambda);

// One block even and one odd.
bool theorem_hypothesis(int N, int n);

// Blockwise w_un.(mu~ + 2 rho_circ); the lower block uses the w0-conjugated arrangement.
// Throws NonIntegralPairing, AssumptionError("hypothesis").
Coords chi_from(const BalancedDatum& bd);

struct FactorData {
    int k = 0;
    Root beta;
    int r = 0;
    long c = 0, h = 0, eps = 0, m = 0;
    // 1 when h is even and the denominator Gamma((c+eps+h+z)/2) has a pole at z = 0,
    // so the full quotient vanishes there.
    long m_even = 0;
    friend bool operator==(const FactorData&, const FactorData&) = default;
};
std::vector<FactorData> factor_data(const BalancedDatum& bd, const Coords& chi);

// Gamma((c+eps+h-1+z)/2) sqrt(pi) / Gamma((c+eps+h+z)/2), times z^m when stripped.
// transfer_even also divides by z^m_even, moving the zero of the denominator Gamma into
// the rational part the way the odd-h poles are moved.
GammaExpr factor_gamma(const FactorData& fd, bool strip, bool transfer_even = false);

struct IntertwinerReport {
    int N = 0, n = 0, d_U = 0;
    Perm w;
    Coords chi;
    std::vector<FactorData> factors;
    std::vector<GammaExpr> factor_exprs;
    GammaExpr prefactor;
    int total_mk = 0;
    int order_at_zero = 0;
    int pi_half = 0;
    Rational rational_value;
    int even_h_count = 0;
    int even_transfers = 0;  // factors with m_even = 1
    bool transfer_even = false;
    bool regular = true;
    friend bool operator==(const IntertwinerReport&, const IntertwinerReport&) = default;
};

// Throws OddDU, UnexpectedPole (order != 0 at z = 0 after stripping).
IntertwinerReport prefactor_product(const BalancedDatum& bd, const Coords& chi, bool transfer_even = false);
IntertwinerReport prefactor_product(const std::vector<FactorData>& fds, bool transfer_even = false);
inline IntertwinerReport factorize(const BalancedDatum& bd, bool transfer_even = false) {
    return prefactor_product(bd, chi_from(bd), transfer_even);
}

// Product of the stripped factors without evaluation, for inspecting failures.
GammaExpr stripped_product(const std::vector<FactorData>& fds, bool transfer_even = false);

// N = 3: the product equals the chain of rank-one T_st lowest K-type values shifted by c+h.
bool cross_check_gl2_chain(const BalancedDatum& bd, const Coords& chi);

// Self-dual dominant lambda with integral coordinates admitting an admissible element.
std::vector<Coords> random_admissible_lambdas(int N, int n, int count, unsigned seed, int max_coeff = 12);

}  // namespace hcz
