#pragma once

#include <map>
#include <string>
#include <vector>

#include "hcz/root_weyl.hpp"

namespace hcz {

// w_un with inverse 1 -> 1, 2 -> n, 3 -> 2, 4 -> n-1, ...
Perm w_un(int n);
int w_un_length_formula(int n);  // n(n-2)/4 or (n-1)^2/4

// Blocks of the even-odd parabolic: {2j-1, 2j}, plus {n} for odd n.
std::vector<std::vector<int>> circ_blocks(int n);
std::vector<int> circ_block_sizes(int n);

inline int b_lowest(int n) { return n * n / 4; }

struct SpectralParams {
    int n = 0;
    std::vector<Rational> a;  // gamma coefficients of lambda
    Rational d;
    Coords lambda;
    Perm wun;
    Coords mu;                // w_un . lambda
    std::vector<Integer> b;   // cuspidal parameters b_1, b_3, ...
    std::vector<Rational> c;  // block twists c(i,n) without d; trailing singleton entry for odd n
    std::vector<Rational> zeta_mu;  // block sums of mu
    int circ_r = 0;
    int l_wun = 0;
    int b_n = 0;
    bool regular = true;
    friend bool operator==(const SpectralParams&, const SpectralParams&) = default;
};

bool is_self_dual(const std::vector<Rational>& a);
// Throws NotSelfDual, ParityError.
SpectralParams cuspidal_params(const std::vector<Rational>& a, const Rational& d);
// Closed forms, compared against the dot action by tests.
std::vector<Integer> cuspidal_b_closed(const std::vector<Rational>& a);
std::vector<Rational> c_closed(int n);

// (b_1+2, b_3+2, ..., eps*(b_m+2)). Throws DominanceFailure.
std::vector<Integer> minimal_k_type(const SpectralParams& p, int eps);

// 0 means a single orbit (n odd); otherwise the product of signs.
int wc_orbit_class(const std::vector<int>& signs, int n);

struct UCohomology {
    std::map<int, int> by_block_sums;     // degree -> count of zeta(mu) matches
    std::vector<Perm> infinitesimal;      // matches of the full Levi infinitesimal character
};
// Enumerates W^{circ P}; n <= 6 by default guard (RankTooLarge above max(6, HCZ_MAX_N)).
UCohomology u_cohomology_degrees(const std::vector<Rational>& a, const Rational& d);

// (-1)^{(a_{n/2} - 2d)/2}. Throws ParityError.
int eta_sign(const std::vector<Rational>& a, const Rational& d);

}  // namespace hcz
