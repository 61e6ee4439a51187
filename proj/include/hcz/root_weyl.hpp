#pragma once

#include <string>
#include <vector>

#include "hcz/errors.hpp"
#include "hcz/rational.hpp"

namespace hcz {

// Coordinates in the e_i basis.
using Coords = std::vector<Rational>;
// One-line notation, values 1..N. w acts by w e_i = e_{w(i)}.
using Perm = std::vector<int>;

// e_i - e_j with i < j.
struct Root {
    int i = 0, j = 0;
    friend bool operator==(const Root&, const Root&) = default;
    std::string str() const { return "e_" + std::to_string(i) + "-e_" + std::to_string(j); }
};

// Enumeration guard, default 10, overridable by HCZ_MAX_N.
int max_rank();

Coords rho(int N);
Coords delta(int N);

Perm perm_identity(int N);
Perm perm_inverse(const Perm& w);
// (a*b)(i) = a(b(i))
Perm perm_compose(const Perm& a, const Perm& b);
int perm_length(const Perm& w);
bool is_perm(const Perm& w);

// (w v)_{w(i)} = v_i
Coords act(const Perm& w, const Coords& v);
Coords dot_action(const Perm& w, const Coords& lambda);

Rational pairing(const Root& beta, const Coords& chi);
inline int h_of_root(const Root& beta) { return beta.j - beta.i - 1; }

// gamma_n: the fundamental coweight direction of the maximal parabolic [n, N-n].
Coords gamma_n(int N, int n);

// Inversion set {alpha > 0 : w^{-1} alpha < 0}.
std::vector<Root> inversion_set(const Perm& w);

// W^P for a parabolic with the given block sizes, lexicographic order.
std::vector<Perm> kostant_set(int N, const std::vector<int>& blocks);
bool is_kostant(const Perm& w, const std::vector<int>& blocks);

// Maximal parabolic [n, N-n].
inline std::vector<int> maximal(int N, int n) { return {n, N - n}; }
int dim_u(const std::vector<int>& blocks);
bool is_balanced(const Perm& w, int N, int n);

// Longest element of W^P for [n, n'] and of W^Q for [n', n].
Perm w_P(int N, int n);
inline Perm w_Q(int N, int n) { return w_P(N, N - n); }
// w' with w = w_P w', an element of W^Q.
Perm complement(const Perm& w, int N, int n);
// Inverse construction: w = w_P w'.
Perm complement_back(const Perm& wprime, int N, int n);

struct WordFactorization {
    std::vector<int> word;      // simple reflection indices
    std::vector<Root> betas;    // beta_k = x_{k-1}(alpha_{r(k)})
    std::vector<Perm> prefixes; // x_0 = e, ..., x_{d_U} = w_P
};
WordFactorization wp_factorization(int N, int n);

// "a1,...,a_{N-1};d" <-> coordinates, d defaulting to 0.
Coords parse_lambda(const std::string& s, int N);
std::string format_lambda(const Coords& c);
std::vector<Rational> gamma_coeffs(const Coords& c);  // a_i = c_i - c_{i+1}
Rational det_twist(const Coords& c);                  // mean of the coordinates
Coords coords_from(const std::vector<Rational>& a, const Rational& d);
std::string format_coords(const Coords& c);           // "e:(c1,...,cN)"
Coords parse_coords(const std::string& s);
Perm parse_perm(const std::string& s);
std::string format_perm(const Perm& w);

}  // namespace hcz
