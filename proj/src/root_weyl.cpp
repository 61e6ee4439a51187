#include "hcz/root_weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace hcz {

int max_rank() {
    if (const char* env = std::getenv("HCZ_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 10;
}

Coords rho(int N) {
    Coords r(N);
    for (int k = 1; k <= N; ++k) r[k - 1] = Q(N + 1, 2) - k;
    for (auto& x : r) x.canonicalize();
    return r;
}

Coords delta(int N) { return Coords(N, Rational(1)); }

Perm perm_identity(int N) {
    Perm p(N);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

Perm perm_inverse(const Perm& w) {
    Perm q(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) q[w[i] - 1] = static_cast<int>(i) + 1;
    return q;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i] - 1];
    return c;
}

int perm_length(const Perm& w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
    return inv;
}

bool is_perm(const Perm& w) {
    Perm s = w;
    std::sort(s.begin(), s.end());
    return s == perm_identity(static_cast<int>(w.size()));
}

Coords act(const Perm& w, const Coords& v) {
    Coords r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[w[i] - 1] = v[i];
    return r;
}

Coords dot_action(const Perm& w, const Coords& lambda) {
    int N = static_cast<int>(lambda.size());
    Coords r = rho(N), shifted(N);
    for (int k = 0; k < N; ++k) shifted[k] = lambda[k] + r[k];
    Coords out = act(w, shifted);
    for (int k = 0; k < N; ++k) out[k] -= r[k];
    return out;
}

Rational pairing(const Root& beta, const Coords& chi) { return chi[beta.i - 1] - chi[beta.j - 1]; }

Coords gamma_n(int N, int n) {
    Coords g(N);
    for (int k = 0; k < N; ++k) g[k] = k < n ? Q(N - n, N) : Q(-n, N);
    for (auto& x : g) x.canonicalize();
    return g;
}

std::vector<Root> inversion_set(const Perm& w) {
    Perm wi = perm_inverse(w);
    std::vector<Root> out;
    int N = static_cast<int>(w.size());
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            if (wi[i - 1] > wi[j - 1]) out.push_back({i, j});
    return out;
}

bool is_kostant(const Perm& w, const std::vector<int>& blocks) {
    Perm wi = perm_inverse(w);
    int start = 0;
    for (int b : blocks) {
        for (int k = start + 1; k < start + b; ++k)
            if (wi[k - 1] > wi[k]) return false;
        start += b;
    }
    return true;
}

std::vector<Perm> kostant_set(int N, const std::vector<int>& blocks) {
    if (N > max_rank()) throw Error("RankTooLarge", "N=" + std::to_string(N) + " exceeds guard " + std::to_string(max_rank()));
    if (std::accumulate(blocks.begin(), blocks.end(), 0) != N) throw Error("BadParabolic", "block sizes do not sum to N");
    std::vector<Perm> out;
    Perm p = perm_identity(N);
    do {
        if (is_kostant(p, blocks)) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int dim_u(const std::vector<int>& blocks) {
    int total = 0, before = 0;
    for (int b : blocks) {
        total += before * b;
        before += b;
    }
    return total;
}

bool is_balanced(const Perm& w, int N, int n) {
    int d = n * (N - n);
    if (d % 2) throw Error("OddDimension", "dim U_P = " + std::to_string(d) + " is odd");
    return 2 * perm_length(w) == d;
}

Perm w_P(int N, int n) {
    Perm inv(N);
    for (int i = 1; i <= N; ++i) inv[i - 1] = i <= n ? i + (N - n) : i - n;
    return perm_inverse(inv);
}

Perm complement(const Perm& w, int N, int n) {
    if (!is_kostant(w, maximal(N, n))) throw Error("NotKostant", format_perm(w) + " is not in W^P");
    return perm_compose(perm_inverse(w_P(N, n)), w);
}

Perm complement_back(const Perm& wprime, int N, int n) {
    if (!is_kostant(wprime, maximal(N, N - n))) throw Error("NotKostant", format_perm(wprime) + " is not in W^Q");
    return perm_compose(w_P(N, n), wprime);
}

WordFactorization wp_factorization(int N, int n) {
    WordFactorization f;
    Perm x = perm_identity(N);
    f.prefixes.push_back(x);
    const int d = n * (N - n);
    auto in_u = [&](int a, int b) { return a <= n && b > n; };
    while (static_cast<int>(f.word.size()) < d) {
        bool found = false;
        for (int r = 1; r < N; ++r) {
            int a = x[r - 1], b = x[r];
            if (a < b && in_u(a, b)) {
                f.word.push_back(r);
                f.betas.push_back({a, b});
                std::swap(x[r - 1], x[r]);
                f.prefixes.push_back(x);
                found = true;
                break;
            }
        }
        if (!found) throw Error("Internal", "greedy word for w_P stalled");
    }
    return f;
}

// ---- text forms -------------------------------------------------------------

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

Coords coords_from(const std::vector<Rational>& a, const Rational& d) {
    int N = static_cast<int>(a.size()) + 1;
    Coords c(N, Rational(0));
    for (int j = N - 2; j >= 0; --j) c[j] = c[j + 1] + a[j];
    Rational mean = std::accumulate(c.begin(), c.end(), Rational(0)) / N;
    for (auto& x : c) x = x - mean + d;
    return c;
}

std::vector<Rational> gamma_coeffs(const Coords& c) {
    std::vector<Rational> a;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) a.push_back(c[k] - c[k + 1]);
    return a;
}

Rational det_twist(const Coords& c) {
    return std::accumulate(c.begin(), c.end(), Rational(0)) / static_cast<long>(c.size());
}

Coords parse_lambda(const std::string& s, int N) {
    auto parts = split(s, ';');
    if (parts.size() > 2) throw Error("ParseError", "lambda has more than one ';'");
    Rational d = parts.size() == 2 ? parse_rational(parts[1]) : Rational(0);
    std::vector<Rational> a;
    if (!(parts[0].empty() && N == 1))
        for (const auto& t : split(parts[0], ',')) a.push_back(parse_rational(t));
    if (static_cast<int>(a.size()) != N - 1)
        throw Error("ParseError", "lambda needs " + std::to_string(N - 1) + " coefficients, got " + std::to_string(a.size()));
    return coords_from(a, d);
}

std::string format_lambda(const Coords& c) {
    std::ostringstream os;
    auto a = gamma_coeffs(c);
    for (std::size_t k = 0; k < a.size(); ++k) os << (k ? "," : "") << to_str(a[k]);
    os << ";" << to_str(det_twist(c));
    return os.str();
}

std::string format_coords(const Coords& c) {
    std::ostringstream os;
    os << "e:(";
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << to_str(c[k]);
    os << ")";
    return os.str();
}

Coords parse_coords(const std::string& s) {
    std::string t = s;
    if (t.rfind("e:", 0) == 0) t = t.substr(2);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw Error("ParseError", "expected e:(c1,...)");
    Coords c;
    for (const auto& x : split(t.substr(1, t.size() - 2), ',')) c.push_back(parse_rational(x));
    return c;
}

Perm parse_perm(const std::string& s) {
    std::string t = s;
    if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw Error("ParseError", "expected [w1,...,wN]");
    Perm p;
    for (const auto& x : split(t.substr(1, t.size() - 2), ',')) {
        try {
            p.push_back(std::stoi(x));
        } catch (const std::exception&) {
            throw Error("ParseError", "bad permutation entry '" + x + "'");
        }
    }
    if (!is_perm(p)) throw Error("ParseError", s + " is not a permutation");
    return p;
}

std::string format_perm(const Perm& w) {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
    os << "]";
    return os.str();
}

}  // namespace hcz
