#include "hcz/gl2_hc.hpp"

#include <set>
#include <sstream>

namespace hcz {

namespace {

const GaussianRational kI = GaussianRational::I();

KVector raise(const KVector& v, const GPoly& z) {
    KVector out;
    for (const auto& [nu, c] : v.c) out.c[nu + 2] += c * (z + GPoly(GaussianRational(nu)));
    out.prune();
    return out;
}

KVector lower(const KVector& v, const GPoly& z) {
    KVector out;
    for (const auto& [nu, c] : v.c) out.c[nu - 2] += c * (z - GPoly(GaussianRational(nu)));
    out.prune();
    return out;
}

KVector scale(const KVector& v, const GaussianRational& s) { return v.scaled(GPoly(s)); }

}  // namespace

std::string lie_op_name(LieOp op) {
    switch (op) {
        case LieOp::H: return "H";
        case LieOp::Y: return "Y";
        case LieOp::Eplus: return "E+";
        case LieOp::Eminus: return "E-";
        case LieOp::V: return "V";
        case LieOp::Pplus: return "P+";
        case LieOp::Pminus: return "P-";
    }
    return "?";
}

Mat2 lie_matrix(LieOp op) {
    const GaussianRational o(0), one(1), m(-1);
    switch (op) {
        case LieOp::H: return {one, o, o, m};
        case LieOp::Y: return {o, one, m, o};
        case LieOp::Eplus: return {o, one, o, o};
        case LieOp::Eminus: return {o, o, one, o};
        case LieOp::V: return {o, one, one, o};
        case LieOp::Pplus: return {one, kI, kI, m};
        case LieOp::Pminus: return {one, -kI, -kI, m};
    }
    return {};
}

Mat2 mat_bracket(const Mat2& a, const Mat2& b) {
    auto mul = [](const Mat2& x, const Mat2& y) {
        return Mat2{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                    x[2] * y[1] + x[3] * y[3]};
    };
    Mat2 ab = mul(a, b), ba = mul(b, a), out;
    for (int k = 0; k < 4; ++k) out[k] = ab[k] - ba[k];
    return out;
}

KVector& KVector::operator+=(const KVector& o) {
    for (const auto& [nu, p] : o.c) c[nu] += p;
    prune();
    return *this;
}

KVector KVector::scaled(const GPoly& s) const {
    KVector out;
    for (const auto& [nu, p] : c) out.c[nu] = p * s;
    out.prune();
    return out;
}

void KVector::prune() {
    for (auto it = c.begin(); it != c.end();) it = it->second.is_zero() ? c.erase(it) : std::next(it);
}

bool operator==(const KVector& a, const KVector& b) {
    KVector x = a, y = b;
    x.prune();
    y.prune();
    return x.c == y.c;
}

KVector operator-(KVector a, const KVector& b) { return a += scale(b, GaussianRational(-1)); }

std::string KVector::str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [nu, p] : c) {
        if (!first) os << " + ";
        first = false;
        if (p.deg() == 0)
            os << "(" << p.lead().str() << ")";
        else {
            os << "(";
            for (int k = 0; k <= p.deg(); ++k) {
                if (p.coeff(k).is_zero()) continue;
                os << "[" << p.coeff(k).str() << "]" << (k ? "z^" + std::to_string(k) : "");
            }
            os << ")";
        }
        os << "*Phi[" << nu << "]";
    }
    return os.str();
}

KVector act(LieOp op, const KVector& v, const ModuleParam& p) {
    GPoly z = p.z();
    const GaussianRational half(Q(1, 2));
    switch (op) {
        case LieOp::Pplus: return raise(v, z);
        case LieOp::Pminus: return lower(v, z);
        case LieOp::Y: {
            KVector out;
            for (const auto& [nu, c] : v.c) out.c[nu] = c * GPoly(kI * GaussianRational(nu));
            out.prune();
            return out;
        }
        case LieOp::H: {
            KVector out = raise(v, z);
            out += lower(v, z);
            return scale(out, half);
        }
        case LieOp::V: {
            // V = (P+ - P-)/(2i)
            return scale(raise(v, z) - lower(v, z), half * kI.inverse());
        }
        case LieOp::Eplus: {
            KVector out = act(LieOp::V, v, p);
            out += act(LieOp::Y, v, p);
            return scale(out, half);
        }
        case LieOp::Eminus: return scale(act(LieOp::V, v, p) - act(LieOp::Y, v, p), half);
    }
    return {};
}

KVector act_matrix(const Mat2& m, const KVector& v, const ModuleParam& p) {
    const GaussianRational half(Q(1, 2));
    GaussianRational t = (m[0] + m[3]) * half, h = (m[0] - m[3]) * half;
    GaussianRational vc = (m[1] + m[2]) * half, y = (m[1] - m[2]) * half;
    KVector out = scale(v, t * GaussianRational(p.d * 2));
    out += scale(act(LieOp::H, v, p), h);
    out += scale(act(LieOp::V, v, p), vc);
    out += scale(act(LieOp::Y, v, p), y);
    return out;
}

bool bracket_check(LieOp a, LieOp b, const KVector& v, const ModuleParam& p) {
    KVector lhs = act_matrix(mat_bracket(lie_matrix(a), lie_matrix(b)), v, p);
    KVector rhs = act(a, act(b, v, p), p) - act(b, act(a, v, p), p);
    return lhs == rhs;
}

std::vector<int> closure(int start, int window, const ModuleParam& p, bool& hit_boundary) {
    std::set<int> seen{start};
    std::vector<int> todo{start};
    hit_boundary = false;
    while (!todo.empty()) {
        int nu = todo.back();
        todo.pop_back();
        for (LieOp op : {LieOp::Pplus, LieOp::Pminus}) {
            for (const auto& [mu, c] : act(op, KVector::basis(nu), p).c) {
                (void)c;
                if (mu < -window || mu > window) {
                    hit_boundary = true;
                    continue;
                }
                if (seen.insert(mu).second) todo.push_back(mu);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

SubmoduleReport invariant_submodule(int l) {
    if (l > 0) throw Error("NotNegative", "invariant submodule needs l <= 0; use the discrete series check");
    ModuleParam p{l, Rational(0)};
    const int window = -l + 10;
    SubmoduleReport r;
    bool boundary = false;
    r.ktypes = closure(l, window, p, boundary);
    if (boundary) return r;
    r.dimension = static_cast<int>(r.ktypes.size());
    std::set<int> span(r.ktypes.begin(), r.ktypes.end());

    auto inside = [&](const KVector& v, auto pred) {
        for (const auto& [nu, c] : v.c) {
            (void)c;
            if (!pred(nu)) return false;
        }
        return true;
    };
    r.ops_closed = true;
    for (int nu : r.ktypes)
        for (LieOp op : kAllLieOps)
            r.ops_closed &= inside(act(op, KVector::basis(nu), p), [&](int m) { return span.count(m) > 0; });

    bool upper = true, lower_ok = true;
    for (int nu = -l + 2; nu <= window; nu += 2)
        for (LieOp op : kAllLieOps)
            upper &= inside(act(op, KVector::basis(nu), p), [&](int m) { return m >= -l + 2 || span.count(m); });
    for (int nu = l - 2; nu >= -window; nu -= 2)
        for (LieOp op : kAllLieOps)
            lower_ok &= inside(act(op, KVector::basis(nu), p), [&](int m) { return m <= l - 2 || span.count(m); });
    r.quotient_splits = upper && lower_ok;
    return r;
}

bool discrete_series_check(int l, int window) {
    if (l < 0) throw Error("NotNonNegative", "discrete series check needs l >= 0");
    ModuleParam p{l + 2, Rational(0)};
    const int w = l + 2 + window;
    bool ok = act(LieOp::Pminus, KVector::basis(l + 2), p).c.empty() &&
              act(LieOp::Pplus, KVector::basis(-l - 2), p).c.empty();
    for (int nu = l + 2; nu <= w; nu += 2)
        for (LieOp op : kAllLieOps)
            for (const auto& [m, c] : act(op, KVector::basis(nu), p).c) ok &= (m >= l + 2), (void)c;
    for (int nu = -l - 2; nu >= -w; nu -= 2)
        for (LieOp op : kAllLieOps)
            for (const auto& [m, c] : act(op, KVector::basis(nu), p).c) ok &= (m <= -l - 2), (void)c;
    return ok;
}

// ---- intertwiners ---------------------------------------------------------------

namespace {

void check_eps(int eps) {
    if (eps != 0 && eps != 1) throw Error("BadParity", "eps must be 0 or 1");
}

}  // namespace

GammaExpr T_st(int eps, int nu) {
    check_eps(eps);
    if ((nu - eps) % 2 != 0) throw Error("ParityMismatch", "nu=" + std::to_string(nu) + " has the wrong parity for eps=" + std::to_string(eps));
    GammaExpr e = ge_mul(GammaExpr::gamma(Q(eps - 1, 2)), GammaExpr::gamma(Q(eps, 2), -1));
    e.pi_half = 1;
    const QPoly z = QPoly::z();
    QRatFun pre(1);
    for (int k = eps; k < nu; k += 2) pre *= QRatFun(QPoly(2 + k) - z, z + QPoly(k));
    for (int k = eps; k > nu; k -= 2) pre *= QRatFun(QPoly(2 - k) - z, z - QPoly(k));
    e.prefactor = pre;
    return ge_canonicalize(e);
}

GammaExpr T_st_dagger(int eps, int nu) { return ge_affine(T_st(eps, nu), -1, Rational(2)); }

GammaExpr Lambda(int eps) {
    check_eps(eps);
    GammaExpr e;
    e.factors[{1, Q(eps - 1, 2)}] += 1;
    e.factors[{-1, Q(eps + 1, 2)}] += 1;
    e.factors[{1, Q(eps, 2)}] -= 1;
    e.factors[{-1, Q(eps + 2, 2)}] -= 1;
    return ge_canonicalize(e);
}

bool composite_check(int eps, int window) {
    GammaExpr target = ge_mul(GammaExpr::constant(Rational(1), 2), Lambda(eps));
    for (int nu = -window; nu <= window; ++nu) {
        if ((nu - eps) % 2 != 0) continue;
        if (!(ge_canonicalize(ge_mul(T_st_dagger(eps, nu), T_st(eps, nu))) == target)) return false;
    }
    return true;
}

GammaExpr T_norm(int eps, int nu) {
    return ge_canonicalize(ge_div(T_st(eps, nu), GammaExpr::gamma(Q(eps - 1, 2))));
}

std::vector<Pole> poles_of_Tst(int eps, int nu, int window) {
    GammaExpr t = T_st(eps, nu);
    std::vector<Pole> out;
    for (int z0 = -window; z0 <= window; ++z0) {
        int ord = ge_order_at_zero(ge_shift(t, Rational(z0)));
        if (ord < 0) out.push_back({z0, -ord});
    }
    return out;
}

CompareConstants compare_constants(int l) {
    if (l < 0) throw Error("NotNonNegative", "compare_constants needs l >= 0");
    int eps = l % 2;
    CompareConstants c;
    c.first = ge_eval_at(T_st(eps, l), Rational(l + 2));
    c.second = ge_eval_at(T_st(eps, l + 2), Rational(-l));
    int s = ((l - eps) / 2) % 2 ? -1 : 1;
    Rational p1(1), p2(1);
    mpz_mul_2exp(p1.get_num_mpz_t(), p1.get_num_mpz_t(), (3 * l - eps) / 2);
    mpz_mul_2exp(p2.get_den_mpz_t(), p2.get_den_mpz_t(), (l + 2 - eps) / 2);
    c.stated_first = {2, p1 * s};
    c.stated_second = {2, p2 * s};
    return c;
}

std::vector<CohomComponent> cohomology_matches(int l, int degree, int window) {
    std::vector<std::pair<int, int>> gens;  // (tag, weight)
    if (degree == 0 || degree == 2) gens = {{0, 0}};
    else if (degree == 1) gens = {{1, -2}, {-1, 2}};
    std::vector<CohomComponent> out;
    for (auto [g, wt] : gens)
        for (int a = l + 2; a <= l + 2 + 2 * window; a += 2)
            for (int nu : {a, -a})
                for (int mu = -l; mu <= l; mu += 2)
                    if (wt + nu + mu == 0) out.push_back({g, nu, mu});
    return out;
}

H1Report H1_cohomology(int l, const Rational& d) {
    if (l < 0) throw Error("NotNonNegative", "H1 needs l >= 0");
    Rational e = 2 * d - l;
    if (!is_integer(e) || to_long(e) % 2 != 0) throw Error("ParityViolation", "2d - l must be even");
    auto m = cohomology_matches(l, 1);
    if (m.size() != 2) throw Error("Internal", "expected two H^1 classes");
    H1Report r;
    for (const auto& c : m) (c.gen > 0 ? r.omega : r.omega_bar) = c;
    int s = (to_long(e) / 2) % 2 ? -1 : 1;
    r.eta_signs = {s, -s};
    return r;
}

}  // namespace hcz
