#include "hcz/gamma_expr.hpp"

#include <cctype>
#include <sstream>

namespace hcz {

Rational parse_rational(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw Error("ParseError", "empty rational");
    if (t[0] == '+') t.erase(0, 1);
    // finite decimals are exact: "-0.25" -> -25/100
    if (auto dot = t.find('.'); dot != std::string::npos && t.find('/') == std::string::npos) {
        std::string frac = t.substr(dot + 1);
        if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
            throw Error("ParseError", "bad rational '" + s + "'");
        t = t.substr(0, dot) + frac + "/1" + std::string(frac.size(), '0');
        if (t[0] == '/' || (t[0] == '-' && t[1] == '/')) throw Error("ParseError", "bad rational '" + s + "'");
    }
    Rational r;
    try {
        r = Rational(t);
    } catch (const std::invalid_argument&) {
        throw Error("ParseError", "bad rational '" + s + "'");
    }
    if (r.get_den() == 0) throw Error("ParseError", "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

namespace {

QRatFun power(const QPoly& p, int e) {
    QRatFun out(1);
    QRatFun base = e >= 0 ? QRatFun(p) : QRatFun(QPoly(1), p);
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) out *= base;
    return out;
}

}  // namespace

bool GammaExpr::is_canonical() const {
    for (const auto& [arg, exp] : factors)
        if (exp == 0 || arg.shift <= 0 || arg.shift > 1) return false;
    return true;
}

GammaExpr ge_mul(const GammaExpr& a, const GammaExpr& b) {
    GammaExpr out = a;
    out.prefactor *= b.prefactor;
    out.pi_half += b.pi_half;
    for (const auto& [arg, exp] : b.factors) {
        int& slot = out.factors[arg];
        slot += exp;
        if (slot == 0) out.factors.erase(arg);
    }
    return out;
}

GammaExpr ge_inverse(const GammaExpr& a) {
    GammaExpr out;
    out.prefactor = a.prefactor.inverse();
    out.pi_half = -a.pi_half;
    for (const auto& [arg, exp] : a.factors) out.factors[arg] = -exp;
    return out;
}

GammaExpr ge_div(const GammaExpr& a, const GammaExpr& b) { return ge_mul(a, ge_inverse(b)); }

GammaExpr ge_canonicalize(const GammaExpr& e) {
    GammaExpr out;
    out.prefactor = e.prefactor;
    out.pi_half = e.pi_half;
    const Rational half(1, 2);
    for (const auto& [arg, exp] : e.factors) {
        if (exp == 0) continue;
        Rational q = arg.shift;
        Rational slope = half * arg.orient;
        // Gamma(s) = (s-1) Gamma(s-1)
        while (q > 1) {
            q -= 1;
            out.prefactor *= power(QPoly::linear(slope, q), exp);
        }
        // Gamma(s) = Gamma(s+1) / s
        while (q <= 0) {
            out.prefactor *= power(QPoly::linear(slope, q), -exp);
            q += 1;
        }
        int& slot = out.factors[{arg.orient, q}];
        slot += exp;
        if (slot == 0) out.factors.erase({arg.orient, q});
    }
    return out;
}

GammaExpr ge_affine(const GammaExpr& e, int a, const Rational& b) {
    GammaExpr out;
    out.prefactor = e.prefactor.compose_affine(Rational(a), b);
    out.pi_half = e.pi_half;
    for (const auto& [arg, exp] : e.factors) {
        GammaArg na{arg.orient * a, arg.shift + b * arg.orient / 2};
        out.factors[na] += exp;
    }
    return ge_canonicalize(out);
}

int ge_order_at_zero(const GammaExpr& e) {
    GammaExpr c = e.is_canonical() ? e : ge_canonicalize(e);
    if (c.prefactor.is_zero()) throw Error("ZeroError", "identically zero expression");
    return c.prefactor.order_at_zero();
}

namespace {

// Folds the canonical Gamma factors at z = 0 into a pi-half power.
int fold_gammas_at_zero(const GammaExpr& c) {
    std::map<Rational, int> at_zero;
    for (const auto& [arg, exp] : c.factors) at_zero[arg.shift] += exp;
    int pi_half = c.pi_half;
    for (const auto& [q, exp] : at_zero) {
        if (exp == 0 || q == 1) continue;
        if (q == Q(1, 2)) {
            pi_half += exp;
            continue;
        }
        throw Error("IrrationalGamma", "Gamma(" + to_str(q) + ") does not reduce to a power of pi");
    }
    return pi_half;
}

}  // namespace

PiRational ge_eval_at_zero(const GammaExpr& e) {
    GammaExpr c = ge_canonicalize(e);
    int ord = ge_order_at_zero(c);
    if (ord < 0) throw Error("PoleError", "pole of order " + std::to_string(-ord) + " at z=0");
    if (ord > 0) throw Error("ZeroError", "zero of order " + std::to_string(ord) + " at z=0");
    return {fold_gammas_at_zero(c), c.prefactor.eval(Rational(0))};
}

PiRational ge_leading_at_zero(const GammaExpr& e) {
    GammaExpr c = ge_canonicalize(e);
    if (c.prefactor.is_zero()) throw Error("ZeroError", "identically zero expression");
    return {fold_gammas_at_zero(c), c.prefactor.leading_at_zero()};
}

// ---- text form ------------------------------------------------------------

namespace {

std::string format_int_poly(const std::vector<Integer>& c) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        Integer a = abs(c[k]);
        bool neg = c[k] < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (k == 0)
            os << a;
        else {
            if (a != 1) os << a << "*";
            os << "z";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

QPoly parse_poly(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '(' && ch != ')') t += ch;
    if (t.empty()) throw Error("ParseError", "empty polynomial");
    QPoly out;
    std::size_t i = 0;
    while (i < t.size()) {
        int sign = 1;
        if (t[i] == '+' || t[i] == '-') {
            sign = t[i] == '-' ? -1 : 1;
            ++i;
        }
        std::size_t j = i;
        while (j < t.size() && t[j] != '+' && t[j] != '-') ++j;
        std::string term = t.substr(i, j - i);
        i = j;
        if (term.empty()) throw Error("ParseError", "bad polynomial '" + s + "'");
        Rational coef(1);
        int deg = 0;
        auto zpos = term.find('z');
        if (zpos == std::string::npos) {
            coef = parse_rational(term);
        } else {
            std::string c = term.substr(0, zpos);
            if (!c.empty()) {
                if (c.back() != '*') throw Error("ParseError", "bad term '" + term + "'");
                c.pop_back();
                coef = parse_rational(c);
            }
            std::string rest = term.substr(zpos + 1);
            deg = 1;
            if (!rest.empty()) {
                if (rest[0] != '^') throw Error("ParseError", "bad term '" + term + "'");
                deg = std::stoi(rest.substr(1));
            }
        }
        std::vector<Rational> mono(deg + 1, Rational(0));
        mono[deg] = coef * sign;
        out += QPoly(std::move(mono));
    }
    return out;
}

}  // namespace

std::string format_ratfun(const QRatFun& f) {
    Integer l = 1, g = 0;
    for (const auto* p : {&f.num(), &f.den()})
        for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    auto scale = [&](const QPoly& p) {
        std::vector<Integer> out;
        for (const auto& c : p.coeffs()) out.push_back(Integer(c * l));
        return out;
    };
    std::vector<Integer> n = scale(f.num()), d = scale(f.den());
    for (const auto* v : {&n, &d})
        for (const auto& c : *v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g != 0 && g != 1)
        for (auto* v : {&n, &d})
            for (auto& c : *v) c /= g;
    std::string ns = format_int_poly(n), ds = format_int_poly(d);
    if (ds == "1") return ns;
    return "(" + ns + ")/(" + ds + ")";
}

QRatFun parse_ratfun(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == '/' && depth == 0 && s.find('(') != std::string::npos)
            return QRatFun(parse_poly(s.substr(0, i)), parse_poly(s.substr(i + 1)));
    }
    return QRatFun(parse_poly(s));
}

std::string ge_str(const GammaExpr& e) {
    std::ostringstream os;
    os << format_ratfun(e.prefactor);
    if (e.pi_half != 0) os << " * pi^(" << e.pi_half << "/2)";
    for (const auto& [arg, exp] : e.factors) {
        os << " * Gamma(" << (arg.orient > 0 ? "" : "-") << "z/2";
        if (arg.shift >= 0)
            os << " + " << to_str(arg.shift);
        else
            os << " - " << to_str(Rational(-arg.shift));
        os << ")";
        if (exp != 1) os << "^" << exp;
    }
    return os.str();
}

}  // namespace hcz
