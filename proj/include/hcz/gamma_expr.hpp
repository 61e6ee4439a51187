#pragma once

#include <map>
#include <string>
#include <utility>

#include "hcz/errors.hpp"
#include "hcz/polynomial.hpp"

namespace hcz {

// Key of one Gamma factor Gamma(orient*z/2 + shift); orient is +1 or -1.
struct GammaArg {
    int orient = 1;
    Rational shift;
    friend bool operator<(const GammaArg& a, const GammaArg& b) {
        if (a.orient != b.orient) return a.orient < b.orient;
        return a.shift < b.shift;
    }
    friend bool operator==(const GammaArg& a, const GammaArg& b) {
        return a.orient == b.orient && a.shift == b.shift;
    }
};

// prefactor(z) * pi^{pi_half/2} * prod Gamma(orient*z/2 + shift)^exp
struct GammaExpr {
    QRatFun prefactor{1};
    int pi_half = 0;
    std::map<GammaArg, int> factors;

    static GammaExpr identity() { return {}; }
    static GammaExpr gamma(const Rational& shift, int exp = 1, int orient = 1) {
        GammaExpr e;
        Rational s = shift;
        s.canonicalize();
        e.factors[{orient, s}] = exp;
        return e;
    }
    static GammaExpr constant(const Rational& c, int pi_half = 0) {
        GammaExpr e;
        e.prefactor = QRatFun(c);
        e.pi_half = pi_half;
        return e;
    }
    static GammaExpr rational(QRatFun f) {
        GammaExpr e;
        e.prefactor = std::move(f);
        return e;
    }

    bool is_canonical() const;
    friend bool operator==(const GammaExpr& a, const GammaExpr& b) {
        return a.prefactor == b.prefactor && a.pi_half == b.pi_half && a.factors == b.factors;
    }
};

struct PiRational {
    int pi_half = 0;
    Rational value;
    friend bool operator==(const PiRational& a, const PiRational& b) {
        return a.pi_half == b.pi_half && a.value == b.value;
    }
};

GammaExpr ge_mul(const GammaExpr& a, const GammaExpr& b);
GammaExpr ge_inverse(const GammaExpr& a);
GammaExpr ge_div(const GammaExpr& a, const GammaExpr& b);
GammaExpr ge_canonicalize(const GammaExpr& e);
// Substitute z -> a*z + b with a = +-1; result canonical.
GammaExpr ge_affine(const GammaExpr& e, int a, const Rational& b);
inline GammaExpr ge_shift(const GammaExpr& e, const Rational& z0) { return ge_affine(e, 1, z0); }
int ge_order_at_zero(const GammaExpr& e);
// Throws Error with tag PoleError / ZeroError / IrrationalGamma.
PiRational ge_eval_at_zero(const GammaExpr& e);
// Value at a rational point, via shift.
inline PiRational ge_eval_at(const GammaExpr& e, const Rational& z0) {
    return ge_eval_at_zero(ge_shift(e, z0));
}
// Coefficient of z^order in the Laurent expansion at 0, as pi-half power and rational.
PiRational ge_leading_at_zero(const GammaExpr& e);

std::string format_ratfun(const QRatFun& f);
QRatFun parse_ratfun(const std::string& s);
std::string ge_str(const GammaExpr& e);

}  // namespace hcz
