#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcz/gamma_expr.hpp"

namespace hcz {

enum class LieOp { H, Y, Eplus, Eminus, V, Pplus, Pminus };
inline constexpr std::array<LieOp, 7> kAllLieOps = {LieOp::H, LieOp::Y, LieOp::Eplus, LieOp::Eminus,
                                                     LieOp::V, LieOp::Pplus, LieOp::Pminus};
std::string lie_op_name(LieOp op);

// 2x2 matrix over Q(i), row major.
using Mat2 = std::array<GaussianRational, 4>;
Mat2 lie_matrix(LieOp op);
Mat2 mat_bracket(const Mat2& a, const Mat2& b);

// Parameter of the induced module: z = l (algebraic) or symbolic z.
struct ModuleParam {
    std::optional<int> l;
    Rational d{0};
    GPoly z() const { return l ? GPoly(GaussianRational(*l)) : GPoly::z(); }
};

// Finitely supported vector sum_nu c_nu Phi_nu; c_nu polynomial in z over Q(i).
struct KVector {
    std::map<int, GPoly> c;

    static KVector basis(int nu) {
        KVector v;
        v.c[nu] = GPoly(1);
        return v;
    }
    KVector& operator+=(const KVector& o);
    KVector scaled(const GPoly& s) const;
    void prune();
    friend bool operator==(const KVector& a, const KVector& b);
    std::string str() const;  // "sum c_nu*Phi[nu]"
};
KVector operator-(KVector a, const KVector& b);

// Y Phi = i nu Phi, P+ Phi_nu = (z+nu) Phi_{nu+2}, P- Phi_nu = (z-nu) Phi_{nu-2}.
KVector act(LieOp op, const KVector& v, const ModuleParam& p);
// Arbitrary matrix, split as scalar (acting by 2d) plus H, V, Y parts.
KVector act_matrix(const Mat2& m, const KVector& v, const ModuleParam& p);
bool bracket_check(LieOp a, LieOp b, const KVector& v, const ModuleParam& p);

// Closure of Phi_start under P+ and P- inside |nu| <= window.
std::vector<int> closure(int start, int window, const ModuleParam& p, bool& hit_boundary);

struct SubmoduleReport {
    int dimension = 0;
    std::vector<int> ktypes;
    bool ops_closed = false;      // every LieOp keeps the span
    bool quotient_splits = false; // upper and lower halves invariant modulo the span
};
// l <= 0, module with z = l. Throws NotNegative for l > 0.
SubmoduleReport invariant_submodule(int l);

// l >= 0: D+ (nu >= l+2) and D- (nu <= -l-2) are submodules of the z = l+2 module.
bool discrete_series_check(int l, int window = 12);

// Coefficient of Phi_nu in T_st(Phi_nu) as a function of z. Throws ParityMismatch.
GammaExpr T_st(int eps, int nu);
// z -> 2 - z.
GammaExpr T_st_dagger(int eps, int nu);
GammaExpr Lambda(int eps);
// T_st(dagger) T_st = pi * Lambda for every nu = eps mod 2 with |nu| <= window.
bool composite_check(int eps, int window);
GammaExpr T_norm(int eps, int nu);

struct Pole {
    int z = 0;
    int order = 0;  // pole order (positive)
};
std::vector<Pole> poles_of_Tst(int eps, int nu, int window);

struct CompareConstants {
    PiRational first, second;                 // computed ratios T_st / T_alg
    PiRational stated_first, stated_second;   // the closed-form constants, for reference
};
// l >= 0, eps = l mod 2.
CompareConstants compare_constants(int l);

struct CohomComponent {
    int gen = 0;  // +1 for P+^vee, -1 for P-^vee, 0 for degree 0 or 2 generators
    int nu = 0;
    int mu = 0;
};
// Total-weight matching in Hom_K(Lambda^q p, D_lambda (x) M_lambda), K-types |nu| <= l+2+2*window.
std::vector<CohomComponent> cohomology_matches(int l, int degree, int window = 8);

struct H1Report {
    CohomComponent omega, omega_bar;
    std::pair<int, int> eta_signs;  // on omega^(1), omega^(2)
};
// Throws ParityViolation if 2d - l is odd.
H1Report H1_cohomology(int l, const Rational& d);

}  // namespace hcz
