#include "hcz/numeric.hpp"

#include <array>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>

namespace hcz {

namespace {

// g = 7, n = 9 coefficient set.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

double gamma_num(double x) {
    if (x <= 0 && x == std::floor(x)) throw Error("PoleArgument", "Gamma pole at " + std::to_string(x));
    if (x < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_num(1.0 - x));
    x -= 1.0;
    double a = kLanczos[0];
    double t = x + kLanczosG + 0.5;
    for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (x + static_cast<double>(i));
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

double ge_eval_numeric(const GammaExpr& e, double z) {
    // Canonical prefactors can have large alternating coefficients, so Horner in double
    // cancels badly; a double is an exact rational, evaluate there.
    const auto& f = e.prefactor;
    Rational zq(z);
    Rational den = f.den().eval(zq), num = f.num().eval(zq);
    if (den == 0) throw Error("PoleArgument", "prefactor pole");
    double v = Rational(num / den).get_d() * std::pow(std::numbers::pi, e.pi_half / 2.0);
    for (const auto& [arg, exp] : e.factors) {
        double g = gamma_num(arg.orient * z / 2 + arg.shift.get_d());
        v *= std::pow(g, exp);
    }
    return v;
}

std::complex<double> intertwine_quadrature(double z, int nu, const NumericConfig& cfg) {
    if (!(z > 1)) throw Error("ConvergenceFailure", "quadrature needs z > 1");
    boost::math::quadrature::tanh_sinh<double> integrator;
    auto re = [&](double phi) { return std::pow(std::sin(phi), z - 2) * std::cos(nu * phi); };
    auto im = [&](double phi) { return std::pow(std::sin(phi), z - 2) * std::sin(nu * phi); };
    double err_re = 0, err_im = 0, l1 = 0;
    double r = integrator.integrate(re, 0.0, std::numbers::pi, cfg.quadrature_tol, &err_re, &l1);
    double i = integrator.integrate(im, 0.0, std::numbers::pi, cfg.quadrature_tol, &err_im, &l1);
    if (!std::isfinite(r) || !std::isfinite(i)) throw Error("ConvergenceFailure", "non-finite quadrature");
    return {r, i};
}

double lambda_closed_form(double z, int eps) {
    return 2.0 / (z - 1.0) * std::tan(std::numbers::pi * (z + eps) / 2.0);
}

}  // namespace hcz
