#pragma once

#include <complex>

#include "hcz/gamma_expr.hpp"

namespace hcz {

struct NumericConfig {
    double quadrature_tol = 1e-10;
};

// Lanczos approximation with reflection below 1/2. Throws PoleArgument.
double gamma_num(double x);

double ge_eval_numeric(const GammaExpr& e, double z);

// int_R (1+u^2)^{-z/2} e^{i nu phi(u)} du with phi(u) = atan2(1, -u), z > 1.
// Computed as int_0^pi sin^{z-2}(phi) e^{i nu phi} dphi after u = -cot(phi).
std::complex<double> intertwine_quadrature(double z, int nu, const NumericConfig& cfg = {});

// Closed form (2/(z-1)) tan(pi (z+eps)/2) of the composite scalar.
double lambda_closed_form(double z, int eps);

}  // namespace hcz
