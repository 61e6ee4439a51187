#pragma once

#include <json.hpp>

#include "hcz/gamma_expr.hpp"
#include "hcz/gl2_hc.hpp"
#include "hcz/gln_spectral.hpp"
#include "hcz/intertwine.hpp"

namespace hcz {

using Json = nlohmann::ordered_json;

// Rationals travel as "p" or "p/q" strings.
Json q_json(const Rational& q);
Rational json_q(const Json& j);

// {"prefactor": "...", "pi_half": k, "gammas": [{"shift": "a/b", "exp": e}, ...]};
// "orient": -1 appears only on reflected arguments.
void to_json(Json& j, const GammaExpr& e);
void from_json(const Json& j, GammaExpr& e);

void to_json(Json& j, const PiRational& v);
void from_json(const Json& j, PiRational& v);

// minimal_k_type is derived on output and ignored on input.
void to_json(Json& j, const SpectralParams& p);
void from_json(const Json& j, SpectralParams& p);

void to_json(Json& j, const FactorData& f);
void from_json(const Json& j, FactorData& f);
void to_json(Json& j, const IntertwinerReport& r);
void from_json(const Json& j, IntertwinerReport& r);

void to_json(Json& j, const CohomComponent& c);
void from_json(const Json& j, CohomComponent& c);
void to_json(Json& j, const H1Report& h);
void from_json(const Json& j, H1Report& h);
void to_json(Json& j, const CompareConstants& c);
void from_json(const Json& j, CompareConstants& c);

}  // namespace hcz
