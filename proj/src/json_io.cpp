#include "hcz/json_io.hpp"

#include <cstdio>

namespace hcz {

namespace {

Json q_array(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(q_json(x));
    return a;
}

std::vector<Rational> array_q(const Json& j) {
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(json_q(x));
    return out;
}

// Small integers as numbers; the parameters never leave the long range.
Json z_array(const std::vector<Integer>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.get_si());
    return a;
}

std::vector<Integer> array_z(const Json& j) {
    std::vector<Integer> out;
    for (const auto& x : j) out.emplace_back(x.get<long>());
    return out;
}

Root parse_root(const std::string& s) {
    Root r;
    if (std::sscanf(s.c_str(), "e_%d-e_%d", &r.i, &r.j) != 2) throw Error("ParseError", "bad root '" + s + "'");
    return r;
}

}  // namespace

Json q_json(const Rational& q) { return to_str(q); }

Rational json_q(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return parse_rational(j.get<std::string>());
}

void to_json(Json& j, const GammaExpr& e) {
    j = Json::object();
    j["prefactor"] = format_ratfun(e.prefactor);
    j["pi_half"] = e.pi_half;
    Json g = Json::array();
    for (const auto& [arg, exp] : e.factors) {
        Json f{{"shift", q_json(arg.shift)}, {"exp", exp}};
        if (arg.orient != 1) f["orient"] = arg.orient;
        g.push_back(std::move(f));
    }
    j["gammas"] = std::move(g);
}

void from_json(const Json& j, GammaExpr& e) {
    e = GammaExpr::rational(parse_ratfun(j.at("prefactor").get<std::string>()));
    e.pi_half = j.at("pi_half").get<int>();
    for (const auto& f : j.at("gammas")) {
        int orient = f.value("orient", 1);
        if (orient != 1 && orient != -1) throw Error("ParseError", "orient must be +-1");
        // kept as written, no canonicalization
        int& x = e.factors[{orient, json_q(f.at("shift"))}];
        x += f.at("exp").get<int>();
    }
}

void to_json(Json& j, const PiRational& v) { j = Json{{"pi_half", v.pi_half}, {"rational", q_json(v.value)}}; }

void from_json(const Json& j, PiRational& v) {
    v.pi_half = j.at("pi_half").get<int>();
    v.value = json_q(j.at("rational"));
}

void to_json(Json& j, const SpectralParams& p) {
    j = Json::object();
    j["n"] = p.n;
    j["a"] = q_array(p.a);
    j["d"] = q_json(p.d);
    j["b"] = z_array(p.b);
    j["c"] = q_array(p.c);
    j["l_wun"] = p.l_wun;
    j["b_n"] = p.b_n;
    Json mk = Json::object();
    for (int eps : {1, -1}) {
        try {
            mk[eps > 0 ? "+1" : "-1"] = z_array(minimal_k_type(p, eps));
        } catch (const Error&) {
            mk[eps > 0 ? "+1" : "-1"] = nullptr;
        }
    }
    j["minimal_k_type"] = std::move(mk);
    j["lambda"] = q_array(p.lambda);
    j["w_un"] = format_perm(p.wun);
    j["mu"] = q_array(p.mu);
    j["zeta_mu"] = q_array(p.zeta_mu);
    j["circ_r"] = p.circ_r;
    j["regular"] = p.regular;
}

void from_json(const Json& j, SpectralParams& p) {
    p = SpectralParams{};
    p.n = j.at("n").get<int>();
    p.a = array_q(j.at("a"));
    p.d = json_q(j.at("d"));
    p.b = array_z(j.at("b"));
    p.c = array_q(j.at("c"));
    p.l_wun = j.at("l_wun").get<int>();
    p.b_n = j.at("b_n").get<int>();
    p.lambda = array_q(j.at("lambda"));
    p.wun = parse_perm(j.at("w_un").get<std::string>());
    p.mu = array_q(j.at("mu"));
    p.zeta_mu = array_q(j.at("zeta_mu"));
    p.circ_r = j.at("circ_r").get<int>();
    p.regular = j.at("regular").get<bool>();
}

void to_json(Json& j, const FactorData& f) {
    j = Json{{"k", f.k}, {"beta", f.beta.str()}, {"r", f.r},          {"c", f.c},
             {"h", f.h}, {"eps", f.eps},         {"m", f.m},          {"m_even", f.m_even}};
}

void from_json(const Json& j, FactorData& f) {
    f.k = j.at("k").get<int>();
    f.beta = parse_root(j.at("beta").get<std::string>());
    f.r = j.at("r").get<int>();
    f.c = j.at("c").get<long>();
    f.h = j.at("h").get<long>();
    f.eps = j.at("eps").get<long>();
    f.m = j.at("m").get<long>();
    f.m_even = j.value("m_even", 0L);
}

void to_json(Json& j, const IntertwinerReport& r) {
    j = Json::object();
    j["N"] = r.N;
    j["n"] = r.n;
    j["w"] = format_perm(r.w);
    j["d_U"] = r.d_U;
    j["chi"] = format_coords(r.chi);
    Json fs = Json::array();
    for (std::size_t k = 0; k < r.factors.size(); ++k) {
        Json f = r.factors[k];
        if (k < r.factor_exprs.size()) f["gamma"] = r.factor_exprs[k];
        fs.push_back(std::move(f));
    }
    j["factors"] = std::move(fs);
    j["product"] = r.prefactor;
    j["pi_half"] = r.pi_half;
    j["rational"] = q_json(r.rational_value);
    j["even_h_count"] = r.even_h_count;
    j["total_m"] = r.total_mk;
    j["order_at_zero"] = r.order_at_zero;
    j["even_transfers"] = r.even_transfers;
    j["transfer_even"] = r.transfer_even;
    j["regular"] = r.regular;
}

void from_json(const Json& j, IntertwinerReport& r) {
    r = IntertwinerReport{};
    r.N = j.at("N").get<int>();
    r.n = j.at("n").get<int>();
    r.w = parse_perm(j.at("w").get<std::string>());
    r.d_U = j.at("d_U").get<int>();
    r.chi = parse_coords(j.at("chi").get<std::string>());
    for (const auto& f : j.at("factors")) {
        r.factors.push_back(f.get<FactorData>());
        if (f.contains("gamma")) r.factor_exprs.push_back(f.at("gamma").get<GammaExpr>());
    }
    r.prefactor = j.at("product").get<GammaExpr>();
    r.pi_half = j.at("pi_half").get<int>();
    r.rational_value = json_q(j.at("rational"));
    r.even_h_count = j.at("even_h_count").get<int>();
    r.total_mk = j.value("total_m", 0);
    r.order_at_zero = j.value("order_at_zero", 0);
    r.even_transfers = j.value("even_transfers", 0);
    r.transfer_even = j.value("transfer_even", false);
    r.regular = j.value("regular", true);
}

void to_json(Json& j, const CohomComponent& c) { j = Json{{"gen", c.gen}, {"nu", c.nu}, {"mu", c.mu}}; }

void from_json(const Json& j, CohomComponent& c) {
    c.gen = j.at("gen").get<int>();
    c.nu = j.at("nu").get<int>();
    c.mu = j.at("mu").get<int>();
}

void to_json(Json& j, const H1Report& h) {
    j = Json{{"omega", h.omega}, {"omega_bar", h.omega_bar}, {"eta_signs", {h.eta_signs.first, h.eta_signs.second}}};
}

void from_json(const Json& j, H1Report& h) {
    h.omega = j.at("omega").get<CohomComponent>();
    h.omega_bar = j.at("omega_bar").get<CohomComponent>();
    h.eta_signs = {j.at("eta_signs").at(0).get<int>(), j.at("eta_signs").at(1).get<int>()};
}

void to_json(Json& j, const CompareConstants& c) {
    j = Json{{"first", c.first}, {"second", c.second}, {"stated_first", c.stated_first}, {"stated_second", c.stated_second}};
}

void from_json(const Json& j, CompareConstants& c) {
    c.first = j.at("first").get<PiRational>();
    c.second = j.at("second").get<PiRational>();
    c.stated_first = j.at("stated_first").get<PiRational>();
    c.stated_second = j.at("stated_second").get<PiRational>();
}

}  // namespace hcz
