#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hcz/checks.hpp"
#include "hcz/gl2_hc.hpp"
#include "hcz/gln_spectral.hpp"
#include "hcz/intertwine.hpp"
#include "hcz/json_io.hpp"

using namespace hcz;

namespace {

enum class Format { table, json, csv };

constexpr int kExitOk = 0, kExitVerify = 1, kExitUsage = 2, kExitAssumption = 3;

struct Table {
    std::vector<std::string> head;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void print_table(const Table& t, Format f) {
    if (f == Format::csv) {
        for (std::size_t k = 0; k < t.head.size(); ++k) std::cout << (k ? "," : "") << csv_cell(t.head[k]);
        std::cout << "\n";
        for (const auto& r : t.rows) {
            for (std::size_t k = 0; k < r.size(); ++k) std::cout << (k ? "," : "") << csv_cell(r[k]);
            std::cout << "\n";
        }
        return;
    }
    std::vector<std::size_t> w(t.head.size(), 0);
    for (std::size_t k = 0; k < t.head.size(); ++k) w[k] = t.head[k].size();
    for (const auto& r : t.rows)
        for (std::size_t k = 0; k < r.size() && k < w.size(); ++k) w[k] = std::max(w[k], r[k].size());
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t k = 0; k < r.size(); ++k) {
            std::cout << (k ? "  " : "");
            if (k + 1 == r.size())
                std::cout << r[k];
            else
                std::cout << std::left << std::setw(static_cast<int>(w[k])) << r[k];
        }
        std::cout << "\n";
    };
    line(t.head);
    for (const auto& r : t.rows) line(r);
}

// Table and csv share rows; json gets its own record.
void emit(Format f, const Table& t, const Json& j) {
    if (f == Format::json)
        std::cout << j.dump(2) << "\n";
    else
        print_table(t, f);
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? sep : "") + xs[k];
    return out;
}

std::string pi_rational_str(const PiRational& v) {
    std::string s = to_str(v.value);
    if (v.pi_half == 0) return s;
    return s + " * pi^(" + std::to_string(v.pi_half) + "/2)";
}

// Value at a rational point, or "0" / "pole of order k" where the expression is not finite nonzero.
std::pair<std::string, Json> value_at(const GammaExpr& e, const Rational& z0) {
    GammaExpr s = ge_shift(e, z0);
    int ord = ge_order_at_zero(s);
    if (ord > 0) return {"0", Json{{"pi_half", 0}, {"rational", "0"}, {"order", ord}}};
    if (ord < 0) return {"pole of order " + std::to_string(-ord), Json{{"pole_order", -ord}}};
    PiRational v = ge_eval_at_zero(s);
    return {pi_rational_str(v), Json(v)};
}

std::string sign_str(int s) { return s > 0 ? "+" : "-"; }

void check_rank(int N, int n) {
    if (n < 1 || n >= N) throw CLI::ValidationError("--n", "need 1 <= n < N");
    if (N > max_rank()) throw CLI::ValidationError("--N", "N exceeds the enumeration guard " + std::to_string(max_rank()) + " (set HCZ_MAX_N)");
}

// ---- subcommands ----------------------------------------------------------------

void cmd_kostant(Format f, int N, int n, bool balanced_only, const std::string& lambda) {
    check_rank(N, n);
    std::optional<Coords> lam;
    if (!lambda.empty()) lam = parse_lambda(lambda, N);
    const bool even = (n * (N - n)) % 2 == 0;
    if (balanced_only && !even) throw Error("OddDimension", "balanced elements need n*(N-n) even");
    Table t{{"w", "length", "balanced"}, {}};
    if (lam) t.head.push_back("w.lambda (gamma coefficients)");
    Json j = Json::array();
    for (const auto& w : kostant_set(N, maximal(N, n))) {
        bool bal = even && is_balanced(w, N, n);
        if (balanced_only && !bal) continue;
        std::vector<std::string> row{format_perm(w), std::to_string(perm_length(w)), even ? (bal ? "yes" : "no") : "-"};
        Json rec{{"w", format_perm(w)}, {"length", perm_length(w)}, {"balanced", even ? Json(bal) : Json(nullptr)}};
        if (lam) {
            Coords img = dot_action(w, *lam);
            std::vector<std::string> a;
            Json ja = Json::array();
            for (const auto& x : gamma_coeffs(img)) {
                a.push_back(to_str(x));
                ja.push_back(q_json(x));
            }
            row.push_back(join(a, ",") + ";" + to_str(det_twist(img)));
            rec["dot_gamma"] = ja;
            rec["dot_det"] = q_json(det_twist(img));
        }
        t.rows.push_back(row);
        j.push_back(rec);
    }
    emit(f, t, j);
}

void cmd_betaseq(Format f, int N, int n) {
    check_rank(N, n);
    auto fz = wp_factorization(N, n);
    Table t{{"k", "r", "beta", "h", "x_k"}, {}};
    Json j = Json::array();
    for (std::size_t k = 0; k < fz.betas.size(); ++k) {
        const Root& b = fz.betas[k];
        t.rows.push_back({std::to_string(k + 1), std::to_string(fz.word[k]), b.str(), std::to_string(h_of_root(b)),
                          format_perm(fz.prefixes[k + 1])});
        j.push_back({{"k", k + 1}, {"r", fz.word[k]}, {"beta", b.str()}, {"h", h_of_root(b)},
                     {"x_k", format_perm(fz.prefixes[k + 1])}});
    }
    emit(f, t, j);
}

void cmd_dot(Format f, int N, const std::string& w_text, const std::string& lambda) {
    Perm w = parse_perm(w_text);
    if (static_cast<int>(w.size()) != N) throw CLI::ValidationError("--w", "permutation must have N entries");
    Coords lam = parse_lambda(lambda, N);
    Coords img = dot_action(w, lam);
    Table t{{"w", "length", "w.lambda", "gamma coefficients", "det"}, {}};
    std::vector<std::string> a;
    for (const auto& x : gamma_coeffs(img)) a.push_back(to_str(x));
    t.rows.push_back({format_perm(w), std::to_string(perm_length(w)), format_coords(img), join(a, ","), to_str(det_twist(img))});
    Json ja = Json::array();
    for (const auto& x : gamma_coeffs(img)) ja.push_back(q_json(x));
    emit(f, t, Json{{"w", format_perm(w)}, {"length", perm_length(w)}, {"coords", format_coords(img)}, {"gamma", ja},
                    {"det", q_json(det_twist(img))}});
}

void cmd_gl2_intertwine(Format f, int eps, int nu, const std::string& at, bool normalized) {
    GammaExpr e = normalized ? T_norm(eps, nu) : T_st(eps, nu);
    Json j{{"eps", eps}, {"nu", nu}, {"normalized", normalized}, {"expr", e}};
    Table t{{"eps", "nu", "expr"}, {{std::to_string(eps), std::to_string(nu), ge_str(e)}}};
    if (!at.empty()) {
        auto [text, jv] = value_at(e, parse_rational(at));
        j["value"] = jv;
        t.head.push_back("value at " + at);
        t.rows[0].push_back(text);
    }
    emit(f, t, j);
}

void cmd_gl2_cohomology(Format f, int l, const std::string& d_text) {
    if (l < 0) throw CLI::ValidationError("--l", "need l >= 0");
    Rational d = parse_rational(d_text);
    H1Report h = H1_cohomology(l, d);
    auto classes = cohomology_matches(l, 1);
    Table t{{"class", "generator", "nu", "mu", "eta"}, {}};
    const std::vector<std::pair<std::string, CohomComponent>> named{{"omega(1)", h.omega}, {"omega(2)", h.omega_bar}};
    const int signs[2] = {h.eta_signs.first, h.eta_signs.second};
    for (int k = 0; k < 2; ++k) {
        const auto& c = named[k].second;
        t.rows.push_back({named[k].first, c.gen > 0 ? "P+^v" : "P-^v", std::to_string(c.nu), std::to_string(c.mu),
                          sign_str(signs[k])});
    }
    Json j = h;
    j["l"] = l;
    j["d"] = q_json(d);
    j["classes"] = classes.size();
    j["signs"] = sign_str(signs[0]) + "," + sign_str(signs[1]);
    if (f == Format::table) {
        print_table(t, f);
        std::cout << "classes: " << classes.size() << "\nsigns: " << sign_str(signs[0]) << "," << sign_str(signs[1]) << "\n";
        return;
    }
    emit(f, t, j);
}

void cmd_gl2_poles(Format f, int eps, std::optional<int> nu, int window) {
    int v = nu.value_or(eps);
    auto poles = poles_of_Tst(eps, v, window);
    std::vector<std::string> zs;
    Table t{{"z", "order"}, {}};
    Json j = Json::array();
    for (auto it = poles.rbegin(); it != poles.rend(); ++it) {
        zs.push_back(std::to_string(it->z));
        t.rows.push_back({std::to_string(it->z), std::to_string(it->order)});
        j.push_back({{"z", it->z}, {"order", it->order}});
    }
    if (f == Format::table) {
        std::cout << join(zs, ", ") << "\n";
        return;
    }
    emit(f, t, j);
}

void cmd_gl2_lambda(Format f, int eps, const std::string& at) {
    GammaExpr e = Lambda(eps);
    if (at.empty()) {
        emit(f, Table{{"eps", "Lambda"}, {{std::to_string(eps), ge_str(e)}}}, Json{{"eps", eps}, {"expr", e}});
        return;
    }
    auto [text, jv] = value_at(e, parse_rational(at));
    if (f == Format::table) {
        std::cout << text << "\n";
        return;
    }
    emit(f, Table{{"eps", "z", "value"}, {{std::to_string(eps), at, text}}}, Json{{"eps", eps}, {"z", at}, {"value", jv}});
}

void cmd_gl2_compare(Format f, int l) {
    auto c = compare_constants(l);
    Table t{{"l", "first", "second", "stated first", "stated second"},
            {{std::to_string(l), pi_rational_str(c.first), pi_rational_str(c.second), pi_rational_str(c.stated_first),
              pi_rational_str(c.stated_second)}}};
    Json j = c;
    j["l"] = l;
    emit(f, t, j);
}

std::pair<std::vector<Rational>, Rational> spectral_input(int n, const std::string& lambda) {
    if (n < 2) throw CLI::ValidationError("--n", "need n >= 2");
    Coords c = parse_lambda(lambda, n);
    return {gamma_coeffs(c), det_twist(c)};
}

void cmd_spectral_params(Format f, int n, const std::string& lambda) {
    auto [a, d] = spectral_input(n, lambda);
    SpectralParams p = cuspidal_params(a, d);
    std::vector<std::string> b, c;
    for (const auto& x : p.b) b.push_back(x.get_str());
    for (const auto& x : p.c) c.push_back(to_str(x));
    Table t{{"n", "w_un", "l(w_un)", "b", "c", "b_n", "w_un.lambda"},
            {{std::to_string(n), format_perm(p.wun), std::to_string(p.l_wun), join(b, ","), join(c, ","),
              std::to_string(p.b_n), format_coords(p.mu)}}};
    emit(f, t, Json(p));
}

void cmd_spectral_minktype(Format f, int n, const std::string& lambda, int eps) {
    auto [a, d] = spectral_input(n, lambda);
    SpectralParams p = cuspidal_params(a, d);
    Table t{{"eps", "minimal K-type"}, {}};
    Json j = Json::object();
    std::vector<int> signs = eps == 0 ? std::vector<int>{1, -1} : std::vector<int>{eps};
    for (int s : signs) {
        auto k = minimal_k_type(p, s);
        std::vector<std::string> xs;
        Json arr = Json::array();
        for (const auto& x : k) {
            xs.push_back(x.get_str());
            arr.push_back(x.get_si());
        }
        t.rows.push_back({s > 0 ? "+1" : "-1", "(" + join(xs, ",") + ")"});
        j[s > 0 ? "+1" : "-1"] = arr;
    }
    emit(f, t, j);
}

void cmd_spectral_ucohom(Format f, int n, const std::string& lambda) {
    auto [a, d] = spectral_input(n, lambda);
    UCohomology u = u_cohomology_degrees(a, d);
    Table t{{"degree", "block-sum matches"}, {}};
    Json by = Json::object();
    for (const auto& [deg, cnt] : u.by_block_sums) {
        t.rows.push_back({std::to_string(deg), std::to_string(cnt)});
        by[std::to_string(deg)] = cnt;
    }
    Json inf = Json::array();
    std::vector<std::string> ws;
    for (const auto& w : u.infinitesimal) {
        inf.push_back(format_perm(w));
        ws.push_back(format_perm(w) + " (length " + std::to_string(perm_length(w)) + ")");
    }
    if (f == Format::table) {
        print_table(t, f);
        std::cout << "infinitesimal character matches: " << join(ws, ", ") << "\n";
        return;
    }
    emit(f, t, Json{{"n", n}, {"by_block_sums", by}, {"infinitesimal", inf}, {"w_un", format_perm(w_un(n))}});
}

void cmd_factorize(Format f, int N, int n, const std::string& lambda, const std::string& w_text, bool transfer_even) {
    check_rank(N, n);
    Coords lam = parse_lambda(lambda, N);
    BalancedDatum bd = w_text.empty() ? first_admissible(N, n, lam) : balanced_datum(N, n, parse_perm(w_text), lam);
    IntertwinerReport r = factorize(bd, transfer_even);
    if (f == Format::json) {
        std::cout << Json(r).dump(2) << "\n";
        return;
    }
    Table t{{"k", "beta", "r", "c", "h", "eps", "m", "m_even", "factor"}, {}};
    for (std::size_t k = 0; k < r.factors.size(); ++k) {
        const auto& fd = r.factors[k];
        t.rows.push_back({std::to_string(fd.k), fd.beta.str(), std::to_string(fd.r), std::to_string(fd.c),
                          std::to_string(fd.h), std::to_string(fd.eps), std::to_string(fd.m), std::to_string(fd.m_even),
                          ge_str(r.factor_exprs[k])});
    }
    print_table(t, f);
    if (f == Format::table) {
        std::cout << "N " << r.N << "  n " << r.n << "  w " << format_perm(r.w) << "  d_U " << r.d_U << "\n"
                  << "chi " << format_coords(r.chi) << "\n"
                  << "value at z=0: " << pi_rational_str({r.pi_half, r.rational_value}) << "\n"
                  << "pi_half " << r.pi_half << "  rational " << to_str(r.rational_value) << "  even_h_count "
                  << r.even_h_count << "  transferred zeros " << r.even_transfers << "\n";
    }
}

int cmd_verify(Format f, const std::string& suite) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> suites = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    Table t{{"suite", "check", "result", "cases", "max rel err", "detail"}, {}};
    Json j = Json::array();
    bool ok = true;
    for (const auto& s : suites) {
        for (const auto& c : run_suite(s)) {
            ok &= c.ok;
            std::ostringstream err;
            if (c.max_rel_err >= 0) err << std::scientific << std::setprecision(2) << c.max_rel_err;
            t.rows.push_back({s, c.name, c.ok ? "PASS" : "FAIL", std::to_string(c.cases), c.max_rel_err >= 0 ? err.str() : "exact",
                              c.detail});
            j.push_back({{"suite", s}, {"check", c.name}, {"ok", c.ok}, {"cases", c.cases},
                         {"max_rel_err", c.max_rel_err >= 0 ? Json(c.max_rel_err) : Json(nullptr)}, {"detail", c.detail}});
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (f == Format::json) {
        std::cout << Json{{"ok", ok}, {"checks", j}}.dump(2) << "\n";
    } else {
        print_table(t, f);
        if (f == Format::table) {
            std::ostringstream os;
            os << std::fixed << std::setprecision(2) << secs;
            std::cout << (ok ? "all checks passed" : "FAILURES") << " in " << os.str() << " s\n";
        }
    }
    return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hcz: exact intertwining-operator computations for GL(N)"};
    app.require_subcommand(1);
    app.fallthrough();  // --format may follow the subcommand
    std::string format = "table";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));

    int N = 0, n = 0, eps = 0, nu = 0, l = 0, window = 5;
    std::string lambda, w_text, at, d_text = "0", suite;
    bool balanced = false, json_flag = false, transfer_even = false, normalized = false;
    std::optional<int> nu_opt;

    auto* kostant = app.add_subcommand("kostant", "Kostant representatives of a maximal parabolic");
    kostant->add_option("--N", N)->required();
    kostant->add_option("--n", n)->required();
    kostant->add_flag("--balanced", balanced, "Only balanced elements");
    kostant->add_option("--lambda", lambda, "Weight a1,...,a_{N-1}[;d] for the dot action");

    auto* betaseq = app.add_subcommand("betaseq", "Reduced word of w_P and its root sequence");
    betaseq->add_option("--N", N)->required();
    betaseq->add_option("--n", n)->required();

    auto* dot = app.add_subcommand("dot", "Dot action w.lambda");
    dot->add_option("--N", N)->required();
    dot->add_option("--w", w_text, "Permutation [w1,...,wN]")->required();
    dot->add_option("--lambda", lambda)->required();

    auto* gl2 = app.add_subcommand("gl2", "Rank one computations");
    gl2->require_subcommand(1);
    auto* gi = gl2->add_subcommand("intertwine", "K-type eigenvalue of the standard intertwiner");
    gi->add_option("--eps", eps)->required()->check(CLI::Range(0, 1));
    gi->add_option("--nu", nu)->required();
    gi->add_option("--at", at, "Rational point z");
    gi->add_flag("--normalized", normalized, "Divide by the normalizing Gamma factor");
    auto* gc = gl2->add_subcommand("cohomology", "First relative Lie algebra cohomology");
    gc->add_option("--l", l)->required();
    gc->add_option("--d", d_text, "Central twist, p or p/2");
    auto* gp = gl2->add_subcommand("poles", "Poles of the intertwiner eigenvalue");
    gp->add_option("--eps", eps)->required()->check(CLI::Range(0, 1));
    gp->add_option("--nu", nu_opt);
    gp->add_option("--window", window)->check(CLI::NonNegativeNumber);
    auto* gl = gl2->add_subcommand("lambda", "Scalar of the composite intertwiner");
    gl->add_option("--eps", eps)->required()->check(CLI::Range(0, 1));
    gl->add_option("--at", at);
    auto* gm = gl2->add_subcommand("compare", "Standard versus algebraic normalization at the cohomological point");
    gm->add_option("--l", l)->required()->check(CLI::NonNegativeNumber);

    auto* spectral = app.add_subcommand("spectral", "Cuspidal parameters of the Levi block");
    spectral->require_subcommand(1);
    auto* sp = spectral->add_subcommand("params", "Cuspidal parameters");
    auto* sm = spectral->add_subcommand("minktype", "Minimal K-types");
    auto* su = spectral->add_subcommand("ucohom", "u-cohomology degrees");
    for (auto* s : {sp, sm, su}) {
        s->add_option("--n", n)->required();
        s->add_option("--lambda", lambda)->required();
    }
    sm->add_option("--eps", eps, "+1, -1, or 0 for both")->check(CLI::IsMember({-1, 0, 1}));

    auto* fac = app.add_subcommand("factorize", "Factorized prefactor of the intertwiner at z = 0");
    fac->add_option("--N", N)->required();
    fac->add_option("--n", n)->required();
    fac->add_option("--lambda", lambda)->required();
    fac->add_option("--w", w_text, "Balanced element; default is the first admissible one");
    fac->add_flag("--json", json_flag, "Same as --format json");
    fac->add_flag("--transfer-even", transfer_even, "Move zeros of even-h factors into the rational part");

    auto* ver = app.add_subcommand("verify", "Batch invariant suites");
    ver->add_option("--suite", suite)->required()->check(CLI::IsMember({"arith", "weyl", "gl2", "spectral", "factor", "numeric", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Format f = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::table;
    if (json_flag) f = Format::json;
    try {
        if (*kostant) cmd_kostant(f, N, n, balanced, lambda);
        else if (*betaseq) cmd_betaseq(f, N, n);
        else if (*dot) cmd_dot(f, N, w_text, lambda);
        else if (*gi) cmd_gl2_intertwine(f, eps, nu, at, normalized);
        else if (*gc) cmd_gl2_cohomology(f, l, d_text);
        else if (*gp) cmd_gl2_poles(f, eps, nu_opt, window);
        else if (*gl) cmd_gl2_lambda(f, eps, at);
        else if (*gm) cmd_gl2_compare(f, l);
        else if (*sp) cmd_spectral_params(f, n, lambda);
        else if (*sm) cmd_spectral_minktype(f, n, lambda, eps);
        else if (*su) cmd_spectral_ucohom(f, n, lambda);
        else if (*fac) cmd_factorize(f, N, n, lambda, w_text, transfer_even);
        else if (*ver) return cmd_verify(f, suite);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const AssumptionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAssumption;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.tag() == "UnexpectedPole") {
            std::cerr << "hint: --transfer-even moves the zero of each vanishing even-h factor into the rational part\n";
            return kExitVerify;
        }
        return kExitUsage;
    }
    return kExitOk;
}
