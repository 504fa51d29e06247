#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fqt/fqt.hpp"

namespace {

using fqt::ojson;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerification = 2;

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    // field
    std::optional<std::uint64_t> q;
    std::optional<std::uint32_t> p;
    std::uint32_t ext_degree = 1;
    std::string modulus;
    // common
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> budget;
    std::string format = "json";
    std::string out;
    unsigned threads = 1;
    // inputs
    std::string table;
    std::string in;
    std::int64_t D = 3;
    std::uint64_t n = 3;
    std::optional<std::uint64_t> m;
    std::string U = "t";
    std::string A = "t";
    std::uint64_t M = 2;
    std::string bounds;
    std::string caps;
    std::int64_t E = 2;
    std::string gens;
    std::string map;
    std::string epsilon = "1/2";
    std::int64_t C1 = 0;
    std::uint64_t B = 2;
    std::uint64_t n_lo = 1;
    std::uint64_t cap = 100;
    bool trace = false;
};

// ---- parsing helpers --------------------------------------------------------

std::vector<std::uint64_t> parse_uint_list(const std::string& s, std::size_t expected, const char* what) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw usage_error(std::string("malformed ") + what + ": '" + s + "'");
        }
    }
    if (out.size() != expected)
        throw usage_error(std::string(what) + " needs " + std::to_string(expected) + " comma-separated integers");
    return out;
}

fqt::Fraction parse_fraction(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) throw std::invalid_argument(s);
        return {std::stoull(s.substr(0, slash)), std::stoull(s.substr(slash + 1))};
    } catch (const std::exception&) {
        throw usage_error("malformed fraction '" + s + "' (expected a/b)");
    }
}

fqt::Field resolve_field(const Options& o) {
    fqt::FieldSpec s;
    if (o.q) {
        if (o.p) throw usage_error("give either --q or --p/--ext-degree, not both");
        std::uint64_t q = *o.q, p = 0;
        for (std::uint64_t d = 2; d * d <= q; ++d)
            if (q % d == 0) {
                p = d;
                break;
            }
        if (q < 2) throw usage_error("--q must be a prime power >= 2");
        if (p == 0) p = q;
        std::uint32_t e = 0;
        while (q % p == 0) {
            q /= p;
            ++e;
        }
        if (q != 1) throw usage_error("--q must be a prime power");
        s.p = static_cast<std::uint32_t>(p);
        s.e = e;
    } else {
        s.p = o.p.value_or(2);
        s.e = o.ext_degree;
    }
    if (!o.modulus.empty()) {
        const fqt::Poly m = fqt::parse_poly(fqt::Field::prime(s.p), o.modulus);
        for (auto c : m.coeffs()) s.modulus.push_back(c.v);
    }
    return fqt::Field(s);
}

std::uint64_t budget_or(const Options& o, std::uint64_t dflt) { return o.budget.value_or(dflt); }

ojson read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open '" + path + "'");
    try {
        return ojson::parse(in);
    } catch (const ojson::parse_error& e) {
        throw usage_error("'" + path + "' is not valid JSON: " + e.what());
    }
}

/// A table file, or any report that embeds one under "table".
fqt::FuncTable load_table(const Options& o) {
    if (o.table.empty()) throw usage_error("--table is required");
    const ojson j = read_json_file(o.table);
    return fqt::table_from_json(j.contains("table") ? j.at("table") : j, budget_or(o, fqt::kDefaultTableBudget));
}

fqt::TriDegreeBounds resolve_bounds(const Options& o, const fqt::Field& F) {
    if (o.bounds.empty()) return fqt::default_bounds(F.q(), o.M);
    const auto v = parse_uint_list(o.bounds, 3, "--bounds");
    return {v[0], v[1], v[2]};
}

// ---- report helpers ---------------------------------------------------------

ojson config_json(const std::string& cmd, const Options& o, const fqt::Field& F, ojson params) {
    ojson c;
    c["command"] = cmd;
    c["field"] = fqt::field_to_json(F);
    c["seed"] = o.seed;
    if (o.budget)
        c["budget"] = *o.budget;
    else
        c["budget"] = nullptr;
    c["format"] = o.format;
    c["out"] = o.out.empty() ? ojson(nullptr) : ojson(o.out);
    if (!o.table.empty()) c["table"] = o.table;
    if (!o.in.empty()) c["in"] = o.in;
    c["params"] = std::move(params);
    return c;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw usage_error("cannot write '" + o.out + "'");
    f << text;
}

void emit_json(const Options& o, const ojson& report) { emit(o, report.dump(2) + "\n"); }

void require_json(const std::string& cmd, const Options& o) {
    if (o.format != "json") throw usage_error("--format " + o.format + " is not supported by " + cmd);
}

ojson degree_json(fqt::Degree d) { return d.is_neg_inf() ? ojson("-inf") : ojson(d.value()); }

ojson fraction_json(const std::optional<fqt::Fraction>& f) {
    if (!f) return nullptr;
    return {{"num", f->num}, {"den", f->den}};
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

ojson p3_json(const fqt::P3Report& r) {
    ojson v = ojson::array();
    for (const auto& x : r.violations) v.push_back({{"P", fqt::to_human(x.P)}, {"A", fqt::to_human(x.A)}, {"A_ref", fqt::to_human(x.A_ref)}});
    return {{"pass", r.pass}, {"irreducibles_checked", r.irreducibles_checked}, {"violation_count", r.violation_count},
            {"violations", std::move(v)}};
}

ojson trace_json(const fqt::ConstructionTrace& t) {
    ojson rows = ojson::array();
    for (const auto& r : t.rows) {
        ojson res = ojson::array();
        for (const auto& [P, RP] : r.residues) res.push_back(ojson::array({fqt::to_compact(P), fqt::to_compact(RP)}));
        rows.push_back({{"B", fqt::to_compact(r.B)},
                        {"residues", std::move(res)},
                        {"R", fqt::to_compact(r.R)},
                        {"modulus", fqt::to_compact(r.modulus)},
                        {"g", fqt::to_compact(r.g)}});
    }
    return rows;
}

ojson certification_json(const fqt::CertificationReport& c) {
    ojson wf = ojson::array(), tf = ojson::array();
    for (const auto& w : c.window_failures) wf.push_back({{"B", fqt::to_human(w.B)}, {"degree", degree_json(w.degree)}});
    for (const auto& f : c.trace_failures) tf.push_back({{"B", fqt::to_human(f.B)}, {"reason", f.reason}});
    return {{"ok", c.ok}, {"p3", p3_json(c.p3)}, {"window_failures", std::move(wf)}, {"trace_failures", std::move(tf)}};
}

ojson search_json(const fqt::Field& F, const fqt::FuncTable& t, const fqt::RelationSearch& s) {
    ojson j{{"unknowns", s.unknowns}, {"equations", s.equations}, {"rank", s.rank}, {"found", s.relation.has_value()}};
    if (s.relation) {
        j["relation"] = fqt::relation_to_json(F, *s.relation);
        j["independent_failures"] = fqt::poly_list_to_json(fqt::relation_failures(t, *s.relation));
    } else {
        j["relation"] = nullptr;
    }
    return j;
}

ojson cert_json(const fqt::DegreeBoundCert& c) { return {{"C3", c.C3}, {"C4", c.C4}, {"y_degree", c.y_degree}}; }

fqt::SamplePoints power_samples(const fqt::FuncTable& t, const fqt::Poly& U) {
    if (U.degree() < 1) throw usage_error("--U must be non-constant");
    fqt::SamplePoints s;
    for (fqt::Poly Un = fqt::Poly::one(t.field()); t.contains(Un); Un *= U) s.emplace_back(Un, t.at(Un));
    return s;
}

// ---- subcommands ------------------------------------------------------------

int cmd_irreducibles(const Options& o) {
    require_json("irreducibles", o);
    const auto F = resolve_field(o);
    const auto list = fqt::enumerate_monic_irreducibles(F, o.n, budget_or(o, fqt::kDefaultEnumerationBudget));
    const auto count = fqt::count_irreducibles(F, o.n);
    emit_json(o, {{"config", config_json("irreducibles", o, F, {{"n", o.n}})},
                  {"n", o.n},
                  {"count", count},
                  {"enumerated", list.size()},
                  {"ok", count == list.size()},
                  {"irreducibles", fqt::poly_list_to_json(list)}});
    return count == list.size() ? kExitOk : kExitVerification;
}

int cmd_dn(const Options& o) {
    require_json("dn", o);
    const auto F = resolve_field(o);
    if (o.n < 1) throw usage_error("--n must be >= 1");
    const auto dn = fqt::d_n(F, o.n);
    const auto lower = fqt::pow_or_throw(F.q(), o.n, "q^n");
    const bool ok = lower <= dn && dn < 2 * lower;
    emit_json(o, {{"config", config_json("dn", o, F, {{"n", o.n}})},
                  {"n", o.n},
                  {"d_n", dn},
                  {"lower", lower},
                  {"upper", 2 * lower},
                  {"ok", ok}});
    return ok ? kExitOk : kExitVerification;
}

int cmd_identity(const Options& o) {
    require_json("identity-check", o);
    const auto F = resolve_field(o);
    const auto r = fqt::product_identity_check(F, o.n, budget_or(o, fqt::kDefaultEnumerationBudget));
    emit_json(o, {{"config", config_json("identity-check", o, F, {{"n", o.n}})},
                  {"n", r.n},
                  {"degree", r.degree},
                  {"factor_count", r.factor_count},
                  {"equal", r.equal}});
    return r.equal ? kExitOk : kExitVerification;
}

int cmd_build(const Options& o) {
    require_json("build-counterexample", o);
    const auto F = resolve_field(o);
    const auto built = fqt::build_counterexample(F, o.D, budget_or(o, fqt::kDefaultConstructionBudget));
    const auto cert = fqt::certify_counterexample(built.table, built.trace, {o.cap, o.threads});
    ojson rep{{"config", config_json("build-counterexample", o, F, {{"D", o.D}, {"trace", o.trace}})},
              {"certification", certification_json(cert)},
              {"table", fqt::table_to_json(built.table)}};
    if (o.trace) rep["trace"] = trace_json(built.trace);
    emit_json(o, rep);
    return cert.ok ? kExitOk : kExitVerification;
}

int cmd_make_table(const Options& o) {
    require_json("make-table", o);
    const auto F = resolve_field(o);
    if (o.map.empty()) throw usage_error("--map is required (A-coefficients of F(X), constant term first)");
    const auto coeffs = fqt::parse_poly_list(F, o.map);
    const auto t = fqt::FuncTable::tabulate(
        F, o.D,
        [&](const fqt::Poly& A) {
            fqt::Poly acc(F);
            for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * A + coeffs[j];
            return acc;
        },
        budget_or(o, fqt::kDefaultTableBudget));
    emit_json(o, fqt::table_to_json(t));
    return kExitOk;
}

int cmd_verify_p3(const Options& o) {
    require_json("verify-p3", o);
    const auto t = load_table(o);
    const auto r = fqt::verify_p3(t, {o.cap, o.threads, budget_or(o, fqt::kDefaultEnumerationBudget)});
    emit_json(o, {{"config", config_json("verify-p3", o, t.field(), {{"cap", o.cap}})}, {"D", t.D()}, {"report", p3_json(r)}});
    return r.pass ? kExitOk : kExitVerification;
}

int cmd_growth(const Options& o) {
    const auto t = load_table(o);
    const auto g = fqt::growth_profile(t, parse_fraction(o.epsilon));
    if (o.format == "csv") {
        std::string s = "# config: " + config_json("growth", o, t.field(), {{"epsilon", o.epsilon}}).dump() + "\n";
        s += "n,max_degree,main_bound,dn_bound,vanishing_cap,exceeds_main,exceeds_dn,exceeds_vanishing\n";
        for (const auto& r : g.rows) {
            s += std::to_string(r.n) + "," + r.max_degree.to_string() + "," +
                 (r.main_bound ? fmt_double(r.main_bound->to_double()) : "") + "," +
                 (r.dn_bound ? fmt_double(r.dn_bound->to_double()) : "") + "," + std::to_string(r.vanishing_cap) + "," +
                 std::to_string(r.exceeds_main) + "," + std::to_string(r.exceeds_dn) + "," + std::to_string(r.exceeds_vanishing) + "\n";
        }
        emit(o, s);
        return kExitOk;
    }
    require_json("growth", o);
    ojson rows = ojson::array();
    for (const auto& r : g.rows)
        rows.push_back({{"n", r.n},
                        {"max_degree", degree_json(r.max_degree)},
                        {"main_bound", fraction_json(r.main_bound)},
                        {"dn_bound", fraction_json(r.dn_bound)},
                        {"vanishing_cap", r.vanishing_cap},
                        {"exceeds_main", r.exceeds_main},
                        {"exceeds_dn", r.exceeds_dn},
                        {"exceeds_vanishing", r.exceeds_vanishing}});
    emit_json(o, {{"config", config_json("growth", o, t.field(), {{"epsilon", o.epsilon}})}, {"rows", std::move(rows)}});
    return kExitOk;
}

int cmd_find_relation(const Options& o) {
    require_json("find-relation", o);
    const auto t = load_table(o);
    const auto b = resolve_bounds(o, t.field());
    const auto s = fqt::find_relation(t, b, {o.threads, budget_or(o, fqt::kDefaultMonomialBudget)});
    const bool bad = s.relation && !fqt::relation_failures(t, *s.relation).empty();
    emit_json(o, {{"config", config_json("find-relation", o, t.field(), {{"bounds", fqt::bounds_to_json(b)}})},
                  {"search", search_json(t.field(), t, s)}});
    return bad ? kExitVerification : kExitOk;
}

int cmd_degree_bound(const Options& o) {
    require_json("degree-bound", o);
    const auto t = load_table(o);
    const auto& F = t.field();
    std::optional<fqt::RelationQ> rel;
    ojson params;
    if (!o.in.empty()) {
        const ojson j = read_json_file(o.in);
        const ojson* r = &j;
        if (j.contains("search")) r = &j.at("search").at("relation");
        if (r->is_null()) throw usage_error("'" + o.in + "' holds no relation");
        rel = fqt::relation_from_json(F, *r);
    } else {
        const auto b = resolve_bounds(o, F);
        params["bounds"] = fqt::bounds_to_json(b);
        rel = fqt::find_relation(t, b, {o.threads, budget_or(o, fqt::kDefaultMonomialBudget)}).relation;
    }
    ojson rep{{"config", config_json("degree-bound", o, F, params)}};
    if (!rel) {
        rep["found"] = false;
        emit_json(o, rep);
        return kExitOk;
    }
    const auto cert = fqt::degree_bound_from_relation(F, *rel);
    const auto bad = fqt::check_degree_bound(t, cert);
    rep["found"] = true;
    rep["relation"] = fqt::relation_to_json(F, *rel);
    rep["cert"] = cert_json(cert);
    rep["violations"] = fqt::poly_list_to_json(bad);
    emit_json(o, rep);
    return bad.empty() ? kExitOk : kExitVerification;
}

int cmd_linear_relation(const Options& o) {
    require_json("linear-relation", o);
    const auto t = load_table(o);
    const auto& F = t.field();
    if (o.caps.empty()) throw usage_error("--caps degX_P,degcoef_P,degX_Q,degcoef_Q is required");
    const auto c = parse_uint_list(o.caps, 4, "--caps");
    const fqt::AnsatzCaps caps{c[0], c[1], c[2], c[3]};
    const auto U = fqt::parse_poly(F, o.U);
    const auto samples = power_samples(t, U);
    const auto a = fqt::find_linear_relation(F, samples, caps, budget_or(o, fqt::kDefaultMonomialBudget));
    ojson rep{{"config", config_json("linear-relation", o, F, {{"U", fqt::to_human(U)}, {"caps", fqt::caps_to_json(caps)}})},
              {"field", fqt::field_to_json(F)},
              {"samples", samples.size()},
              {"found", a.has_value()}};
    bool bad = false;
    if (a) {
        ojson fails = ojson::array();
        for (const auto& [x, y] : samples)
            if (!a->evaluate(F, x, y).is_zero()) fails.push_back(fqt::to_human(x));
        bad = !fails.empty();
        rep["ansatz"] = fqt::ansatz_to_json(*a);
        rep["independent_failures"] = std::move(fails);
    } else {
        rep["ansatz"] = nullptr;
    }
    emit_json(o, rep);
    return bad ? kExitVerification : kExitOk;
}

int cmd_recover(const Options& o) {
    require_json("recover", o);
    if (o.in.empty()) throw usage_error("--in is required (a linear-relation report or ansatz JSON)");
    const ojson j = read_json_file(o.in);
    const auto F = j.contains("field") ? fqt::field_from_json(j.at("field")) : resolve_field(o);
    const ojson& aj = j.contains("ansatz") ? j.at("ansatz") : j;
    if (aj.is_null()) throw usage_error("'" + o.in + "' holds no ansatz");
    const auto a = fqt::ansatz_from_json(F, aj);
    ojson rep{{"config", config_json("recover", o, F, ojson::object())}};
    try {
        const auto Fx = fqt::recover_polymap(F, a);
        rep["ok"] = true;
        rep["F"] = fqt::kpoly_to_json(Fx);
        emit_json(o, rep);
        return kExitOk;
    } catch (const std::domain_error& e) {
        rep["ok"] = false;
        rep["error"] = e.what();
        emit_json(o, rep);
        return kExitVerification;
    }
}

int cmd_fit(const Options& o) {
    require_json("fit", o);
    const auto t = load_table(o);
    const auto r = fqt::fit_polynomial(t.field(), fqt::table_points(t), o.B);
    ojson mis = ojson::array();
    for (auto i : r.mispredicted) mis.push_back(fqt::to_human(t.point(i)));
    emit_json(o, {{"config", config_json("fit", o, t.field(), {{"B", o.B}})},
                  {"F", fqt::kpoly_to_json(r.F)},
                  {"matches_all", r.matches_all},
                  {"maps_into_A", r.maps_into_A},
                  {"mispredicted", std::move(mis)}});
    return kExitOk;
}

int cmd_vanishing(const Options& o) {
    require_json("vanishing-check", o);
    const auto t = load_table(o);
    const auto r = fqt::check_vanishing_lemma(t, o.C1, {o.cap, o.threads, budget_or(o, fqt::kDefaultEnumerationBudget)});
    ojson rep{{"config", config_json("vanishing-check", o, t.field(), {{"C1", o.C1}})},
              {"hypothesis_a", p3_json(r.congruence)},
              {"hypothesis_b_violations", fqt::poly_list_to_json(r.degree_violations)},
              {"hypothesis_c_violations", fqt::poly_list_to_json(r.nonzero_low)},
              {"hypotheses_hold", r.hypotheses_hold},
              {"identically_zero", r.identically_zero},
              {"conclusion_holds", r.conclusion_holds}};
    if (r.first_nonzero)
        rep["first_nonzero"] = {{"A", fqt::to_human(r.first_nonzero->A)},
                                {"witness", fqt::to_human(r.first_nonzero->witness)},
                                {"witness_divides", r.first_nonzero->witness_divides}};
    else
        rep["first_nonzero"] = nullptr;
    emit_json(o, rep);
    return r.conclusion_holds ? kExitOk : kExitVerification;
}

int cmd_delta_lab(const Options& o) {
    const auto F = resolve_field(o);
    const auto U = fqt::parse_poly(F, o.U);
    const std::uint64_t budget = budget_or(o, fqt::kDefaultDeltaBudget);
    const ojson params{{"U", fqt::to_human(U)}, {"n", o.n}};
    if (o.format == "csv") {
        const auto rows = fqt::delta_grid(U, o.n, {}, o.threads, budget);
        std::string s = "# config: " + config_json("delta-lab", o, F, params).dump() + "\n";
        s += "p,q,U,m,n,d,S0,S1,S2,margin_b\n";
        for (const auto& r : rows)
            s += std::to_string(F.p()) + "," + std::to_string(F.q()) + "," + fqt::to_human(U) + "," + std::to_string(r.m) + "," +
                 std::to_string(r.n) + "," + std::to_string(r.d) + "," + std::to_string(r.sums.S0) + "," +
                 std::to_string(r.sums.S1) + "," + std::to_string(r.sums.S2) + "," + fmt_double(r.margin_b) + "\n";
        emit(o, s);
        return kExitOk;
    }
    require_json("delta-lab", o);
    const std::uint64_t m = o.m.value_or(o.n - 1);
    const fqt::DeltaSpec spec{U, m, o.n};
    const auto r = fqt::count_report(spec, std::nullopt, {}, budget);
    const auto x = fqt::root_count_crosscheck(spec, budget, {o.seed});
    ojson T = ojson::array(), ai = ojson::array();
    for (auto i : r.T) T.push_back(i);
    for (auto a : r.ai_sizes) ai.push_back(a);
    ojson rep{{"config", config_json("delta-lab", o, F, {{"U", fqt::to_human(U)}, {"m", m}, {"n", o.n}})},
              {"delta", fqt::to_human(fqt::delta(spec, budget))},
              {"d", r.d},
              {"S0", r.sums.S0},
              {"S1", r.sums.S1},
              {"S2", r.sums.S2},
              {"T", std::move(T)},
              {"ai_sizes", std::move(ai)},
              {"identity_holds", r.identity_holds},
              {"closed_forms_match", r.closed_forms_match},
              {"pairwise_max", r.pairwise_max},
              {"pairwise_cap", r.pairwise_cap},
              {"margin_b", fmt_double(r.margin_b)},
              {"crosscheck",
               {{"via_radical", x.via_radical},
                {"via_factorization", x.via_factorization},
                {"union_size", x.union_size ? ojson(*x.union_size) : ojson(nullptr)},
                {"ok", x.ok}}}};
    const bool ok = r.identity_holds && r.closed_forms_match && r.pairwise_max <= r.pairwise_cap && x.ok;
    rep["ok"] = ok;
    emit_json(o, rep);
    return ok ? kExitOk : kExitVerification;
}

ojson solution_json(const fqt::Solution& s) {
    auto ex = [](const fqt::GroupElem& g) {
        ojson e = ojson::array();
        for (auto v : g.exponents) e.push_back(v);
        return e;
    };
    return {{"x", fqt::ratfunc_to_human(s.x)}, {"y", fqt::ratfunc_to_human(s.y)}, {"x_exponents", ex(s.gx)}, {"y_exponents", ex(s.gy)}};
}

int cmd_sunit(const Options& o, bool orbits) {
    const std::string cmd = orbits ? "sunit-orbits" : "sunit-enum";
    require_json(cmd, o);
    const auto F = resolve_field(o);
    if (o.gens.empty()) throw usage_error("--gens is required");
    const fqt::GroupSpec G(F, fqt::parse_poly_list(F, o.gens));
    const auto sols = fqt::enumerate_solutions(G, o.E, o.threads, budget_or(o, fqt::kDefaultSunitBudget));
    ojson list = ojson::array();
    for (const auto& s : sols) list.push_back(solution_json(s));
    ojson rep{{"config", config_json(cmd, o, F, {{"gens", fqt::poly_list_to_json(G.generators())}, {"E", o.E}})},
              {"rank", G.rank()},
              {"solution_count", sols.size()},
              {"solutions", std::move(list)}};
    if (!orbits) {
        emit_json(o, rep);
        return kExitOk;
    }
    const auto r = fqt::orbit_reduce(sols, G);
    ojson ob = ojson::array();
    for (const auto& orb : r.orbits) {
        ojson mem = ojson::array();
        for (const auto& m : orb.members) mem.push_back({{"solution", m.solution}, {"k", m.k}});
        ob.push_back({{"x0", fqt::ratfunc_to_human(orb.x0)}, {"y0", fqt::ratfunc_to_human(orb.y0)}, {"members", std::move(mem)}});
    }
    rep["orbits"] = std::move(ob);
    rep["representatives"] = r.orbits.size();
    rep["bound"] = r.bound;
    rep["ok"] = r.within_bound;
    emit_json(o, rep);
    return r.within_bound ? kExitOk : kExitVerification;
}

int cmd_large_factor(const Options& o) {
    require_json("large-factor", o);
    const auto F = resolve_field(o);
    const auto A = fqt::parse_poly(F, o.A);
    const auto U = fqt::parse_poly(F, o.U);
    const auto r = fqt::find_large_factor(A, U, o.M, o.n_lo, o.n, {o.seed});
    ojson scan = ojson::array();
    for (const auto& s : r.scan)
        scan.push_back({{"n", s.n}, {"zero", s.zero}, {"largest_factor_degree", degree_json(s.largest)}, {"in_S", s.in_S}});
    emit_json(o, {{"config", config_json("large-factor", o, F,
                                         {{"A", fqt::to_human(A)}, {"U", fqt::to_human(U)}, {"M", o.M}, {"n_lo", o.n_lo}, {"n_hi", o.n}})},
                  {"found", r.n.has_value()},
                  {"n", r.n ? ojson(*r.n) : ojson(nullptr)},
                  {"witness", r.witness ? ojson(fqt::to_human(*r.witness)) : ojson(nullptr)},
                  {"valuation_prime", fqt::to_human(r.valuation_prime)},
                  {"v_U", r.vU},
                  {"v_A", r.vA},
                  {"scan", std::move(scan)}});
    return kExitOk;
}

int cmd_pipeline(const Options& o) {
    require_json("pipeline", o);
    const auto t = load_table(o);
    const auto& F = t.field();
    fqt::PipelineOptions po;
    po.bounds = o.bounds.empty() ? fqt::TriDegreeBounds{1, 3, 1} : resolve_bounds(o, F);
    po.U = fqt::parse_poly(F, o.U);
    if (!o.caps.empty()) {
        const auto c = parse_uint_list(o.caps, 4, "--caps");
        po.caps = fqt::AnsatzCaps{c[0], c[1], c[2], c[3]};
    }
    po.relation = {o.threads, budget_or(o, fqt::kDefaultMonomialBudget)};
    const auto r = fqt::run_pipeline(t, po);
    ojson params{{"bounds", fqt::bounds_to_json(po.bounds)}, {"U", fqt::to_human(*po.U)}};
    params["caps"] = po.caps ? fqt::caps_to_json(*po.caps) : ojson(nullptr);
    ojson rep{{"config", config_json("pipeline", o, F, params)}, {"stage", r.stage}, {"search", search_json(F, t, r.search)}};
    rep["cert"] = r.cert ? cert_json(*r.cert) : ojson(nullptr);
    rep["degree_violations"] = fqt::poly_list_to_json(r.degree_violations);
    rep["caps"] = fqt::caps_to_json(r.caps);
    rep["samples"] = r.samples;
    rep["ansatz"] = r.ansatz ? fqt::ansatz_to_json(*r.ansatz) : ojson(nullptr);
    rep["F"] = r.F ? fqt::kpoly_to_json(*r.F) : ojson(nullptr);
    rep["mismatches"] = fqt::poly_list_to_json(r.mismatches);
    rep["reproduces_table"] = r.reproduces_table;
    rep["error"] = r.error.empty() ? ojson(nullptr) : ojson(r.error);
    emit_json(o, rep);
    return r.reproduces_table ? kExitOk : kExitVerification;
}

const std::vector<std::string> kCommands = {"irreducibles",  "dn",           "identity-check", "build-counterexample",
                                            "make-table",    "verify-p3",    "growth",         "find-relation",
                                            "degree-bound",  "linear-relation", "recover",     "fit",
                                            "vanishing-check", "delta-lab",  "sunit-enum",     "sunit-orbits",
                                            "large-factor",  "pipeline"};

void add_common(CLI::App* sc, Options& o) {
    sc->add_option("--q", o.q, "field order (prime power)");
    sc->add_option("--p", o.p, "characteristic");
    sc->add_option("--ext-degree", o.ext_degree, "extension degree e");
    sc->add_option("--modulus", o.modulus, "defining polynomial over F_p (default: least monic irreducible)");
    sc->add_option("--seed", o.seed, "seed for randomized factorization");
    sc->add_option("--budget", o.budget, "size budget overriding the subcommand default");
    sc->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sc->add_option("--out", o.out, "report path (default stdout)");
    sc->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
    sc->add_option("--table", o.table, "FuncTable JSON file");
    sc->add_option("--in", o.in, "input report or JSON document");
    sc->add_option("--D", o.D, "degree bound");
    sc->add_option("--n", o.n, "degree or exponent n");
    sc->add_option("--m", o.m, "m (0 <= m < n)");
    sc->add_option("--U", o.U, "polynomial U");
    sc->add_option("--A", o.A, "polynomial A");
    sc->add_option("--M-floor", o.M, "M: minimum factor degree, or the size parameter for default bounds");
    sc->add_option("--bounds", o.bounds, "i,j,k degree bounds for the relation search");
    sc->add_option("--caps", o.caps, "degX_P,degcoef_P,degX_Q,degcoef_Q");
    sc->add_option("--E", o.E, "exponent box bound");
    sc->add_option("--gens", o.gens, "comma-separated generators");
    sc->add_option("--map", o.map, "comma-separated A-coefficients of F(X), constant first");
    sc->add_option("--epsilon", o.epsilon, "epsilon as a/b");
    sc->add_option("--C1", o.C1, "vanishing-lemma C1");
    sc->add_option("--B", o.B, "interpolation degree");
    sc->add_option("--n-lo", o.n_lo, "first n of the scan");
    sc->add_option("--cap", o.cap, "maximum violations listed");
    sc->add_flag("--trace", o.trace, "emit the construction trace");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc >= 2 && argv[1][0] != '-' && std::find(kCommands.begin(), kCommands.end(), argv[1]) == kCommands.end()) {
        std::cerr << "error: unknown subcommand '" << argv[1] << "'\n";
        return kExitError;
    }
    CLI::App app{"Exact computations over F_q[t]: congruence-preserving maps, relations, and counting checks"};
    app.require_subcommand(1);
    Options o;
    for (const auto& c : kCommands) add_common(app.add_subcommand(c), o);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "irreducibles") return cmd_irreducibles(o);
        if (cmd == "dn") return cmd_dn(o);
        if (cmd == "identity-check") return cmd_identity(o);
        if (cmd == "build-counterexample") return cmd_build(o);
        if (cmd == "make-table") return cmd_make_table(o);
        if (cmd == "verify-p3") return cmd_verify_p3(o);
        if (cmd == "growth") return cmd_growth(o);
        if (cmd == "find-relation") return cmd_find_relation(o);
        if (cmd == "degree-bound") return cmd_degree_bound(o);
        if (cmd == "linear-relation") return cmd_linear_relation(o);
        if (cmd == "recover") return cmd_recover(o);
        if (cmd == "fit") return cmd_fit(o);
        if (cmd == "vanishing-check") return cmd_vanishing(o);
        if (cmd == "delta-lab") return cmd_delta_lab(o);
        if (cmd == "sunit-enum") return cmd_sunit(o, false);
        if (cmd == "sunit-orbits") return cmd_sunit(o, true);
        if (cmd == "large-factor") return cmd_large_factor(o);
        if (cmd == "pipeline") return cmd_pipeline(o);
    } catch (const std::exception& e) {
        // budget_exceeded and parse_error carry their own prefixes
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    std::cerr << "error: unhandled subcommand '" << cmd << "'\n";
    return kExitError;
}
