#ifndef FQT_JSON_IO_HPP
#define FQT_JSON_IO_HPP

#include <string>
#include <vector>

#include "functable.hpp"
#include "relations.hpp"

namespace fqt {

inline std::string ratfunc_to_human(const RatFunc& r) {
    if (r.is_polynomial()) return to_human(r.num());
    return "(" + to_human(r.num()) + ")/(" + to_human(r.den()) + ")";
}

inline std::string kpoly_to_human(const KPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t j = f.coeffs().size(); j-- > 0;) {
        const RatFunc& c = f.coeffs()[j];
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        const bool unit = c.is_polynomial() && c.num().is_one();
        if (j == 0) {
            s += "(" + ratfunc_to_human(c) + ")";
            continue;
        }
        if (!unit) s += "(" + ratfunc_to_human(c) + ")*";
        s += j == 1 ? "X" : "X^" + std::to_string(j);
    }
    return s;
}

inline ojson kpoly_to_json(const KPoly& f) {
    ojson coeffs = ojson::array();
    for (const auto& c : f.coeffs()) {
        coeffs.push_back({{"num", to_compact(c.num())}, {"den", to_compact(c.den())}});
    }
    return {{"human", kpoly_to_human(f)}, {"coeffs", std::move(coeffs)}};
}

inline ojson bounds_to_json(const TriDegreeBounds& b) { return {{"i_max", b.i_max}, {"j_max", b.j_max}, {"k_max", b.k_max}}; }

inline ojson relation_to_json(const Field& F, const RelationQ& rel) {
    ojson terms = ojson::array();
    for (std::uint64_t k = 0; k <= rel.bounds.k_max; ++k)
        for (std::uint64_t j = 0; j <= rel.bounds.j_max; ++j)
            for (std::uint64_t i = 0; i <= rel.bounds.i_max; ++i) {
                const FieldElem c = rel.coeff(i, j, k);
                if (c.v != 0) terms.push_back({{"i", i}, {"j", j}, {"k", k}, {"c", elem_to_compact(F, c)}});
            }
    ojson coeffs = ojson::array();
    for (auto c : rel.coeffs) coeffs.push_back(c.v);
    return {{"bounds", bounds_to_json(rel.bounds)}, {"terms", std::move(terms)}, {"coeffs", std::move(coeffs)}};
}

inline RelationQ relation_from_json(const Field& F, const ojson& j) {
    const auto& b = j.at("bounds");
    RelationQ rel{{b.at("i_max").get<std::uint64_t>(), b.at("j_max").get<std::uint64_t>(), b.at("k_max").get<std::uint64_t>()}, {}};
    const auto& cs = j.at("coeffs");
    if (cs.size() != rel.bounds.unknowns()) throw std::invalid_argument("relation coefficient count does not match its bounds");
    for (const auto& c : cs) {
        const auto v = c.get<std::uint32_t>();
        if (!F.valid(FieldElem{v})) throw std::invalid_argument("relation coefficient outside the field");
        rel.coeffs.push_back(FieldElem{v});
    }
    return rel;
}

inline ojson caps_to_json(const AnsatzCaps& c) {
    return {{"degX_P", c.degX_P}, {"degcoef_P", c.degcoef_P}, {"degX_Q", c.degX_Q}, {"degcoef_Q", c.degcoef_Q}};
}

inline AnsatzCaps caps_from_json(const ojson& j) {
    return {j.at("degX_P").get<std::uint64_t>(), j.at("degcoef_P").get<std::uint64_t>(), j.at("degX_Q").get<std::uint64_t>(),
            j.at("degcoef_Q").get<std::uint64_t>()};
}

inline ojson ansatz_to_json(const LinearAnsatz& a) {
    ojson P = ojson::array(), Q = ojson::array();
    for (const auto& c : a.P) P.push_back(to_compact(c));
    for (const auto& c : a.Q) Q.push_back(to_compact(c));
    return {{"caps", caps_to_json(a.caps)}, {"P", std::move(P)}, {"Q", std::move(Q)}};
}

inline LinearAnsatz ansatz_from_json(const Field& F, const ojson& j) {
    LinearAnsatz a{caps_from_json(j.at("caps")), {}, {}};
    for (const auto& c : j.at("P")) a.P.push_back(parse_poly(F, c.get<std::string>()));
    for (const auto& c : j.at("Q")) a.Q.push_back(parse_poly(F, c.get<std::string>()));
    return a;
}

inline ojson poly_list_to_json(const std::vector<Poly>& v) {
    ojson out = ojson::array();
    for (const auto& p : v) out.push_back(to_human(p));
    return out;
}

}  // namespace fqt

#endif  // FQT_JSON_IO_HPP
