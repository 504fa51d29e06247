#ifndef FQT_FUNCTABLE_HPP
#define FQT_FUNCTABLE_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"
#include "field.hpp"
#include "poly.hpp"
#include "text.hpp"

namespace fqt {

using ojson = nlohmann::ordered_json;

inline constexpr std::uint64_t kDefaultTableBudget = 1u << 20;

/// A map f: A -> A restricted to {A : deg A <= D}, stored in canonical order
/// (entry i holds f(Poly::from_index(i))).
class FuncTable {
   public:
    FuncTable(Field F, std::int64_t D, std::vector<Poly> values) : F_(std::move(F)), D_(D), values_(std::move(values)) {
        if (D_ < 0) throw std::invalid_argument("table degree bound must be >= 0");
        if (values_.size() != count_up_to_degree(F_.q(), D_))
            throw std::invalid_argument("table must hold exactly q^{D+1} values");
        for (const auto& v : values_)
            if (!(v.field() == F_)) throw std::invalid_argument("table value over a different field");
    }

    template <class Fn>
    static FuncTable tabulate(const Field& F, std::int64_t D, Fn&& fn, std::uint64_t budget = kDefaultTableBudget) {
        const std::uint64_t n = count_up_to_degree(F.q(), D);
        check_budget("table of degree <= " + std::to_string(D), n, budget);
        std::vector<Poly> values;
        values.reserve(n);
        for (std::uint64_t i = 0; i < n; ++i) values.push_back(fn(Poly::from_index(F, i)));
        return FuncTable(F, D, std::move(values));
    }

    const Field& field() const noexcept { return F_; }
    std::int64_t D() const noexcept { return D_; }
    std::size_t size() const noexcept { return values_.size(); }

    Poly point(std::size_t i) const { return Poly::from_index(F_, i); }
    const Poly& value(std::size_t i) const { return values_.at(i); }
    const std::vector<Poly>& values() const noexcept { return values_; }

    bool contains(const Poly& A) const noexcept { return A.degree() <= D_; }

    const Poly& at(const Poly& A) const {
        if (!contains(A)) throw std::out_of_range("table lookup outside the domain: deg " + A.degree().to_string());
        return values_[A.canonical_index()];
    }

    void set(const Poly& A, Poly v) {
        if (!contains(A)) throw std::out_of_range("table update outside the domain");
        values_[A.canonical_index()] = std::move(v);
    }

    /// Index range [begin, end) of the stratum deg A == n (n = -1 for A = 0).
    std::pair<std::size_t, std::size_t> stratum(std::int64_t n) const {
        if (n < 0) return {0, 1};
        const std::uint64_t lo = pow_or_throw(F_.q(), static_cast<std::uint64_t>(n), "stratum");
        return {lo, lo * F_.q()};
    }

    friend bool operator==(const FuncTable& a, const FuncTable& b) noexcept {
        return a.F_ == b.F_ && a.D_ == b.D_ && a.values_ == b.values_;
    }

   private:
    Field F_;
    std::int64_t D_;
    std::vector<Poly> values_;
};

/// The same function on {deg A <= D'}.
inline FuncTable restrict(const FuncTable& t, std::int64_t D2) {
    if (D2 > t.D()) throw std::invalid_argument("restrict: new bound exceeds the table's bound");
    if (D2 < 0) throw std::invalid_argument("restrict: bound must be >= 0");
    const std::uint64_t n = count_up_to_degree(t.field().q(), D2);
    return FuncTable(t.field(), D2, std::vector<Poly>(t.values().begin(), t.values().begin() + static_cast<std::ptrdiff_t>(n)));
}

// ---- JSON ---------------------------------------------------------------

inline ojson field_to_json(const Field& F) {
    ojson j;
    j["p"] = F.p();
    j["e"] = F.e();
    if (F.e() == 1) {
        j["modulus"] = nullptr;
    } else {
        std::string m = "[";
        const auto& mod = F.spec().modulus;
        for (std::size_t i = 0; i < mod.size(); ++i) m += (i ? "," : "") + std::to_string(mod[i]);
        j["modulus"] = m + "]";
    }
    return j;
}

inline Field field_from_json(const ojson& j) {
    FieldSpec s;
    s.p = j.at("p").get<std::uint32_t>();
    s.e = j.at("e").get<std::uint32_t>();
    if (j.contains("modulus") && !j.at("modulus").is_null()) {
        const Field Fp = Field::prime(s.p);
        const Poly m = parse_poly(Fp, j.at("modulus").get<std::string>());
        for (auto c : m.coeffs()) s.modulus.push_back(c.v);
    }
    return Field(s);
}

inline ojson table_to_json(const FuncTable& t) {
    ojson j;
    j["field"] = field_to_json(t.field());
    j["D"] = t.D();
    ojson vals = ojson::array();
    for (std::size_t i = 0; i < t.size(); ++i) vals.push_back(ojson::array({to_compact(t.point(i)), to_compact(t.value(i))}));
    j["values"] = std::move(vals);
    return j;
}

inline FuncTable table_from_json(const ojson& j, std::uint64_t budget = kDefaultTableBudget) {
    const Field F = field_from_json(j.at("field"));
    const std::int64_t D = j.at("D").get<std::int64_t>();
    if (D < 0) throw std::invalid_argument("table D must be >= 0");
    const std::uint64_t n = count_up_to_degree(F.q(), D);
    check_budget("table of degree <= " + std::to_string(D), n, budget);
    const auto& vals = j.at("values");
    if (vals.size() != n) throw std::invalid_argument("table must list exactly q^{D+1} entries");
    std::vector<Poly> values;
    values.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto& e = vals.at(i);
        const Poly A = parse_poly(F, e.at(0).get<std::string>());
        if (A != Poly::from_index(F, i))
            throw std::invalid_argument("table entries must cover the domain in canonical order (entry " +
                                        std::to_string(i) + ")");
        values.push_back(parse_poly(F, e.at(1).get<std::string>()));
    }
    return FuncTable(F, D, std::move(values));
}

}  // namespace fqt

#endif  // FQT_FUNCTABLE_HPP
