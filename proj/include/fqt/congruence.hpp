#ifndef FQT_CONGRUENCE_HPP
#define FQT_CONGRUENCE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "functable.hpp"
#include "irreducible.hpp"
#include "parallel.hpp"

namespace fqt {

/// Non-negative rational num/den.
struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// deg > threshold, computed exactly; NEG_INF never exceeds.
inline bool degree_exceeds(Degree d, const Fraction& threshold) {
    if (d.is_neg_inf()) return false;
    return static_cast<unsigned __int128>(d.value()) * threshold.den > threshold.num;
}

struct P3Violation {
    Poly P;       // monic irreducible
    Poly A;       // offending point
    Poly A_ref;   // canonical-least point of A's residue class mod P
};

struct P3Report {
    bool pass = true;
    std::uint64_t violation_count = 0;  // exact total, even beyond the cap
    std::uint64_t irreducibles_checked = 0;
    std::vector<P3Violation> violations;  // canonical order by (P, A), at most `cap`
};

struct P3Options {
    std::size_t cap = 100;
    unsigned threads = 1;
    std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
};

/// Checks f(A) = f(A') mod P for every monic irreducible P with deg P <= D
/// and every pair A = A' mod P inside the table. Pairs differing by a
/// multiple of an irreducible of larger degree cannot both lie in the domain
/// unless they are equal, so this is exactly the congruence property on the table.
inline P3Report verify_p3(const FuncTable& table, const P3Options& opt = {}) {
    const Field& F = table.field();
    const auto irreducibles = monic_irreducibles_up_to(F, static_cast<std::uint64_t>(table.D()), opt.enumeration_budget);
    const std::size_t chunks = chunk_count(irreducibles.size(), opt.threads);
    std::vector<std::vector<P3Violation>> found(chunks);
    std::vector<std::uint64_t> counts(chunks, 0);

    parallel_chunks(irreducibles.size(), opt.threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const Poly& P = irreducibles[k];
            const std::uint64_t classes = pow_or_throw(F.q(), static_cast<std::uint64_t>(P.degree().value()), "classes");
            std::vector<std::optional<std::pair<std::size_t, Poly>>> ref(classes);
            for (std::size_t i = 0; i < table.size(); ++i) {
                const Poly A = table.point(i);
                const std::uint64_t cls = (A % P).canonical_index();
                Poly v = table.value(i) % P;
                auto& slot = ref[cls];
                if (!slot) {
                    slot.emplace(i, std::move(v));
                } else if (slot->second != v) {
                    ++counts[c];
                    if (found[c].size() < opt.cap) found[c].push_back({P, A, table.point(slot->first)});
                }
            }
        }
    });

    P3Report r;
    r.irreducibles_checked = irreducibles.size();
    for (std::size_t c = 0; c < chunks; ++c) {
        r.violation_count += counts[c];
        for (auto& v : found[c]) {
            if (r.violations.size() >= opt.cap) break;
            r.violations.push_back(std::move(v));
        }
    }
    r.pass = r.violation_count == 0;
    return r;
}

struct GrowthRow {
    std::int64_t n = 0;
    Degree max_degree;                   // max deg f(A) over deg A == n
    std::optional<Fraction> main_bound;  // q^n / (27 q n), n >= 1
    std::optional<Fraction> dn_bound;    // (1 - eps) d_n, n >= 1
    std::uint64_t vanishing_cap = 0;     // q^n - 1
    bool exceeds_main = false;
    bool exceeds_dn = false;
    bool exceeds_vanishing = false;
};

struct GrowthProfile {
    Fraction epsilon;
    std::vector<GrowthRow> rows;  // n = 0..D
};

/// Per-degree maxima of deg f against the comparison thresholds. Reports
/// finite-range data only; no verdict is attached.
inline GrowthProfile growth_profile(const FuncTable& table, Fraction epsilon = {1, 2}) {
    if (epsilon.den == 0 || epsilon.num == 0 || epsilon.num >= epsilon.den)
        throw std::invalid_argument("epsilon must lie strictly between 0 and 1");
    const std::uint64_t q = table.field().q();
    GrowthProfile g{epsilon, {}};
    for (std::int64_t n = 0; n <= table.D(); ++n) {
        GrowthRow row;
        row.n = n;
        const auto [lo, hi] = table.stratum(n);
        for (std::size_t i = lo; i < hi; ++i) row.max_degree = std::max(row.max_degree, table.value(i).degree());
        const std::uint64_t qn = pow_or_throw(q, static_cast<std::uint64_t>(n), "q^n");
        row.vanishing_cap = qn - 1;
        row.exceeds_vanishing = row.max_degree > Degree(static_cast<std::int64_t>(qn - 1));
        if (n >= 1) {
            row.main_bound = Fraction{qn, 27 * q * static_cast<std::uint64_t>(n)};
            const std::uint64_t dn = degree_of_irreducible_product(q, static_cast<std::uint64_t>(n));
            row.dn_bound = Fraction{(epsilon.den - epsilon.num) * dn, epsilon.den};
            row.exceeds_main = degree_exceeds(row.max_degree, *row.main_bound);
            row.exceeds_dn = degree_exceeds(row.max_degree, *row.dn_bound);
        }
        g.rows.push_back(row);
    }
    return g;
}

}  // namespace fqt

#endif  // FQT_CONGRUENCE_HPP
