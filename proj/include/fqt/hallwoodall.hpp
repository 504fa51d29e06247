#ifndef FQT_HALLWOODALL_HPP
#define FQT_HALLWOODALL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "functable.hpp"
#include "irreducible.hpp"

namespace fqt {

struct TraceRow {
    Poly B;
    std::vector<std::pair<Poly, Poly>> residues;  // (P, R_P) with R_P = B mod P
    Poly R;                                       // CRT lift of g(R_P) mod P
    Poly modulus;                                 // product of all monic irreducibles of degree <= deg B
    Poly g;                                       // R + k * modulus
};

struct ConstructionTrace {
    std::vector<TraceRow> rows;  // construction order
};

struct CongruentTable {
    FuncTable table;
    ConstructionTrace trace;
};

/// Chooses the multiplier k in g(B) = R + k * modulus.
using LiftChoice = std::function<Poly(const Poly& B, const Poly& R, const Poly& modulus)>;

inline constexpr std::uint64_t kDefaultConstructionBudget = 1u << 12;

namespace detail {

// CRT basis for the product of the given pairwise coprime moduli:
// basis[j] = 1 mod moduli[j], 0 mod the others.
struct CrtBasis {
    Poly modulus;
    std::vector<Poly> basis;
};

inline CrtBasis crt_basis(const Field& F, const std::vector<Poly>& moduli) {
    CrtBasis b{product(F, moduli), {}};
    for (const auto& P : moduli) {
        const Poly co = b.modulus / P;
        b.basis.push_back(co * invmod(co % P, P));
    }
    return b;
}

}  // namespace detail

/// Extends `seed` (a table on deg <= seed.D()) degree by degree up to D,
/// in canonical order, so that g(B) = g(B mod P) mod P for every monic
/// irreducible P with deg P <= deg B. The value is g(B) = R + k * modulus with
/// R the CRT lift and k supplied by `lift`.
inline CongruentTable extend_congruently(const FuncTable& seed, std::int64_t D, const LiftChoice& lift,
                                         std::uint64_t budget = kDefaultConstructionBudget) {
    const Field& F = seed.field();
    if (D < seed.D()) throw std::invalid_argument("extension degree below the seed's");
    check_budget("construction degree q^D", pow_or_throw(F.q(), static_cast<std::uint64_t>(std::max<std::int64_t>(D, 0)), "q^D"),
                 budget);
    const std::uint64_t total = count_up_to_degree(F.q(), D);
    std::vector<Poly> values(seed.values());
    values.reserve(total);
    ConstructionTrace trace;
    std::vector<Poly> irreducibles = monic_irreducibles_up_to(F, static_cast<std::uint64_t>(seed.D()));
    for (std::int64_t n = seed.D() + 1; n <= D; ++n) {
        if (n >= 1) {
            auto fresh = enumerate_monic_irreducibles(F, static_cast<std::uint64_t>(n));
            irreducibles.insert(irreducibles.end(), fresh.begin(), fresh.end());
        }
        const auto basis = detail::crt_basis(F, irreducibles);
        const std::uint64_t lo = n <= 0 ? 0 : pow_or_throw(F.q(), static_cast<std::uint64_t>(n), "stratum");
        const std::uint64_t hi = pow_or_throw(F.q(), static_cast<std::uint64_t>(n) + 1, "stratum");
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            TraceRow row{Poly::from_index(F, idx), {}, Poly(F), basis.modulus, Poly(F)};
            Poly R(F);
            for (std::size_t j = 0; j < irreducibles.size(); ++j) {
                const Poly& P = irreducibles[j];
                Poly RP = row.B % P;
                const Poly target = values[RP.canonical_index()] % P;
                R += target * basis.basis[j];
                row.residues.emplace_back(P, std::move(RP));
            }
            row.R = R % basis.modulus;
            row.g = row.R + lift(row.B, row.R, basis.modulus) * basis.modulus;
            values.push_back(row.g);
            trace.rows.push_back(std::move(row));
        }
    }
    return {FuncTable(F, D, std::move(values)), std::move(trace)};
}

/// The growth counterexample: g = 0 on constants, and for deg B = n >= 1,
/// g(B) = R + prod_{P monic irreducible, deg P <= n} P, which forces
/// q^n <= deg g(B) < 2 q^n.
inline CongruentTable build_counterexample(const Field& F, std::int64_t D,
                                           std::uint64_t budget = kDefaultConstructionBudget) {
    if (D < 0) throw std::invalid_argument("D must be >= 0");
    const FuncTable seed(F, 0, std::vector<Poly>(F.q(), Poly(F)));
    return extend_congruently(
        seed, D, [&F](const Poly&, const Poly&, const Poly&) { return Poly::one(F); }, budget);
}

struct WindowFailure {
    Poly B;
    Degree degree;
};

struct TraceFailure {
    Poly B;
    std::string reason;
};

struct CertificationReport {
    P3Report p3;
    std::vector<WindowFailure> window_failures;
    std::vector<TraceFailure> trace_failures;
    bool ok = false;
};

/// Re-verifies a construction: the congruence property on the whole table,
/// the window q^n <= deg g(B) < 2 q^n per stratum, and every trace row.
inline CertificationReport certify_counterexample(const FuncTable& table, const ConstructionTrace& trace,
                                                  const P3Options& opt = {}) {
    const Field& F = table.field();
    CertificationReport rep;
    rep.p3 = verify_p3(table, opt);
    for (std::int64_t n = 1; n <= table.D(); ++n) {
        const std::uint64_t qn = pow_or_throw(F.q(), static_cast<std::uint64_t>(n), "q^n");
        const auto [lo, hi] = table.stratum(n);
        for (std::size_t i = lo; i < hi; ++i) {
            const Degree d = table.value(i).degree();
            if (d < Degree(static_cast<std::int64_t>(qn)) || d >= Degree(static_cast<std::int64_t>(2 * qn)))
                rep.window_failures.push_back({table.point(i), d});
        }
    }
    std::vector<Poly> irreducibles;
    std::int64_t have = 0;
    for (const auto& row : trace.rows) {
        auto fail = [&](std::string why) { rep.trace_failures.push_back({row.B, std::move(why)}); };
        if (!table.contains(row.B) || row.B.degree() < 1) {
            fail("row point outside the constructed range");
            continue;
        }
        const std::int64_t n = row.B.degree().value();
        while (have < n) {
            ++have;
            auto fresh = enumerate_monic_irreducibles(F, static_cast<std::uint64_t>(have));
            irreducibles.insert(irreducibles.end(), fresh.begin(), fresh.end());
        }
        std::vector<Poly> expected(irreducibles.begin(),
                                   irreducibles.begin() +
                                       static_cast<std::ptrdiff_t>(std::count_if(irreducibles.begin(), irreducibles.end(),
                                                                                 [n](const Poly& P) { return P.degree() <= n; })));
        std::vector<Poly> listed;
        for (const auto& [P, RP] : row.residues) listed.push_back(P);
        if (listed != expected) fail("listed irreducibles differ from all monic irreducibles of degree <= deg B");
        if (row.modulus != product(F, listed)) fail("modulus is not the product of the listed irreducibles");
        if (!(row.R.degree() < row.modulus.degree())) fail("deg R >= deg modulus");
        if (row.g != table.at(row.B)) fail("trace value differs from the table");
        if (row.g != row.R + row.modulus) fail("g(B) != R + modulus");
        for (const auto& [P, RP] : row.residues) {
            if (RP != row.B % P) {
                fail("R_P is not B mod P for P = " + to_human(P));
                continue;
            }
            if (!table.contains(RP) || ((row.g - table.at(RP)) % P).is_zero() == false)
                fail("g(B) != g(R_P) mod P for P = " + to_human(P));
        }
    }
    rep.ok = rep.p3.pass && rep.window_failures.empty() && rep.trace_failures.empty();
    return rep;
}

}  // namespace fqt

#endif  // FQT_HALLWOODALL_HPP
