#ifndef FQT_RELATIONS_HPP
#define FQT_RELATIONS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "functable.hpp"
#include "irreducible.hpp"
#include "linalg.hpp"
#include "parallel.hpp"
#include "ratfunc.hpp"

namespace fqt {

inline constexpr std::uint64_t kDefaultMonomialBudget = 1u << 14;

// ---- trivariate relations Q(X, Y) = sum c_ijk t^i X^j Y^k -----------------

struct TriDegreeBounds {
    std::uint64_t i_max = 0;  // degree in t
    std::uint64_t j_max = 0;  // degree in X
    std::uint64_t k_max = 0;  // degree in Y

    std::uint64_t unknowns() const noexcept { return (i_max + 1) * (j_max + 1) * (k_max + 1); }

    /// Column of c_ijk: k major, then j, then i.
    std::size_t column(std::uint64_t i, std::uint64_t j, std::uint64_t k) const noexcept {
        return static_cast<std::size_t>((k * (j_max + 1) + j) * (i_max + 1) + i);
    }

    friend bool operator==(const TriDegreeBounds&, const TriDegreeBounds&) = default;
};

/// Default ranges from the existence argument for a relation of size
/// parameter M: i <= floor(q^M/3), j <= floor(q^M/(3M)), k <= 9qM.
inline TriDegreeBounds default_bounds(std::uint64_t q, std::uint64_t M) {
    if (M < 1) throw std::invalid_argument("M must be >= 1");
    const std::uint64_t qM = pow_or_throw(q, M, "q^M");
    return {qM / 3, qM / (3 * M), 9 * q * M};
}

struct RelationQ {
    TriDegreeBounds bounds;
    FqVector coeffs;  // indexed by bounds.column(i, j, k)

    FieldElem coeff(std::uint64_t i, std::uint64_t j, std::uint64_t k) const { return coeffs.at(bounds.column(i, j, k)); }

    bool is_zero() const noexcept {
        return std::all_of(coeffs.begin(), coeffs.end(), [](FieldElem c) { return c.v == 0; });
    }

    /// P_k(X) = sum_{i,j} c_ijk t^i X^j as a list of A-coefficients in X.
    std::vector<Poly> y_coefficient(const Field& F, std::uint64_t k) const {
        std::vector<Poly> out;
        for (std::uint64_t j = 0; j <= bounds.j_max; ++j) {
            std::vector<FieldElem> c(bounds.i_max + 1);
            for (std::uint64_t i = 0; i <= bounds.i_max; ++i) c[i] = coeff(i, j, k);
            out.emplace_back(F, std::move(c));
        }
        while (!out.empty() && out.back().is_zero()) out.pop_back();
        return out;
    }

    /// Q(A, B) evaluated as sum_k P_k(A) B^k with Horner in both variables.
    Poly evaluate(const Field& F, const Poly& A, const Poly& B) const {
        Poly acc(F);
        for (std::uint64_t k = bounds.k_max + 1; k-- > 0;) {
            const auto Pk = y_coefficient(F, k);
            Poly inner(F);
            for (std::size_t j = Pk.size(); j-- > 0;) inner = inner * A + Pk[j];
            acc = acc * B + inner;
        }
        return acc;
    }
};

struct RelationSearch {
    std::optional<RelationQ> relation;
    std::uint64_t unknowns = 0;
    std::uint64_t equations = 0;
    std::uint64_t rank = 0;
};

struct RelationOptions {
    unsigned threads = 1;
    std::uint64_t monomial_budget = kDefaultMonomialBudget;
};

/// Finds a nonzero Q within `bounds` with Q(A, f(A)) = 0 for every A in the
/// table, as the first kernel vector of the F_q-linear system whose rows are
/// the t-coefficients of Q(A, f(A)). Empty iff the kernel is trivial for
/// these bounds.
inline RelationSearch find_relation(const FuncTable& table, const TriDegreeBounds& bounds,
                                    const RelationOptions& opt = {}) {
    const Field& F = table.field();
    const std::uint64_t cols = bounds.unknowns();
    check_budget("relation unknowns", cols, opt.monomial_budget);
    KernelSolver solver(F, cols);
    RelationSearch out;
    out.unknowns = cols;

    const std::size_t batch = std::max<std::size_t>(1, opt.threads) * 4;
    for (std::size_t start = 0; start < table.size() && !solver.full(); start += batch) {
        const std::size_t stop = std::min(table.size(), start + batch);
        std::vector<std::vector<FqVector>> rows(stop - start);
        parallel_chunks(stop - start, opt.threads, [&](std::size_t, std::size_t b, std::size_t e) {
            for (std::size_t idx = b; idx < e; ++idx) {
                const Poly A = table.point(start + idx);
                const Poly& fA = table.value(start + idx);
                std::vector<Poly> Apow{Poly::one(F)}, fpow{Poly::one(F)};
                for (std::uint64_t j = 1; j <= bounds.j_max; ++j) Apow.push_back(Apow.back() * A);
                for (std::uint64_t k = 1; k <= bounds.k_max; ++k) fpow.push_back(fpow.back() * fA);
                std::vector<Poly> prod;  // prod[k * (J+1) + j] = A^j f^k
                std::int64_t top = -1;
                for (std::uint64_t k = 0; k <= bounds.k_max; ++k)
                    for (std::uint64_t j = 0; j <= bounds.j_max; ++j) {
                        prod.push_back(Apow[j] * fpow[k]);
                        top = std::max(top, prod.back().degree().value_or(-1));
                    }
                if (top < 0) continue;
                const std::uint64_t S = static_cast<std::uint64_t>(top) + bounds.i_max;
                auto& mine = rows[idx];
                for (std::uint64_t s = 0; s <= S; ++s) {
                    FqVector r(cols, F.zero());
                    bool any = false;
                    for (std::uint64_t k = 0; k <= bounds.k_max; ++k)
                        for (std::uint64_t j = 0; j <= bounds.j_max; ++j) {
                            const Poly& m = prod[k * (bounds.j_max + 1) + j];
                            for (std::uint64_t i = 0; i <= bounds.i_max && i <= s; ++i) {
                                const FieldElem c = m.coeff(s - i);
                                if (c.v != 0) {
                                    r[bounds.column(i, j, k)] = c;
                                    any = true;
                                }
                            }
                        }
                    if (any) mine.push_back(std::move(r));
                }
            }
        });
        for (auto& per_point : rows)
            for (auto& r : per_point) {
                ++out.equations;
                solver.add_row(std::move(r));
            }
    }
    out.rank = solver.rank();
    if (auto v = solver.first_kernel_vector()) out.relation = RelationQ{bounds, std::move(*v)};
    return out;
}

/// Points where an independent evaluation of Q(A, f(A)) is nonzero.
inline std::vector<Poly> relation_failures(const FuncTable& table, const RelationQ& rel) {
    std::vector<Poly> bad;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const Poly A = table.point(i);
        if (!rel.evaluate(table.field(), A, table.value(i)).is_zero()) bad.push_back(A);
    }
    return bad;
}

struct UnknownCount {
    std::uint64_t M = 0;
    TriDegreeBounds bounds;
    std::uint64_t unknowns = 0;
    std::uint64_t equations = 0;  // q^{M+1} points times q^M coefficients each
    bool degenerate = false;      // floor(q^M / (3M)) == 0: no claim is made
    bool unknowns_exceed_equations = false;
};

/// Exact unknown and equation counts for the default ranges at parameter M.
inline UnknownCount unknown_count_check(std::uint64_t q, std::uint64_t M) {
    if (M < 2) throw std::invalid_argument("unknown_count_check requires M >= 2");
    UnknownCount u;
    u.M = M;
    u.bounds = default_bounds(q, M);
    u.unknowns = u.bounds.unknowns();
    u.equations = pow_or_throw(q, 2 * M + 1, "q^{2M+1}");
    u.degenerate = u.bounds.j_max == 0;
    u.unknowns_exceed_equations = u.unknowns > u.equations;
    if (!u.degenerate && !u.unknowns_exceed_equations)
        throw std::logic_error("unknown count does not exceed the equation count at M = " + std::to_string(M));
    return u;
}

// ---- linear degree bounds from a relation ----------------------------------

struct DegreeBoundCert {
    std::uint64_t C3 = 0;  // max X-degree of the P_k
    std::uint64_t C4 = 0;  // max t-degree of any coefficient
    std::uint64_t y_degree = 0;
};

/// Reads off (C3, C4) from Q = sum_k P_k(X) Y^k. Requires a nonzero P_n with n >= 1.
inline DegreeBoundCert degree_bound_from_relation(const Field& F, const RelationQ& rel) {
    DegreeBoundCert cert;
    bool any = false;
    for (std::uint64_t k = 0; k <= rel.bounds.k_max; ++k) {
        const auto Pk = rel.y_coefficient(F, k);
        if (Pk.empty()) continue;
        any = true;
        cert.y_degree = k;
        cert.C3 = std::max<std::uint64_t>(cert.C3, Pk.size() - 1);
        for (const auto& c : Pk) cert.C4 = std::max<std::uint64_t>(cert.C4, static_cast<std::uint64_t>(c.degree().value_or(0)));
    }
    if (!any) throw std::invalid_argument("degree bound from the zero relation");
    if (cert.y_degree == 0) throw std::invalid_argument("relation is constant in Y; no degree bound follows");
    return cert;
}

/// Every A != 0 in the table with deg f(A) > C3 deg A + C4.
inline std::vector<Poly> check_degree_bound(const FuncTable& table, const DegreeBoundCert& cert) {
    std::vector<Poly> bad;
    for (std::size_t i = 1; i < table.size(); ++i) {
        const Poly A = table.point(i);
        const Degree bound(static_cast<std::int64_t>(cert.C3) * A.degree().value() + static_cast<std::int64_t>(cert.C4));
        if (table.value(i).degree() > bound) bad.push_back(A);
    }
    return bad;
}

// ---- linear ansatz P(X) f + Q(X) = 0 on sample points ---------------------

struct AnsatzCaps {
    std::uint64_t degX_P = 0;
    std::uint64_t degcoef_P = 0;
    std::uint64_t degX_Q = 0;
    std::uint64_t degcoef_Q = 0;

    std::uint64_t p_unknowns() const noexcept { return (degX_P + 1) * (degcoef_P + 1); }
    std::uint64_t unknowns() const noexcept { return p_unknowns() + (degX_Q + 1) * (degcoef_Q + 1); }
    friend bool operator==(const AnsatzCaps&, const AnsatzCaps&) = default;
};

struct LinearAnsatz {
    AnsatzCaps caps;
    std::vector<Poly> P;  // A-coefficients in X, little-endian
    std::vector<Poly> Q;

    /// P(A) f + Q(A).
    Poly evaluate(const Field& F, const Poly& A, const Poly& fA) const {
        Poly pa(F), qa(F);
        for (std::size_t j = P.size(); j-- > 0;) pa = pa * A + P[j];
        for (std::size_t j = Q.size(); j-- > 0;) qa = qa * A + Q[j];
        return pa * fA + qa;
    }
};

using SamplePoints = std::vector<std::pair<Poly, Poly>>;

inline void check_distinct_nodes(const SamplePoints& pts) {
    std::vector<Poly> xs;
    for (const auto& [x, y] : pts) xs.push_back(x);
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
        throw std::invalid_argument("duplicate sample point " + to_human(*std::adjacent_find(xs.begin(), xs.end())));
}

/// Finds (P, Q) != (0, 0) within `caps` with P(x) y + Q(x) = 0 for every
/// sample (x, y). Unknowns are ordered P before Q, each by X-degree then
/// t-degree. Empty iff the kernel is trivial.
inline std::optional<LinearAnsatz> find_linear_relation(const Field& F, const SamplePoints& samples,
                                                        const AnsatzCaps& caps,
                                                        std::uint64_t monomial_budget = kDefaultMonomialBudget) {
    if (samples.empty()) throw std::invalid_argument("find_linear_relation needs at least one sample");
    check_distinct_nodes(samples);
    const std::uint64_t cols = caps.unknowns();
    check_budget("ansatz unknowns", cols, monomial_budget);
    KernelSolver solver(F, cols);
    const std::uint64_t np = caps.p_unknowns();
    for (const auto& [x, y] : samples) {
        std::vector<Poly> colpoly;
        colpoly.reserve(cols);
        Poly xj = Poly::one(F);
        const std::uint64_t maxX = std::max(caps.degX_P, caps.degX_Q);
        std::vector<Poly> xpow;
        for (std::uint64_t j = 0; j <= maxX; ++j) {
            xpow.push_back(xj);
            xj *= x;
        }
        for (std::uint64_t j = 0; j <= caps.degX_P; ++j) {
            const Poly base = xpow[j] * y;
            for (std::uint64_t i = 0; i <= caps.degcoef_P; ++i) colpoly.push_back(base.shift(i));
        }
        for (std::uint64_t j = 0; j <= caps.degX_Q; ++j)
            for (std::uint64_t i = 0; i <= caps.degcoef_Q; ++i) colpoly.push_back(xpow[j].shift(i));
        std::int64_t top = -1;
        for (const auto& c : colpoly) top = std::max(top, c.degree().value_or(-1));
        for (std::int64_t s = 0; s <= top; ++s) {
            FqVector r(cols, F.zero());
            for (std::uint64_t c = 0; c < cols; ++c) r[c] = colpoly[c].coeff(static_cast<std::size_t>(s));
            solver.add_row(std::move(r));
        }
    }
    auto v = solver.first_kernel_vector();
    if (!v) return std::nullopt;
    LinearAnsatz a{caps, {}, {}};
    auto unpack = [&](std::uint64_t offset, std::uint64_t degX, std::uint64_t degc) {
        std::vector<Poly> out;
        for (std::uint64_t j = 0; j <= degX; ++j) {
            std::vector<FieldElem> c(degc + 1);
            for (std::uint64_t i = 0; i <= degc; ++i) c[i] = (*v)[offset + j * (degc + 1) + i];
            out.emplace_back(F, std::move(c));
        }
        while (!out.empty() && out.back().is_zero()) out.pop_back();
        return out;
    };
    a.P = unpack(0, caps.degX_P, caps.degcoef_P);
    a.Q = unpack(np, caps.degX_Q, caps.degcoef_Q);
    return a;
}

/// F = -Q/P in K[X]; throws when P = 0 or the division leaves a remainder.
inline KPoly recover_polymap(const Field& F, const LinearAnsatz& a) {
    const KPoly P = KPoly::from_polys(F, a.P);
    const KPoly Q = KPoly::from_polys(F, a.Q);
    if (P.is_zero()) throw std::invalid_argument("recover_polymap: P is zero");
    auto [quo, rem] = divrem(-Q, P);
    if (!rem.is_zero()) throw std::domain_error("recover_polymap: P does not divide Q in K[X]");
    return quo;
}

// ---- interpolation ---------------------------------------------------------

struct FitResult {
    KPoly F;
    std::vector<std::size_t> mispredicted;  // indices among the held-out points (>= B+1)
    bool matches_all = false;
    bool maps_into_A = false;  // F(x) in A for every listed x
};

/// Unique F in K[X] of degree <= B through the first B+1 points, checked
/// against the remaining points.
inline FitResult fit_polynomial(const Field& Fld, const SamplePoints& points, std::uint64_t B) {
    if (points.size() < B + 1) throw std::invalid_argument("fit_polynomial needs at least B+1 points");
    check_distinct_nodes(points);
    KPoly F(Fld);
    for (std::size_t i = 0; i <= B; ++i) {
        KPoly L = KPoly(Fld, {RatFunc(points[i].second)});
        RatFunc denom(Poly::one(Fld));
        for (std::size_t j = 0; j <= B; ++j) {
            if (j == i) continue;
            L = L * KPoly(Fld, {RatFunc(-points[j].first), RatFunc(Poly::one(Fld))});
            denom = denom * RatFunc(points[i].first - points[j].first);
        }
        F = F + L.scale(denom.inv());
    }
    FitResult r{F, {}, true, true};
    for (std::size_t i = 0; i < points.size(); ++i) {
        const RatFunc v = F.eval(RatFunc(points[i].first));
        if (!v.is_polynomial()) r.maps_into_A = false;
        if (i > B && !(v == RatFunc(points[i].second))) r.mispredicted.push_back(i);
    }
    r.matches_all = r.mispredicted.empty();
    return r;
}

inline SamplePoints table_points(const FuncTable& t, std::size_t limit = static_cast<std::size_t>(-1)) {
    SamplePoints pts;
    for (std::size_t i = 0; i < t.size() && i < limit; ++i) pts.emplace_back(t.point(i), t.value(i));
    return pts;
}

// ---- vanishing criterion ---------------------------------------------------

struct VanishingCounterexample {
    Poly A;
    Poly witness;              // product of monic irreducibles of degree <= deg A
    bool witness_divides = false;
};

struct VanishingReport {
    std::int64_t C1 = 0;
    P3Report congruence;                  // hypothesis (a)
    std::vector<Poly> degree_violations;  // hypothesis (b): deg g(A) > q^{deg A} - 1, deg A > C1
    std::vector<Poly> nonzero_low;        // hypothesis (c): g(A) != 0 with deg A <= C1
    bool hypotheses_hold = false;
    bool identically_zero = false;
    bool conclusion_holds = false;        // hypotheses imply zero (vacuous when they fail)
    std::optional<VanishingCounterexample> first_nonzero;
};

/// Evaluates the three hypotheses of the vanishing criterion on the table
/// and, if they hold, checks the table is identically zero. The canonical-
/// least nonzero value (if any) is reported together with the product of
/// all monic irreducibles of degree <= its degree, which must divide it
/// whenever all smaller values vanish and the congruence property holds.
inline VanishingReport check_vanishing_lemma(const FuncTable& table, std::int64_t C1, const P3Options& opt = {}) {
    if (C1 > table.D()) throw std::invalid_argument("C1 exceeds the table's degree bound");
    const Field& F = table.field();
    VanishingReport rep;
    rep.C1 = C1;
    rep.congruence = verify_p3(table, opt);
    for (std::size_t i = 0; i < table.size(); ++i) {
        const Poly A = table.point(i);
        const Poly& g = table.value(i);
        if (A.degree() <= C1) {
            if (!g.is_zero()) rep.nonzero_low.push_back(A);
        } else {
            const std::uint64_t cap = pow_or_throw(F.q(), static_cast<std::uint64_t>(A.degree().value()), "q^deg") - 1;
            if (g.degree() > Degree(static_cast<std::int64_t>(cap))) rep.degree_violations.push_back(A);
        }
        if (!rep.first_nonzero && !g.is_zero()) {
            const std::uint64_t d = static_cast<std::uint64_t>(A.degree().value_or(0));
            Poly witness = product(F, monic_irreducibles_up_to(F, d, opt.enumeration_budget));
            const bool divides = witness.divides(g);
            rep.first_nonzero = VanishingCounterexample{A, std::move(witness), divides};
        }
    }
    rep.hypotheses_hold = rep.congruence.pass && rep.degree_violations.empty() && rep.nonzero_low.empty();
    rep.identically_zero = !rep.first_nonzero.has_value();
    rep.conclusion_holds = !rep.hypotheses_hold || rep.identically_zero;
    return rep;
}

// ---- parameter schedule for the linear-ansatz argument ---------------------

struct AnsatzSchedule {
    std::uint64_t D1 = 0;
    std::uint64_t N = 0;   // N + 1 = floor((2 - eps) D1 / delta)
    std::uint64_t D2 = 0;  // ceil((delta / eps) N (N + 1))
    // both sides of the pigeonhole inequality, scaled by 2*delta*eps.den
    long double lhs = 0;
    long double rhs = 0;
    bool inequality_holds = false;
};

/// Computes (N, D2) from (D1, eps, delta, C5, C6) and checks
/// D1 N(N+1)/2 + D2 (N+1) + N + 1 < (D1 D2 + (D1 - C5)(D2 - C6)) / delta.
/// Only the counting inequality is evaluated; nothing is claimed about any f.
inline AnsatzSchedule ansatz_schedule(std::uint64_t D1, Fraction eps, std::uint64_t delta, std::uint64_t C5,
                                      std::uint64_t C6) {
    if (eps.num == 0 || eps.num >= eps.den) throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (delta == 0) throw std::invalid_argument("delta must be >= 1");
    AnsatzSchedule s;
    s.D1 = D1;
    using i128 = __int128;
    const i128 np1 = (static_cast<i128>(2 * eps.den - eps.num) * D1) / (static_cast<i128>(eps.den) * delta);
    if (np1 < 1) throw std::invalid_argument("D1 too small for the schedule (N + 1 < 1)");
    s.N = static_cast<std::uint64_t>(np1 - 1);
    const i128 num = static_cast<i128>(delta) * eps.den * s.N * (s.N + 1);
    s.D2 = static_cast<std::uint64_t>((num + eps.num - 1) / eps.num);
    // multiply both sides by 2 delta
    const i128 N = s.N, d1 = D1, d2 = s.D2;
    const i128 lhs = static_cast<i128>(delta) * (d1 * N * (N + 1) + 2 * d2 * (N + 1) + 2 * (N + 1));
    const i128 rhs = 2 * (d1 * d2 + (d1 - static_cast<i128>(C5)) * (d2 - static_cast<i128>(C6)));
    s.lhs = static_cast<long double>(lhs);
    s.rhs = static_cast<long double>(rhs);
    s.inequality_holds = lhs < rhs;
    return s;
}


/// The largest deg f(A) over deg A < N, read off the table (NEG_INF if none).
inline Degree max_degree_below(const FuncTable& table, std::int64_t N) {
    if (N > table.D() + 1) throw std::invalid_argument("max_degree_below: N exceeds the table range");
    Degree best = NEG_INF;
    const std::size_t end = N <= 0 ? 0 : table.stratum(N - 1).second;
    for (std::size_t i = 0; i < end; ++i) best = std::max(best, table.value(i).degree());
    return best;
}

// ---- end-to-end polynomiality pipeline -------------------------------------

struct PipelineOptions {
    TriDegreeBounds bounds{1, 3, 1};
    std::optional<Poly> U;               // defaults to t
    std::uint64_t degX_P = 0;            // caps on P; Q gets (C3 + degX_P, C4 + degcoef_P)
    std::uint64_t degcoef_P = 0;
    std::optional<AnsatzCaps> caps;      // explicit override of all four caps
    RelationOptions relation;
};

struct PipelineReport {
    std::string stage = "relation";      // last stage reached
    RelationSearch search;
    std::optional<DegreeBoundCert> cert;
    std::vector<Poly> degree_violations;
    AnsatzCaps caps;
    std::size_t samples = 0;
    std::optional<LinearAnsatz> ansatz;
    std::optional<KPoly> F;
    std::string error;
    std::vector<Poly> mismatches;        // A with F(A) != f(A)
    bool reproduces_table = false;
};

/// Relation, then degree bound, then linear ansatz on U^0, U^1, ... inside
/// the table, then recovery of F and a full-table comparison. Success is
/// evidence that the table comes from a polynomial map, nothing more.
inline PipelineReport run_pipeline(const FuncTable& table, const PipelineOptions& opt = {}) {
    const Field& F = table.field();
    PipelineReport rep;
    rep.search = find_relation(table, opt.bounds, opt.relation);
    if (!rep.search.relation) {
        rep.error = "no relation within the given bounds";
        return rep;
    }
    rep.stage = "degree-bound";
    try {
        rep.cert = degree_bound_from_relation(F, *rep.search.relation);
    } catch (const std::invalid_argument& e) {
        rep.error = e.what();
        return rep;
    }
    rep.degree_violations = check_degree_bound(table, *rep.cert);
    rep.stage = "linear-relation";
    const Poly U = opt.U.value_or(Poly::t(F));
    if (U.degree() < 1) throw std::invalid_argument("pipeline: U must be non-constant");
    rep.caps = opt.caps.value_or(AnsatzCaps{opt.degX_P, opt.degcoef_P, rep.cert->C3 + opt.degX_P, rep.cert->C4 + opt.degcoef_P});
    SamplePoints samples;
    for (Poly Un = Poly::one(F); table.contains(Un); Un *= U) samples.emplace_back(Un, table.at(Un));
    rep.samples = samples.size();
    rep.ansatz = find_linear_relation(F, samples, rep.caps, opt.relation.monomial_budget);
    if (!rep.ansatz) {
        rep.error = "no linear relation within the caps";
        return rep;
    }
    rep.stage = "recover";
    try {
        rep.F = recover_polymap(F, *rep.ansatz);
    } catch (const std::exception& e) {
        rep.error = e.what();
        return rep;
    }
    rep.stage = "verify";
    for (std::size_t i = 0; i < table.size(); ++i) {
        const Poly A = table.point(i);
        if (!(rep.F->eval(RatFunc(A)) == RatFunc(table.value(i)))) rep.mismatches.push_back(A);
    }
    rep.reproduces_table = rep.mismatches.empty();
    if (!rep.reproduces_table) rep.error = "recovered map disagrees with the table";
    return rep;
}

}  // namespace fqt

#endif  // FQT_RELATIONS_HPP
