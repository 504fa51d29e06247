#ifndef FQT_SUNIT_HPP
#define FQT_SUNIT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "factor.hpp"
#include "parallel.hpp"
#include "ratfunc.hpp"

namespace fqt {

inline constexpr std::uint64_t kDefaultSunitBudget = 1u << 20;

/// Rank over Q of an integer matrix (fraction-free elimination).
inline std::size_t integer_rank(std::vector<std::vector<std::int64_t>> a) {
    using i128 = __int128;
    std::vector<std::vector<i128>> m;
    for (auto& row : a) m.emplace_back(row.begin(), row.end());
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    i128 prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

class GroupSpec {
   public:
    GroupSpec(Field F, std::vector<Poly> generators) : F_(std::move(F)), gens_(std::move(generators)) {
        if (gens_.empty()) throw std::invalid_argument("a group needs at least one generator");
        std::vector<FactorList> fl;
        std::vector<Poly> primes;
        for (const auto& g : gens_) {
            if (g.is_zero()) throw std::invalid_argument("generators must be nonzero");
            if (!(g.field() == F_)) throw std::invalid_argument("generator over a different field");
            fl.push_back(g.is_constant() ? FactorList{g.lead(), {}} : factor(g));
            for (const auto& [P, e] : fl.back().factors) primes.push_back(P);
        }
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        std::vector<std::vector<std::int64_t>> mat;
        for (const auto& f : fl) {
            std::vector<std::int64_t> row(primes.size(), 0);
            for (const auto& [P, e] : f.factors)
                row[static_cast<std::size_t>(std::lower_bound(primes.begin(), primes.end(), P) - primes.begin())] =
                    static_cast<std::int64_t>(e);
            mat.push_back(std::move(row));
        }
        rank_ = integer_rank(std::move(mat));
    }

    const Field& field() const noexcept { return F_; }
    const std::vector<Poly>& generators() const noexcept { return gens_; }
    std::size_t dim() const noexcept { return gens_.size(); }
    std::size_t rank() const noexcept { return rank_; }

    /// p^{2r} - 1.
    std::uint64_t orbit_bound() const { return pow_or_throw(F_.p(), 2 * rank_, "p^{2r}") - 1; }

   private:
    Field F_;
    std::vector<Poly> gens_;
    std::size_t rank_ = 0;
};

struct GroupElem {
    std::vector<std::int64_t> exponents;
    FieldElem unit;

    RatFunc value(const GroupSpec& G) const {
        const Field& F = G.field();
        Poly num = Poly::constant(F, unit), den = Poly::one(F);
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            const auto e = exponents[i];
            if (e > 0) num *= G.generators()[i].pow(static_cast<std::uint64_t>(e));
            if (e < 0) den *= G.generators()[i].pow(static_cast<std::uint64_t>(-e));
        }
        return RatFunc(std::move(num), std::move(den));
    }
    friend bool operator==(const GroupElem&, const GroupElem&) = default;
};

struct Solution {
    RatFunc x, y;
    GroupElem gx, gy;
};

inline bool is_constant(const RatFunc& x) { return x.is_polynomial() && x.num().is_constant(); }

struct RatFuncLess {
    bool operator()(const RatFunc& a, const RatFunc& b) const { return canonical_less(a, b); }
};

/// Every x + y = 1 with x, y in the box [-E, E]^dim times F_q^*, except pairs
/// of constants, ordered canonically by x. When distinct exponent vectors
/// give the same element, the first in lexicographic order is kept.
inline std::vector<Solution> enumerate_solutions(const GroupSpec& G, std::int64_t E, unsigned threads = 1,
                                                 std::uint64_t budget = kDefaultSunitBudget) {
    if (E < 1) throw std::invalid_argument("E must be >= 1");
    const Field& F = G.field();
    const std::uint64_t side = static_cast<std::uint64_t>(2 * E + 1);
    const std::uint64_t boxes = pow_or_throw(side, G.dim(), "(2E+1)^dim");
    std::uint64_t total = 0;
    if (__builtin_mul_overflow(boxes, F.q() - 1, &total)) total = ~std::uint64_t{0};
    check_budget("group elements in the box", total, budget);

    auto elem_at = [&](std::uint64_t idx) {
        GroupElem g{std::vector<std::int64_t>(G.dim()), F.element(static_cast<std::uint32_t>(idx % (F.q() - 1) + 1))};
        idx /= F.q() - 1;
        for (std::size_t i = G.dim(); i-- > 0;) {
            g.exponents[i] = static_cast<std::int64_t>(idx % side) - E;
            idx /= side;
        }
        return g;
    };
    std::vector<RatFunc> values(total, RatFunc(F));
    parallel_chunks(total, threads, [&](std::size_t, std::size_t b, std::size_t e) {
        for (std::size_t k = b; k < e; ++k) values[k] = elem_at(k).value(G);
    });
    std::map<RatFunc, std::uint64_t, RatFuncLess> index;
    for (std::uint64_t k = 0; k < total; ++k) index.emplace(values[k], k);

    std::vector<Solution> out;
    const RatFunc one(Poly::one(F));
    for (const auto& [x, k] : index) {
        const RatFunc y = one - x;
        if (is_constant(x)) continue;
        auto it = index.find(y);
        if (it == index.end()) continue;
        out.push_back({x, y, elem_at(k), elem_at(it->second)});
    }
    return out;
}

struct OrbitMember {
    std::size_t solution = 0;  // index into the solution list
    std::uint64_t k = 0;       // member = (x0^{p^k}, y0^{p^k})
};

struct SolutionOrbit {
    RatFunc x0, y0;
    std::vector<OrbitMember> members;
};

struct OrbitReport {
    std::vector<SolutionOrbit> orbits;  // canonical order of (x0, y0)
    std::size_t rank = 0;
    std::uint64_t bound = 0;
    bool within_bound = false;
};

/// Descends each pair through p-th roots in K while both coordinates are
/// p-th powers, then groups by the base pair.
inline OrbitReport orbit_reduce(const std::vector<Solution>& sols, const GroupSpec& G) {
    auto less = [](const std::pair<RatFunc, RatFunc>& a, const std::pair<RatFunc, RatFunc>& b) {
        if (canonical_less(a.first, b.first)) return true;
        if (canonical_less(b.first, a.first)) return false;
        return canonical_less(a.second, b.second);
    };
    std::map<std::pair<RatFunc, RatFunc>, std::vector<OrbitMember>, decltype(less)> groups(less);
    for (std::size_t i = 0; i < sols.size(); ++i) {
        RatFunc x = sols[i].x, y = sols[i].y;
        if (is_constant(x)) throw std::invalid_argument("orbit_reduce: constant solution");
        std::uint64_t k = 0;
        for (;;) {
            auto rx = x.pth_root();
            if (!rx) break;
            auto ry = y.pth_root();
            if (!ry) break;
            x = std::move(*rx);
            y = std::move(*ry);
            ++k;
        }
        groups[{x, y}].push_back({i, k});
    }
    OrbitReport r;
    for (auto& [base, members] : groups) r.orbits.push_back({base.first, base.second, std::move(members)});
    r.rank = G.rank();
    r.bound = G.orbit_bound();
    r.within_bound = r.orbits.size() <= r.bound;
    return r;
}

// ---- large irreducible factors of A - U^n ---------------------------------

struct LargeFactorScan {
    std::uint64_t n = 0;
    bool zero = false;                  // A == U^n, skipped
    Degree largest = NEG_INF;           // largest irreducible-factor degree
    bool in_S = false;                  // n v(U) - v(A) != 0 mod p
};

struct LargeFactorResult {
    std::optional<std::uint64_t> n;
    std::optional<Poly> witness;
    Poly valuation_prime;               // P with v_P(U) != 0 mod p
    std::int64_t vU = 0, vA = 0;
    std::vector<LargeFactorScan> scan;
};

inline std::int64_t valuation(const Poly& A, const Poly& P) {
    if (A.is_zero()) throw std::invalid_argument("valuation of zero");
    std::int64_t v = 0;
    Poly a = A;
    for (;;) {
        auto [qq, r] = divrem(a, P);
        if (!r.is_zero()) return v;
        a = std::move(qq);
        ++v;
    }
}

/// Least n in [n_lo, n_hi] such that A - U^n has a monic irreducible factor
/// of degree >= M. The witness is the largest such factor (canonical-least
/// among equals).
inline LargeFactorResult find_large_factor(const Poly& A, const Poly& U, std::uint64_t M, std::uint64_t n_lo = 1,
                                           std::uint64_t n_hi = 20, const FactorOptions& opt = {}) {
    if (A.is_zero()) throw std::invalid_argument("A must be nonzero");
    if (U.degree() < 1) throw std::invalid_argument("U must be non-constant");
    if (U.derivative().is_zero()) throw std::invalid_argument("U' must be nonzero");
    if (M < 1) throw std::invalid_argument("M must be >= 1");
    if (n_lo > n_hi) throw std::invalid_argument("empty n range");
    const Field& F = A.field();
    const std::uint64_t p = F.p();
    LargeFactorResult res{std::nullopt, std::nullopt, Poly(F), 0, 0, {}};
    for (const auto& [P, e] : factor(U, opt).factors)
        if (e % p != 0) {
            res.valuation_prime = P;
            res.vU = static_cast<std::int64_t>(e);
            break;
        }
    if (res.valuation_prime.is_zero()) throw std::logic_error("U with U' != 0 must have a valuation prime to p");
    res.vA = valuation(A, res.valuation_prime);
    Poly Un = U.pow(n_lo);
    for (std::uint64_t n = n_lo; n <= n_hi; ++n, Un *= U) {
        LargeFactorScan row;
        row.n = n;
        const std::int64_t s = static_cast<std::int64_t>(n) * res.vU - res.vA;
        row.in_S = ((s % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p) != 0;
        const Poly diff = A - Un;
        if (diff.is_zero()) {
            row.zero = true;
            res.scan.push_back(row);
            continue;
        }
        std::optional<Poly> best;
        if (diff.degree() >= 1)
            for (const auto& [P, e] : factor(diff, opt).factors)
                if (!best || P.degree() > best->degree()) best = P;  // factors arrive in canonical order
        if (best) row.largest = best->degree();
        res.scan.push_back(row);
        if (best && best->degree() >= static_cast<std::int64_t>(M)) {
            res.n = n;
            res.witness = best;
            break;
        }
    }
    return res;
}

}  // namespace fqt

#endif  // FQT_SUNIT_HPP
