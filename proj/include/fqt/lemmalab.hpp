#ifndef FQT_LEMMALAB_HPP
#define FQT_LEMMALAB_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "factor.hpp"
#include "parallel.hpp"

namespace fqt {

inline constexpr std::uint64_t kDefaultDeltaBudget = 1u << 12;

struct DeltaSpec {
    Poly U;
    std::uint64_t m = 0;
    std::uint64_t n = 1;

    std::uint64_t delta() const { return static_cast<std::uint64_t>(U.degree().value()); }

    /// deg Delta = delta * sum_{i=0..m} (n - i).
    std::uint64_t product_degree() const { return delta() * ((2 * n - m) * (m + 1) / 2); }

    void validate() const {
        if (U.degree() < 1) throw std::invalid_argument("U must be non-constant");
        if (U.derivative().is_zero()) throw std::invalid_argument("U' must be nonzero");
        if (m >= n) throw std::invalid_argument("need 0 <= m < n");
    }
};

/// (U^n - 1)(U^{n-1} - 1) ... (U^{n-m} - 1).
inline Poly delta(const DeltaSpec& s, std::uint64_t budget = kDefaultDeltaBudget) {
    s.validate();
    check_budget("deg Delta", s.product_degree(), budget);
    const Field& F = s.U.field();
    const Poly one = Poly::one(F);
    Poly Upow = s.U.pow(s.n - s.m);
    Poly out = Upow - one;
    for (std::uint64_t k = s.n - s.m + 1; k <= s.n; ++k) {
        Upow *= s.U;
        out *= Upow - one;
    }
    return out;
}

inline std::uint64_t d_mnu(const DeltaSpec& s, std::uint64_t budget = kDefaultDeltaBudget) {
    return static_cast<std::uint64_t>(rad(delta(s, budget)).degree().value());
}

/// The p'-part of k: k / p^v with p^v || k.
inline std::uint64_t roots_of_unity_count(std::uint64_t k, std::uint64_t p) {
    if (k < 1) throw std::invalid_argument("roots_of_unity_count needs k >= 1");
    if (p < 2) throw std::invalid_argument("p must be prime");
    while (k % p == 0) k /= p;
    return k;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        while (n % d == 0) n /= d;
        r -= r / d;
    }
    if (n > 1) r -= r / n;
    return r;
}

// ---- counting identities (pure integers) -----------------------------------

struct SSums {
    std::uint64_t S0 = 0, S1 = 0, S2 = 0;
    friend bool operator==(const SSums&, const SSums&) = default;
};

/// Direct sums over 0 <= i <= m of (n - i), restricted to p | n-i and p^2 | n-i.
inline SSums s_sums_definitional(std::uint64_t p, std::uint64_t m, std::uint64_t n) {
    SSums s;
    for (std::uint64_t i = 0; i <= m; ++i) {
        const std::uint64_t k = n - i;
        s.S0 += k;
        if (k % p == 0) s.S1 += k;
        if (k % (p * p) == 0) s.S2 += k;
    }
    return s;
}

namespace detail {
// r * (sum of k for ceil(lo/r) <= k <= floor(hi/r)) by the arithmetic-series formula.
inline std::uint64_t multiples_sum(std::uint64_t r, std::uint64_t lo, std::uint64_t hi) {
    const std::int64_t a = static_cast<std::int64_t>(hi / r);
    const std::int64_t b = static_cast<std::int64_t>((lo + r - 1) / r);
    const std::int64_t v = static_cast<std::int64_t>(r) * ((a + b) * (a - b + 1)) / 2;
    return static_cast<std::uint64_t>(std::max<std::int64_t>(v, 0));
}
}  // namespace detail

/// Closed forms: S0 = (2n-m)(m+1)/2 and the floor/ceiling series for S1, S2.
inline SSums s_sums_closed(std::uint64_t p, std::uint64_t m, std::uint64_t n) {
    return {(2 * n - m) * (m + 1) / 2, detail::multiples_sum(p, n - m, n), detail::multiples_sum(p * p, n - m, n)};
}

struct LemmaAConstants {
    double M = 1;
    double epsilon = 0.5;
    double C7 = 0;
};

struct LemmaBConstants {
    double C8 = 0;
    double C9 = 0;
};

struct CountReport {
    std::uint64_t p = 0;
    std::uint64_t delta = 0;
    std::uint64_t m = 0, n = 0;
    std::uint64_t d = 0;
    SSums sums;
    SSums sums_closed;
    std::vector<std::uint64_t> T;
    std::vector<std::uint64_t> ai_sizes;  // |A_i| for i in T, same order
    std::uint64_t ai_total = 0;
    bool identity_holds = false;          // ai_total == S0 - S1 + (S1 - S2)/p
    bool closed_forms_match = false;
    std::uint64_t pairwise_max = 0;       // max |A_i cap A_j| over i < j in T
    std::uint64_t pairwise_cap = 0;       // m
    double margin_b = 0;                  // d - (delta c_p m n - C8 n - C9)
    std::optional<std::uint64_t> d_full;  // d_{n-1,n,U}, only when (a) is evaluated
    std::optional<double> margin_a;       // d_{n-1,n,U} - (delta M n^{2-eps} - C7)
};

/// Integer part of the count: everything except d, valid for any prime p.
inline CountReport count_identities(std::uint64_t p, std::uint64_t m, std::uint64_t n) {
    if (m >= n) throw std::invalid_argument("need 0 <= m < n");
    CountReport r;
    r.p = p;
    r.m = m;
    r.n = n;
    r.sums = s_sums_definitional(p, m, n);
    r.sums_closed = s_sums_closed(p, m, n);
    r.closed_forms_match = r.sums == r.sums_closed;
    for (std::uint64_t i = 0; i <= m; ++i) {
        if ((n - i) % (p * p) == 0) continue;
        r.T.push_back(i);
        r.ai_sizes.push_back(roots_of_unity_count(n - i, p));
        r.ai_total += r.ai_sizes.back();
    }
    const std::uint64_t s = r.sums.S0 - r.sums.S1;
    r.identity_holds = (r.sums.S1 - r.sums.S2) % p == 0 && r.ai_total == s + (r.sums.S1 - r.sums.S2) / p;
    for (std::size_t a = 0; a < r.T.size(); ++a)
        for (std::size_t b = a + 1; b < r.T.size(); ++b)
            r.pairwise_max = std::max(r.pairwise_max, std::gcd(r.ai_sizes[a], r.ai_sizes[b]));
    r.pairwise_cap = m;
    return r;
}

inline double lemma_b_coefficient(std::uint64_t p) {
    const double x = 1.0 / static_cast<double>(p);
    return 1 - x + x * x - x * x * x;
}

inline CountReport count_report(const DeltaSpec& s, const std::optional<LemmaAConstants>& a = std::nullopt,
                                const LemmaBConstants& b = {}, std::uint64_t budget = kDefaultDeltaBudget) {
    s.validate();
    CountReport r = count_identities(s.U.field().p(), s.m, s.n);
    if (!r.identity_holds) throw std::logic_error("counting identity failed");
    r.delta = s.delta();
    r.d = d_mnu(s, budget);
    const double dl = static_cast<double>(r.delta), nn = static_cast<double>(s.n);
    r.margin_b = static_cast<double>(r.d) - (dl * lemma_b_coefficient(r.p) * static_cast<double>(s.m) * nn - b.C8 * nn - b.C9);
    if (a) {
        r.d_full = s.m + 1 == s.n ? r.d : d_mnu(DeltaSpec{s.U, s.n - 1, s.n}, budget);
        r.margin_a = static_cast<double>(*r.d_full) - (dl * a->M * std::pow(nn, 2 - a->epsilon) - a->C7);
    }
    return r;
}

// ---- independent routes to d ---------------------------------------------

struct RootCountCheck {
    std::uint64_t via_radical = 0;
    std::uint64_t via_factorization = 0;
    std::optional<std::uint64_t> union_size;  // U = t only
    bool ok = false;
};

/// |{zeta : zeta^{k} = 1 for some k in {n-m..n}}| from divisors of p'-parts.
inline std::uint64_t root_union_size(std::uint64_t p, std::uint64_t m, std::uint64_t n) {
    std::set<std::uint64_t> orders;
    for (std::uint64_t i = 0; i <= m; ++i) {
        const std::uint64_t k = roots_of_unity_count(n - i, p);
        for (std::uint64_t d = 1; d * d <= k; ++d)
            if (k % d == 0) {
                orders.insert(d);
                orders.insert(k / d);
            }
    }
    std::uint64_t total = 0;
    for (auto l : orders) total += euler_phi(l);
    return total;
}

inline RootCountCheck root_count_crosscheck(const DeltaSpec& s, std::uint64_t budget = kDefaultDeltaBudget,
                                            const FactorOptions& opt = {}) {
    s.validate();
    const Poly D = delta(s, budget);
    RootCountCheck c;
    c.via_radical = static_cast<std::uint64_t>(rad(D).degree().value());
    for (const auto& [P, mult] : factor(D, opt).factors) c.via_factorization += static_cast<std::uint64_t>(P.degree().value());
    c.ok = c.via_radical == c.via_factorization;
    if (s.U == Poly::t(s.U.field())) {
        c.union_size = root_union_size(s.U.field().p(), s.m, s.n);
        c.ok = c.ok && *c.union_size == c.via_radical;
    }
    return c;
}

// ---- grid sweep ------------------------------------------------------------

struct DeltaRow {
    std::uint64_t m = 0, n = 0, d = 0;
    SSums sums;
    double margin_b = 0;
};

/// All (m, n) with 0 <= m < n <= n_max, ordered by n then m.
inline std::vector<DeltaRow> delta_grid(const Poly& U, std::uint64_t n_max, const LemmaBConstants& b = {},
                                        unsigned threads = 1, std::uint64_t budget = kDefaultDeltaBudget) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> cells;
    for (std::uint64_t n = 1; n <= n_max; ++n)
        for (std::uint64_t m = 0; m < n; ++m) cells.emplace_back(m, n);
    std::vector<DeltaRow> rows(cells.size());
    parallel_chunks(cells.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const auto r = count_report(DeltaSpec{U, cells[k].first, cells[k].second}, std::nullopt, b, budget);
            rows[k] = {r.m, r.n, r.d, r.sums, r.margin_b};
        }
    });
    return rows;
}

}  // namespace fqt

#endif  // FQT_LEMMALAB_HPP
