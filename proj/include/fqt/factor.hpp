#ifndef FQT_FACTOR_HPP
#define FQT_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "irreducible.hpp"
#include "poly.hpp"

namespace fqt {

struct FactorList {
    FieldElem unit;
    std::vector<std::pair<Poly, std::uint64_t>> factors;  // monic irreducible, multiplicity; canonical order

    Poly expand(const Field& F) const {
        Poly r = Poly::constant(F, unit);
        for (const auto& [P, m] : factors) r *= P.pow(m);
        return r;
    }
};

struct FactorOptions {
    std::uint64_t seed = 0;
    /// Equal-degree splitting falls back to trial division by enumerated
    /// irreducibles when q^d is at most this many candidates.
    std::uint64_t trial_division_limit = 64;
};

/// Squarefree decomposition of a monic f in characteristic p: pairwise
/// coprime squarefree parts with multiplicities, product of part^mult == f.
inline std::vector<std::pair<Poly, std::uint64_t>> squarefree_decomposition(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    const Field& F = f.field();
    std::vector<std::pair<Poly, std::uint64_t>> out;
    Poly g = f.monic();
    if (g.degree() < 1) return out;
    const Poly d = g.derivative();
    if (d.is_zero()) {
        const auto root = g.pth_root();
        for (auto& [part, m] : squarefree_decomposition(*root)) out.emplace_back(std::move(part), m * F.p());
        return out;
    }
    Poly c = gcd(g, d);
    Poly w = g / c;
    std::uint64_t i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (!z.is_one()) out.emplace_back(z.monic(), i);
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (!c.is_one()) {
        const auto root = c.monic().pth_root();
        if (!root) throw std::logic_error("squarefree decomposition: leftover is not a p-th power");
        for (auto& [part, m] : squarefree_decomposition(*root)) out.emplace_back(std::move(part), m * F.p());
    }
    return out;
}

/// Product of the distinct monic irreducible factors of a non-constant a.
/// Computed from the squarefree decomposition alone, without splitting.
inline Poly rad(const Poly& a) {
    if (a.degree() < 1) throw std::invalid_argument("rad of a constant or zero polynomial");
    Poly r = Poly::one(a.field());
    for (const auto& [part, m] : squarefree_decomposition(a)) r *= part;
    return r.monic();
}

/// Splits a squarefree monic f into (g_d, d): g_d the product of its
/// irreducible factors of degree d.
inline std::vector<std::pair<Poly, std::uint64_t>> distinct_degree_factorization(Poly f) {
    const Field& F = f.field();
    std::vector<std::pair<Poly, std::uint64_t>> out;
    const Poly t = Poly::t(F);
    Poly h = t % f;
    for (std::uint64_t d = 1; f.degree() >= 2 * static_cast<std::int64_t>(d); ++d) {
        h = powmod(h, F.q(), f);
        Poly g = gcd(h - t, f);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() >= 1) out.emplace_back(f.monic(), static_cast<std::uint64_t>(f.degree().value()));
    return out;
}

namespace detail {

inline Poly random_below(const Field& F, std::size_t deg, std::mt19937_64& rng) {
    std::vector<FieldElem> c(deg);
    std::uniform_int_distribution<std::uint64_t> dist(0, F.q() - 1);
    for (auto& x : c) x = {static_cast<std::uint32_t>(dist(rng))};
    return Poly(F, std::move(c));
}

// One splitting attempt; returns a proper factor or empty.
inline std::optional<Poly> split_once(const Poly& g, std::uint64_t d, std::mt19937_64& rng) {
    const Field& F = g.field();
    const auto n = static_cast<std::size_t>(g.degree().value());
    Poly a = random_below(F, n, rng);
    if (a.degree() < 1) return std::nullopt;
    Poly h = gcd(a, g);
    if (!h.is_one()) return h;
    Poly b(F);
    if (F.p() == 2) {
        // trace map from F_{q^d} down to F_2
        const std::uint64_t steps = std::uint64_t(F.e()) * d;
        Poly term = a;
        b = a;
        for (std::uint64_t i = 1; i < steps; ++i) {
            term = mulmod(term, term, g);
            b += term;
        }
    } else {
        // a^{(q^d - 1)/2} = (a^{(q-1)/2})^{1 + q + ... + q^{d-1}}
        Poly base = powmod(a, (F.q() - 1) / 2, g);
        Poly acc = base, cur = base;
        for (std::uint64_t i = 1; i < d; ++i) {
            cur = powmod(cur, F.q(), g);
            acc = mulmod(acc, cur, g);
        }
        b = acc - Poly::one(F);
    }
    Poly s = gcd(b, g);
    if (s.degree() >= 1 && s.degree() < g.degree()) return s;
    return std::nullopt;
}

}  // namespace detail

/// Splits g, a product of distinct monic irreducibles all of degree d.
inline std::vector<Poly> equal_degree_factorization(const Poly& g, std::uint64_t d, std::mt19937_64& rng,
                                                    const FactorOptions& opt = {}) {
    const Field& F = g.field();
    std::vector<Poly> out;
    if (g.degree() == static_cast<std::int64_t>(d)) {
        out.push_back(g.monic());
        return out;
    }
    std::uint64_t candidates = 0;
    if (checked_pow(F.q(), d, candidates) && candidates <= opt.trial_division_limit) {
        Poly rest = g;
        for (auto& P : enumerate_monic_irreducibles(F, d)) {
            if (rest.degree() < static_cast<std::int64_t>(d)) break;
            if ((rest % P).is_zero()) {
                rest = rest / P;
                out.push_back(std::move(P));
            }
        }
        if (rest.degree() >= 1) throw std::logic_error("equal-degree trial division left a cofactor");
        return out;
    }
    std::vector<Poly> work{g.monic()};
    while (!work.empty()) {
        Poly cur = std::move(work.back());
        work.pop_back();
        if (cur.degree() == static_cast<std::int64_t>(d)) {
            out.push_back(std::move(cur));
            continue;
        }
        std::optional<Poly> s;
        while (!(s = detail::split_once(cur, d, rng))) {
        }
        Poly other = (cur / *s).monic();
        work.push_back(s->monic());
        work.push_back(std::move(other));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Complete factorization of a nonzero polynomial into a unit times monic
/// irreducible powers, factors listed in canonical order.
inline FactorList factor(const Poly& a, const FactorOptions& opt = {}) {
    if (a.is_zero()) throw std::invalid_argument("factor of the zero polynomial");
    FactorList out{a.lead(), {}};
    if (a.degree() < 1) return out;
    std::mt19937_64 rng(opt.seed);
    for (const auto& [part, m] : squarefree_decomposition(a)) {
        for (const auto& [g, d] : distinct_degree_factorization(part)) {
            for (auto& P : equal_degree_factorization(g, d, rng, opt)) out.factors.emplace_back(std::move(P), m);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

}  // namespace fqt

#endif  // FQT_FACTOR_HPP
