#ifndef FQT_IRREDUCIBLE_HPP
#define FQT_IRREDUCIBLE_HPP

#include <cstdint>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "poly.hpp"

namespace fqt {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1u << 20;

/// Rabin's test: f of degree n is irreducible iff t^{q^n} = t mod f and
/// gcd(t^{q^{n/r}} - t, f) = 1 for every prime r | n.
inline bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    const Field& F = f.field();
    const auto n = static_cast<std::uint64_t>(f.degree().value());
    if (n == 1) return true;
    const Poly t = Poly::t(F) % f;
    const auto primes = detail::prime_divisors(n);
    // frob[k] = t^{q^k} mod f for k = 0..n
    std::vector<Poly> frob;
    frob.reserve(n + 1);
    frob.push_back(t);
    for (std::uint64_t k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), F.q(), f));
    if (frob[n] != t) return false;
    for (auto r : primes) {
        if (!gcd(frob[n / r] - t, f).is_one()) return false;
    }
    return true;
}

/// Möbius function of n >= 1.
inline int moebius(std::uint64_t n) {
    int mu = 1;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

/// Number of monic irreducibles of degree d: (1/d) sum_{e|d} mu(e) q^{d/e}.
inline std::uint64_t count_irreducibles(std::uint64_t q, std::uint64_t d) {
    if (d == 0) return 0;
    __int128 sum = 0;
    for (std::uint64_t e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        const int mu = moebius(e);
        if (mu == 0) continue;
        sum += static_cast<__int128>(mu) * pow_or_throw(q, d / e, "q^d");
    }
    return static_cast<std::uint64_t>(sum / d);
}

inline std::uint64_t count_irreducibles(const Field& F, std::uint64_t d) { return count_irreducibles(F.q(), d); }

/// d_n = deg of the product of all monic irreducibles of degree <= n.
inline std::uint64_t degree_of_irreducible_product(std::uint64_t q, std::uint64_t n) {
    std::uint64_t s = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        const std::uint64_t c = count_irreducibles(q, d);
        if (c > (UINT64_MAX - s) / d) throw budget_exceeded("d_n (64-bit overflow)", UINT64_MAX, UINT64_MAX - 1);
        s += d * c;
    }
    return s;
}

inline std::uint64_t d_n(const Field& F, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("d_n requires n >= 1");
    return degree_of_irreducible_product(F.q(), n);
}

/// Monic irreducibles of degree d in canonical order. `budget` caps the
/// number of candidates (q^d) scanned.
inline std::vector<Poly> enumerate_monic_irreducibles(const Field& F, std::uint64_t d,
                                                      std::uint64_t budget = kDefaultEnumerationBudget) {
    std::vector<Poly> out;
    if (d == 0) return out;
    const std::uint64_t count = pow_or_throw(F.q(), d, "q^d");
    check_budget("irreducible enumeration of degree " + std::to_string(d), count, budget);
    const std::uint64_t base = pow_or_throw(F.q(), d, "q^d");  // index of t^d
    for (std::uint64_t k = 0; k < count; ++k) {
        Poly cand = Poly::from_index(F, base + k);
        if (is_irreducible(cand)) out.push_back(std::move(cand));
    }
    return out;
}

/// All monic irreducibles of degree 1..n, ordered canonically.
inline std::vector<Poly> monic_irreducibles_up_to(const Field& F, std::uint64_t n,
                                                  std::uint64_t budget = kDefaultEnumerationBudget) {
    std::vector<Poly> out;
    for (std::uint64_t d = 1; d <= n; ++d) {
        auto v = enumerate_monic_irreducibles(F, d, budget);
        out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    }
    return out;
}

inline Poly product(const Field& F, const std::vector<Poly>& factors) {
    Poly r = Poly::one(F);
    for (const auto& f : factors) r *= f;
    return r;
}

struct ProductIdentityResult {
    std::uint64_t n = 0;
    std::uint64_t degree = 0;  // q^n
    std::uint64_t factor_count = 0;
    bool equal = false;
};

/// Multiplies all monic irreducibles of degree d | n and compares with t^{q^n} - t.
inline ProductIdentityResult product_identity_check(const Field& F, std::uint64_t n,
                                                    std::uint64_t budget = kDefaultEnumerationBudget) {
    if (n == 0) throw std::invalid_argument("product identity requires n >= 1");
    const std::uint64_t qn = pow_or_throw(F.q(), n, "q^n");
    check_budget("product identity degree q^n", qn, budget);
    Poly lhs = Poly::one(F);
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        for (const auto& P : enumerate_monic_irreducibles(F, d, budget)) {
            lhs *= P;
            ++count;
        }
    }
    const Poly rhs = Poly::monomial(F, F.one(), qn) - Poly::t(F);
    return {n, qn, count, lhs == rhs};
}

}  // namespace fqt

#endif  // FQT_IRREDUCIBLE_HPP
