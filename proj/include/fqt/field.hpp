#ifndef FQT_FIELD_HPP
#define FQT_FIELD_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace fqt {

/// Parameters of F_q, q = p^e. For e > 1 the field is F_p[x]/(modulus);
/// `modulus` holds little-endian F_p coefficients and is monic of degree e.
/// An empty modulus with e > 1 asks Field to pick the least monic
/// irreducible of degree e in canonical order.
struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t e = 1;
    std::vector<std::uint32_t> modulus;

    std::uint64_t q() const {
        std::uint64_t r = 1;
        for (std::uint32_t i = 0; i < e; ++i) r *= p;
        return r;
    }

    bool operator==(const FieldSpec&) const = default;
};

/// Element of F_q. `v` packs the coordinates in the basis 1, x, ..., x^{e-1}
/// as base-p digits (digit i = coordinate of x^i), so integer order on `v`
/// is the coordinate vector read from the highest basis index down.
struct FieldElem {
    std::uint32_t v = 0;

    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
    friend constexpr bool operator==(FieldElem, FieldElem) = default;
};

namespace detail {

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Minimal F_p[x] helpers used only to validate and pick a modulus.
using FpVec = std::vector<std::uint32_t>;

inline void fp_trim(FpVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpVec fp_mod(FpVec a, const FpVec& m, std::uint32_t p) {
    fp_trim(a);
    const std::size_t dm = m.size() - 1;
    std::uint64_t inv_lead = 1;
    {
        std::uint64_t b = m.back(), e = p - 2, r = 1;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        inv_lead = r;
    }
    while (a.size() > dm) {
        const std::uint64_t c = a.back() * inv_lead % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
        }
        fp_trim(a);
    }
    return a;
}

inline bool fp_irreducible_by_trial(const FpVec& m, std::uint32_t p) {
    const std::size_t deg = m.size() - 1;
    if (deg <= 1) return deg == 1;
    // every monic divisor of degree 1..deg/2
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t k = 0; k < count; ++k) {
            FpVec cand(d + 1, 0);
            std::uint64_t x = k;
            for (std::size_t i = 0; i < d; ++i) {
                cand[i] = static_cast<std::uint32_t>(x % p);
                x /= p;
            }
            cand[d] = 1;
            if (fp_mod(m, cand, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Runtime finite field F_q with exact arithmetic.
///
/// Prime fields use direct modular arithmetic; extension fields use
/// log/exp tables built from a primitive element, which also proves the
/// modulus irreducible (a unit group of order q-1 exists only in a field).
/// Copies share the immutable tables.
class Field {
   public:
    static constexpr std::uint64_t kMaxExtensionOrder = 1u << 16;

    explicit Field(FieldSpec spec) : impl_(std::make_shared<Impl>(build(std::move(spec)))) {}
    Field() : Field(FieldSpec{}) {}

    static Field prime(std::uint32_t p) { return Field(FieldSpec{p, 1, {}}); }

    const FieldSpec& spec() const noexcept { return impl_->spec; }
    std::uint32_t p() const noexcept { return impl_->spec.p; }
    std::uint32_t e() const noexcept { return impl_->spec.e; }
    std::uint64_t q() const noexcept { return impl_->q; }

    FieldElem zero() const noexcept { return {0}; }
    FieldElem one() const noexcept { return {1}; }

    /// Image of an integer under Z -> F_p -> F_q.
    FieldElem from_int(std::int64_t n) const noexcept {
        const std::int64_t p = impl_->spec.p;
        std::int64_t r = n % p;
        if (r < 0) r += p;
        return {static_cast<std::uint32_t>(r)};
    }

    /// The i-th element in canonical order (0 <= i < q).
    FieldElem element(std::uint64_t i) const {
        if (i >= q()) throw std::out_of_range("field element index out of range");
        return {static_cast<std::uint32_t>(i)};
    }

    bool valid(FieldElem a) const noexcept { return a.v < q(); }

    std::vector<std::uint32_t> coords(FieldElem a) const {
        std::vector<std::uint32_t> c(e());
        std::uint32_t v = a.v;
        for (auto& d : c) {
            d = v % p();
            v /= p();
        }
        return c;
    }

    FieldElem from_coords(const std::vector<std::uint32_t>& c) const {
        if (c.size() > e()) throw std::invalid_argument("too many coordinates for field element");
        std::uint64_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] >= p()) throw std::invalid_argument("coordinate out of range [0, p)");
            v = v * p() + c[i];
        }
        return {static_cast<std::uint32_t>(v)};
    }

    /// True iff the element lies in the prime subfield F_p.
    bool in_prime_field(FieldElem a) const noexcept { return a.v < p(); }

    FieldElem add(FieldElem a, FieldElem b) const noexcept {
        const auto& I = *impl_;
        if (I.spec.e == 1) {
            std::uint64_t s = std::uint64_t(a.v) + b.v;
            if (s >= I.spec.p) s -= I.spec.p;
            return {static_cast<std::uint32_t>(s)};
        }
        if (I.spec.p == 2) return {a.v ^ b.v};
        if (!I.add_table.empty()) return {I.add_table[a.v * I.q + b.v]};
        return digitwise(a, b, false);
    }

    FieldElem neg(FieldElem a) const noexcept {
        const auto& I = *impl_;
        if (a.v == 0) return a;
        if (I.spec.e == 1) return {I.spec.p - a.v};
        if (I.spec.p == 2) return a;
        return digitwise(FieldElem{0}, a, true);
    }

    FieldElem sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

    FieldElem mul(FieldElem a, FieldElem b) const noexcept {
        const auto& I = *impl_;
        if (a.v == 0 || b.v == 0) return {0};
        if (I.spec.e == 1) return {static_cast<std::uint32_t>(std::uint64_t(a.v) * b.v % I.spec.p)};
        std::uint64_t l = std::uint64_t(I.log[a.v]) + I.log[b.v];
        if (l >= I.q - 1) l -= I.q - 1;
        return {I.exp[l]};
    }

    FieldElem inv(FieldElem a) const {
        const auto& I = *impl_;
        if (a.v == 0) throw std::domain_error("inverse of zero in F_q");
        if (I.spec.e == 1) return pow(a, I.spec.p - 2);
        const std::uint64_t l = (I.q - 1 - I.log[a.v]) % (I.q - 1);
        return {I.exp[l]};
    }

    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

    FieldElem pow(FieldElem a, std::uint64_t k) const noexcept {
        FieldElem r = one();
        while (k) {
            if (k & 1) r = mul(r, a);
            a = mul(a, a);
            k >>= 1;
        }
        return r;
    }

    /// Unique b with b^p = a (Frobenius is bijective on F_q).
    FieldElem pth_root(FieldElem a) const noexcept { return pow(a, q() / p()); }

    std::string elem_to_string(FieldElem a) const { return std::to_string(a.v); }

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.impl_ == b.impl_ || a.impl_->spec == b.impl_->spec;
    }

   private:
    struct Impl {
        FieldSpec spec;
        std::uint64_t q = 0;
        std::vector<std::uint32_t> exp;  // exp[i] = g^i, i < q-1
        std::vector<std::uint32_t> log;  // log[exp[i]] = i
        std::vector<std::uint32_t> add_table;
    };

    FieldElem digitwise(FieldElem a, FieldElem b, bool negate_b) const noexcept {
        const std::uint32_t p = impl_->spec.p;
        std::uint32_t x = a.v, y = b.v, out = 0, scale = 1;
        for (std::uint32_t i = 0; i < impl_->spec.e; ++i) {
            std::uint32_t dx = x % p, dy = y % p;
            if (negate_b) dy = (p - dy) % p;
            out += ((dx + dy) % p) * scale;
            scale *= p;
            x /= p;
            y /= p;
        }
        return {out};
    }

    static std::uint32_t ext_mul_slow(std::uint32_t a, std::uint32_t b, const FieldSpec& s) {
        detail::FpVec x(s.e, 0), y(s.e, 0);
        for (std::uint32_t i = 0; i < s.e; ++i) {
            x[i] = a % s.p;
            a /= s.p;
            y[i] = b % s.p;
            b /= s.p;
        }
        detail::FpVec prod(2 * s.e, 0);
        for (std::uint32_t i = 0; i < s.e; ++i)
            for (std::uint32_t j = 0; j < s.e; ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(x[i]) * y[j]) % s.p);
        const auto r = detail::fp_mod(prod, s.modulus, s.p);
        std::uint32_t v = 0;
        for (std::size_t i = r.size(); i-- > 0;) v = v * s.p + r[i];
        return v;
    }

    static Impl build(FieldSpec spec) {
        if (!detail::is_prime_u32(spec.p)) throw std::invalid_argument("field characteristic must be prime");
        if (spec.e == 0) throw std::invalid_argument("extension degree must be >= 1");
        Impl I;
        if (spec.e == 1) {
            if (!spec.modulus.empty()) throw std::invalid_argument("prime field takes no modulus");
            I.q = spec.p;
            I.spec = std::move(spec);
            return I;
        }
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < spec.e; ++i) {
            q *= spec.p;
            if (q > kMaxExtensionOrder) throw std::invalid_argument("extension field order exceeds 2^16");
        }
        I.q = q;
        if (spec.modulus.empty()) {
            // least monic irreducible of degree e in canonical order
            const std::uint64_t count = q;  // p^e choices for the lower coefficients
            for (std::uint64_t k = 0; k < count; ++k) {
                detail::FpVec cand(spec.e + 1, 0);
                std::uint64_t x = k;
                for (std::uint32_t i = 0; i < spec.e; ++i) {
                    cand[i] = static_cast<std::uint32_t>(x % spec.p);
                    x /= spec.p;
                }
                cand[spec.e] = 1;
                if (detail::fp_irreducible_by_trial(cand, spec.p)) {
                    spec.modulus = cand;
                    break;
                }
            }
        } else {
            auto m = spec.modulus;
            detail::fp_trim(m);
            if (m.size() != spec.e + 1 || m.back() != 1)
                throw std::invalid_argument("modulus must be monic of degree e");
            for (auto c : m)
                if (c >= spec.p) throw std::invalid_argument("modulus coefficient out of range [0, p)");
            if (!detail::fp_irreducible_by_trial(m, spec.p))
                throw std::invalid_argument("modulus is not irreducible over F_p");
        }
        I.spec = std::move(spec);
        const auto divisors = detail::prime_divisors(q - 1);
        auto pow_slow = [&](std::uint32_t a, std::uint64_t k) {
            std::uint32_t r = 1;
            while (k) {
                if (k & 1) r = ext_mul_slow(r, a, I.spec);
                a = ext_mul_slow(a, a, I.spec);
                k >>= 1;
            }
            return r;
        };
        std::uint32_t gen = 0;
        for (std::uint32_t g = 2; g < q && gen == 0; ++g) {
            bool primitive = true;
            for (auto r : divisors) {
                if (pow_slow(g, (q - 1) / r) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) gen = g;
        }
        if (gen == 0) throw std::logic_error("no primitive element found");
        I.exp.resize(q - 1);
        I.log.assign(q, 0);
        std::uint32_t x = 1;
        for (std::uint64_t i = 0; i + 1 < q; ++i) {
            I.exp[i] = x;
            I.log[x] = static_cast<std::uint32_t>(i);
            x = ext_mul_slow(x, gen, I.spec);
        }
        if (I.spec.p != 2 && q <= 256) {
            I.add_table.resize(q * q);
            for (std::uint32_t a = 0; a < q; ++a)
                for (std::uint32_t b = 0; b < q; ++b) {
                    std::uint32_t xa = a, xb = b, out = 0, scale = 1;
                    for (std::uint32_t i = 0; i < I.spec.e; ++i) {
                        out += ((xa % I.spec.p + xb % I.spec.p) % I.spec.p) * scale;
                        scale *= I.spec.p;
                        xa /= I.spec.p;
                        xb /= I.spec.p;
                    }
                    I.add_table[a * q + b] = out;
                }
        }
        return I;
    }

    std::shared_ptr<const Impl> impl_;
};

}  // namespace fqt

#endif  // FQT_FIELD_HPP
