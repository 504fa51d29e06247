#ifndef FQT_POLY_HPP
#define FQT_POLY_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degree.hpp"
#include "error.hpp"
#include "field.hpp"

namespace fqt {

/// Element of A = F_q[t]. Coefficients are little-endian and trimmed, so the
/// zero polynomial has no coefficients and degree NEG_INF.
class Poly {
   public:
    explicit Poly(Field f) : f_(std::move(f)) {}
    Poly(Field f, std::vector<FieldElem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
        for (auto c : c_)
            if (!f_.valid(c)) throw std::invalid_argument("coefficient outside the field");
        trim();
    }

    static Poly constant(const Field& f, FieldElem c) { return Poly(f, std::vector<FieldElem>{c}); }
    static Poly one(const Field& f) { return constant(f, f.one()); }
    static Poly monomial(const Field& f, FieldElem c, std::size_t k) {
        std::vector<FieldElem> v(k + 1, f.zero());
        v[k] = c;
        return Poly(f, std::move(v));
    }
    /// The indeterminate t.
    static Poly t(const Field& f) { return monomial(f, f.one(), 1); }
    /// Convenience over F_p: little-endian integer coefficients.
    static Poly from_ints(const Field& f, const std::vector<std::int64_t>& c) {
        std::vector<FieldElem> v;
        v.reserve(c.size());
        for (auto x : c) v.push_back(f.from_int(x));
        return Poly(f, std::move(v));
    }

    const Field& field() const noexcept { return f_; }
    const std::vector<FieldElem>& coeffs() const noexcept { return c_; }
    std::size_t size() const noexcept { return c_.size(); }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == f_.one(); }

    Degree degree() const noexcept {
        return c_.empty() ? NEG_INF : Degree(static_cast<std::int64_t>(c_.size()) - 1);
    }

    FieldElem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : f_.zero(); }
    FieldElem lead() const noexcept { return c_.empty() ? f_.zero() : c_.back(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == f_.one(); }

    Poly monic() const {
        if (is_zero()) return *this;
        return scale(f_.inv(lead()));
    }

    Poly scale(FieldElem s) const {
        Poly r(f_);
        if (s == f_.zero()) return r;
        r.c_.resize(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_.mul(c_[i], s);
        r.trim();
        return r;
    }

    Poly shift(std::size_t k) const {
        if (is_zero()) return *this;
        Poly r(f_);
        r.c_.assign(k, f_.zero());
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    Poly derivative() const {
        Poly r(f_);
        if (c_.size() <= 1) return r;
        r.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = f_.mul(c_[i], f_.from_int(static_cast<std::int64_t>(i % f_.p())));
        r.trim();
        return r;
    }

    FieldElem eval(FieldElem x) const noexcept {
        FieldElem r = f_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) r = f_.add(f_.mul(r, x), c_[i]);
        return r;
    }

    /// self(b) for b in A (composition).
    Poly compose(const Poly& b) const {
        Poly r(f_);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * b + constant(f_, c_[i]);
        return r;
    }

    Poly& operator+=(const Poly& o) {
        check_same(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), f_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_.add(c_[i], o.c_[i]);
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_same(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), f_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_.sub(c_[i], o.c_[i]);
        trim();
        return *this;
    }
    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.c_) c = f_.neg(c);
        return r;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same(b);
        Poly r(a.f_);
        if (a.is_zero() || b.is_zero()) return r;
        const Field& F = a.f_;
        if (F.e() == 1) {
            // accumulate in 64 bits and reduce lazily
            const std::uint64_t p = F.p();
            const std::uint64_t limit = UINT64_MAX - (p - 1) * (p - 1);
            std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
            for (std::size_t i = 0; i < a.c_.size(); ++i) {
                const std::uint64_t x = a.c_[i].v;
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.c_.size(); ++j) {
                    std::uint64_t& s = acc[i + j];
                    s += x * b.c_[j].v;
                    if (s >= limit) s %= p;
                }
            }
            r.c_.resize(acc.size());
            for (std::size_t k = 0; k < acc.size(); ++k) r.c_[k] = {static_cast<std::uint32_t>(acc[k] % p)};
        } else {
            r.c_.assign(a.c_.size() + b.c_.size() - 1, F.zero());
            for (std::size_t i = 0; i < a.c_.size(); ++i) {
                if (a.c_[i].v == 0) continue;
                for (std::size_t j = 0; j < b.c_.size(); ++j)
                    r.c_[i + j] = F.add(r.c_[i + j], F.mul(a.c_[i], b.c_[j]));
            }
        }
        r.trim();
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Euclidean division: a = q*b + r with deg r < deg b.
    friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        a.check_same(b);
        if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
        const Field& F = a.f_;
        Poly rem(a);
        Poly quo(F);
        if (a.c_.size() < b.c_.size()) return {quo, rem};
        const std::size_t db = b.c_.size() - 1;
        quo.c_.assign(a.c_.size() - db, F.zero());
        const FieldElem inv_lead = F.inv(b.lead());
        for (std::size_t k = rem.c_.size(); k-- > db;) {
            const FieldElem c = rem.c_[k];
            if (c.v == 0) continue;
            const FieldElem m = F.mul(c, inv_lead);
            quo.c_[k - db] = m;
            const FieldElem nm = F.neg(m);
            for (std::size_t i = 0; i <= db; ++i) rem.c_[k - db + i] = F.add(rem.c_[k - db + i], F.mul(nm, b.c_[i]));
        }
        rem.c_.resize(db);
        rem.trim();
        quo.trim();
        return {quo, rem};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

    bool divides(const Poly& a) const { return (a % *this).is_zero(); }

    Poly pow(std::uint64_t k) const {
        Poly r = one(f_), b = *this;
        while (k) {
            if (k & 1) r *= b;
            k >>= 1;
            if (k) b *= b;
        }
        return r;
    }

    /// p-th root in A if this polynomial is a p-th power, else empty.
    std::optional<Poly> pth_root() const {
        const std::uint32_t p = f_.p();
        Poly r(f_);
        if (is_zero()) return r;
        r.c_.resize((c_.size() - 1) / p + 1, f_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i % p != 0) {
                if (c_[i].v != 0) return std::nullopt;
                continue;
            }
            r.c_[i / p] = f_.pth_root(c_[i]);
        }
        r.trim();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.f_ == b.f_ && a.c_ == b.c_; }

    /// Canonical order: by degree, then coefficients compared from the top index down.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
        if (auto c = a.c_.size() <=> b.c_.size(); c != 0) return c;
        for (std::size_t i = a.c_.size(); i-- > 0;)
            if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    /// Rank in the canonical enumeration of A: sum of coeff_i * q^i.
    std::uint64_t canonical_index() const {
        std::uint64_t r = 0;
        const std::uint64_t q = f_.q();
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (r > (UINT64_MAX - c_[i].v) / q) throw std::overflow_error("canonical index exceeds 64 bits");
            r = r * q + c_[i].v;
        }
        return r;
    }

    /// Inverse of canonical_index.
    static Poly from_index(const Field& f, std::uint64_t k) {
        Poly r(f);
        const std::uint64_t q = f.q();
        while (k) {
            r.c_.push_back({static_cast<std::uint32_t>(k % q)});
            k /= q;
        }
        return r;
    }

   private:
    void trim() noexcept {
        while (!c_.empty() && c_.back().v == 0) c_.pop_back();
    }
    void check_same(const Poly& o) const {
        if (!(f_ == o.f_)) throw std::invalid_argument("polynomials over different fields");
    }

    Field f_;
    std::vector<FieldElem> c_;
};

/// gcd, normalized monic (zero for gcd(0, 0)).
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

struct XgcdResult {
    Poly g;  // monic gcd
    Poly u;
    Poly v;  // g == u*a + v*b
};

inline XgcdResult xgcd(const Poly& a, const Poly& b) {
    const Field& F = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(F), s1(F);
    Poly t0(F), t1 = Poly::one(F);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const FieldElem inv = F.inv(r0.lead());
    return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

/// base^k mod m for arbitrary 64-bit k.
inline Poly powmod(Poly base, std::uint64_t k, const Poly& m) {
    Poly r = Poly::one(base.field()) % m;
    base = base % m;
    while (k) {
        if (k & 1) r = mulmod(r, base, m);
        k >>= 1;
        if (k) base = mulmod(base, base, m);
    }
    return r;
}

/// Inverse of a modulo m; throws if gcd(a, m) != 1.
inline Poly invmod(const Poly& a, const Poly& m) {
    auto [g, u, v] = xgcd(a % m, m);
    if (!g.is_one()) throw std::domain_error("polynomial not invertible modulo m");
    return u % m;
}

/// Unique R with deg R < deg(prod moduli) and R = residues[i] mod moduli[i].
inline Poly crt(const std::vector<Poly>& residues, const std::vector<Poly>& moduli) {
    if (residues.size() != moduli.size()) throw std::invalid_argument("crt: residues and moduli differ in length");
    if (moduli.empty()) throw std::invalid_argument("crt: no moduli");
    for (std::size_t i = 0; i < moduli.size(); ++i)
        if (moduli[i].is_zero()) throw std::invalid_argument("crt: zero modulus at index " + std::to_string(i));
    for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i + 1; j < moduli.size(); ++j)
            if (!gcd(moduli[i], moduli[j]).is_one())
                throw std::invalid_argument("crt: moduli " + std::to_string(i) + " and " + std::to_string(j) +
                                            " are not coprime");
    Poly x = residues[0] % moduli[0];
    Poly m = moduli[0];
    for (std::size_t i = 1; i < moduli.size(); ++i) {
        const Poly& mi = moduli[i];
        const Poly diff = (residues[i] - x) % mi;
        const Poly k = mulmod(diff, invmod(m % mi, mi), mi);
        x = x + m * k;
        m = m * mi;
    }
    return x % m;
}

/// Number of A with deg A <= d, i.e. q^{d+1} (1 for d < 0).
inline std::uint64_t count_up_to_degree(std::uint64_t q, std::int64_t d) {
    if (d < 0) return 1;  // only the zero polynomial
    return pow_or_throw(q, static_cast<std::uint64_t>(d) + 1, "domain size");
}

}  // namespace fqt

#endif  // FQT_POLY_HPP
