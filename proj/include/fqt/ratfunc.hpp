#ifndef FQT_RATFUNC_HPP
#define FQT_RATFUNC_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace fqt {

/// Element of K = F_q(t) in lowest terms with a monic denominator.
class RatFunc {
   public:
    explicit RatFunc(const Field& F) : num_(F), den_(Poly::one(F)) {}
    RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}  // NOLINT: A embeds in K
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    const Field& field() const noexcept { return num_.field(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }

    RatFunc inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero in F_q(t)");
        return RatFunc(den_, num_);
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r(*this);
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

    RatFunc pow(std::uint64_t k) const { return RatFunc(num_.pow(k), den_.pow(k)); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept { return a.num_ == b.num_ && a.den_ == b.den_; }

    /// p-th root in K if this element is a p-th power there.
    std::optional<RatFunc> pth_root() const {
        auto n = num_.pth_root();
        auto d = den_.pth_root();
        if (!n || !d) return std::nullopt;
        return RatFunc(*n, *d);
    }

   private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("zero denominator in F_q(t)");
        if (num_.is_zero()) {
            den_ = Poly::one(num_.field());
            return;
        }
        Poly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        const FieldElem inv = num_.field().inv(den_.lead());
        num_ = num_.scale(inv);
        den_ = den_.scale(inv);
    }

    Poly num_;
    Poly den_;
};

/// Canonical order on K: by denominator, then numerator.
inline bool canonical_less(const RatFunc& a, const RatFunc& b) {
    if (a.den() != b.den()) return a.den() < b.den();
    return a.num() < b.num();
}

/// Univariate polynomial in X over K (little-endian, trimmed).
class KPoly {
   public:
    explicit KPoly(Field F) : F_(std::move(F)) {}
    KPoly(Field F, std::vector<RatFunc> c) : F_(std::move(F)), c_(std::move(c)) { trim(); }

    /// From a polynomial in A[X] given by its A-coefficients.
    static KPoly from_polys(const Field& F, const std::vector<Poly>& c) {
        std::vector<RatFunc> v;
        v.reserve(c.size());
        for (const auto& x : c) v.emplace_back(x);
        return KPoly(F, std::move(v));
    }

    const Field& field() const noexcept { return F_; }
    const std::vector<RatFunc>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    Degree degree() const noexcept {
        return c_.empty() ? NEG_INF : Degree(static_cast<std::int64_t>(c_.size()) - 1);
    }
    RatFunc coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RatFunc(F_); }
    const RatFunc& lead() const { return c_.back(); }

    /// True iff every coefficient lies in A.
    bool has_polynomial_coeffs() const noexcept {
        for (const auto& c : c_)
            if (!c.is_polynomial()) return false;
        return true;
    }

    RatFunc eval(const RatFunc& x) const {
        RatFunc r(F_);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    friend KPoly operator+(const KPoly& a, const KPoly& b) {
        std::vector<RatFunc> c(std::max(a.c_.size(), b.c_.size()), RatFunc(a.F_));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return KPoly(a.F_, std::move(c));
    }
    friend KPoly operator-(const KPoly& a, const KPoly& b) {
        std::vector<RatFunc> c(std::max(a.c_.size(), b.c_.size()), RatFunc(a.F_));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return KPoly(a.F_, std::move(c));
    }
    KPoly operator-() const {
        std::vector<RatFunc> c;
        for (const auto& x : c_) c.push_back(-x);
        return KPoly(F_, std::move(c));
    }
    friend KPoly operator*(const KPoly& a, const KPoly& b) {
        if (a.is_zero() || b.is_zero()) return KPoly(a.F_);
        std::vector<RatFunc> c(a.c_.size() + b.c_.size() - 1, RatFunc(a.F_));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return KPoly(a.F_, std::move(c));
    }
    KPoly scale(const RatFunc& s) const {
        std::vector<RatFunc> c;
        for (const auto& x : c_) c.push_back(x * s);
        return KPoly(F_, std::move(c));
    }

    friend std::pair<KPoly, KPoly> divrem(const KPoly& a, const KPoly& b) {
        if (b.is_zero()) throw std::domain_error("division by the zero polynomial in K[X]");
        KPoly quo(a.F_), rem = a;
        if (a.c_.size() < b.c_.size()) return {quo, rem};
        const std::size_t db = b.c_.size() - 1;
        quo.c_.assign(a.c_.size() - db, RatFunc(a.F_));
        const RatFunc inv_lead = b.lead().inv();
        for (std::size_t k = rem.c_.size(); k-- > db;) {
            if (rem.c_[k].is_zero()) continue;
            const RatFunc m = rem.c_[k] * inv_lead;
            quo.c_[k - db] = m;
            for (std::size_t i = 0; i <= db; ++i) rem.c_[k - db + i] = rem.c_[k - db + i] - m * b.c_[i];
        }
        rem.c_.resize(db, RatFunc(a.F_));
        rem.trim();
        quo.trim();
        return {quo, rem};
    }

    friend bool operator==(const KPoly& a, const KPoly& b) noexcept { return a.c_ == b.c_; }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Field F_;
    std::vector<RatFunc> c_;
};

}  // namespace fqt

#endif  // FQT_RATFUNC_HPP
