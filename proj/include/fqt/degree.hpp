#ifndef FQT_DEGREE_HPP
#define FQT_DEGREE_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace fqt {

/// Polynomial degree with a distinguished value for deg(0) = -infinity.
///
/// NEG_INF compares below every integer and absorbs addition, so
/// deg(a*b) == deg(a) + deg(b) holds for the zero polynomial as well.
class Degree {
   public:
    static constexpr std::int64_t kNegInfRaw = std::numeric_limits<std::int64_t>::min();

    constexpr Degree() noexcept : v_(kNegInfRaw) {}
    constexpr Degree(std::int64_t v) noexcept : v_(v) {}  // NOLINT: implicit by design of the degree map

    static constexpr Degree neg_inf() noexcept { return Degree(); }

    constexpr bool is_neg_inf() const noexcept { return v_ == kNegInfRaw; }

    std::int64_t value() const {
        if (is_neg_inf()) throw std::domain_error("degree of the zero polynomial is -inf");
        return v_;
    }

    /// Raw value; NEG_INF maps to `fallback`.
    constexpr std::int64_t value_or(std::int64_t fallback) const noexcept { return is_neg_inf() ? fallback : v_; }

    friend constexpr auto operator<=>(Degree a, Degree b) noexcept = default;
    friend constexpr bool operator==(Degree a, Degree b) noexcept = default;

    friend constexpr Degree operator+(Degree a, Degree b) noexcept {
        if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
        return Degree(a.v_ + b.v_);
    }

    std::string to_string() const { return is_neg_inf() ? std::string("-inf") : std::to_string(v_); }

   private:
    std::int64_t v_;
};

inline constexpr Degree NEG_INF = Degree::neg_inf();

}  // namespace fqt

#endif  // FQT_DEGREE_HPP
