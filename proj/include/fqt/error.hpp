#ifndef FQT_ERROR_HPP
#define FQT_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fqt {

/// Raised when an operation would materialize an object larger than its budget.
class budget_exceeded : public std::runtime_error {
   public:
    budget_exceeded(const std::string& what, std::uint64_t needed, std::uint64_t budget)
        : std::runtime_error("budget exceeded: " + what + " needs " + std::to_string(needed) + " > budget " +
                             std::to_string(budget)),
          needed_(needed),
          budget_(budget) {}

    std::uint64_t needed() const noexcept { return needed_; }
    std::uint64_t budget() const noexcept { return budget_; }

   private:
    std::uint64_t needed_;
    std::uint64_t budget_;
};

/// Malformed polynomial or field literal.
class parse_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

inline void check_budget(const std::string& what, std::uint64_t needed, std::uint64_t budget) {
    if (needed > budget) throw budget_exceeded(what, needed, budget);
}

/// a^b with overflow detection; returns false on overflow.
inline bool checked_pow(std::uint64_t a, std::uint64_t b, std::uint64_t& out) noexcept {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < b; ++i) {
        if (a != 0 && r > UINT64_MAX / a) return false;
        r *= a;
    }
    out = r;
    return true;
}

inline std::uint64_t pow_or_throw(std::uint64_t a, std::uint64_t b, const std::string& what) {
    std::uint64_t r = 0;
    if (!checked_pow(a, b, r)) throw budget_exceeded(what + " (64-bit overflow)", UINT64_MAX, UINT64_MAX - 1);
    return r;
}

}  // namespace fqt

#endif  // FQT_ERROR_HPP
