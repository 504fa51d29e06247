#ifndef FQT_TEXT_HPP
#define FQT_TEXT_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "poly.hpp"

// Text forms of polynomials:
//   human:   "t^3+2*t+1"; non-prime-field coefficients in parentheses over x,
//            e.g. "(x+1)*t^2+x" is written "(x+1)*t^2+(x)".
//   compact: "[1,2,0,1]" little-endian; for e > 1 each coefficient is a
//            coordinate vector "[c0,c1,...]". Zero is "0" resp. "[]".

namespace fqt {

namespace detail {

inline std::string monomial_sum(const std::vector<std::uint32_t>& c, char var,
                                const std::vector<std::string>* coef_text = nullptr) {
    std::string out;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        if (!out.empty()) out += '+';
        const std::string coef = coef_text ? (*coef_text)[k] : std::to_string(c[k]);
        const bool unit = coef == "1";
        if (k == 0) {
            out += coef;
            continue;
        }
        if (!unit) out += coef + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? std::string("0") : out;
}

class Cursor {
   public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() {
        skip_ws();
        return i_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    std::uint64_t integer() {
        skip_ws();
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected integer");
        std::uint64_t v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            if (v > (UINT64_MAX - 9) / 10) fail("integer too large");
            v = v * 10 + static_cast<std::uint64_t>(s_[i_] - '0');
            ++i_;
        }
        return v;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw parse_error("malformed polynomial literal '" + std::string(s_) + "' at offset " + std::to_string(i_) +
                          ": " + why);
    }

   private:
    std::string_view s_;
    std::size_t i_ = 0;
};

// Sum of signed terms c*var^k with integer c, reduced mod p. Stops at `stop`.
inline std::vector<std::uint32_t> parse_int_sum(Cursor& cur, char var, std::uint32_t p, char stop,
                                                std::size_t max_degree) {
    std::vector<std::uint32_t> c;
    bool first = true;
    while (true) {
        if (cur.done() || cur.peek() == stop) {
            if (first) cur.fail("empty expression");
            break;
        }
        bool negative = false;
        if (cur.eat('+')) {
        } else if (cur.eat('-')) {
            negative = true;
        } else if (!first) {
            cur.fail("expected '+' or '-'");
        }
        first = false;
        std::uint64_t coef = 1;
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coef = cur.integer() % p;
            have_coef = true;
            if (!cur.eat('*')) {
                if (cur.peek() == var) cur.fail("missing '*' between coefficient and variable");
            }
        }
        std::size_t k = 0;
        if (cur.eat(var)) {
            k = 1;
            if (cur.eat('^')) k = cur.integer();
        } else if (!have_coef) {
            cur.fail(std::string("expected coefficient or '") + var + "'");
        }
        if (k > max_degree) cur.fail("exponent too large");
        if (c.size() <= k) c.resize(k + 1, 0);
        std::uint64_t v = negative ? (p - coef) % p : coef;
        c[k] = static_cast<std::uint32_t>((c[k] + v) % p);
    }
    return c;
}

}  // namespace detail

inline std::string elem_to_human(const Field& F, FieldElem a) {
    if (F.in_prime_field(a)) return std::to_string(a.v);
    return "(" + detail::monomial_sum(F.coords(a), 'x') + ")";
}

inline std::string to_human(const Poly& a) {
    const Field& F = a.field();
    std::vector<std::uint32_t> nz(a.size());
    std::vector<std::string> text(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        nz[i] = a.coeff(i).v;
        text[i] = elem_to_human(F, a.coeff(i));
    }
    return detail::monomial_sum(nz, 't', &text);
}

inline std::string elem_to_compact(const Field& F, FieldElem a) {
    if (F.e() == 1) return std::to_string(a.v);
    std::string out = "[";
    const auto c = F.coords(a);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out + "]";
}

inline std::string to_compact(const Poly& a) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ',';
        out += elem_to_compact(a.field(), a.coeff(i));
    }
    return out + "]";
}

inline Poly parse_poly(const Field& F, std::string_view text) {
    constexpr std::size_t kMaxLiteralDegree = 1u << 24;
    detail::Cursor cur(text);
    if (cur.done()) cur.fail("empty literal");
    if (cur.eat('[')) {
        std::vector<FieldElem> c;
        if (!cur.eat(']')) {
            do {
                if (cur.eat('[')) {
                    std::vector<std::uint32_t> coords;
                    if (!cur.eat(']')) {
                        do {
                            const auto v = cur.integer();
                            if (v >= F.p()) cur.fail("coordinate out of range [0, p)");
                            coords.push_back(static_cast<std::uint32_t>(v));
                        } while (cur.eat(','));
                        cur.expect(']');
                    }
                    if (coords.size() > F.e()) cur.fail("coordinate vector longer than extension degree");
                    c.push_back(F.from_coords(coords));
                } else {
                    const auto v = cur.integer();
                    if (v >= F.p()) cur.fail("coefficient out of range [0, p)");
                    c.push_back({static_cast<std::uint32_t>(v)});
                }
            } while (cur.eat(','));
            cur.expect(']');
        }
        if (!cur.done()) cur.fail("trailing characters");
        return Poly(F, std::move(c));
    }
    std::vector<FieldElem> c;
    bool first = true;
    while (!cur.done()) {
        bool negative = false;
        if (cur.eat('+')) {
        } else if (cur.eat('-')) {
            negative = true;
        } else if (!first) {
            cur.fail("expected '+' or '-'");
        }
        first = false;
        FieldElem coef = F.one();
        bool have_coef = false;
        if (cur.eat('(')) {
            const auto coords = detail::parse_int_sum(cur, 'x', F.p(), ')', F.e() - 1);
            cur.expect(')');
            if (coords.size() > F.e()) cur.fail("coefficient degree in x must be < e");
            coef = F.from_coords(coords);
            have_coef = true;
        } else if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coef = F.from_int(static_cast<std::int64_t>(cur.integer() % F.p()));
            have_coef = true;
        }
        if (have_coef && !cur.eat('*') && cur.peek() == 't') cur.fail("missing '*' between coefficient and t");
        std::size_t k = 0;
        if (cur.eat('t')) {
            k = 1;
            if (cur.eat('^')) k = cur.integer();
        } else if (!have_coef) {
            cur.fail("expected coefficient or 't'");
        }
        if (k > kMaxLiteralDegree) cur.fail("exponent too large");
        if (c.size() <= k) c.resize(k + 1, F.zero());
        c[k] = F.add(c[k], negative ? F.neg(coef) : coef);
    }
    if (first) cur.fail("empty literal");
    return Poly(F, std::move(c));
}

/// Comma-separated list of literals, respecting brackets and parentheses.
inline std::vector<Poly> parse_poly_list(const Field& F, std::string_view text) {
    std::vector<Poly> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        const char ch = i < text.size() ? text[i] : ',';
        if (ch == '[' || ch == '(') ++depth;
        if (ch == ']' || ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(parse_poly(F, text.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace fqt

#endif  // FQT_TEXT_HPP
