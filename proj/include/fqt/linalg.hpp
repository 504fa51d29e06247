#ifndef FQT_LINALG_HPP
#define FQT_LINALG_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "field.hpp"

namespace fqt {

using FqVector = std::vector<FieldElem>;

/// Incremental Gaussian elimination over F_q. Rows are kept in reduced row
/// echelon form, which is unique for a given row space; the kernel basis and
/// its first vector are therefore independent of the order rows arrive in.
class FqRowEchelon {
   public:
    FqRowEchelon(Field F, std::size_t cols) : F_(std::move(F)), cols_(cols), pivot_row_(cols, kNone) {}

    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    bool full() const noexcept { return rows_.size() == cols_; }

    /// Returns true if the row increased the rank.
    bool add_row(FqVector v) {
        if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols_; ++c) {
            if (v[c].v == 0 || pivot_row_[c] == kNone) continue;
            axpy(v, F_.neg(v[c]), rows_[pivot_row_[c]]);
        }
        std::size_t lead = 0;
        while (lead < cols_ && v[lead].v == 0) ++lead;
        if (lead == cols_) return false;
        const FieldElem inv = F_.inv(v[lead]);
        for (auto& x : v) x = F_.mul(x, inv);
        for (auto& r : rows_)
            if (r[lead].v != 0) axpy(r, F_.neg(r[lead]), v);
        pivot_row_[lead] = rows_.size();
        rows_.push_back(std::move(v));
        return true;
    }

    std::vector<std::size_t> free_columns() const {
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < cols_; ++c)
            if (pivot_row_[c] == kNone) out.push_back(c);
        return out;
    }

    FqVector kernel_vector_for(std::size_t free_col) const {
        FqVector v(cols_, F_.zero());
        v[free_col] = F_.one();
        for (std::size_t c = 0; c < cols_; ++c) {
            if (pivot_row_[c] == kNone) continue;
            v[c] = F_.neg(rows_[pivot_row_[c]][free_col]);
        }
        return v;
    }

    /// Basis of the right kernel, one vector per free column in ascending order.
    std::vector<FqVector> kernel_basis() const {
        std::vector<FqVector> out;
        for (auto c : free_columns()) out.push_back(kernel_vector_for(c));
        return out;
    }

    std::optional<FqVector> first_kernel_vector() const {
        for (std::size_t c = 0; c < cols_; ++c)
            if (pivot_row_[c] == kNone) return kernel_vector_for(c);
        return std::nullopt;
    }

   private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    void axpy(FqVector& y, FieldElem a, const FqVector& x) const {
        for (std::size_t i = 0; i < cols_; ++i)
            if (x[i].v != 0) y[i] = F_.add(y[i], F_.mul(a, x[i]));
    }

    Field F_;
    std::size_t cols_;
    std::vector<std::size_t> pivot_row_;
    std::vector<FqVector> rows_;
};

/// Same contract as FqRowEchelon for F_2, rows packed 64 entries per word.
class Gf2RowEchelon {
   public:
    explicit Gf2RowEchelon(std::size_t cols)
        : cols_(cols), words_((cols + 63) / 64), pivot_row_(cols, kNone), pivot_mask_(words_, 0) {}

    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    bool full() const noexcept { return rows_.size() == cols_; }

    using Row = std::vector<std::uint64_t>;

    Row pack(const FqVector& v) const {
        if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
        Row r(words_, 0);
        for (std::size_t c = 0; c < cols_; ++c)
            if (v[c].v & 1u) r[c >> 6] |= std::uint64_t(1) << (c & 63);
        return r;
    }

    static bool bit(const Row& r, std::size_t c) noexcept { return (r[c >> 6] >> (c & 63)) & 1u; }

    bool add_packed(Row v) {
        if (v.size() != words_) throw std::invalid_argument("row length mismatch");
        // stored rows vanish on every other pivot column, so one pass suffices
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = v[w] & pivot_mask_[w];
            while (bits) {
                const std::size_t c = (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                xor_into(v, rows_[pivot_row_[c]]);
            }
        }
        std::size_t lead = kNone;
        for (std::size_t w = 0; w < words_ && lead == kNone; ++w)
            if (v[w]) lead = (w << 6) + static_cast<std::size_t>(std::countr_zero(v[w]));
        if (lead == kNone) return false;
        for (auto& r : rows_)
            if (bit(r, lead)) xor_into(r, v);
        pivot_row_[lead] = rows_.size();
        pivot_mask_[lead >> 6] |= std::uint64_t(1) << (lead & 63);
        rows_.push_back(std::move(v));
        return true;
    }

    bool add_row(const FqVector& v) { return add_packed(pack(v)); }

    std::vector<std::size_t> free_columns() const {
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < cols_; ++c)
            if (pivot_row_[c] == kNone) out.push_back(c);
        return out;
    }

    FqVector kernel_vector_for(std::size_t free_col) const {
        FqVector v(cols_, FieldElem{0});
        v[free_col] = FieldElem{1};
        for (std::size_t c = 0; c < cols_; ++c) {
            if (pivot_row_[c] == kNone) continue;
            v[c] = FieldElem{bit(rows_[pivot_row_[c]], free_col) ? 1u : 0u};
        }
        return v;
    }

    std::vector<FqVector> kernel_basis() const {
        std::vector<FqVector> out;
        for (auto c : free_columns()) out.push_back(kernel_vector_for(c));
        return out;
    }

    std::optional<FqVector> first_kernel_vector() const {
        for (std::size_t c = 0; c < cols_; ++c)
            if (pivot_row_[c] == kNone) return kernel_vector_for(c);
        return std::nullopt;
    }

   private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    void xor_into(Row& y, const Row& x) const noexcept {
        for (std::size_t w = 0; w < words_; ++w) y[w] ^= x[w];
    }

    std::size_t cols_;
    std::size_t words_;
    std::vector<std::size_t> pivot_row_;
    Row pivot_mask_;
    std::vector<Row> rows_;
};

/// Homogeneous system over F_q; uses the packed F_2 solver when q = 2.
class KernelSolver {
   public:
    KernelSolver(Field F, std::size_t cols) : F_(F), packed_(F.p() == 2 && F.e() == 1) {
        if (packed_)
            gf2_.emplace(cols);
        else
            fq_.emplace(std::move(F), cols);
    }

    bool uses_packed_gf2() const noexcept { return packed_; }
    std::size_t cols() const noexcept { return packed_ ? gf2_->cols() : fq_->cols(); }
    std::size_t rank() const noexcept { return packed_ ? gf2_->rank() : fq_->rank(); }
    bool full() const noexcept { return packed_ ? gf2_->full() : fq_->full(); }

    bool add_row(FqVector v) { return packed_ ? gf2_->add_row(v) : fq_->add_row(std::move(v)); }

    std::vector<FqVector> kernel_basis() const { return packed_ ? gf2_->kernel_basis() : fq_->kernel_basis(); }
    std::optional<FqVector> first_kernel_vector() const {
        return packed_ ? gf2_->first_kernel_vector() : fq_->first_kernel_vector();
    }

   private:
    Field F_;
    bool packed_;
    std::optional<Gf2RowEchelon> gf2_;
    std::optional<FqRowEchelon> fq_;
};

}  // namespace fqt

#endif  // FQT_LINALG_HPP
