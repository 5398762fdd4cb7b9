#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "daglca/error.hpp"

namespace daglca {

// Bit-packed 0/1 matrix, row-major, 64-bit words. All bits beyond `cols` in
// the last word of each row stay zero; every mutating operation preserves
// that so popcounts and row equality never see garbage.
class BoolMatrix {
public:
    BoolMatrix() = default;

    BoolMatrix(int rows, int cols)
        : rows_(rows),
          cols_(cols),
          words_(words_for(cols)),
          bits_(static_cast<size_t>(rows) * words_, 0) {
        if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    }

    static BoolMatrix identity(int n) {
        BoolMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static BoolMatrix ones(int rows, int cols) {
        BoolMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            auto row = m.row_mut(i);
            for (auto& w : row) w = ~0ull;
        }
        m.mask_padding();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words_per_row() const { return words_; }

    bool get(int i, int j) const {
        check_index(i, j);
        return (bits_[idx(i) + static_cast<size_t>(j >> 6)] >> (j & 63)) & 1ull;
    }

    void set(int i, int j, bool value) {
        check_index(i, j);
        uint64_t& w = bits_[idx(i) + static_cast<size_t>(j >> 6)];
        const uint64_t mask = 1ull << (j & 63);
        if (value)
            w |= mask;
        else
            w &= ~mask;
    }

    std::span<const uint64_t> row(int i) const {
        return {bits_.data() + idx(i), static_cast<size_t>(words_)};
    }

    std::span<uint64_t> row_mut(int i) { return {bits_.data() + idx(i), static_cast<size_t>(words_)}; }

    // dst-row |= src-row; both matrices must share the column count.
    void or_row(int dst, const BoolMatrix& src, int src_row) {
        if (src.cols_ != cols_) throw DimensionMismatch("or_row column mismatch");
        uint64_t* d = bits_.data() + idx(dst);
        const uint64_t* s = src.bits_.data() + src.idx(src_row);
        for (int w = 0; w < words_; ++w) d[w] |= s[w];
    }

    bool row_empty(int i) const {
        const uint64_t* r = bits_.data() + idx(i);
        for (int w = 0; w < words_; ++w)
            if (r[w]) return false;
        return true;
    }

    BoolMatrix transposed() const {
        BoolMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i) {
            const uint64_t* r = bits_.data() + idx(i);
            for (int w = 0; w < words_; ++w) {
                uint64_t word = r[w];
                while (word) {
                    const int j = (w << 6) + std::countr_zero(word);
                    word &= word - 1;
                    t.set(j, i, true);
                }
            }
        }
        return t;
    }

    // Bitwise NOT within the column bounds.
    BoolMatrix complemented() const {
        BoolMatrix c(rows_, cols_);
        for (size_t k = 0; k < bits_.size(); ++k) c.bits_[k] = ~bits_[k];
        c.mask_padding();
        return c;
    }

    bool operator==(const BoolMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
    }

private:
    static int words_for(int cols) { return cols > 0 ? (cols + 63) >> 6 : 0; }

    size_t idx(int i) const { return static_cast<size_t>(i) * words_; }

    void check_index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw IndexOutOfRange("matrix index out of range");
    }

    void mask_padding() {
        if (cols_ == 0 || (cols_ & 63) == 0) return;
        const uint64_t mask = (~0ull) >> (64 - (cols_ & 63));
        for (int i = 0; i < rows_; ++i) bits_[idx(i) + words_ - 1] &= mask;
    }

    int rows_ = 0;
    int cols_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

inline int and_popcount(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    int count = 0;
    const size_t n = a.size() < b.size() ? a.size() : b.size();
    for (size_t w = 0; w < n; ++w) count += std::popcount(a[w] & b[w]);
    return count;
}

inline bool and_any(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    const size_t n = a.size() < b.size() ? a.size() : b.size();
    for (size_t w = 0; w < n; ++w)
        if (a[w] & b[w]) return true;
    return false;
}

// Calls fn(j) for every set bit of the row, ascending.
template <typename Fn>
void for_each_bit(std::span<const uint64_t> row, Fn&& fn) {
    for (size_t w = 0; w < row.size(); ++w) {
        uint64_t word = row[w];
        while (word) {
            fn(static_cast<int>((w << 6) + std::countr_zero(word)));
            word &= word - 1;
        }
    }
}

}  // namespace daglca
