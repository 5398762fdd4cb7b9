#pragma once

#include <cstdint>
#include <vector>

#include "daglca/error.hpp"

namespace daglca {

// Dense matrix of 64-bit unsigned entries: ancestor-intersection counts, or
// fingerprint sums reduced mod p, depending on the producing kernel.
class IntMatrix {
public:
    enum class Tag { Count, ModP };

    IntMatrix() = default;

    IntMatrix(int rows, int cols, Tag tag = Tag::Count)
        : rows_(rows), cols_(cols), tag_(tag), entries_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Tag tag() const { return tag_; }

    uint64_t at(int i, int j) const {
        check_index(i, j);
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }

    uint64_t& at(int i, int j) {
        check_index(i, j);
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

private:
    void check_index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw IndexOutOfRange("matrix index out of range");
    }

    int rows_ = 0;
    int cols_ = 0;
    Tag tag_ = Tag::Count;
    std::vector<uint64_t> entries_;
};

}  // namespace daglca
