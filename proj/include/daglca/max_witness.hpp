#pragma once

#include <cmath>
#include <vector>

#include "daglca/bitmatrix.hpp"
#include "daglca/error.hpp"

namespace daglca {

// Entry [i,j] is the largest k with A[i,k] = B[k,j] = 1, or kNone when no
// witness exists.
struct WitnessMatrix {
    static constexpr int kNone = -1;

    int n = 0;
    std::vector<int> w;

    explicit WitnessMatrix(int n_ = 0) : n(n_), w(static_cast<size_t>(n_) * n_, kNone) {}

    int get(int i, int j) const { return w[static_cast<size_t>(i) * n + j]; }
    void set(int i, int j, int value) { w[static_cast<size_t>(i) * n + j] = value; }

    bool operator==(const WitnessMatrix& o) const { return n == o.n && w == o.w; }
};

inline int default_block_size(int n) {
    return n > 1 ? static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))) : 1;
}

// Blocked evaluation of the definition: split the witness range into runs
// of L indices, flag per block which pairs have a witness there with one
// boolean product, then scan only the latest flagged block of each pair.
inline WitnessMatrix max_witness_direct(const BoolMatrix& a, const BoolMatrix& b, int block_size) {
    const int n = a.rows();
    if (a.cols() != n || b.rows() != n || b.cols() != n)
        throw DimensionMismatch("max_witness_direct expects square matrices of equal size");
    if (block_size < 1 || (n > 0 && block_size > n))
        throw DimensionMismatch("block size outside [1, n]");

    WitnessMatrix result(n);
    if (n == 0) return result;

    BoolMatrix unresolved = BoolMatrix::ones(n, n);
    const int words = b.words_per_row();
    std::vector<uint64_t> flag_row(static_cast<size_t>(words));
    const int blocks = (n + block_size - 1) / block_size;
    for (int blk = blocks - 1; blk >= 0; --blk) {
        const int k_begin = blk * block_size;
        const int k_end = std::min(n, k_begin + block_size);
        for (int i = 0; i < n; ++i) {
            if (unresolved.row_empty(i)) continue;
            std::fill(flag_row.begin(), flag_row.end(), 0ull);
            for (int k = k_begin; k < k_end; ++k) {
                if (!a.get(i, k)) continue;
                const auto bk = b.row(k);
                for (int w = 0; w < words; ++w) flag_row[static_cast<size_t>(w)] |= bk[w];
            }
            const auto ur = unresolved.row(i);
            for (int w = 0; w < words; ++w) flag_row[static_cast<size_t>(w)] &= ur[w];
            for_each_bit(std::span<const uint64_t>(flag_row), [&](int j) {
                for (int k = k_end - 1; k >= k_begin; --k) {
                    if (a.get(i, k) && b.get(k, j)) {
                        result.set(i, j, k);
                        break;
                    }
                }
                unresolved.set(i, j, false);
            });
        }
    }
    return result;
}

inline WitnessMatrix max_witness_direct(const BoolMatrix& a, const BoolMatrix& b) {
    return max_witness_direct(a, b, default_block_size(a.rows()));
}

}  // namespace daglca
