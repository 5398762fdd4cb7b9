#pragma once

#include <cstdint>
#include <vector>

#include "daglca/bitmatrix.hpp"
#include "daglca/intmatrix.hpp"
#include "daglca/parallel.hpp"
#include "daglca/prng.hpp"

namespace daglca {

// 2^61 - 1, Mersenne prime. Large enough that the union bound over all
// fingerprint comparisons stays far below 1e-5 at the instance sizes this
// library targets, and small enough for 128-bit intermediates.
inline constexpr uint64_t kFingerprintModulus = (1ull << 61) - 1;

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t p) {
    const uint64_t s = a + b;  // both < 2^61, no overflow
    return s >= p ? s - p : s;
}

inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }

// Random function f: V -> Z_p, reproducible from the seed. f(S) denotes
// the sum of f over S mod p; distinct sets collide with probability 1/p.
struct Fingerprint {
    uint64_t p = kFingerprintModulus;
    std::vector<uint64_t> f;
    uint64_t seed = 0;

    uint64_t total() const {
        unsigned __int128 acc = 0;
        for (uint64_t v : f) acc += v;
        return static_cast<uint64_t>(acc % p);
    }
};

inline Fingerprint make_fingerprint(int n, uint64_t seed) {
    Fingerprint fp;
    fp.seed = seed;
    fp.f.resize(n);
    Prng rng(seed);
    for (int i = 0; i < n; ++i) {
        uint64_t v;
        do {
            v = rng.next() >> 3;  // 61 bits
        } while (v >= fp.p);
        fp.f[i] = v;
    }
    return fp;
}

// C[i,j] = OR_k (A[i,k] AND B[k,j]).
inline BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("bool_product inner dimensions differ");
    BoolMatrix c(a.rows(), b.cols());
    parallel_rows(a.rows(), [&](int begin, int end) {
        for (int i = begin; i < end; ++i)
            for_each_bit(a.row(i), [&](int k) { c.or_row(i, b, k); });
    });
    return c;
}

// C[i,j] = |{k : A[i,k] = B[k,j] = 1}|, by popcount over row ANDs.
inline IntMatrix count_product(const BoolMatrix& a, const BoolMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("count_product inner dimensions differ");
    const BoolMatrix bt = b.transposed();
    IntMatrix c(a.rows(), b.cols(), IntMatrix::Tag::Count);
    parallel_rows(a.rows(), [&](int begin, int end) {
        for (int i = begin; i < end; ++i)
            for (int j = 0; j < bt.rows(); ++j)
                c.at(i, j) = static_cast<uint64_t>(and_popcount(a.row(i), bt.row(j)));
    });
    return c;
}

// C[u,v] = sum over x of A[x,u] * A[x,v] * f(x) mod p. With A a transitive
// closure this is the fingerprint of Anc(u) intersect Anc(v); with the
// complemented closure it is the co-ancestor intersection sum.
inline IntMatrix weighted_modp_product(const BoolMatrix& a, const Fingerprint& weights) {
    if (a.rows() != a.cols()) throw DimensionMismatch("weighted_modp_product needs a square matrix");
    if (static_cast<int>(weights.f.size()) != a.rows())
        throw DimensionMismatch("fingerprint size differs from matrix dimension");
    const int n = a.rows();
    const BoolMatrix cols = a.transposed();  // row u = column u of a, indexed by x
    IntMatrix c(n, n, IntMatrix::Tag::ModP);
    parallel_rows(n, [&](int begin, int end) {
        for (int u = begin; u < end; ++u) {
            const auto ru = cols.row(u);
            for (int v = u; v < n; ++v) {
                const auto rv = cols.row(v);
                unsigned __int128 acc = 0;
                for (size_t w = 0; w < ru.size(); ++w) {
                    uint64_t word = ru[w] & rv[w];
                    while (word) {
                        const int x = static_cast<int>((w << 6) + std::countr_zero(word));
                        word &= word - 1;
                        acc += weights.f[x];
                    }
                }
                const uint64_t value = static_cast<uint64_t>(acc % weights.p);
                c.at(u, v) = value;
                c.at(v, u) = value;
            }
        }
    });
    return c;
}

}  // namespace daglca
