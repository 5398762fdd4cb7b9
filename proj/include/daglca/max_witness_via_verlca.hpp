#pragma once

#include <functional>
#include <vector>

#include "daglca/listing.hpp"
#include "daglca/max_witness.hpp"
#include "daglca/oracle.hpp"

namespace daglca {

// An all-pairs candidate-LCA verifier: returns the per-pair correctness
// bits for the supplied candidates.
using VerLcaSolver = std::function<BoolMatrix(const Dag&, const CandidateMatrix&)>;

// Computes the max-witness product with ceil(log2(n+1)) rounds of parallel
// binary search, each answered by one AP-Ver-LCA call on a tripartite
// reachability graph. The witness range is padded to a power of two: a
// guard witness at index 0 (a row and column of ones) ensures every pair
// has some witness, and zero-filled dummies extend the range; guard-only
// results decode to kNone.
inline WitnessMatrix max_witness_via_verlca(const BoolMatrix& a, const BoolMatrix& b,
                                            const VerLcaSolver& verlca) {
    const int n = a.rows();
    if (a.cols() != n || b.rows() != n || b.cols() != n)
        throw DimensionMismatch("max_witness_via_verlca expects square matrices of equal size");
    WitnessMatrix result(n);
    if (n == 0) return result;

    int n_pad = 1, bits = 0;
    while (n_pad < n + 1) {
        n_pad <<= 1;
        ++bits;
    }

    // Padded inputs: witness index 0 is the all-ones guard, 1..n are the
    // original indices shifted up (order preserved), the rest never match.
    const auto a_pad = [&](int i, int k) {
        return k == 0 ? true : (k <= n && a.get(i, k - 1));
    };
    const auto b_pad = [&](int k, int j) {
        return k == 0 ? true : (k <= n && b.get(k - 1, j));
    };

    // Tripartite base graph: K at ids [0, n_pad), I at n_pad + i,
    // J at n_pad + n + j; edges K -> I and K -> J where the padded
    // matrices have ones. Prefix vertices are appended per round.
    std::vector<Edge> base_edges;
    for (int k = 0; k < n_pad; ++k)
        for (int i = 0; i < n; ++i) {
            if (a_pad(i, k)) base_edges.emplace_back(k, n_pad + i);
            if (b_pad(k, i)) base_edges.emplace_back(k, n_pad + n + i);
        }
    const int prefix_base = n_pad + 2 * n;

    std::vector<int> prefix(static_cast<size_t>(n) * n, 0);
    for (int t = 1; t <= bits; ++t) {
        const int n_prefixes = 1 << (t - 1);
        std::vector<Edge> edges = base_edges;
        for (int p = 0; p < n_prefixes; ++p) {
            const int wb = prefix_base + p;
            // Children in K: indices whose top t bits read p followed by 1.
            const int lo = ((p << 1) | 1) << (bits - t);
            const int hi = lo + (1 << (bits - t));
            for (int k = lo; k < hi; ++k) edges.emplace_back(wb, k);
            for (int i = 0; i < 2 * n; ++i) edges.emplace_back(wb, n_pad + i);
        }
        const Dag graph(prefix_base + n_prefixes, std::move(edges));

        // Every pair needs a candidate: genuine latest LCAs (or none when
        // the pair has no common ancestor) everywhere, and the guessed
        // prefix vertex on the queried I x J pairs.
        const LcaReport genuine = latest_lca(graph);
        CandidateMatrix cand(graph.n());
        for (int u = 0; u < graph.n(); ++u)
            for (int v = 0; v < graph.n(); ++v)
                if (!genuine.lists[u][v].empty()) cand.set(u, v, genuine.lists[u][v][0]);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                cand.set(n_pad + i, n_pad + n + j,
                         prefix_base + prefix[static_cast<size_t>(i) * n + j]);

        const BoolMatrix ok = verlca(graph, cand);
        if (ok.rows() != graph.n() || ok.cols() != graph.n())
            throw SolverContractViolation("verifier returned a matrix of the wrong shape");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int& c = prefix[static_cast<size_t>(i) * n + j];
                // Valid guess: no witness below the guessed prefix extended
                // by 1, so the next bit of the maximum is 0.
                c = (c << 1) | (ok.get(n_pad + i, n_pad + n + j) ? 0 : 1);
            }
    }

    const BoolMatrix bt = b.transposed();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int value = prefix[static_cast<size_t>(i) * n + j];
            const int witness = value == 0 ? WitnessMatrix::kNone : value - 1;
            // Independent recheck of validity and maximality.
            int direct = WitnessMatrix::kNone;
            const auto ra = a.row(i), rb = bt.row(j);
            for (int w = static_cast<int>(ra.size()) - 1; w >= 0 && direct < 0; --w) {
                const uint64_t word = ra[static_cast<size_t>(w)] & rb[static_cast<size_t>(w)];
                if (word) direct = (w << 6) + 63 - std::countl_zero(word);
            }
            if (witness != direct)
                throw SolverContractViolation("verifier answers inconsistent with the witnesses");
            result.set(i, j, witness);
        }
    return result;
}

}  // namespace daglca
