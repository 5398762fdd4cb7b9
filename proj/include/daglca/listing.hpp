#pragma once

#include <cassert>
#include <functional>
#include <vector>

#include "daglca/exact.hpp"
#include "daglca/max_witness.hpp"
#include "daglca/oracle.hpp"

namespace daglca {

// Consecutive runs of the topological order, every block of size L except
// possibly the last.
struct BlockScheme {
    int block_size = 1;
    std::vector<std::pair<int, int>> blocks;  // [begin, end) positions

    static BlockScheme make(int n, int block_size) {
        if (block_size < 1 || (n > 0 && block_size > n))
            throw InvalidBlockSize("block size outside [1, n]");
        BlockScheme s;
        s.block_size = block_size;
        for (int begin = 0; begin < n; begin += block_size)
            s.blocks.emplace_back(begin, std::min(n, begin + block_size));
        return s;
    }
};

using Detector = std::function<BoolMatrix(const Dag&, int)>;

inline constexpr uint64_t kDefaultDetectionSeed = 0xD46ull;

namespace detail {

// Topologically latest common ancestor of every pair, or -1. This is the
// max-witness product of the closure with rows and columns permuted into
// topological order: the latest common ancestor has no common-ancestor
// descendant, so it is always an LCA.
inline std::vector<int> latest_matrix(const BoolMatrix& closure, const TopoOrder& order) {
    const int n = closure.rows();
    BoolMatrix by_pos(n, n);
    for (int t = 0; t < n; ++t) by_pos.or_row(t, closure, order.pi[t]);
    const WitnessMatrix w = max_witness_direct(by_pos.transposed(), by_pos);
    std::vector<int> latest(static_cast<size_t>(n) * n, -1);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            const int t = w.get(u, v);
            latest[static_cast<size_t>(u) * n + v] = t >= 0 ? order.pi[t] : -1;
        }
    return latest;
}

// Bitset over vertex ids of each block's vertices.
inline std::vector<std::vector<uint64_t>> block_vertex_masks(const BlockScheme& scheme,
                                                             const TopoOrder& order, int n) {
    const int words = n > 0 ? (n + 63) >> 6 : 0;
    std::vector<std::vector<uint64_t>> masks(scheme.blocks.size(),
                                             std::vector<uint64_t>(static_cast<size_t>(words), 0));
    for (size_t i = 0; i < scheme.blocks.size(); ++i)
        for (int t = scheme.blocks[i].first; t < scheme.blocks[i].second; ++t) {
            const int v = order.pi[t];
            masks[i][static_cast<size_t>(v >> 6)] |= 1ull << (v & 63);
        }
    return masks;
}

inline int masked_intersection_count(std::span<const uint64_t> a, std::span<const uint64_t> b,
                                     std::span<const uint64_t> mask) {
    int count = 0;
    for (size_t w = 0; w < mask.size(); ++w) count += std::popcount(a[w] & b[w] & mask[w]);
    return count;
}

}  // namespace detail

inline LcaReport latest_lca(const Dag& g) {
    const int n = g.n();
    const TopoOrder order = topological_order(g);
    const BoolMatrix d = transitive_closure(g);
    const std::vector<int> latest = detail::latest_matrix(d, order);
    LcaReport report = LcaReport::make_lists(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            const int w = latest[static_cast<size_t>(u) * n + v];
            if (w >= 0) report.lists[u][v] = {w};
        }
    return report;
}

// bit[u,v] = 1 iff |LCA(u,v)| >= k. Fast paths: k = 1 is a common-ancestor
// test; k = 2 and 3 peel off the exact-1 and exact-2 pairs; from k = 4 on
// the brute-force counts are the only route.
inline BoolMatrix atleast_k(const Dag& g, int k, uint64_t seed = kDefaultDetectionSeed) {
    if (k < 1) throw InvalidParams("k must be at least 1");
    const int n = g.n();
    if (k <= 3) {
        const BoolMatrix d = transitive_closure(g);
        const BoolMatrix anc = ancestor_rows(d);
        BoolMatrix bits(n, n);
        for (int u = 0; u < n; ++u)
            for (int v = u; v < n; ++v)
                if (and_any(anc.row(u), anc.row(v))) {
                    bits.set(u, v, true);
                    bits.set(v, u, true);
                }
        if (k >= 2) {
            const ExactReport one = exact1_lca(g, derive_seed(seed, 1));
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (one.found(u, v)) bits.set(u, v, false);
        }
        if (k >= 3) {
            const ExactReport two = exact2_lca(g, derive_seed(seed, 2));
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (two.found(u, v)) bits.set(u, v, false);
        }
        return bits;
    }
    const LcaReport counts = count_lcas(g);
    BoolMatrix bits(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (counts.counts.at(u, v) >= static_cast<uint64_t>(k)) bits.set(u, v, true);
    return bits;
}

// bit[u,v] = 1 iff |LCA(u,v)| <= k, as the negation of at-least-(k+1).
inline BoolMatrix atmost_k(const Dag& g, int k, uint64_t seed = kDefaultDetectionSeed) {
    if (k < 0) throw InvalidParams("k must be nonnegative");
    return atleast_k(g, k + 1, seed).complemented();
}

// bit[u,v] = 1 iff |LCA(u,v)| = k, as at-most-k XOR at-most-(k-1).
inline BoolMatrix exact_k(const Dag& g, int k, uint64_t seed = kDefaultDetectionSeed) {
    if (k < 0) throw InvalidParams("k must be nonnegative");
    const BoolMatrix upper = atmost_k(g, k, seed);
    if (k == 0) return upper;
    const BoolMatrix lower = atmost_k(g, k - 1, seed);
    const int n = g.n();
    BoolMatrix bits(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (upper.get(u, v) != lower.get(u, v)) bits.set(u, v, true);
    return bits;
}

// Generic detection-to-listing: for each level, locate the block of the
// next latest LCA by running the detector on suffix subgraphs from latest
// to earliest, then scan just that block. The detector answers
// at-least-level on an arbitrary induced suffix subgraph.
inline LcaReport list_k_lcas(const Dag& g, int k, const Detector& detector, int block_size) {
    if (k < 1) throw InvalidParams("k must be at least 1");
    const int n = g.n();
    const BlockScheme scheme = BlockScheme::make(n, block_size);
    const TopoOrder order = topological_order(g);
    const BoolMatrix d = transitive_closure(g);

    LcaReport report = LcaReport::make_lists(n);
    std::vector<char> done(static_cast<size_t>(n) * n, 0);
    std::vector<int> found_block(static_cast<size_t>(n) * n);
    const auto at = [n](int u, int v) { return static_cast<size_t>(u) * n + v; };

    const int blocks = static_cast<int>(scheme.blocks.size());
    for (int level = 1; level <= k; ++level) {
        std::fill(found_block.begin(), found_block.end(), -1);
        bool any = false;
        for (int i = blocks - 1; i >= 0; --i) {
            auto [sub, to_old] = suffix_subgraph(g, order, scheme.blocks[i].first);
            const BoolMatrix detected = detector(sub, level);
            const int m = sub.n();
            for (int su = 0; su < m; ++su)
                for (int sv = su; sv < m; ++sv) {
                    if (!detected.get(su, sv)) continue;
                    int u = to_old[su], v = to_old[sv];
                    if (u > v) std::swap(u, v);
                    if (done[at(u, v)] || found_block[at(u, v)] >= 0) continue;
                    found_block[at(u, v)] = i;
                    any = true;
                }
        }
        for (int u = 0; u < n; ++u)
            for (int v = u; v < n; ++v) {
                if (done[at(u, v)]) continue;
                const int i = found_block[at(u, v)];
                if (i < 0) {
                    done[at(u, v)] = 1;  // fewer than `level` LCAs: list complete
                    continue;
                }
                auto& found = report.lists[u][v];
                bool appended = false;
                for (int t = scheme.blocks[i].second - 1; t >= scheme.blocks[i].first; --t) {
                    const int x = order.pi[t];
                    if (!d.get(x, u) || !d.get(x, v)) continue;
                    bool reaches_found = false;
                    for (int s : found)
                        if (d.get(x, s)) {
                            reaches_found = true;
                            break;
                        }
                    if (!reaches_found) {
                        found.push_back(x);
                        appended = true;
                        break;
                    }
                }
                assert(appended && "detector flagged a block without the next LCA");
                if (!appended) throw Error("detector inconsistent with closure");
                if (v != u) report.lists[v][u] = found;
            }
        if (!any) break;
    }
    return report;
}

namespace detail {

// Shared implementation of the 2- and 3-listing algorithms. Per pair, the
// block of the next latest LCA is the latest block where the size of
// Anc(u) & Anc(v) inside the block exceeds the size of the union of the
// ancestor sets of the LCAs found so far inside the block.
inline LcaReport ap_latest(const Dag& g, int block_size, int want) {
    const int n = g.n();
    const BlockScheme scheme = BlockScheme::make(n, block_size);
    const TopoOrder order = topological_order(g);
    const BoolMatrix d = transitive_closure(g);
    const BoolMatrix anc = ancestor_rows(d);
    const std::vector<int> latest = latest_matrix(d, order);
    const auto masks = block_vertex_masks(scheme, order, n);

    LcaReport report = LcaReport::make_lists(n);
    struct Pair {
        int u, v;
    };
    std::vector<Pair> open;
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) {
            const int l1 = latest[static_cast<size_t>(u) * n + v];
            if (l1 < 0) continue;
            report.lists[u][v] = {l1};
            open.push_back({u, v});
        }

    // Per-vertex block counts |Anc(x) & V_i|, the right side of the
    // level-2 equality.
    const int blocks = static_cast<int>(scheme.blocks.size());
    std::vector<int> block_count(static_cast<size_t>(n) * blocks, 0);
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < blocks; ++i)
            block_count[static_cast<size_t>(x) * blocks + i] =
                and_popcount(anc.row(x), std::span<const uint64_t>(masks[i]));

    // Level 2: the equality |Anc(u) & Anc(v) & V_i| = |Anc(l1) & V_i| holds
    // for every block later than the one containing l2 and fails there.
    std::vector<Pair> next_open;
    for (int i = blocks - 1; i >= 0 && !open.empty(); --i) {
        const std::span<const uint64_t> mask(masks[i]);
        std::vector<Pair> still_open;
        for (const Pair pr : open) {
            auto& found = report.lists[pr.u][pr.v];
            const int l1 = found[0];
            const int lhs = masked_intersection_count(anc.row(pr.u), anc.row(pr.v), mask);
            if (lhs == block_count[static_cast<size_t>(l1) * blocks + i]) {
                still_open.push_back(pr);
                continue;
            }
            int l2 = -1;
            for (int t = scheme.blocks[i].second - 1; t >= scheme.blocks[i].first; --t) {
                const int x = order.pi[t];
                if (d.get(x, pr.u) && d.get(x, pr.v) && !d.get(x, l1)) {
                    l2 = x;
                    break;
                }
            }
            assert(l2 >= 0 && "block equality failed without a second LCA");
            if (l2 < 0) throw Error("block count mismatch without a second LCA");
            found.push_back(l2);
            next_open.push_back(pr);
        }
        open.swap(still_open);
    }

    if (want >= 3) {
        // Level 3: same scheme with the union of the first two ancestor
        // sets on the right side, evaluated per pair inside the block.
        const int words = anc.words_per_row();
        std::vector<uint64_t> joined(static_cast<size_t>(words));
        for (int i = blocks - 1; i >= 0 && !next_open.empty(); --i) {
            const std::span<const uint64_t> mask(masks[i]);
            std::vector<Pair> still_open;
            for (const Pair pr : next_open) {
                auto& found = report.lists[pr.u][pr.v];
                const int l1 = found[0], l2 = found[1];
                const auto a1 = anc.row(l1), a2 = anc.row(l2);
                for (int w = 0; w < words; ++w) joined[static_cast<size_t>(w)] = a1[w] | a2[w];
                const int lhs = masked_intersection_count(anc.row(pr.u), anc.row(pr.v), mask);
                const int rhs =
                    and_popcount(std::span<const uint64_t>(joined), mask);
                if (lhs == rhs) {
                    still_open.push_back(pr);
                    continue;
                }
                int l3 = -1;
                for (int t = scheme.blocks[i].second - 1; t >= scheme.blocks[i].first; --t) {
                    const int x = order.pi[t];
                    if (d.get(x, pr.u) && d.get(x, pr.v) && !d.get(x, l1) && !d.get(x, l2)) {
                        l3 = x;
                        break;
                    }
                }
                assert(l3 >= 0 && "block equality failed without a third LCA");
                if (l3 < 0) throw Error("block count mismatch without a third LCA");
                found.push_back(l3);
            }
            next_open.swap(still_open);
        }
    }

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) report.lists[v][u] = report.lists[u][v];
    return report;
}

}  // namespace detail

// The two topologically latest LCAs per pair (all of them if fewer).
inline LcaReport ap2_lca(const Dag& g, int block_size) {
    return detail::ap_latest(g, block_size, 2);
}

inline LcaReport ap2_lca(const Dag& g) { return ap2_lca(g, default_block_size(g.n())); }

// The three topologically latest LCAs per pair (all of them if fewer).
inline LcaReport ap3_lca(const Dag& g, int block_size) {
    return detail::ap_latest(g, block_size, 3);
}

inline LcaReport ap3_lca(const Dag& g) { return ap3_lca(g, default_block_size(g.n())); }

}  // namespace daglca
