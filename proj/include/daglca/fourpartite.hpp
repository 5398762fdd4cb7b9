#pragma once

#include <array>
#include <vector>

#include "daglca/bitmatrix.hpp"
#include "daglca/error.hpp"
#include "daglca/prng.hpp"

namespace daglca {

// Undirected 4-partite simple graph. Parts are contiguous id ranges in the
// order A, B, C, D; edges never join two vertices of the same part.
class FourPartiteGraph {
public:
    FourPartiteGraph() = default;

    FourPartiteGraph(std::array<int, 4> part_sizes, std::vector<std::pair<int, int>> edges)
        : sizes_(part_sizes), edges_(std::move(edges)) {
        int n = 0;
        for (int s : sizes_) {
            if (s < 0) throw NotFourPartite("negative part size");
            n += s;
        }
        adj_ = BoolMatrix(n, n);
        for (auto& [u, v] : edges_) {
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n) throw IndexOutOfRange("edge endpoint out of range");
            if (part_of(u) == part_of(v)) throw NotFourPartite("edge inside a part");
            adj_.set(u, v, true);
            adj_.set(v, u, true);
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    int n() const { return adj_.rows(); }
    const std::array<int, 4>& part_sizes() const { return sizes_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int part_of(int v) const {
        int off = 0;
        for (int p = 0; p < 4; ++p) {
            off += sizes_[p];
            if (v < off) return p;
        }
        throw IndexOutOfRange("vertex out of range");
    }

    int part_offset(int p) const {
        int off = 0;
        for (int i = 0; i < p; ++i) off += sizes_[i];
        return off;
    }

    bool has_edge(int u, int v) const { return adj_.get(u, v); }

private:
    std::array<int, 4> sizes_{0, 0, 0, 0};
    std::vector<std::pair<int, int>> edges_;
    BoolMatrix adj_;
};

inline FourPartiteGraph random_fourpartite(std::array<int, 4> part_sizes, double edge_prob,
                                           uint64_t seed) {
    if (edge_prob < 0.0 || edge_prob > 1.0) throw InvalidParams("edge_prob outside [0, 1]");
    Prng rng(seed);
    int offset[5] = {0, 0, 0, 0, 0};
    for (int p = 0; p < 4; ++p) offset[p + 1] = offset[p] + part_sizes[p];
    std::vector<std::pair<int, int>> edges;
    for (int p = 0; p < 4; ++p)
        for (int q = p + 1; q < 4; ++q)
            for (int u = offset[p]; u < offset[p + 1]; ++u)
                for (int v = offset[q]; v < offset[q + 1]; ++v)
                    if (rng.next_unit() < edge_prob) edges.emplace_back(u, v);
    return FourPartiteGraph(part_sizes, std::move(edges));
}

// One vertex per part, all six cross edges present.
inline bool brute_4clique(const FourPartiteGraph& g) {
    const auto& s = g.part_sizes();
    const int a0 = g.part_offset(0), b0 = g.part_offset(1), c0 = g.part_offset(2),
              d0 = g.part_offset(3);
    for (int a = a0; a < a0 + s[0]; ++a)
        for (int b = b0; b < b0 + s[1]; ++b) {
            if (!g.has_edge(a, b)) continue;
            for (int c = c0; c < c0 + s[2]; ++c) {
                if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
                for (int d = d0; d < d0 + s[3]; ++d)
                    if (g.has_edge(a, d) && g.has_edge(b, d) && g.has_edge(c, d)) return true;
            }
        }
    return false;
}

}  // namespace daglca
