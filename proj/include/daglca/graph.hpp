#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

#include "daglca/bitmatrix.hpp"
#include "daglca/error.hpp"
#include "daglca/prng.hpp"

namespace daglca {

using Edge = std::pair<int, int>;

struct TopoOrder {
    std::vector<int> pi;   // pi[i] = vertex at position i
    std::vector<int> pos;  // pos[v] = position of vertex v; inverse of pi
};

// Immutable DAG over dense vertex ids 0..n-1. Construction sorts and
// validates the edge set: self-loops, duplicates, out-of-range ids and
// cycles are all rejected, so every live Dag satisfies the invariants.
class Dag {
public:
    Dag() = default;

    Dag(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n, n) {
        if (n < 0) throw InvalidParams("negative vertex count");
        std::sort(edges_.begin(), edges_.end());
        for (size_t i = 0; i < edges_.size(); ++i) {
            const auto [u, v] = edges_[i];
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw IndexOutOfRange("edge endpoint out of range");
            if (u == v) throw InvalidParams("self-loop");
            if (i > 0 && edges_[i] == edges_[i - 1]) throw InvalidParams("duplicate edge");
            adj_.set(u, v, true);
        }
        validate_acyclic();
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    // Out-neighbor bit rows.
    const BoolMatrix& adjacency() const { return adj_; }
    bool has_edge(int u, int v) const { return adj_.get(u, v); }

    bool operator==(const Dag& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    void validate_acyclic() const;

    int n_ = 0;
    std::vector<Edge> edges_;
    BoolMatrix adj_;
};

// Kahn's algorithm with minimum-vertex-id tie-breaking, so the order (and
// everything downstream that says "topologically latest") is deterministic.
inline TopoOrder topological_order(const Dag& g) {
    const int n = g.n();
    std::vector<int> indeg(n, 0);
    for (const auto& [u, v] : g.edges()) ++indeg[v];

    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);

    TopoOrder order;
    order.pi.reserve(n);
    order.pos.assign(n, -1);
    while (!ready.empty()) {
        const int u = ready.top();
        ready.pop();
        order.pos[u] = static_cast<int>(order.pi.size());
        order.pi.push_back(u);
        for_each_bit(g.adjacency().row(u), [&](int v) {
            if (--indeg[v] == 0) ready.push(v);
        });
    }
    if (static_cast<int>(order.pi.size()) != n) throw CycleDetected("edge set contains a cycle");
    return order;
}

inline void Dag::validate_acyclic() const { topological_order(*this); }

// Induced subgraph on the order positions [start, n), with the map from new
// ids (assigned in position order) back to original ids. Because the kept
// set is a suffix of a topological order, reachability inside the subgraph
// equals original reachability restricted to it.
inline std::pair<Dag, std::vector<int>> suffix_subgraph(const Dag& g, const TopoOrder& order,
                                                        int start) {
    const int n = g.n();
    if (start < 0 || start > n) throw IndexOutOfRange("suffix start out of range");
    std::vector<int> to_old(order.pi.begin() + start, order.pi.end());
    std::vector<int> to_new(n, -1);
    for (size_t i = 0; i < to_old.size(); ++i) to_new[to_old[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (to_new[u] >= 0 && to_new[v] >= 0) edges.emplace_back(to_new[u], to_new[v]);
    return {Dag(static_cast<int>(to_old.size()), std::move(edges)), std::move(to_old)};
}

// Erdos-Renyi style DAG: edges run from lower to higher position in a
// random vertex permutation, each present independently with edge_prob.
inline Dag random_dag(int n, double edge_prob, uint64_t seed) {
    if (edge_prob < 0.0 || edge_prob > 1.0) throw InvalidParams("edge_prob outside [0, 1]");
    Prng rng(seed);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.next_below(static_cast<uint64_t>(i) + 1)]);

    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_unit() < edge_prob) edges.emplace_back(perm[i], perm[j]);
    return Dag(n, std::move(edges));
}

// Vertices laid out layer by layer in id order; the rule sees layer indices
// and local offsets and decides each forward cross-layer edge. Acyclic by
// construction since edges only go from earlier to later layers.
inline Dag layered_dag(const std::vector<int>& layer_sizes,
                       const std::function<bool(int, int, int, int)>& edge_rule) {
    std::vector<int> offset(layer_sizes.size() + 1, 0);
    for (size_t l = 0; l < layer_sizes.size(); ++l) {
        if (layer_sizes[l] < 0) throw InvalidParams("negative layer size");
        offset[l + 1] = offset[l] + layer_sizes[l];
    }
    std::vector<Edge> edges;
    for (size_t li = 0; li < layer_sizes.size(); ++li)
        for (size_t lj = li + 1; lj < layer_sizes.size(); ++lj)
            for (int a = 0; a < layer_sizes[li]; ++a)
                for (int b = 0; b < layer_sizes[lj]; ++b)
                    if (edge_rule(static_cast<int>(li), a, static_cast<int>(lj), b))
                        edges.emplace_back(offset[li] + a, offset[lj] + b);
    return Dag(offset.back(), std::move(edges));
}

}  // namespace daglca
