#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "daglca/error.hpp"
#include "daglca/prng.hpp"

namespace daglca {

// Named vertex groups assigned contiguously: the first size vertices belong
// to the first group and so on.
struct VertexPartition {
    std::vector<std::pair<char, int>> groups;  // (name, size)

    int total() const {
        int t = 0;
        for (const auto& [name, size] : groups) t += size;
        return t;
    }

    int offset_of(size_t group_index) const {
        int off = 0;
        for (size_t i = 0; i < group_index; ++i) off += groups[i].second;
        return off;
    }

    int index_of(char name) const {
        for (size_t i = 0; i < groups.size(); ++i)
            if (groups[i].first == name) return static_cast<int>(i);
        return -1;
    }
};

// 3-uniform hypergraph: edges are unordered vertex triples.
class Hypergraph3 {
public:
    Hypergraph3() = default;

    Hypergraph3(int n, std::vector<std::array<int, 3>> edges,
                std::optional<VertexPartition> partition = std::nullopt)
        : n_(n), edges_(std::move(edges)), partition_(std::move(partition)) {
        if (n < 0) throw InvalidParams("negative vertex count");
        if (partition_ && partition_->total() != n)
            throw PartitionMismatch("partition sizes do not sum to the vertex count");
        for (auto& e : edges_) {
            std::sort(e.begin(), e.end());
            if (e[0] == e[1] || e[1] == e[2]) throw InvalidParams("hyperedge with repeated vertex");
            if (e[0] < 0 || e[2] >= n) throw IndexOutOfRange("hyperedge vertex out of range");
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        for (const auto& e : edges_) keys_.insert(key(e[0], e[1], e[2]));
    }

    int n() const { return n_; }
    const std::vector<std::array<int, 3>>& edges() const { return edges_; }
    const std::optional<VertexPartition>& partition() const { return partition_; }

    bool has_edge(int x, int y, int z) const {
        int a = x, b = y, c = z;
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        return keys_.count(key(a, b, c)) > 0;
    }

    // All 3-subsets of the given vertex set present as hyperedges. A set of
    // fewer than 3 vertices is vacuously a hyperclique.
    bool is_hyperclique(const std::vector<int>& vertices) const {
        const size_t m = vertices.size();
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j)
                for (size_t k = j + 1; k < m; ++k)
                    if (!has_edge(vertices[i], vertices[j], vertices[k])) return false;
        return true;
    }

private:
    uint64_t key(int a, int b, int c) const {
        return (static_cast<uint64_t>(a) * n_ + b) * n_ + c;
    }

    int n_ = 0;
    std::vector<std::array<int, 3>> edges_;
    std::optional<VertexPartition> partition_;
    std::unordered_set<uint64_t> keys_;
};

// Every unordered triple becomes a hyperedge independently with the given
// probability; triples are visited in lexicographic order so a seed pins
// the instance exactly.
inline Hypergraph3 random_hypergraph3(const VertexPartition& partition, double edge_prob,
                                      uint64_t seed) {
    if (edge_prob < 0.0 || edge_prob > 1.0) throw InvalidParams("edge_prob outside [0, 1]");
    const int n = partition.total();
    Prng rng(seed);
    std::vector<std::array<int, 3>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (rng.next_unit() < edge_prob) edges.push_back({a, b, c});
    return Hypergraph3(n, std::move(edges), partition);
}

namespace detail {

template <typename Check>
bool any_tuple(const std::vector<std::pair<int, int>>& ranges, std::vector<int>& tuple,
               size_t depth, const Check& check) {
    if (depth == ranges.size()) return check(tuple);
    for (int v = ranges[depth].first; v < ranges[depth].second; ++v) {
        tuple[depth] = v;
        if (any_tuple(ranges, tuple, depth + 1, check)) return true;
    }
    return false;
}

}  // namespace detail

// True iff some ell vertices form a hyperclique. When the hypergraph is
// partitioned into exactly ell groups, the enumeration respects it: one
// vertex per group.
inline bool brute_hyperclique(const Hypergraph3& h, int ell) {
    if (ell < 3) throw InvalidParams("hyperclique size must be at least 3");
    const auto& partition = h.partition();
    if (partition && static_cast<int>(partition->groups.size()) == ell) {
        std::vector<std::pair<int, int>> ranges;
        int off = 0;
        for (const auto& [name, size] : partition->groups) {
            ranges.emplace_back(off, off + size);
            off += size;
        }
        std::vector<int> tuple(ranges.size());
        return detail::any_tuple(ranges, tuple, 0,
                                 [&](const std::vector<int>& t) { return h.is_hyperclique(t); });
    }
    // Unrestricted: all ell-subsets in lexicographic order.
    std::vector<int> subset(ell);
    const int n = h.n();
    if (ell > n) return false;
    for (int i = 0; i < ell; ++i) subset[i] = i;
    for (;;) {
        if (h.is_hyperclique(subset)) return true;
        int i = ell - 1;
        while (i >= 0 && subset[i] == n - ell + i) --i;
        if (i < 0) return false;
        ++subset[i];
        for (int j = i + 1; j < ell; ++j) subset[j] = subset[j - 1] + 1;
    }
}

}  // namespace daglca
