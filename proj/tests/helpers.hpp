#pragma once

// Test-side reference implementations, kept independent of the library's
// bitset machinery: adjacency-list DFS for reachability, set algebra for
// LCA structure, and triple loops for the matrix products.

#include <algorithm>
#include <set>
#include <vector>

#include "daglca/daglca.hpp"

namespace testref {

inline std::vector<std::vector<bool>> reachability(const daglca::Dag& g) {
    const int n = g.n();
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : g.edges()) adj[u].push_back(v);
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int s = 0; s < n; ++s) {
        std::vector<int> stack{s};
        reach[s][s] = true;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (!reach[s][y]) {
                    reach[s][y] = true;
                    stack.push_back(y);
                }
        }
    }
    return reach;
}

// LCA set straight from the definition, via a double loop over candidate
// and spoiler vertices.
inline std::set<int> lca_set(const std::vector<std::vector<bool>>& reach, int u, int v) {
    const int n = static_cast<int>(reach.size());
    std::set<int> result;
    for (int w = 0; w < n; ++w) {
        if (!reach[w][u] || !reach[w][v]) continue;
        bool lowest = true;
        for (int x = 0; x < n && lowest; ++x)
            if (x != w && reach[w][x] && reach[x][u] && reach[x][v]) lowest = false;
        if (lowest) result.insert(w);
    }
    return result;
}

inline daglca::WitnessMatrix max_witness_naive(const daglca::BoolMatrix& a,
                                               const daglca::BoolMatrix& b) {
    const int n = a.rows();
    daglca::WitnessMatrix w(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (a.get(i, k) && b.get(k, j)) w.set(i, j, k);
    return w;
}

inline daglca::IntMatrix count_product_naive(const daglca::BoolMatrix& a,
                                             const daglca::BoolMatrix& b) {
    daglca::IntMatrix c(a.rows(), b.cols(), daglca::IntMatrix::Tag::Count);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            for (int k = 0; k < a.cols(); ++k)
                if (a.get(i, k) && b.get(k, j)) ++c.at(i, j);
    return c;
}

inline daglca::BoolMatrix random_bool_matrix(int rows, int cols, double density, uint64_t seed) {
    daglca::Prng rng(seed);
    daglca::BoolMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (rng.next_unit() < density) m.set(i, j, true);
    return m;
}

// All DAGs on n vertices whose ids are already topologically sorted: every
// isomorphism class appears, since any DAG can be relabeled that way.
template <typename Fn>
void for_each_upper_triangular_dag(int n, Fn&& fn) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const uint64_t limit = 1ull << slots.size();
    for (uint64_t mask = 0; mask < limit; ++mask) {
        std::vector<daglca::Edge> edges;
        for (size_t b = 0; b < slots.size(); ++b)
            if (mask >> b & 1) edges.push_back(slots[b]);
        fn(daglca::Dag(n, std::move(edges)));
    }
}

inline daglca::Dag butterfly() { return daglca::Dag(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }
inline daglca::Dag diamond() { return daglca::Dag(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }
inline daglca::Dag chain3() { return daglca::Dag(3, {{0, 1}, {1, 2}}); }

}  // namespace testref
