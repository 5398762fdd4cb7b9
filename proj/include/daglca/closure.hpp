#pragma once

#include <vector>

#include "daglca/graph.hpp"
#include "daglca/kernels.hpp"

namespace daglca {

enum class ClosureBackend {
    Auto,      // topo-order propagation for sparse graphs, squaring otherwise
    Squaring,  // repeated boolean squaring of (adjacency | identity)
    TopoDp,    // reverse-topological OR of successor rows
};

namespace detail {

inline BoolMatrix closure_topo_dp(const Dag& g) {
    const int n = g.n();
    const TopoOrder order = topological_order(g);
    BoolMatrix d(n, n);
    for (int t = n - 1; t >= 0; --t) {
        const int w = order.pi[t];
        for_each_bit(g.adjacency().row(w), [&](int x) { d.or_row(w, d, x); });
        d.set(w, w, true);
    }
    return d;
}

inline BoolMatrix closure_squaring(const Dag& g) {
    const int n = g.n();
    BoolMatrix r = g.adjacency();
    for (int v = 0; v < n; ++v) r.set(v, v, true);
    // Path lengths double each squaring; fixpoint within ceil(log2 n) rounds.
    for (;;) {
        BoolMatrix next = bool_product(r, r);
        if (next == r) return r;
        r = std::move(next);
    }
}

}  // namespace detail

// Reachability matrix: D[w,v] = 1 iff w can reach v via zero or more edges.
// Reflexive by definition (every vertex reaches itself).
inline BoolMatrix transitive_closure(const Dag& g, ClosureBackend backend = ClosureBackend::Auto) {
    switch (backend) {
        case ClosureBackend::Squaring:
            return detail::closure_squaring(g);
        case ClosureBackend::TopoDp:
            return detail::closure_topo_dp(g);
        case ClosureBackend::Auto:
        default:
            // Squaring only pays when the graph is dense enough that few
            // rounds dominate the per-edge propagation.
            if (static_cast<long long>(g.m()) * 4 >= static_cast<long long>(g.n()) * g.n())
                return detail::closure_squaring(g);
            return detail::closure_topo_dp(g);
    }
}

// Anc(v) = {w : D[w,v] = 1}; always contains v itself.
inline std::vector<int> ancestors(const BoolMatrix& closure, int v) {
    if (v < 0 || v >= closure.cols()) throw IndexOutOfRange("vertex out of range");
    std::vector<int> result;
    for (int w = 0; w < closure.rows(); ++w)
        if (closure.get(w, v)) result.push_back(w);
    return result;
}

// Rows of the result are ancestor sets: row v has bit w iff w reaches v.
// This is just the transpose of the closure, named for how it is used.
inline BoolMatrix ancestor_rows(const BoolMatrix& closure) { return closure.transposed(); }

}  // namespace daglca
