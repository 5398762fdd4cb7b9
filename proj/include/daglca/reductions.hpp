#pragma once

#include <string>
#include <utility>
#include <vector>

#include "daglca/fourpartite.hpp"
#include "daglca/graph.hpp"
#include "daglca/hypergraph.hpp"
#include "daglca/listing.hpp"
#include "daglca/oracle.hpp"

namespace daglca {

// Grows a DAG so that every mapped pair gains exactly one LCA: two copies
// of the vertex set plus an apex that covers only the second copy. The
// original LCA structure survives inside the first copy, and the apex is
// incomparable to it.
inline std::pair<Dag, std::vector<int>> add_one_lca(const Dag& g) {
    const int n = g.n();
    std::vector<Edge> edges = g.edges();
    edges.reserve(edges.size() + 2 * static_cast<size_t>(n));
    for (int u = 0; u < n; ++u) {
        edges.emplace_back(u, n + u);       // copy edge u' -> u''
        edges.emplace_back(2 * n, n + u);   // apex -> u''
    }
    std::vector<int> rho(n);
    for (int u = 0; u < n; ++u) rho[u] = n + u;
    return {Dag(2 * n + 1, std::move(edges)), std::move(rho)};
}

struct GadgetVertexInfo {
    int layer = 0;            // 1, 2 or 3
    int block = 0;            // tuple block within the layer
    std::vector<int> coords;  // source hypergraph vertex ids
};

struct GadgetQuery {
    int u = 0;
    int v = 0;
    std::vector<int> source;  // one source vertex per non-U group, in group order
};

struct GadgetInstance {
    Dag graph;
    std::vector<GadgetQuery> queries;
    int expected_count = 0;
    std::vector<GadgetVertexInfo> vertex_info;  // gadget vertex -> source object
};

namespace detail {

struct GadgetShape {
    std::string required_groups;              // partition names, U last
    std::vector<std::vector<int>> v2_blocks;  // group indices per tuple block
    std::vector<std::vector<int>> v3_blocks;
    int clique_size = 0;  // hyperclique size the forward solver detects
};

inline GadgetShape gadget_shape(int target_k) {
    switch (target_k) {
        case 3:
            return {"ABCU", {{0, 1}, {1, 2}, {2, 0}}, {{0, 1}, {2}}, 4};
        case 4:
            return {"ABCDU", {{0, 1}, {0, 2}, {0, 3}, {1, 2, 3}}, {{0, 1}, {2, 3}}, 5};
        case 5:
            return {"ABCDEU",
                    {{0, 2, 3}, {1, 2, 3}, {0, 1, 4}, {2, 4}, {3, 4}},
                    {{0, 1, 2}, {3, 4}},
                    6};
        case 6:
            return {"ABCDU",
                    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                    {{0, 1}, {2, 3}},
                    5};
        default:
            throw InvalidParams("target_k must be 3, 4, 5 or 6");
    }
}

// Enumerates all tuples of one vertex per listed group, last coordinate
// fastest, calling fn(local coordinates).
template <typename Fn>
void for_each_tuple(const std::vector<int>& groups, const std::vector<int>& group_sizes, Fn&& fn) {
    std::vector<int> local(groups.size(), 0);
    if (groups.empty()) return;
    for (;;) {
        fn(local);
        int i = static_cast<int>(groups.size()) - 1;
        while (i >= 0 && local[i] + 1 == group_sizes[groups[i]]) {
            local[i] = 0;
            --i;
        }
        if (i < 0) return;
        ++local[i];
    }
}

// Tuples are consistent when they agree on every group they share; tuples
// over disjoint groups are vacuously consistent and get the edge.
inline bool tuples_consistent(const std::vector<int>& groups_a, const std::vector<int>& coords_a,
                              const std::vector<int>& groups_b, const std::vector<int>& coords_b) {
    for (size_t i = 0; i < groups_a.size(); ++i)
        for (size_t j = 0; j < groups_b.size(); ++j)
            if (groups_a[i] == groups_b[j] && coords_a[i] != coords_b[j]) return false;
    return true;
}

}  // namespace detail

// Three-layer DAG turning (clique_size)-hyperclique detection into an
// exact-count question: the queried cross pairs always have expected_count
// LCAs in the tuple layer, and gain one in the top layer exactly when a
// hyperclique extends the queried source tuple.
inline GadgetInstance build_hyperclique_gadget(const Hypergraph3& h, int target_k) {
    const detail::GadgetShape shape = detail::gadget_shape(target_k);
    if (!h.partition()) throw PartitionMismatch("hypergraph carries no partition");
    const VertexPartition& partition = *h.partition();
    if (partition.groups.size() != shape.required_groups.size())
        throw PartitionMismatch("wrong number of groups for this target");
    for (size_t i = 0; i < shape.required_groups.size(); ++i)
        if (partition.groups[i].first != shape.required_groups[i])
            throw PartitionMismatch("group names must be " + shape.required_groups);

    const int n_groups = static_cast<int>(partition.groups.size());
    const int u_group = n_groups - 1;
    std::vector<int> group_sizes(n_groups), group_offsets(n_groups);
    for (int i = 0; i < n_groups; ++i) {
        group_sizes[i] = partition.groups[i].second;
        group_offsets[i] = partition.offset_of(static_cast<size_t>(i));
    }

    GadgetInstance out;
    out.expected_count = static_cast<int>(shape.v2_blocks.size());

    // Layer 1: one vertex per U vertex, then the V2 and V3 tuple blocks.
    const int u_size = group_sizes[u_group];
    for (int u = 0; u < u_size; ++u)
        out.vertex_info.push_back({1, 0, {group_offsets[u_group] + u}});

    struct TupleVertex {
        int id;
        std::vector<int> coords;  // source ids per group in block order
    };
    std::vector<std::vector<TupleVertex>> v2(shape.v2_blocks.size()), v3(shape.v3_blocks.size());
    int next_id = u_size;
    for (size_t b = 0; b < shape.v2_blocks.size(); ++b)
        detail::for_each_tuple(shape.v2_blocks[b], group_sizes, [&](const std::vector<int>& local) {
            std::vector<int> coords(local.size());
            for (size_t i = 0; i < local.size(); ++i)
                coords[i] = group_offsets[shape.v2_blocks[b][i]] + local[i];
            v2[b].push_back({next_id, coords});
            out.vertex_info.push_back({2, static_cast<int>(b), coords});
            ++next_id;
        });
    for (size_t b = 0; b < shape.v3_blocks.size(); ++b)
        detail::for_each_tuple(shape.v3_blocks[b], group_sizes, [&](const std::vector<int>& local) {
            std::vector<int> coords(local.size());
            for (size_t i = 0; i < local.size(); ++i)
                coords[i] = group_offsets[shape.v3_blocks[b][i]] + local[i];
            v3[b].push_back({next_id, coords});
            out.vertex_info.push_back({3, static_cast<int>(b), coords});
            ++next_id;
        });

    std::vector<Edge> edges;
    // Top layer reaches every bottom vertex.
    for (int u = 0; u < u_size; ++u)
        for (const auto& blk : v3)
            for (const auto& t : blk) edges.emplace_back(u, t.id);
    // Top to middle: edge unless the combined set already forms a
    // hyperclique, so an LCA in the top layer certifies the extension.
    for (int u = 0; u < u_size; ++u) {
        const int u_src = group_offsets[u_group] + u;
        for (const auto& blk : v2)
            for (const auto& t : blk) {
                std::vector<int> combined = t.coords;
                combined.push_back(u_src);
                if (!h.is_hyperclique(combined)) edges.emplace_back(u, t.id);
            }
    }
    // Middle to bottom: label-consistent pairs only.
    for (size_t b2 = 0; b2 < v2.size(); ++b2)
        for (const auto& t2 : v2[b2])
            for (size_t b3 = 0; b3 < v3.size(); ++b3)
                for (const auto& t3 : v3[b3])
                    if (detail::tuples_consistent(shape.v2_blocks[b2], t2.coords,
                                                  shape.v3_blocks[b3], t3.coords))
                        edges.emplace_back(t2.id, t3.id);

    out.graph = Dag(next_id, std::move(edges));

    // Queried pairs: the cross pairs of the two bottom blocks. Their group
    // sets are disjoint and cover every non-U group, so the concatenated
    // coordinates name the source tuple.
    for (const auto& x : v3[0])
        for (const auto& y : v3[1]) {
            std::vector<int> source(static_cast<size_t>(n_groups) - 1, -1);
            for (size_t i = 0; i < shape.v3_blocks[0].size(); ++i)
                source[shape.v3_blocks[0][i]] = x.coords[i];
            for (size_t i = 0; i < shape.v3_blocks[1].size(); ++i)
                source[shape.v3_blocks[1][i]] = y.coords[i];
            out.queries.push_back({x.id, y.id, std::move(source)});
        }
    return out;
}

// Forward run of the gadget: true iff the hypergraph contains the
// hyperclique the gadget encodes (one vertex per named group plus one from
// U). A query fires when its source tuple is itself a hyperclique and the
// pair's LCA count deviates from the expected tuple-layer count.
inline bool solve_hyperclique_via_eqlca(const Hypergraph3& h, int target_k) {
    const GadgetInstance gadget = build_hyperclique_gadget(h, target_k);
    const LcaReport counts = count_lcas(gadget.graph);
    for (const GadgetQuery& q : gadget.queries) {
        if (!h.is_hyperclique(q.source)) continue;
        if (counts.counts.at(q.u, q.v) != static_cast<uint64_t>(gadget.expected_count))
            return true;
    }
    return false;
}

// Hyperclique size detected by solve_hyperclique_via_eqlca for a target.
inline int hyperclique_size_for_target(int target_k) {
    return detail::gadget_shape(target_k).clique_size;
}

// Layered graph for 4-clique detection via LCA counting: C on top; the
// copies A', B' and the part D in the middle; A and B at the bottom. Parts
// are padded to a common size m, padded slots carrying no original edges.
struct FourCliqueGadget {
    Dag graph;
    int m = 0;  // padded part size; layout below uses local indices in [0, m)

    int a(int local) const { return local; }
    int b(int local) const { return m + local; }
    int c(int local) const { return 2 * m + local; }
    int d(int local) const { return 3 * m + local; }
    int a_copy(int local) const { return 4 * m + local; }
    int b_copy(int local) const { return 5 * m + local; }
};

inline FourCliqueGadget build_4clique_gadget(const FourPartiteGraph& g4) {
    const auto& sizes = g4.part_sizes();
    int m = 0;
    for (int s : sizes) m = std::max(m, s);

    const auto orig = [&](int part, int local) { return g4.part_offset(part) + local; };
    const auto edge = [&](int part_a, int la, int part_b, int lb) {
        if (la >= sizes[part_a] || lb >= sizes[part_b]) return false;
        return g4.has_edge(orig(part_a, la), orig(part_b, lb));
    };

    FourCliqueGadget out;
    out.m = m;
    const int a0 = 0, b0 = m, c0 = 2 * m, d0 = 3 * m, ap0 = 4 * m, bp0 = 5 * m;
    std::vector<Edge> edges;
    for (int c = 0; c < m; ++c)
        for (int x = 0; x < m; ++x) {
            if (edge(2, c, 0, x)) edges.emplace_back(c0 + c, a0 + x);
            if (edge(2, c, 1, x)) edges.emplace_back(c0 + c, b0 + x);
            if (edge(2, c, 3, x)) edges.emplace_back(c0 + c, d0 + x);
            if (!edge(2, c, 0, x)) edges.emplace_back(c0 + c, ap0 + x);
            if (!edge(2, c, 1, x)) edges.emplace_back(c0 + c, bp0 + x);
        }
    for (int d = 0; d < m; ++d)
        for (int x = 0; x < m; ++x) {
            if (edge(3, d, 0, x)) edges.emplace_back(d0 + d, a0 + x);
            if (edge(3, d, 1, x)) edges.emplace_back(d0 + d, b0 + x);
        }
    for (int a = 0; a < m; ++a) {
        edges.emplace_back(ap0 + a, a0 + a);
        for (int b = 0; b < m; ++b) edges.emplace_back(ap0 + a, b0 + b);
    }
    for (int b = 0; b < m; ++b) {
        edges.emplace_back(bp0 + b, b0 + b);
        for (int a = 0; a < m; ++a) edges.emplace_back(bp0 + b, a0 + a);
    }
    out.graph = Dag(6 * m, std::move(edges));
    return out;
}

// 4-clique detection through all-pairs LCA counting: a C-vertex adjacent to
// both a and b fails to be their LCA exactly when some D-vertex closes a
// triangle with it, and that discrepancy is read off the counts.
inline bool solve_4clique_via_countlca(const FourPartiteGraph& g4) {
    const auto& sizes = g4.part_sizes();
    const FourCliqueGadget gadget = build_4clique_gadget(g4);

    const auto orig = [&](int part, int local) { return g4.part_offset(part) + local; };
    const auto edge = [&](int part_a, int la, int part_b, int lb) {
        if (la >= sizes[part_a] || lb >= sizes[part_b]) return false;
        return g4.has_edge(orig(part_a, la), orig(part_b, lb));
    };

    const LcaReport counts = count_lcas(gadget.graph);

    for (int a = 0; a < sizes[0]; ++a)
        for (int b = 0; b < sizes[1]; ++b) {
            if (!edge(0, a, 1, b)) continue;
            // LCAs in the middle layer are exactly the common in-neighbors
            // there: the two private copies plus the shared D neighbors.
            uint64_t middle = 2;
            for (int d = 0; d < sizes[3]; ++d)
                if (edge(3, d, 0, a) && edge(3, d, 1, b)) ++middle;
            uint64_t q = 0;  // C-vertices adjacent to both endpoints
            for (int c = 0; c < sizes[2]; ++c)
                if (edge(2, c, 0, a) && edge(2, c, 1, b)) ++q;
            const uint64_t lca_in_c = counts.counts.at(gadget.a(a), gadget.b(b)) - middle;
            if (q > lca_in_c) return true;
        }
    return false;
}

// 4-hyperclique detection through candidate verification: for every source
// hyperedge {a,b,c}, the pair vertex (a,b) is guessed as the LCA of (b,c)
// and (c,a); the guess fails exactly when some U-vertex extends the triple
// to a 4-hyperclique. All remaining pairs get genuine LCAs, so the
// existential error bit is the answer.
inline bool solve_4hyperclique_via_verlca(const Hypergraph3& h) {
    if (!h.partition()) throw PartitionMismatch("hypergraph carries no partition");
    const VertexPartition& partition = *h.partition();
    if (partition.groups.size() != 4 || partition.groups[0].first != 'A' ||
        partition.groups[1].first != 'B' || partition.groups[2].first != 'C' ||
        partition.groups[3].first != 'U')
        throw PartitionMismatch("group names must be ABCU");

    const int sa = partition.groups[0].second, sb = partition.groups[1].second,
              sc = partition.groups[2].second, su = partition.groups[3].second;
    const int offa = 0, offb = sa, offc = sa + sb, offu = sa + sb + sc;

    const int ab0 = 0;                  // V1 = A x B
    const int u0 = ab0 + sa * sb;       // V2 = copy of U
    const int bc0 = u0 + su;            // V3 = (B x C) then (C x A)
    const int ca0 = bc0 + sb * sc;
    const int apex = ca0 + sc * sa;
    const int n = apex + 1;

    const auto id_ab = [&](int a, int b) { return ab0 + a * sb + b; };
    const auto id_bc = [&](int b, int c) { return bc0 + b * sc + c; };
    const auto id_ca = [&](int c, int a) { return ca0 + c * sa + a; };

    std::vector<Edge> edges;
    for (int a = 0; a < sa; ++a)
        for (int b = 0; b < sb; ++b) {
            for (int v3 = bc0; v3 < apex; ++v3) edges.emplace_back(id_ab(a, b), v3);
            for (int u = 0; u < su; ++u)
                if (h.has_edge(offu + u, offa + a, offb + b))
                    edges.emplace_back(id_ab(a, b), u0 + u);
        }
    for (int u = 0; u < su; ++u) {
        for (int b = 0; b < sb; ++b)
            for (int c = 0; c < sc; ++c)
                if (h.has_edge(offu + u, offb + b, offc + c))
                    edges.emplace_back(u0 + u, id_bc(b, c));
        for (int c = 0; c < sc; ++c)
            for (int a = 0; a < sa; ++a)
                if (h.has_edge(offu + u, offc + c, offa + a))
                    edges.emplace_back(u0 + u, id_ca(c, a));
    }
    for (int v = 0; v < apex; ++v) edges.emplace_back(apex, v);
    const Dag graph(n, std::move(edges));

    const LcaReport genuine = latest_lca(graph);
    CandidateMatrix cand(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (!genuine.lists[u][v].empty()) cand.set(u, v, genuine.lists[u][v][0]);
    for (int a = 0; a < sa; ++a)
        for (int b = 0; b < sb; ++b)
            for (int c = 0; c < sc; ++c)
                if (h.has_edge(offa + a, offb + b, offc + c)) {
                    cand.set(id_bc(b, c), id_ca(c, a), id_ab(a, b));
                    cand.set(id_ca(c, a), id_bc(b, c), id_ab(a, b));
                }

    return verify_candidates(graph, cand).any_error;
}

}  // namespace daglca
