#pragma once

#include <utility>
#include <vector>

#include "daglca/closure.hpp"
#include "daglca/graph.hpp"

namespace daglca {

// Per-pair results for the LCA problem family. Exactly one of the payloads
// is populated, selected by kind.
struct LcaReport {
    enum class Kind { Counts, Lists, Decision };

    Kind kind = Kind::Counts;
    int n = 0;
    IntMatrix counts;                             // Kind::Counts
    std::vector<std::vector<std::vector<int>>> lists;  // Kind::Lists, lists[u][v]
    BoolMatrix decision;                          // Kind::Decision

    static LcaReport make_counts(int n) {
        LcaReport r;
        r.kind = Kind::Counts;
        r.n = n;
        r.counts = IntMatrix(n, n, IntMatrix::Tag::Count);
        return r;
    }

    static LcaReport make_lists(int n) {
        LcaReport r;
        r.kind = Kind::Lists;
        r.n = n;
        r.lists.assign(n, std::vector<std::vector<int>>(n));
        return r;
    }

    static LcaReport make_decision(int n) {
        LcaReport r;
        r.kind = Kind::Decision;
        r.n = n;
        r.decision = BoolMatrix(n, n);
        return r;
    }
};

// One proposed LCA per ordered pair, or kNone for "this pair has no common
// ancestor". kNone verifies as correct exactly on such pairs, which keeps
// verification total over arbitrary DAGs.
struct CandidateMatrix {
    static constexpr int kNone = -1;

    int n = 0;
    std::vector<int> w;  // n*n entries, row-major

    explicit CandidateMatrix(int n_ = 0) : n(n_), w(static_cast<size_t>(n_) * n_, kNone) {}

    int get(int u, int v) const { return w[static_cast<size_t>(u) * n + v]; }
    void set(int u, int v, int value) { w[static_cast<size_t>(u) * n + v] = value; }
};

// True iff w is a common ancestor of u and v and no proper descendant of w
// is also one.
inline bool is_lca(const BoolMatrix& closure, int u, int v, int w) {
    const int n = closure.rows();
    if (u < 0 || u >= n || v < 0 || v >= n || w < 0 || w >= n)
        throw IndexOutOfRange("vertex out of range");
    if (!closure.get(w, u) || !closure.get(w, v)) return false;
    bool lowest = true;
    for_each_bit(closure.row(w), [&](int x) {
        if (x != w && closure.get(x, u) && closure.get(x, v)) lowest = false;
    });
    return lowest;
}

// For each pair, the up to k topologically latest LCAs in reverse
// topological order: scan positions from latest to earliest, appending w
// when it reaches both endpoints and none of the LCAs already taken.
// With k = n this lists the entire LCA set of every pair.
inline LcaReport k_lcas_bruteforce(const Dag& g, int k) {
    if (k < 1) throw InvalidParams("k must be at least 1");
    const int n = g.n();
    const TopoOrder order = topological_order(g);
    const BoolMatrix d = transitive_closure(g);
    LcaReport report = LcaReport::make_lists(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u; v < n; ++v) {
            std::vector<int>& found = report.lists[u][v];
            for (int t = n - 1; t >= 0 && static_cast<int>(found.size()) < k; --t) {
                const int w = order.pi[t];
                if (!d.get(w, u) || !d.get(w, v)) continue;
                bool reaches_found = false;
                for (int s : found)
                    if (d.get(w, s)) {
                        reaches_found = true;
                        break;
                    }
                if (!reaches_found) found.push_back(w);
            }
            if (v != u) report.lists[v][u] = found;
        }
    }
    return report;
}

// |LCA(u,v)| for every pair, by testing each common ancestor for the
// antichain condition directly. Deliberately a different route than the
// scan in k_lcas_bruteforce so the two can cross-check each other.
inline LcaReport count_lcas(const Dag& g) {
    const int n = g.n();
    const BoolMatrix d = transitive_closure(g);
    const BoolMatrix anc = ancestor_rows(d);
    LcaReport report = LcaReport::make_counts(n);
    const int words = anc.words_per_row();
    std::vector<uint64_t> common(static_cast<size_t>(words));
    for (int u = 0; u < n; ++u) {
        const auto au = anc.row(u);
        for (int v = u; v < n; ++v) {
            const auto av = anc.row(v);
            for (int w = 0; w < words; ++w) common[static_cast<size_t>(w)] = au[w] & av[w];
            uint64_t count = 0;
            for_each_bit(std::span<const uint64_t>(common), [&](int w) {
                // w is an LCA iff the only common ancestor it reaches is itself.
                if (and_popcount(d.row(w), std::span<const uint64_t>(common)) == 1) ++count;
            });
            report.counts.at(u, v) = count;
            report.counts.at(v, u) = count;
        }
    }
    return report;
}

struct VerifyResult {
    BoolMatrix ok;          // ok[u,v] = 1 iff the candidate for (u,v) is correct
    bool any_error = false; // the existential answer: some candidate is wrong
};

// Checks every candidate: a vertex passes iff it is an LCA of the pair, and
// kNone passes iff the pair has no common ancestor at all.
inline VerifyResult verify_candidates(const Dag& g, const CandidateMatrix& cand) {
    const int n = g.n();
    if (cand.n != n) throw DimensionMismatch("candidate matrix size differs from graph");
    const BoolMatrix d = transitive_closure(g);
    const BoolMatrix anc = ancestor_rows(d);
    VerifyResult result;
    result.ok = BoolMatrix(n, n);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            const int w = cand.get(u, v);
            bool good;
            if (w == CandidateMatrix::kNone) {
                good = !and_any(anc.row(u), anc.row(v));
            } else {
                if (w < 0 || w >= n) throw IndexOutOfRange("candidate vertex out of range");
                good = is_lca(d, u, v, w);
            }
            result.ok.set(u, v, good);
            if (!good) result.any_error = true;
        }
    }
    return result;
}

}  // namespace daglca
