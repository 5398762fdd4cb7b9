#pragma once

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <vector>

#include "daglca/closure.hpp"
#include "daglca/kernels.hpp"
#include "daglca/oracle.hpp"

namespace daglca {

// Per-pair outcome of an exact-count detection: either the pair does not
// have the targeted LCA count, or it does and the LCAs are attached (one
// vertex for exact-1, an unordered pair for exact-2). Entries are only
// marked found after deterministic verification.
struct ExactReport {
    int n = 0;
    int arity = 1;
    std::vector<int> first;   // -1 when not this count
    std::vector<int> second;  // -1 for exact-1 reports

    ExactReport(int n_, int arity_)
        : n(n_),
          arity(arity_),
          first(static_cast<size_t>(n_) * n_, -1),
          second(static_cast<size_t>(n_) * n_, -1) {}

    bool found(int u, int v) const { return first[static_cast<size_t>(u) * n + v] >= 0; }
    int lca1(int u, int v) const { return first[static_cast<size_t>(u) * n + v]; }
    int lca2(int u, int v) const { return second[static_cast<size_t>(u) * n + v]; }

    void set1(int u, int v, int w) {
        first[static_cast<size_t>(u) * n + v] = w;
        first[static_cast<size_t>(v) * n + u] = w;
    }

    void set2(int u, int v, int a, int b) {
        if (a > b) std::swap(a, b);
        first[static_cast<size_t>(u) * n + v] = a;
        second[static_cast<size_t>(u) * n + v] = b;
        first[static_cast<size_t>(v) * n + u] = a;
        second[static_cast<size_t>(v) * n + u] = b;
    }
};

inline constexpr int kFingerprintRetryLimit = 8;

// True iff w is the unique LCA of (u,v). Given that w is a common ancestor,
// Anc(w) is a subset of Anc(u) & Anc(v), so equal cardinalities force set
// equality, which characterizes the unique-LCA case.
inline bool verify_unique(const BoolMatrix& closure, const IntMatrix& intersect_counts, int u,
                          int v, int w) {
    if (!closure.get(w, u) || !closure.get(w, v)) return false;
    return intersect_counts.at(w, w) == intersect_counts.at(u, v);
}

// True iff LCA(u,v) = {a,b} with a != b. Commonality gives the inclusion
// Anc(a) | Anc(b) within Anc(u) & Anc(v); the count equality upgrades it to
// set equality, which pins the LCA set inside {a,b}; incomparability then
// makes both vertices actual LCAs.
inline bool verify_pair(const BoolMatrix& closure, const IntMatrix& intersect_counts,
                        const IntMatrix& union_counts, int u, int v, int a, int b) {
    if (a == b) return false;
    if (!closure.get(a, u) || !closure.get(a, v)) return false;
    if (!closure.get(b, u) || !closure.get(b, v)) return false;
    if (closure.get(a, b) || closure.get(b, a)) return false;
    return intersect_counts.at(u, v) == union_counts.at(a, b);
}

namespace detail {

struct ExactContext {
    BoolMatrix closure;
    BoolMatrix anc;            // row v = Anc(v) as a bitset over vertices
    IntMatrix intersect_counts;  // |Anc(u) & Anc(v)|
};

inline ExactContext make_exact_context(const Dag& g) {
    ExactContext ctx;
    ctx.closure = transitive_closure(g);
    ctx.anc = ancestor_rows(ctx.closure);
    ctx.intersect_counts = count_product(ctx.anc, ctx.closure);
    return ctx;
}

// Sorted (value, key...) tables used for the fingerprint matching step.
template <typename Entry>
std::pair<const Entry*, const Entry*> value_range(const std::vector<Entry>& table,
                                                  uint64_t value) {
    const auto lo = std::lower_bound(table.begin(), table.end(), value,
                                     [](const Entry& e, uint64_t v) { return e.value < v; });
    const auto hi = std::upper_bound(lo, table.end(), value,
                                     [](uint64_t v, const Entry& e) { return v < e.value; });
    const Entry* base = table.data();
    return {base + (lo - table.begin()), base + (hi - table.begin())};
}

inline bool exact1_attempt(const Dag& g, const ExactContext& ctx, uint64_t seed,
                           ExactReport& out) {
    const int n = g.n();
    const Fingerprint fp = make_fingerprint(n, seed);
    const IntMatrix f_intersect = weighted_modp_product(ctx.closure, fp);

    // f(Anc(x)) for every x, as a sorted match table.
    struct Entry {
        uint64_t value;
        int x;
        bool operator<(const Entry& o) const { return std::tie(value, x) < std::tie(o.value, o.x); }
    };
    std::vector<Entry> table(n);
    for (int x = 0; x < n; ++x) {
        unsigned __int128 acc = 0;
        for_each_bit(ctx.anc.row(x), [&](int w) { acc += fp.f[w]; });
        table[x] = {static_cast<uint64_t>(acc % fp.p), x};
    }
    std::sort(table.begin(), table.end());

    for (int u = 0; u < n; ++u) {
        for (int v = u; v < n; ++v) {
            auto [it, end] = value_range(table, f_intersect.at(u, v));
            for (; it != end; ++it) {
                if (!verify_unique(ctx.closure, ctx.intersect_counts, u, v, it->x))
                    return false;  // fingerprint collision, resample
                out.set1(u, v, it->x);
            }
        }
    }
    return true;
}

inline bool exact2_attempt(const Dag& g, const ExactContext& ctx, const ExactReport& unique,
                           const IntMatrix& union_counts, uint64_t seed, ExactReport& out) {
    const int n = g.n();
    const Fingerprint fp = make_fingerprint(n, seed);
    const IntMatrix f_intersect = weighted_modp_product(ctx.closure, fp);

    // H(a,b) = f(Anc(a) | Anc(b)) through the complement identity:
    // the union is the complement of the intersection of the complements.
    const BoolMatrix co = ctx.closure.complemented();
    const IntMatrix f_co = weighted_modp_product(co, fp);
    const uint64_t f_all = fp.total();

    struct Entry {
        uint64_t value;
        int a;
        int b;
        bool operator<(const Entry& o) const {
            return std::tie(value, a, b) < std::tie(o.value, o.a, o.b);
        }
    };
    std::vector<Entry> table;
    table.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            table.push_back({sub_mod(f_all, f_co.at(a, b), fp.p), a, b});
    std::sort(table.begin(), table.end());

    for (int u = 0; u < n; ++u) {
        for (int v = u; v < n; ++v) {
            if (unique.found(u, v)) continue;  // exactly one LCA, not two
            auto [it, end] = value_range(table, f_intersect.at(u, v));
            for (; it != end; ++it) {
                if (!verify_pair(ctx.closure, ctx.intersect_counts, union_counts, u, v, it->a,
                                 it->b))
                    return false;  // collision, resample
                out.set2(u, v, it->a, it->b);
            }
        }
    }
    return true;
}

}  // namespace detail

// Las Vegas detection of all pairs with exactly one LCA, returning that LCA.
// Matches fingerprints of Anc(u) & Anc(v) against fingerprints of single
// ancestor sets, then verifies each match deterministically; any failed
// verification resamples the fingerprint and reruns the matching.
inline ExactReport exact1_lca(const Dag& g, uint64_t seed,
                              int retry_limit = kFingerprintRetryLimit) {
    const detail::ExactContext ctx = detail::make_exact_context(g);
    for (int attempt = 0; attempt < retry_limit; ++attempt) {
        ExactReport out(g.n(), 1);
        if (detail::exact1_attempt(g, ctx, derive_seed(seed, attempt), out)) return out;
    }
    throw RetryLimitExceeded("exact1_lca: fingerprint verification kept failing");
}

// Same scheme for pairs with exactly two LCAs: their ancestor intersection
// equals the union of two single ancestor sets, so the match table holds
// f(Anc(a) | Anc(b)) over vertex pairs. Pairs already certified unique are
// excluded before matching.
inline ExactReport exact2_lca(const Dag& g, uint64_t seed,
                              int retry_limit = kFingerprintRetryLimit) {
    const detail::ExactContext ctx = detail::make_exact_context(g);
    const ExactReport unique = exact1_lca(g, derive_seed(seed, 0x5eedull), retry_limit);

    // |Anc(a) | Anc(b)| from the complement count product.
    const int n = g.n();
    const BoolMatrix co_anc = ctx.anc.complemented();
    const IntMatrix co_counts = count_product(co_anc, co_anc.transposed());
    IntMatrix union_counts(n, n, IntMatrix::Tag::Count);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            union_counts.at(a, b) = static_cast<uint64_t>(n) - co_counts.at(a, b);

    for (int attempt = 0; attempt < retry_limit; ++attempt) {
        ExactReport out(g.n(), 2);
        if (detail::exact2_attempt(g, ctx, unique, union_counts, derive_seed(seed, 0x200 + attempt),
                                   out))
            return out;
    }
    throw RetryLimitExceeded("exact2_lca: fingerprint verification kept failing");
}

}  // namespace daglca
