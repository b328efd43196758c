#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "deckard/graph.hpp"

namespace deckard {

// The computational form of "unlabeled graph": the lexicographically
// smallest flattened representation over all n! relabelings. Slot order is
// the shared column-major order from graph.hpp; smaller cell values sort
// first, so empty slots lead.
template <class G>
struct GraphTraits;

template <>
struct GraphTraits<LabeledGraph> {
    using Cell = std::uint8_t;
    using Flat = std::vector<std::uint8_t>;
    static int slot_count(int n) { return pair_slot_count(n); }
    static Flat flatten(const LabeledGraph& g) {
        Flat f(slot_count(g.n), 0);
        for (auto [i, j] : g.edges) f[pair_slot(i, j)] = 1;
        return f;
    }
    static LabeledGraph unflatten(int n, const Flat& f) {
        std::vector<Edge> edges;
        for (int s = 0; s < static_cast<int>(f.size()); ++s)
            if (f[s]) edges.push_back(slot_pair(s));
        return LabeledGraph(n, std::move(edges));
    }
    static int source_slot(int /*n*/, const std::vector<int>& q, int a, int b) {
        int i = q[a], j = q[b];
        if (i > j) std::swap(i, j);
        return pair_slot(i, j);
    }
};

template <>
struct GraphTraits<Digraph> {
    using Cell = std::uint8_t;
    using Flat = std::vector<std::uint8_t>;
    static int slot_count(int n) { return arc_slot_count(n); }
    static Flat flatten(const Digraph& g) {
        Flat f(slot_count(g.n), 0);
        for (auto [i, j] : g.arcs) f[arc_slot(g.n, i, j)] = 1;
        return f;
    }
    static Digraph unflatten(int n, const Flat& f) {
        std::vector<std::pair<int, int>> arcs;
        for (int s = 0; s < static_cast<int>(f.size()); ++s)
            if (f[s]) arcs.push_back(arc_slot_pair(n, s));
        return Digraph(n, std::move(arcs));
    }
    static int source_slot(int n, const std::vector<int>& q, int a, int b) {
        return arc_slot(n, q[a], q[b]);
    }
};

template <>
struct GraphTraits<WeightedGraph> {
    using Cell = Rational;
    using Flat = std::vector<Rational>;
    static int slot_count(int n) { return pair_slot_count(n); }
    static Flat flatten(const WeightedGraph& g) { return g.w; }
    static WeightedGraph unflatten(int n, const Flat& f) {
        WeightedGraph g(n);
        g.w = f;
        return g;
    }
    static int source_slot(int /*n*/, const std::vector<int>& q, int a, int b) {
        int i = q[a], j = q[b];
        if (i > j) std::swap(i, j);
        return pair_slot(i, j);
    }
};

template <>
struct GraphTraits<Multigraph> {
    using Cell = std::int64_t;
    using Flat = std::vector<std::int64_t>;
    static int slot_count(int n) { return pair_slot_count(n); }
    static Flat flatten(const Multigraph& g) { return g.mult; }
    static Multigraph unflatten(int n, const Flat& f) {
        Multigraph g(n);
        g.mult = f;
        return g;
    }
    static int source_slot(int /*n*/, const std::vector<int>& q, int a, int b) {
        int i = q[a], j = q[b];
        if (i > j) std::swap(i, j);
        return pair_slot(i, j);
    }
};

template <class G>
struct Canonical {
    int n = 0;
    typename GraphTraits<G>::Flat code;

    G decode() const { return GraphTraits<G>::unflatten(n, code); }

    friend bool operator==(const Canonical& a, const Canonical& b) { return a.n == b.n && a.code == b.code; }
    friend bool operator!=(const Canonical& a, const Canonical& b) { return !(a == b); }
    friend bool operator<(const Canonical& a, const Canonical& b) {
        if (a.n != b.n) return a.n < b.n;
        return std::lexicographical_compare(a.code.begin(), a.code.end(), b.code.begin(), b.code.end());
    }
};

namespace detail {

// Largest n for which the generic all-permutations sweep is allowed.
inline constexpr int kGenericCanonicalCap = 9;
// Table-driven mask path for simple graphs.
inline constexpr int kMaskTableCap = 7;
// Backtracking path bound; graphs beyond this are out of scope.
inline constexpr int kSimpleCanonicalCap = 12;

// Per-permutation slot destination tables for all of S_n, n <= 7.
// dest[p][u] is the output slot that input slot u lands in under
// permutation p, so image masks are built by scattering set bits.
struct MaskTables {
    std::vector<std::vector<std::uint8_t>> dest;  // [perm][slot]
};

inline const MaskTables& mask_tables(int n) {
    static const std::array<MaskTables, kMaskTableCap + 1> tables = [] {
        std::array<MaskTables, kMaskTableCap + 1> all;
        for (int n = 0; n <= kMaskTableCap; ++n) {
            const int m = pair_slot_count(n);
            std::vector<Edge> pairs(m);
            for (int s = 0; s < m; ++s) pairs[s] = slot_pair(s);
            for_each_permutation(n, [&](const std::vector<int>& p) {
                std::vector<std::uint8_t> row(m);
                for (int s = 0; s < m; ++s) {
                    auto [i, j] = pairs[s];
                    int a = p[i], b = p[j];
                    if (a > b) std::swap(a, b);
                    row[s] = static_cast<std::uint8_t>(pair_slot(a, b));
                }
                all[n].dest.push_back(std::move(row));
            });
        }
        return all;
    }();
    return tables[n];
}

inline std::uint64_t permute_mask(std::uint64_t mask, const std::vector<std::uint8_t>& dest) {
    std::uint64_t img = 0;
    while (mask) {
        int u = std::countr_zero(mask);
        mask &= mask - 1;
        img |= std::uint64_t{1} << dest[u];
    }
    return img;
}

inline std::uint64_t canonical_mask(int n, std::uint64_t mask) {
    std::uint64_t best = mask;
    for (const auto& dest : mask_tables(n).dest) {
        std::uint64_t img = permute_mask(mask, dest);
        if (mask_lex_less(img, best)) best = img;
    }
    return best;
}

inline std::vector<std::uint8_t> bits_from_mask(int m, std::uint64_t mask) {
    std::vector<std::uint8_t> bits(m, 0);
    while (mask) {
        int s = std::countr_zero(mask);
        mask &= mask - 1;
        bits[s] = 1;
    }
    return bits;
}

// Lex-min canonical bits by backtracking over label assignments with prefix
// pruning against the best labeling found so far. Candidates at each level
// are tried in increasing column order so the greedy labeling seeds the
// bound. Two sound prunes: a subtree is cut once its prefix exceeds the
// bound, and a candidate is skipped when a smaller unused twin was already
// available (swapping twins is an automorphism, so the subtrees mirror each
// other). Exact: agrees with the brute-force sweep (asserted in tests).
inline std::vector<std::uint8_t> canonical_bits_backtracking(const LabeledGraph& g) {
    const int n = g.n;
    const int m = pair_slot_count(n);
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [i, j] : g.edges) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
    }
    // twins[v] holds every u whose swap with v fixes the graph
    std::vector<std::uint64_t> twins(n, 0);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const std::uint64_t away = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
            if ((adj[u] & away) == (adj[v] & away)) {
                twins[u] |= std::uint64_t{1} << v;
                twins[v] |= std::uint64_t{1} << u;
            }
        }
    }

    std::vector<std::uint8_t> best(m, 2);  // 2 = unset sentinel, above any bit
    std::vector<std::uint8_t> cur(m, 0);
    std::vector<int> placed;
    placed.reserve(n);
    std::uint64_t used = 0;

    struct Cand {
        std::uint32_t col;
        int v;
    };

    auto dfs = [&](auto&& self, int t) -> void {
        if (t == n) {
            if (std::lexicographical_compare(cur.begin(), cur.end(), best.begin(), best.end())) best = cur;
            return;
        }
        const int base = t * (t - 1) / 2;
        std::vector<Cand> cands;
        cands.reserve(n - t);
        std::uint64_t unused = ~used & ((std::uint64_t{1} << n) - 1);
        for (int v = 0; v < n; ++v) {
            if (used >> v & 1) continue;
            if (twins[v] & unused & ((std::uint64_t{1} << v) - 1)) continue;
            std::uint32_t col = 0;
            for (int i = 0; i < t; ++i) col = (col << 1) | static_cast<std::uint32_t>(adj[v] >> placed[i] & 1);
            cands.push_back({col, v});
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            return a.col != b.col ? a.col < b.col : a.v < b.v;
        });
        for (const auto& [col, v] : cands) {
            for (int i = 0; i < t; ++i) cur[base + i] = static_cast<std::uint8_t>(col >> (t - 1 - i) & 1);
            // prune whole subtree if the prefix already exceeds the bound
            bool worse = false;
            for (int s = 0; s < base + t; ++s) {
                if (cur[s] != best[s]) {
                    worse = cur[s] > best[s];
                    break;
                }
            }
            if (worse) continue;
            placed.push_back(v);
            used |= std::uint64_t{1} << v;
            self(self, t + 1);
            placed.pop_back();
            used &= ~(std::uint64_t{1} << v);
        }
    };
    dfs(dfs, 0);
    return best;
}

template <class G>
Canonical<G> canonical_code_generic(const G& g) {
    using T = GraphTraits<G>;
    const int n = g.n;
    if (n > kGenericCanonicalCap)
        throw ResourceGuardError("canonicalization capped at n=" + std::to_string(kGenericCanonicalCap) +
                                 " for this graph flavor");
    auto cur = T::flatten(g);
    auto best = cur;
    const int m = static_cast<int>(cur.size());
    std::vector<std::pair<int, int>> pairs(m);
    if constexpr (std::is_same_v<G, Digraph>) {
        for (int s = 0; s < m; ++s) pairs[s] = arc_slot_pair(n, s);
    } else {
        for (int s = 0; s < m; ++s) pairs[s] = slot_pair(s);
    }
    for_each_permutation(n, [&](const std::vector<int>& q) {
        for (int s = 0; s < m; ++s) {
            auto [a, b] = pairs[s];
            const auto& v = cur[T::source_slot(n, q, a, b)];
            if (v < best[s]) {
                for (int t = s; t < m; ++t) {
                    auto [c, d] = pairs[t];
                    best[t] = cur[T::source_slot(n, q, c, d)];
                }
                return;
            }
            if (best[s] < v) return;
        }
    });
    return Canonical<G>{n, std::move(best)};
}

}  // namespace detail

inline Canonical<LabeledGraph> canonical_code(const LabeledGraph& g) {
    const int m = pair_slot_count(g.n);
    if (g.n <= detail::kMaskTableCap) {
        std::uint64_t best = detail::canonical_mask(g.n, detail::graph_mask(g));
        return Canonical<LabeledGraph>{g.n, detail::bits_from_mask(m, best)};
    }
    if (g.n <= detail::kSimpleCanonicalCap)
        return Canonical<LabeledGraph>{g.n, detail::canonical_bits_backtracking(g)};
    throw ResourceGuardError("simple-graph canonicalization capped at n=" +
                             std::to_string(detail::kSimpleCanonicalCap));
}

inline Canonical<Digraph> canonical_code(const Digraph& g) { return detail::canonical_code_generic(g); }
inline Canonical<WeightedGraph> canonical_code(const WeightedGraph& g) { return detail::canonical_code_generic(g); }
inline Canonical<Multigraph> canonical_code(const Multigraph& g) { return detail::canonical_code_generic(g); }

template <class G>
bool are_isomorphic(const G& g, const G& h) {
    if (g.n != h.n) return false;
    return canonical_code(g) == canonical_code(h);
}

// Number of distinct labeled images under S_n; equals n! / |Aut|.
template <class G>
std::uint64_t orbit_size(const G& g) {
    using T = GraphTraits<G>;
    const int n = g.n;
    if constexpr (std::is_same_v<G, LabeledGraph>) {
        if (n <= detail::kMaskTableCap) {
            std::uint64_t mask = detail::graph_mask(g);
            std::vector<std::uint64_t> images;
            images.reserve(detail::mask_tables(n).dest.size());
            for (const auto& dest : detail::mask_tables(n).dest) images.push_back(detail::permute_mask(mask, dest));
            std::sort(images.begin(), images.end());
            images.erase(std::unique(images.begin(), images.end()), images.end());
            return images.size();
        }
    }
    if (n > detail::kGenericCanonicalCap)
        throw ResourceGuardError("orbit_size capped at n=" + std::to_string(detail::kGenericCanonicalCap));
    auto cur = T::flatten(g);
    const int m = static_cast<int>(cur.size());
    std::set<typename T::Flat> images;
    typename T::Flat img(cur.size());
    for_each_permutation(n, [&](const std::vector<int>& q) {
        if constexpr (std::is_same_v<G, Digraph>) {
            for (int s = 0; s < m; ++s) {
                auto [a, b] = arc_slot_pair(n, s);
                img[s] = cur[T::source_slot(n, q, a, b)];
            }
        } else {
            for (int s = 0; s < m; ++s) {
                auto [a, b] = slot_pair(s);
                img[s] = cur[T::source_slot(n, q, a, b)];
            }
        }
        images.insert(img);
    });
    return images.size();
}

}  // namespace deckard
