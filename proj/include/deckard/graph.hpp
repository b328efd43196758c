#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "deckard/errors.hpp"
#include "deckard/perm.hpp"
#include "deckard/rational.hpp"

namespace deckard {

// Unordered vertex pair, normalized to first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int i, int j) {
    if (i == j) throw ArgumentError("loop edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
    if (i > j) std::swap(i, j);
    return {i, j};
}

// Column-major upper-triangle slot order: x01, x02, x12, x03, x13, x23, ...
// This single order drives canonical codes, graph6 bit packing, weight
// vectors and monomial exponent vectors.
inline int pair_slot(int i, int j) {  // requires 0 <= i < j
    return j * (j - 1) / 2 + i;
}

inline int pair_slot_count(int n) { return n * (n - 1) / 2; }

inline Edge slot_pair(int slot) {
    int j = 1;
    while ((j + 1) * j / 2 <= slot) ++j;
    return {slot - j * (j - 1) / 2, j};
}

// Ordered-pair slots for digraphs: full n x (n-1) arc matrix, row-major.
inline int arc_slot(int n, int i, int j) {  // requires i != j
    return i * (n - 1) + (j < i ? j : j - 1);
}

inline int arc_slot_count(int n) { return n * (n - 1); }

inline std::pair<int, int> arc_slot_pair(int n, int slot) {
    int i = slot / (n - 1);
    int r = slot % (n - 1);
    int j = r < i ? r : r + 1;
    return {i, j};
}

namespace detail {
inline void check_vertex(int v, int n) {
    if (v < 0 || v >= n)
        throw ArgumentError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Simple undirected graph on vertices 0..n-1.
struct LabeledGraph {
    int n = 0;
    std::vector<Edge> edges;  // normalized, sorted by slot, duplicates merged

    LabeledGraph() = default;

    explicit LabeledGraph(int vertex_count, std::vector<Edge> edge_list = {}) : n(vertex_count) {
        if (n < 0) throw ArgumentError("negative vertex count");
        for (auto& [i, j] : edge_list) {
            Edge e = make_edge(i, j);
            detail::check_vertex(e.first, n);
            detail::check_vertex(e.second, n);
            i = e.first;
            j = e.second;
        }
        std::sort(edge_list.begin(), edge_list.end(),
                  [](Edge a, Edge b) { return pair_slot(a.first, a.second) < pair_slot(b.first, b.second); });
        edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
        edges = std::move(edge_list);
    }

    std::size_t edge_count() const { return edges.size(); }

    bool has_edge(int i, int j) const {
        if (i == j) return false;
        Edge e = make_edge(i, j);
        return std::binary_search(
            edges.begin(), edges.end(), e,
            [](Edge a, Edge b) { return pair_slot(a.first, a.second) < pair_slot(b.first, b.second); });
    }

    std::vector<int> degrees() const {
        std::vector<int> deg(n, 0);
        for (auto [i, j] : edges) {
            ++deg[i];
            ++deg[j];
        }
        return deg;
    }

    bool operator==(const LabeledGraph& other) const = default;
};

// ---------------------------------------------------------------------------
// Directed graph: at most one arc per ordered pair, no self-arcs.
struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // sorted by arc slot, unique

    Digraph() = default;

    explicit Digraph(int vertex_count, std::vector<std::pair<int, int>> arc_list = {}) : n(vertex_count) {
        if (n < 0) throw ArgumentError("negative vertex count");
        for (auto [i, j] : arc_list) {
            if (i == j) throw ArgumentError("self-arc");
            detail::check_vertex(i, n);
            detail::check_vertex(j, n);
        }
        std::sort(arc_list.begin(), arc_list.end(), [this](auto a, auto b) {
            return arc_slot(n, a.first, a.second) < arc_slot(n, b.first, b.second);
        });
        arc_list.erase(std::unique(arc_list.begin(), arc_list.end()), arc_list.end());
        arcs = std::move(arc_list);
    }

    std::size_t arc_count() const { return arcs.size(); }

    bool operator==(const Digraph& other) const = default;
};

// ---------------------------------------------------------------------------
// Rational edge weights; weight 0 means the edge is absent. Stored dense
// over the slot order so the flattened coordinate vector is the value itself.
struct WeightedGraph {
    int n = 0;
    std::vector<Rational> w;  // slot-indexed, size pair_slot_count(n)

    WeightedGraph() = default;

    explicit WeightedGraph(int vertex_count) : n(vertex_count), w(pair_slot_count(vertex_count)) {
        if (n < 0) throw ArgumentError("negative vertex count");
    }

    WeightedGraph(int vertex_count, const std::vector<std::tuple<int, int, Rational>>& entries)
        : WeightedGraph(vertex_count) {
        for (const auto& [i, j, value] : entries) set_weight(i, j, value);
    }

    const Rational& weight(int i, int j) const {
        Edge e = make_edge(i, j);
        detail::check_vertex(e.second, n);
        return w[pair_slot(e.first, e.second)];
    }

    void set_weight(int i, int j, Rational value) {
        Edge e = make_edge(i, j);
        detail::check_vertex(e.second, n);
        w[pair_slot(e.first, e.second)] = std::move(value);
    }

    // Present edges only, in slot order.
    std::vector<std::tuple<int, int, Rational>> nonzero_edges() const {
        std::vector<std::tuple<int, int, Rational>> out;
        for (int s = 0; s < static_cast<int>(w.size()); ++s) {
            if (w[s] != 0) {
                auto [i, j] = slot_pair(s);
                out.emplace_back(i, j, w[s]);
            }
        }
        return out;
    }

    std::size_t edge_count() const {
        std::size_t c = 0;
        for (const auto& x : w) c += (x != 0);
        return c;
    }

    bool operator==(const WeightedGraph& other) const = default;
};

// ---------------------------------------------------------------------------
// N-weighted graph = monomial exponent vector: mult[slot] is the
// multiplicity of that edge, 0 meaning absent.
struct Multigraph {
    int n = 0;
    std::vector<std::int64_t> mult;  // slot-indexed

    Multigraph() = default;

    explicit Multigraph(int vertex_count) : n(vertex_count), mult(pair_slot_count(vertex_count), 0) {
        if (n < 0) throw ArgumentError("negative vertex count");
    }

    Multigraph(int vertex_count, const std::vector<std::tuple<int, int, std::int64_t>>& entries)
        : Multigraph(vertex_count) {
        for (const auto& [i, j, m] : entries) {
            if (m < 0) throw ArgumentError("negative multiplicity");
            Edge e = make_edge(i, j);
            detail::check_vertex(e.second, n);
            mult[pair_slot(e.first, e.second)] = m;
        }
    }

    std::int64_t multiplicity(int i, int j) const {
        Edge e = make_edge(i, j);
        detail::check_vertex(e.second, n);
        return mult[pair_slot(e.first, e.second)];
    }

    // Total degree of the monomial.
    std::int64_t degree() const {
        std::int64_t d = 0;
        for (auto m : mult) d += m;
        return d;
    }

    bool has_isolated_vertex() const {
        std::vector<char> touched(n, 0);
        for (int s = 0; s < static_cast<int>(mult.size()); ++s) {
            if (mult[s] > 0) {
                auto [i, j] = slot_pair(s);
                touched[i] = touched[j] = 1;
            }
        }
        for (char t : touched)
            if (!t) return true;
        return false;
    }

    std::vector<std::tuple<int, int, std::int64_t>> nonzero_edges() const {
        std::vector<std::tuple<int, int, std::int64_t>> out;
        for (int s = 0; s < static_cast<int>(mult.size()); ++s) {
            if (mult[s] > 0) {
                auto [i, j] = slot_pair(s);
                out.emplace_back(i, j, mult[s]);
            }
        }
        return out;
    }

    bool operator==(const Multigraph& other) const = default;
    bool operator<(const Multigraph& other) const {
        if (n != other.n) return n < other.n;
        return mult < other.mult;
    }
};

// ---------------------------------------------------------------------------
// Permutation action: edge {i,j} goes to {sigma(i), sigma(j)}, arcs keep
// their direction, weights and multiplicities ride along.

inline LabeledGraph apply_permutation(const Permutation& sigma, const LabeledGraph& g) {
    if (sigma.n() != g.n) throw ArgumentError("permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.edges.size());
    for (auto [i, j] : g.edges) edges.push_back(make_edge(sigma(i), sigma(j)));
    return LabeledGraph(g.n, std::move(edges));
}

inline Digraph apply_permutation(const Permutation& sigma, const Digraph& g) {
    if (sigma.n() != g.n) throw ArgumentError("permutation size mismatch");
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(g.arcs.size());
    for (auto [i, j] : g.arcs) arcs.emplace_back(sigma(i), sigma(j));
    return Digraph(g.n, std::move(arcs));
}

inline WeightedGraph apply_permutation(const Permutation& sigma, const WeightedGraph& g) {
    if (sigma.n() != g.n) throw ArgumentError("permutation size mismatch");
    WeightedGraph out(g.n);
    for (int s = 0; s < static_cast<int>(g.w.size()); ++s) {
        auto [i, j] = slot_pair(s);
        Edge e = make_edge(sigma(i), sigma(j));
        out.w[pair_slot(e.first, e.second)] = g.w[s];
    }
    return out;
}

inline Multigraph apply_permutation(const Permutation& sigma, const Multigraph& g) {
    if (sigma.n() != g.n) throw ArgumentError("permutation size mismatch");
    Multigraph out(g.n);
    for (int s = 0; s < static_cast<int>(g.mult.size()); ++s) {
        auto [i, j] = slot_pair(s);
        Edge e = make_edge(sigma(i), sigma(j));
        out.mult[pair_slot(e.first, e.second)] = g.mult[s];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Small helpers shared by several modules.

inline bool is_connected(const LabeledGraph& g) {
    if (g.n <= 1) return true;
    std::vector<std::vector<int>> adj(g.n);
    for (auto [i, j] : g.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == g.n;
}

// View a simple graph as a 0/1-weighted graph.
inline WeightedGraph as_weighted(const LabeledGraph& g) {
    WeightedGraph out(g.n);
    for (auto [i, j] : g.edges) out.w[pair_slot(i, j)] = 1;
    return out;
}

// Edges with positive multiplicity, multiplicities forgotten.
inline LabeledGraph support_of(const Multigraph& m) {
    std::vector<Edge> edges;
    for (int s = 0; s < static_cast<int>(m.mult.size()); ++s)
        if (m.mult[s] > 0) edges.push_back(slot_pair(s));
    return LabeledGraph(m.n, std::move(edges));
}

namespace detail {

// Bitmask form of a simple graph, slot s stored at bit s. Valid for
// n <= 11 (55 slots).
inline std::uint64_t graph_mask(const LabeledGraph& g) {
    std::uint64_t mask = 0;
    for (auto [i, j] : g.edges) mask |= std::uint64_t{1} << pair_slot(i, j);
    return mask;
}

inline LabeledGraph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    while (mask) {
        int s = std::countr_zero(mask);
        mask &= mask - 1;
        edges.push_back(slot_pair(s));
    }
    return LabeledGraph(n, std::move(edges));
}

// Lexicographic order on slot-indexed bitmasks: slot 0 is compared first.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t diff = a ^ b;
    if (!diff) return false;
    return ((a >> std::countr_zero(diff)) & 1) == 0;
}

}  // namespace detail

}  // namespace deckard
