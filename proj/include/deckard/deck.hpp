#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "deckard/canonical.hpp"
#include "deckard/graph.hpp"

namespace deckard {

// Multiset of the n vertex-deleted cards of an n-vertex graph, one flavor
// per graph flavor. Cards are canonical codes kept sorted, which makes the
// multiset representation unique and equality a plain vector compare.
template <class G>
struct BasicDeck {
    int n = 0;  // vertex count of the original graph
    std::vector<Canonical<G>> cards;

    friend bool operator==(const BasicDeck& a, const BasicDeck& b) { return a.n == b.n && a.cards == b.cards; }
};

using Deck = BasicDeck<LabeledGraph>;
using WeightedDeck = BasicDeck<WeightedGraph>;
using DirectedDeck = BasicDeck<Digraph>;

// Vertex deletion with the fixed compaction rule: surviving vertex j keeps
// its relative position (j if j < k, j-1 if j > k).

inline LabeledGraph delete_vertex(const LabeledGraph& g, int k) {
    if (k < 0 || k >= g.n) throw ArgumentError("delete_vertex: index out of range");
    std::vector<Edge> edges;
    for (auto [i, j] : g.edges) {
        if (i == k || j == k) continue;
        edges.push_back(make_edge(i < k ? i : i - 1, j < k ? j : j - 1));
    }
    return LabeledGraph(g.n - 1, std::move(edges));
}

inline Digraph delete_vertex(const Digraph& g, int k) {
    if (k < 0 || k >= g.n) throw ArgumentError("delete_vertex: index out of range");
    std::vector<std::pair<int, int>> arcs;
    for (auto [i, j] : g.arcs) {
        if (i == k || j == k) continue;
        arcs.emplace_back(i < k ? i : i - 1, j < k ? j : j - 1);
    }
    return Digraph(g.n - 1, std::move(arcs));
}

inline WeightedGraph delete_vertex(const WeightedGraph& g, int k) {
    if (k < 0 || k >= g.n) throw ArgumentError("delete_vertex: index out of range");
    WeightedGraph out(g.n - 1);
    for (int s = 0; s < static_cast<int>(g.w.size()); ++s) {
        auto [i, j] = slot_pair(s);
        if (i == k || j == k) continue;
        out.w[pair_slot(i < k ? i : i - 1, j < k ? j : j - 1)] = g.w[s];
    }
    return out;
}

inline Multigraph delete_vertex(const Multigraph& g, int k) {
    if (k < 0 || k >= g.n) throw ArgumentError("delete_vertex: index out of range");
    Multigraph out(g.n - 1);
    for (int s = 0; s < static_cast<int>(g.mult.size()); ++s) {
        auto [i, j] = slot_pair(s);
        if (i == k || j == k) continue;
        out.mult[pair_slot(i < k ? i : i - 1, j < k ? j : j - 1)] = g.mult[s];
    }
    return out;
}

// The card obtained by deleting vertex k: labels forgotten via the
// canonical code.
template <class G>
Canonical<G> card(const G& g, int k) {
    if (g.n < 1) throw ArgumentError("card: graph has no vertices");
    return canonical_code(delete_vertex(g, k));
}

template <class G>
BasicDeck<G> deck(const G& g) {
    if (g.n < 1) throw ArgumentError("deck: graph has no vertices");
    BasicDeck<G> d;
    d.n = g.n;
    d.cards.reserve(g.n);
    for (int k = 0; k < g.n; ++k) d.cards.push_back(card(g, k));
    std::sort(d.cards.begin(), d.cards.end());
    return d;
}

// Assemble a deck from externally supplied cards (e.g. a deck file).
// Cards are sorted here; sizes are validated against the card count.
template <class G>
BasicDeck<G> make_deck(std::vector<Canonical<G>> cards) {
    if (cards.empty()) throw MalformedDeckError("deck has no cards");
    BasicDeck<G> d;
    d.n = static_cast<int>(cards.size());
    for (const auto& c : cards) {
        if (c.n != d.n - 1)
            throw MalformedDeckError("card on " + std::to_string(c.n) + " vertices in a deck of " +
                                     std::to_string(d.n) + " cards");
    }
    d.cards = std::move(cards);
    std::sort(d.cards.begin(), d.cards.end());
    return d;
}

template <class G>
bool decks_equal(const BasicDeck<G>& a, const BasicDeck<G>& b) {
    return a.n == b.n && a.cards == b.cards;
}

}  // namespace deckard
