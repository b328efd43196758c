#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "deckard/deck.hpp"

namespace deckard {

// Everything recognizable from the deck alone, plus the two weak
// reconstruction procedures. All operations refuse decks with fewer than
// three cards: two-vertex graphs are the known failure of the conjecture.

struct DeckReport {
    int n = 0;
    long long edge_count = 0;
    std::vector<int> deleted_degrees;  // sorted multiset
    bool is_regular = false;
    int regular_degree = -1;  // meaningful only when is_regular
    bool is_connected = false;
    bool is_two_connected = false;
    bool is_eulerian = false;
};

namespace detail {

inline long long card_edge_count(const Canonical<LabeledGraph>& c) {
    long long e = 0;
    for (auto b : c.code) e += b;
    return e;
}

inline void require_recognizable(const Deck& d) {
    if (d.cards.empty()) throw MalformedDeckError("deck has no cards");
    const int n = static_cast<int>(d.cards.size());
    if (d.n != n) throw MalformedDeckError("deck.n disagrees with card count");
    for (const auto& c : d.cards)
        if (c.n != n - 1) throw MalformedDeckError("card has wrong vertex count");
    if (n < 3) throw ArgumentError("recognizer needs at least 3 cards; n=2 is the known counterexample");
}

}  // namespace detail

// Vertex count = number of cards; also validates per-card sizes.
inline int num_vertices(const Deck& d) {
    if (d.cards.empty()) throw MalformedDeckError("deck has no cards");
    const int n = static_cast<int>(d.cards.size());
    for (const auto& c : d.cards)
        if (c.n != n - 1)
            throw MalformedDeckError("card on " + std::to_string(c.n) + " vertices, expected " +
                                     std::to_string(n - 1));
    return n;
}

// |E(G)| = (sum of card edge counts) / (n - 2); each edge is missing from
// exactly the two cards of its endpoints.
inline long long edge_count(const Deck& d) {
    detail::require_recognizable(d);
    const int n = d.n;
    long long total = 0;
    for (const auto& c : d.cards) total += detail::card_edge_count(c);
    if (total % (n - 2) != 0)
        throw IllegitimateDeckError("card edge total " + std::to_string(total) + " not divisible by n-2=" +
                                    std::to_string(n - 2));
    return total / (n - 2);
}

// Degree of the vertex deleted to form each card, as a sorted multiset.
inline std::vector<int> deleted_vertex_degrees(const Deck& d) {
    const long long e = edge_count(d);
    std::vector<int> degrees;
    degrees.reserve(d.cards.size());
    for (const auto& c : d.cards) {
        long long deg = e - detail::card_edge_count(c);
        if (deg < 0) throw IllegitimateDeckError("card with more edges than the whole graph");
        degrees.push_back(static_cast<int>(deg));
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

struct RegularityResult {
    bool regular = false;
    int degree = -1;
};

inline RegularityResult is_regular_deck(const Deck& d) {
    auto degrees = deleted_vertex_degrees(d);
    if (std::adjacent_find(degrees.begin(), degrees.end(), std::not_equal_to<>()) == degrees.end())
        return {true, degrees.front()};
    return {false, -1};
}

// Lemma: a graph with >= 3 vertices is connected iff at least two of its
// cards are connected.
inline bool is_connected_deck(const Deck& d) {
    detail::require_recognizable(d);
    int connected_cards = 0;
    for (const auto& c : d.cards) {
        if (is_connected(c.decode()) && ++connected_cards >= 2) return true;
    }
    return false;
}

inline bool is_two_connected_deck(const Deck& d) {
    detail::require_recognizable(d);
    for (const auto& c : d.cards)
        if (!is_connected(c.decode())) return false;
    return true;
}

inline bool is_eulerian_deck(const Deck& d) {
    if (!is_connected_deck(d)) return false;
    for (int deg : deleted_vertex_degrees(d))
        if (deg % 2 != 0) return false;
    return true;
}

namespace detail {

// Shared rebuild step: decode the chosen card, attach one new vertex to the
// card vertices selected by `attach`, and insist the result reproduces the
// input deck.
template <class AttachPred>
LabeledGraph rebuild_from_card(const Deck& d, std::size_t card_index, AttachPred attach) {
    const LabeledGraph base = d.cards[card_index].decode();
    const auto deg = base.degrees();
    std::vector<Edge> edges = base.edges;
    const int fresh = base.n;
    for (int v = 0; v < base.n; ++v)
        if (attach(deg[v])) edges.push_back({v, fresh});
    LabeledGraph rebuilt(base.n + 1, std::move(edges));
    if (!decks_equal(deck(rebuilt), d))
        throw ReconstructionFailedError("rebuilt graph does not reproduce the deck");
    return rebuilt;
}

// Card choice is immaterial (tested over all cards); the first card in
// sorted order keeps the result deterministic.
inline LabeledGraph reconstruct_eulerian_from_card(const Deck& d, std::size_t card_index) {
    return rebuild_from_card(d, card_index, [](int deg) { return deg % 2 == 1; });
}

inline LabeledGraph reconstruct_regular_from_card(const Deck& d, std::size_t card_index, int r) {
    return rebuild_from_card(d, card_index, [r](int deg) { return deg == r - 1; });
}

}  // namespace detail

// Weak reconstruction of an Eulerian graph: in any card, the odd-degree
// vertices are exactly the neighbors of the deleted vertex.
inline LabeledGraph reconstruct_eulerian(const Deck& d) {
    if (!is_eulerian_deck(d)) throw ArgumentError("deck is not recognized as Eulerian");
    return detail::reconstruct_eulerian_from_card(d, 0);
}

// Weak reconstruction of an r-regular graph: attach the new vertex to every
// card vertex of degree r-1.
inline LabeledGraph reconstruct_regular(const Deck& d) {
    auto reg = is_regular_deck(d);
    if (!reg.regular) throw ArgumentError("deck is not recognized as regular");
    return detail::reconstruct_regular_from_card(d, 0, reg.degree);
}

inline DeckReport analyze_deck(const Deck& d) {
    DeckReport r;
    r.n = num_vertices(d);
    r.edge_count = edge_count(d);
    r.deleted_degrees = deleted_vertex_degrees(d);
    auto reg = is_regular_deck(d);
    r.is_regular = reg.regular;
    r.regular_degree = reg.degree;
    r.is_connected = is_connected_deck(d);
    r.is_two_connected = is_two_connected_deck(d);
    r.is_eulerian = r.is_connected && std::all_of(r.deleted_degrees.begin(), r.deleted_degrees.end(),
                                                  [](int deg) { return deg % 2 == 0; });
    return r;
}

}  // namespace deckard
