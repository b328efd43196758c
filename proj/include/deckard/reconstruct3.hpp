#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "deckard/canonical.hpp"
#include "deckard/deck.hpp"
#include "deckard/graph.hpp"

namespace deckard {

// Distinctness of edge weights decides membership in the dense open set on
// which three cards determine the graph.
//   strict  - all C(n,2) coordinates pairwise distinct (at most one absent
//             edge); this is the set the theorem is stated for.
//   relaxed - only the present-edge weights must be pairwise distinct; any
//             number of absent edges. Correct empirically, not by the
//             theorem.
enum class WeightMode { strict, relaxed };

struct GenericityCertificate {
    bool distinct = false;
    std::optional<std::pair<Edge, Edge>> colliding_pair;
};

inline GenericityCertificate has_distinct_weights(const WeightedGraph& g,
                                                  WeightMode mode = WeightMode::strict) {
    const int m = static_cast<int>(g.w.size());
    for (int s = 0; s < m; ++s) {
        for (int t = s + 1; t < m; ++t) {
            if (mode == WeightMode::relaxed && (g.w[s] == 0 || g.w[t] == 0)) continue;
            if (g.w[s] == g.w[t]) return {false, std::make_pair(slot_pair(s), slot_pair(t))};
        }
    }
    return {true, std::nullopt};
}

namespace detail {

inline std::set<Rational> nonzero_weight_set(const WeightedGraph& g) {
    std::set<Rational> values;
    for (const auto& x : g.w)
        if (x != 0) values.insert(x);
    return values;
}

// All weight-preserving vertex bijections between two weighted graphs of
// equal size, via backtracking with incident-weight-multiset filtering.
inline std::vector<std::vector<int>> weight_isomorphisms(const WeightedGraph& a, const WeightedGraph& b) {
    const int r = a.n;
    std::vector<std::vector<int>> found;
    if (b.n != r) return found;

    auto signature = [](const WeightedGraph& g, int v) {
        std::vector<Rational> sig;
        for (int u = 0; u < g.n; ++u) {
            if (u == v) continue;
            const Rational& x = g.weight(u, v);
            if (x != 0) sig.push_back(x);
        }
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    std::vector<std::vector<Rational>> sig_a(r), sig_b(r);
    for (int v = 0; v < r; ++v) {
        sig_a[v] = signature(a, v);
        sig_b[v] = signature(b, v);
    }

    std::vector<int> image(r, -1);
    std::vector<char> used(r, 0);
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == r) {
            found.push_back(image);
            return;
        }
        for (int t = 0; t < r; ++t) {
            if (used[t] || sig_b[v] != sig_a[t]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) ok = b.weight(u, v) == a.weight(image[u], t);
            if (!ok) continue;
            image[v] = t;
            used[t] = 1;
            self(self, v + 1);
            used[t] = 0;
            image[v] = -1;
        }
    };
    if (r == 0)
        found.push_back({});
    else
        dfs(dfs, 0);
    return found;
}

// Multiset containment of the three requested cards in a deck.
inline bool deck_contains_cards(const WeightedDeck& dk, const std::vector<Canonical<WeightedGraph>>& cards) {
    std::map<Canonical<WeightedGraph>, int> needed;
    for (const auto& c : cards) ++needed[c];
    for (auto& [code, mult] : needed) {
        const auto lo = std::lower_bound(dk.cards.begin(), dk.cards.end(), code);
        int available = 0;
        for (auto it = lo; it != dk.cards.end() && *it == code; ++it) ++available;
        if (available < mult) return false;
    }
    return true;
}

}  // namespace detail

// Rebuild a pairwise-distinct-weight graph from any three of its cards.
// Weights act as global edge identifiers: an edge is hidden from a card only
// by deleting one of its endpoints, so three cards jointly expose every
// edge except that the pair deleted for c1 and c2 hides one edge from both;
// its weight is the one c3 carries that c1 and c2 do not. Candidate
// gluings of c1 and c2 along a common (n-2)-vertex part are enumerated and
// checked against all three cards; with distinct weights the surviving
// candidate is unique up to isomorphism.
inline WeightedGraph reconstruct_from_three_cards(const Canonical<WeightedGraph>& c1,
                                                  const Canonical<WeightedGraph>& c2,
                                                  const Canonical<WeightedGraph>& c3,
                                                  WeightMode mode = WeightMode::strict) {
    const int m = c1.n;
    if (c2.n != m || c3.n != m) throw ArgumentError("cards disagree on vertex count");
    if (m < 2) throw ArgumentError("cards too small to glue");

    const WeightedGraph a = c1.decode();
    const WeightedGraph b = c2.decode();
    const WeightedGraph c = c3.decode();
    for (const WeightedGraph* g : {&a, &b, &c}) {
        auto cert = has_distinct_weights(*g, mode);
        if (!cert.distinct) throw GenericityError("card violates the distinct-weight requirement");
    }

    // Weight of the edge between the two vertices deleted for c1 and c2.
    const auto wa = detail::nonzero_weight_set(a);
    const auto wb = detail::nonzero_weight_set(b);
    std::vector<Rational> missing;
    for (const auto& x : detail::nonzero_weight_set(c))
        if (!wa.count(x) && !wb.count(x)) missing.push_back(x);
    if (missing.size() > 1) throw InvalidCardsError("third card carries more than one unexplained weight");
    const Rational hidden = missing.empty() ? Rational(0) : missing.front();

    const std::vector<Canonical<WeightedGraph>> wanted{c1, c2, c3};
    std::set<typename GraphTraits<WeightedGraph>::Flat> attempted;
    bool nongeneric_gluing_seen = false;

    for (int u_star = 0; u_star < m; ++u_star) {
        const WeightedGraph a_rest = delete_vertex(a, u_star);
        for (int z_star = 0; z_star < m; ++z_star) {
            const WeightedGraph b_rest = delete_vertex(b, z_star);
            for (const auto& psi : detail::weight_isomorphisms(a_rest, b_rest)) {
                // psi maps b_rest labels to a_rest labels; undo both
                // compactions to get the map from b's labels into a's.
                auto into_a = [&](int q) {
                    int compacted = q < z_star ? q : q - 1;
                    int t = psi[compacted];
                    return t < u_star ? t : t + 1;
                };
                WeightedGraph candidate(m + 1);
                for (int s = 0; s < static_cast<int>(a.w.size()); ++s) candidate.w[s] = a.w[s];
                for (int q = 0; q < m; ++q) {
                    if (q == z_star) continue;
                    const Rational& x = b.weight(q, z_star);
                    if (x != 0) candidate.set_weight(into_a(q), m, x);
                }
                if (hidden != 0) candidate.set_weight(u_star, m, hidden);

                auto code = canonical_code(candidate);
                if (!attempted.insert(code.code).second) continue;
                if (!detail::deck_contains_cards(deck(candidate), wanted)) continue;
                if (has_distinct_weights(candidate, mode).distinct) return code.decode();
                nongeneric_gluing_seen = true;
            }
        }
    }
    if (nongeneric_gluing_seen)
        throw GenericityError("the cards glue only to graphs with repeated weights");
    throw InvalidCardsError("no distinct-weight graph has all three cards in its deck");
}

}  // namespace deckard
