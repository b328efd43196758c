#pragma once

#include <array>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "deckard/deck.hpp"
#include "deckard/enumerate.hpp"
#include "deckard/graph6.hpp"
#include "deckard/invariant.hpp"
#include "deckard/recognize.hpp"

namespace deckard {

using Json = nlohmann::ordered_json;

// Deck files: {"n": N, "cards": ["<graph6>", ...]}, cards sorted.

inline Json deck_to_json(const Deck& d) {
    Json j;
    j["n"] = d.n;
    Json cards = Json::array();
    for (const auto& c : d.cards) cards.push_back(emit_graph6(c.decode()));
    j["cards"] = cards;
    return j;
}

inline Deck deck_from_json(const Json& j) {
    try {
        std::vector<Canonical<LabeledGraph>> cards;
        for (const auto& entry : j.at("cards")) cards.push_back(canonical_code(parse_graph6(entry.get<std::string>())));
        Deck d = make_deck(std::move(cards));
        if (j.contains("n") && j.at("n").get<int>() != d.n)
            throw MalformedDeckError("deck file n disagrees with card count");
        return d;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad deck JSON: ") + e.what());
    }
}

inline Json report_to_json(const DeckReport& r) {
    Json j;
    j["n"] = r.n;
    j["edge_count"] = r.edge_count;
    j["deleted_degrees"] = r.deleted_degrees;
    j["is_regular"] = r.is_regular;
    if (r.is_regular) j["regular_degree"] = r.regular_degree;
    j["is_connected"] = r.is_connected;
    j["is_two_connected"] = r.is_two_connected;
    j["is_eulerian"] = r.is_eulerian;
    return j;
}

inline Json verification_report_to_json(const VerificationReport& r) {
    Json j;
    j["n"] = r.n;
    j["graph_count"] = r.graph_count;
    j["connected_graph_count"] = r.connected_graph_count;
    j["distinct_deck_count"] = r.distinct_deck_count;
    Json collisions = Json::array();
    for (const auto& [a, b] : r.collisions)
        collisions.push_back(Json::array({emit_graph6(a.decode()), emit_graph6(b.decode())}));
    j["collisions"] = collisions;
    return j;
}

// Weighted graphs: {"n": N, "edges": [[i, j, "p/q"], ...]}.

inline Json weighted_graph_to_json(const WeightedGraph& g) {
    Json j;
    j["n"] = g.n;
    Json edges = Json::array();
    for (const auto& [i, k, w] : g.nonzero_edges()) edges.push_back(Json::array({i, k, rational_to_string(w)}));
    j["edges"] = edges;
    return j;
}

inline WeightedGraph weighted_graph_from_json(const Json& j) {
    try {
        WeightedGraph g(j.at("n").get<int>());
        for (const auto& entry : j.at("edges")) {
            const int i = entry.at(0).get<int>();
            const int k = entry.at(1).get<int>();
            Rational w = entry.at(2).is_string() ? parse_rational(entry.at(2).get<std::string>())
                                                 : Rational(entry.at(2).get<long long>());
            g.set_weight(i, k, std::move(w));
        }
        return g;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad weighted graph JSON: ") + e.what());
    }
}

// Weighted cards record their own vertex count (one less than the graph
// they came from): {"n_minus_1": M, "edges": [[i, j, "p/q"], ...]}.

inline Json weighted_card_to_json(const Canonical<WeightedGraph>& c) {
    WeightedGraph g = c.decode();
    Json j;
    j["n_minus_1"] = g.n;
    Json edges = Json::array();
    for (const auto& [i, k, w] : g.nonzero_edges()) edges.push_back(Json::array({i, k, rational_to_string(w)}));
    j["edges"] = edges;
    return j;
}

inline Canonical<WeightedGraph> weighted_card_from_json(const Json& j) {
    try {
        WeightedGraph g(j.at("n_minus_1").get<int>());
        for (const auto& entry : j.at("edges")) {
            Rational w = entry.at(2).is_string() ? parse_rational(entry.at(2).get<std::string>())
                                                 : Rational(entry.at(2).get<long long>());
            g.set_weight(entry.at(0).get<int>(), entry.at(1).get<int>(), std::move(w));
        }
        return canonical_code(g);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad weighted card JSON: ") + e.what());
    }
}

inline std::array<Canonical<WeightedGraph>, 3> three_cards_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("expected a JSON array of exactly three cards");
    return {weighted_card_from_json(j[0]), weighted_card_from_json(j[1]), weighted_card_from_json(j[2])};
}

inline Json weighted_deck_to_json(const WeightedDeck& d) {
    Json j;
    j["n"] = d.n;
    Json cards = Json::array();
    for (const auto& c : d.cards) cards.push_back(weighted_card_to_json(c));
    j["cards"] = cards;
    return j;
}

// Invariants in the orbit-sum basis:
// {"n": N, "terms": [{"edges": [[i, j, mult], ...], "coeff": "p/q"}, ...]}.

inline Json polynomial_to_json(const InvariantPolynomial& p) {
    Json j;
    j["n"] = p.n;
    Json terms = Json::array();
    for (const auto& [rep, coeff] : p.terms) {
        Json term;
        Json edges = Json::array();
        for (const auto& [i, k, m] : rep.nonzero_edges()) edges.push_back(Json::array({i, k, m}));
        term["edges"] = edges;
        term["coeff"] = rational_to_string(coeff);
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j;
}

inline Json orbit_sum_to_json(const OrbitSum& o) { return polynomial_to_json(orbit_sum_polynomial(o)); }

// Human-authored edge lists: one "i j" pair per line, 0-based, '#' starts a
// comment; an optional "n N" line pins the vertex count (otherwise it is
// one past the largest endpoint).

inline LabeledGraph graph_from_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    int forced_n = -1;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::string first;
        if (!(row >> first)) continue;
        if (first == "n") {
            if (!(row >> forced_n) || forced_n < 0) throw ParseError("bad vertex count line");
            continue;
        }
        int i = 0, j = 0;
        try {
            i = std::stoi(first);
        } catch (...) {
            throw ParseError("bad edge list line: " + line);
        }
        if (!(row >> j)) throw ParseError("bad edge list line: " + line);
        edges.push_back({i, j});
    }
    int n = forced_n;
    for (auto [i, j] : edges) n = std::max({n, i + 1, j + 1});
    if (n < 0) n = 0;
    return LabeledGraph(n, std::move(edges));
}

inline LabeledGraph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    return graph_from_edge_list(in);
}

}  // namespace deckard
