#pragma once

#include <utility>

#include "deckard/graph.hpp"

namespace deckard {

// Stockmeyer's counterexample to directed reconstruction: two tournaments
// on four vertices, one with a source and one with a sink, that are not
// isomorphic yet have identical directed decks.
inline std::pair<Digraph, Digraph> stockmeyer_pair() {
    Digraph source_center(4, {{1, 0}, {0, 2}, {2, 1}, {3, 1}, {3, 0}, {3, 2}});
    Digraph sink_center(4, {{2, 0}, {0, 1}, {1, 2}, {1, 3}, {0, 3}, {2, 3}});
    return {source_center, sink_center};
}

}  // namespace deckard
