#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "deckard/deck.hpp"
#include "deckard/recognize.hpp"

namespace deckard {

// Default hard cap for exhaustive generation; callers may raise it to 9
// (about 275k classes) explicitly.
inline constexpr int kEnumerationCap = 8;
inline constexpr int kEnumerationOverrideCap = 9;

struct VerificationReport {
    int n = 0;
    std::size_t graph_count = 0;
    std::size_t connected_graph_count = 0;
    std::size_t distinct_deck_count = 0;
    std::vector<std::pair<Canonical<LabeledGraph>, Canonical<LabeledGraph>>> collisions;
};

namespace detail {

template <class Fn>
void parallel_chunks(std::size_t count, int threads, Fn fn) {
    if (threads <= 1 || count < 2) {
        fn(std::size_t{0}, count);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(begin + chunk, count);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

inline std::uint64_t canonical_mask_any(int n, std::uint64_t mask) {
    if (n <= kMaskTableCap) return canonical_mask(n, mask);
    auto bits = canonical_bits_backtracking(graph_from_mask(n, mask));
    std::uint64_t out = 0;
    for (int s = 0; s < static_cast<int>(bits.size()); ++s)
        if (bits[s]) out |= std::uint64_t{1} << s;
    return out;
}

// One canonical mask per isomorphism class, grown a vertex at a time: every
// (k-1)-vertex class is extended by all 2^(k-1) attachment patterns for the
// new vertex, then deduplicated through the canonical form.
inline std::vector<std::uint64_t> enumerate_class_masks(int n) {
    std::vector<std::uint64_t> level{0};  // the empty graph on 0 vertices
    for (int k = 1; k <= n; ++k) {
        std::unordered_set<std::uint64_t> next;
        const int base = pair_slot_count(k - 1);
        for (std::uint64_t mask : level) {
            for (std::uint64_t pat = 0; pat < (std::uint64_t{1} << (k - 1)); ++pat) {
                next.insert(canonical_mask_any(k, mask | (pat << base)));
            }
        }
        level.assign(next.begin(), next.end());
    }
    std::sort(level.begin(), level.end(), mask_lex_less);
    return level;
}

inline std::vector<std::uint64_t> deck_key(int n, std::uint64_t class_mask) {
    LabeledGraph g = graph_from_mask(n, class_mask);
    std::vector<std::uint64_t> key;
    key.reserve(n);
    for (int k = 0; k < n; ++k) {
        auto c = card(g, k);
        std::uint64_t m = 0;
        for (int s = 0; s < static_cast<int>(c.code.size()); ++s)
            if (c.code[s]) m |= std::uint64_t{1} << s;
        key.push_back(m);
    }
    std::sort(key.begin(), key.end(), mask_lex_less);
    return key;
}

inline void check_enumeration_guard(int n, int max_n) {
    if (n < 0) throw ArgumentError("negative n");
    if (max_n > kEnumerationOverrideCap) max_n = kEnumerationOverrideCap;
    if (n > max_n)
        throw ResourceGuardError("enumeration capped at n=" + std::to_string(max_n) + " (requested " +
                                 std::to_string(n) + ")");
}

}  // namespace detail

// One canonical code per isomorphism class of simple n-vertex graphs,
// sorted. The known counts are 1, 2, 4, 11, 34, 156, 1044, 12346 for
// n = 1..8.
inline std::vector<Canonical<LabeledGraph>> enumerate_nonisomorphic(int n, bool connected_only = false,
                                                                    int max_n = kEnumerationCap) {
    detail::check_enumeration_guard(n, max_n);
    std::vector<Canonical<LabeledGraph>> out;
    for (std::uint64_t mask : detail::enumerate_class_masks(n)) {
        if (connected_only && !is_connected(detail::graph_from_mask(n, mask))) continue;
        out.push_back(Canonical<LabeledGraph>{n, detail::bits_from_mask(pair_slot_count(n), mask)});
    }
    return out;
}

// Deck-collision census over all classes at n, without the n >= 3 gate;
// n = 2 exhibits the classical failure.
inline VerificationReport deck_collision_report(int n, int threads = 1, int max_n = kEnumerationCap) {
    detail::check_enumeration_guard(n, max_n);
    if (n < 2) throw ArgumentError("deck collisions need n >= 2");
    VerificationReport report;
    report.n = n;

    const auto classes = detail::enumerate_class_masks(n);
    report.graph_count = classes.size();
    for (std::uint64_t mask : classes)
        if (is_connected(detail::graph_from_mask(n, mask))) ++report.connected_graph_count;

    std::vector<std::vector<std::uint64_t>> keys(classes.size());
    detail::parallel_chunks(classes.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) keys[i] = detail::deck_key(n, classes[i]);
    });

    std::map<std::vector<std::uint64_t>, std::vector<std::uint64_t>> by_deck;
    for (std::size_t i = 0; i < classes.size(); ++i) by_deck[keys[i]].push_back(classes[i]);
    report.distinct_deck_count = by_deck.size();

    const int m = pair_slot_count(n);
    for (const auto& [key, members] : by_deck) {
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                report.collisions.emplace_back(
                    Canonical<LabeledGraph>{n, detail::bits_from_mask(m, members[a])},
                    Canonical<LabeledGraph>{n, detail::bits_from_mask(m, members[b])});
            }
        }
    }
    return report;
}

// Desk-scale check of the reconstruction conjecture: no two classes at n
// share a deck. Empty collision list = conjecture holds at this size.
inline VerificationReport verify_reconstruction(int n, int threads = 1, int max_n = kEnumerationCap) {
    if (n < 3) throw ArgumentError("verify_reconstruction needs n >= 3 (n=2 is the known failure)");
    return deck_collision_report(n, threads, max_n);
}

// All isomorphism classes whose deck equals d; empty means the deck is
// illegitimate. Exhaustive over the classes at n = |cards|.
inline std::vector<Canonical<LabeledGraph>> find_preimages(const Deck& d, int threads = 1,
                                                           int max_n = kEnumerationCap) {
    const int n = num_vertices(d);
    detail::check_enumeration_guard(n, max_n);

    const auto classes = detail::enumerate_class_masks(n);
    std::vector<char> hit(classes.size(), 0);
    detail::parallel_chunks(classes.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            LabeledGraph g = detail::graph_from_mask(n, classes[i]);
            hit[i] = decks_equal(deck(g), d) ? 1 : 0;
        }
    });

    std::vector<Canonical<LabeledGraph>> out;
    const int m = pair_slot_count(n);
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (hit[i]) out.push_back(Canonical<LabeledGraph>{n, detail::bits_from_mask(m, classes[i])});
    return out;
}

// Necessary conditions for a multiset of cards to be some graph's deck:
// edge total divisible by n-2, implied degrees within [0, n-1], handshake.
// Passing these does not guarantee a preimage exists.
inline bool legit_deck_necessary(const Deck& d) {
    const int n = num_vertices(d);
    if (n < 3) throw ArgumentError("legitimacy check needs n >= 3");
    long long total = 0;
    for (const auto& c : d.cards) total += detail::card_edge_count(c);
    if (total % (n - 2) != 0) return false;
    const long long e = total / (n - 2);
    long long degree_sum = 0;
    for (const auto& c : d.cards) {
        const long long deg = e - detail::card_edge_count(c);
        if (deg < 0 || deg > n - 1) return false;
        degree_sum += deg;
    }
    return degree_sum == 2 * e;
}

}  // namespace deckard
