#pragma once

// Shared fixtures and independent oracles for the test suites. Oracles here
// deliberately avoid the library's canonicalization/enumeration paths so
// they can serve as cross-checks.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "deckard/canonical.hpp"
#include "deckard/graph.hpp"
#include "deckard/perm.hpp"

namespace test_helpers {

using namespace deckard;

inline LabeledGraph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) edges.push_back({i, j});
    return LabeledGraph(n, std::move(edges));
}

inline LabeledGraph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return LabeledGraph(n, std::move(edges));
}

inline LabeledGraph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    return LabeledGraph(n, std::move(edges));
}

// The four-vertex worked example: edges {0,2},{1,2},{2,3},{0,3}.
inline LabeledGraph quad_example() { return LabeledGraph(4, {{0, 2}, {1, 2}, {2, 3}, {0, 3}}); }

// The opening puzzle's answer: a 5-cycle 0-1-2-3-4-0 plus chords {0,2} and {1,4}.
inline LabeledGraph secret_graph() {
    return LabeledGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}, {1, 4}});
}

// Degree-multiset twins: triangle plus a disjoint edge vs the 5-path.
inline LabeledGraph triangle_plus_edge() { return LabeledGraph(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}}); }

inline LabeledGraph bowtie() { return LabeledGraph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

// Triangular prism: two triangles joined by a perfect matching, 3-regular.
inline LabeledGraph prism() {
    return LabeledGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// ---------------------------------------------------------------------------
// Independent oracles.

// Number of isomorphism classes of simple graphs on n vertices by Burnside:
// average over S_n of 2^(number of edge orbits).
inline std::uint64_t burnside_graph_count(int n) {
    const int m = pair_slot_count(n);
    std::vector<Edge> pairs(m);
    for (int s = 0; s < m; ++s) pairs[s] = slot_pair(s);
    Integer total = 0;
    for_each_permutation(n, [&](const std::vector<int>& p) {
        std::vector<char> seen(m, 0);
        int cycles = 0;
        for (int s = 0; s < m; ++s) {
            if (seen[s]) continue;
            ++cycles;
            int t = s;
            do {
                seen[t] = 1;
                auto [i, j] = pairs[t];
                int a = p[i], b = p[j];
                if (a > b) std::swap(a, b);
                t = pair_slot(a, b);
            } while (t != s);
        }
        total += Integer(1) << cycles;
    });
    Integer classes = total / Integer(factorial(n));
    return classes.convert_to<std::uint64_t>();
}

// Number of isomorphism classes by sweeping all 2^C(n,2) labeled graphs:
// each unseen mask starts a fresh class and its whole orbit is marked.
// Independent of the canonicalization code.
inline std::uint64_t orbit_sweep_graph_count(int n) {
    const int m = pair_slot_count(n);
    std::vector<Edge> pairs(m);
    for (int s = 0; s < m; ++s) pairs[s] = slot_pair(s);
    std::vector<std::vector<int>> dest;
    for_each_permutation(n, [&](const std::vector<int>& p) {
        std::vector<int> row(m);
        for (int s = 0; s < m; ++s) {
            auto [i, j] = pairs[s];
            int a = p[i], b = p[j];
            if (a > b) std::swap(a, b);
            row[s] = pair_slot(a, b);
        }
        dest.push_back(std::move(row));
    });
    std::vector<char> seen(std::size_t{1} << m, 0);
    std::uint64_t classes = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (seen[mask]) continue;
        ++classes;
        for (const auto& row : dest) {
            std::uint64_t img = 0;
            std::uint64_t rest = mask;
            while (rest) {
                int s = std::countr_zero(rest);
                rest &= rest - 1;
                img |= std::uint64_t{1} << row[s];
            }
            seen[img] = 1;
        }
    }
    return classes;
}

// Reference lex-min canonical bits: plain sweep over all n! relabelings on
// the flattened bit vector, no tables, no pruning.
inline std::vector<std::uint8_t> reference_canonical_bits(const LabeledGraph& g) {
    const int n = g.n;
    const int m = pair_slot_count(n);
    std::vector<std::uint8_t> flat(m, 0);
    for (auto [i, j] : g.edges) flat[pair_slot(i, j)] = 1;
    std::vector<Edge> pairs(m);
    for (int s = 0; s < m; ++s) pairs[s] = slot_pair(s);
    std::vector<std::uint8_t> best = flat;
    std::vector<std::uint8_t> img(m);
    for_each_permutation(n, [&](const std::vector<int>& q) {
        for (int s = 0; s < m; ++s) {
            auto [a, b] = pairs[s];
            int i = q[a], j = q[b];
            if (i > j) std::swap(i, j);
            img[s] = flat[pair_slot(i, j)];
        }
        if (img < best) best = img;
    });
    return best;
}

inline std::uint64_t stabilizer_size(const LabeledGraph& g) {
    std::uint64_t count = 0;
    for_each_permutation(g.n, [&](const std::vector<int>& p) {
        if (apply_permutation(Permutation(p), g) == g) ++count;
    });
    return count;
}

// ---------------------------------------------------------------------------
// Random inputs.

inline LabeledGraph random_graph(int n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (rng() & 1) edges.push_back({i, j});
    return LabeledGraph(n, std::move(edges));
}

// Small random rationals; zero_chance in 16ths gives absent edges.
inline WeightedGraph random_weighted_graph(int n, std::mt19937_64& rng, int zero_chance = 4) {
    WeightedGraph g(n);
    for (auto& x : g.w) {
        if (static_cast<int>(rng() % 16) < zero_chance) continue;
        long long num = static_cast<long long>(rng() % 19) - 9;
        long long den = 1 + static_cast<long long>(rng() % 9);
        x = Rational(num, den);
    }
    return g;
}

// All C(n,2) weights pairwise distinct; with_zero leaves one edge absent.
inline WeightedGraph random_distinct_weighted_graph(int n, std::mt19937_64& rng, bool with_zero) {
    const int m = pair_slot_count(n);
    std::vector<int> values(m);
    std::iota(values.begin(), values.end(), with_zero ? 0 : 1);
    std::shuffle(values.begin(), values.end(), rng);
    WeightedGraph g(n);
    for (int s = 0; s < m; ++s) g.w[s] = values[s];
    return g;
}

}  // namespace test_helpers
