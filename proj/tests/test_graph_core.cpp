#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "deckard/canonical.hpp"
#include "deckard/enumerate.hpp"
#include "deckard/graph.hpp"

#include "helpers.hpp"

using namespace deckard;
using namespace test_helpers;

TEST_CASE("permutation action basics", "[graph-core]") {
    LabeledGraph triangle = complete_graph(3);

    SECTION("identity fixes any graph") {
        LabeledGraph g = quad_example();
        CHECK(apply_permutation(Permutation::identity(4), g) == g);
    }

    SECTION("rotation fixes the triangle setwise") {
        Permutation rot({1, 2, 0});
        CHECK(apply_permutation(rot, triangle) == triangle);
    }

    SECTION("swapping the ends of a 3-path gives the same edge set") {
        LabeledGraph path = path_graph(3);  // {01, 12}
        Permutation swap_ends = Permutation::transposition(3, 0, 2);
        CHECK(apply_permutation(swap_ends, path) == path);
    }

    SECTION("size mismatch is an argument error") {
        CHECK_THROWS_AS(apply_permutation(Permutation::identity(3), quad_example()), ArgumentError);
    }

    SECTION("the weighted action carries weights along") {
        WeightedGraph w(3, {{0, 1, Rational(5)}, {1, 2, Rational(7)}});
        WeightedGraph moved = apply_permutation(Permutation({1, 2, 0}), w);
        CHECK(moved.weight(1, 2) == 5);
        CHECK(moved.weight(2, 0) == 7);
        CHECK(moved.weight(0, 1) == 0);
    }
}

TEST_CASE("graph value types validate their invariants", "[graph-core]") {
    CHECK_THROWS_AS(LabeledGraph(3, {{0, 0}}), ArgumentError);
    CHECK_THROWS_AS(LabeledGraph(3, {{0, 5}}), ArgumentError);
    CHECK_THROWS_AS(Digraph(3, {{1, 1}}), ArgumentError);
    CHECK_THROWS_AS(Multigraph(3, {{0, 1, -2}}), ArgumentError);

    // set semantics: duplicates collapse, orientation is normalized
    LabeledGraph g(3, {{1, 0}, {0, 1}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
}

TEST_CASE("canonical codes identify isomorphism classes", "[graph-core]") {
    SECTION("the two labelings of the 3-path share a code") {
        LabeledGraph a(3, {{0, 1}, {1, 2}});
        LabeledGraph b(3, {{0, 2}, {1, 2}});
        CHECK(canonical_code(a) == canonical_code(b));
    }

    SECTION("all 64 labeled graphs on 4 vertices fall into 11 classes") {
        std::set<Canonical<LabeledGraph>> codes;
        for (std::uint64_t mask = 0; mask < 64; ++mask)
            codes.insert(canonical_code(detail::graph_from_mask(4, mask)));
        CHECK(codes.size() == 11);
    }

    SECTION("decoding a code gives a graph with the same code") {
        std::mt19937_64 rng(7);
        for (int n = 1; n <= 6; ++n) {
            for (int trial = 0; trial < 20; ++trial) {
                auto code = canonical_code(random_graph(n, rng));
                CHECK(canonical_code(code.decode()) == code);
            }
        }
    }
}

TEST_CASE("canonical code is invariant under relabeling, exhaustively to n=6", "[graph-core][slow]") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 6; ++n) {
        for (const auto& cls : enumerate_nonisomorphic(n)) {
            LabeledGraph g = cls.decode();
            for (int trial = 0; trial < 5; ++trial) {
                Permutation sigma = random_permutation(n, rng);
                REQUIRE(canonical_code(apply_permutation(sigma, g)) == canonical_code(g));
            }
        }
    }
}

TEST_CASE("backtracking canonicalization agrees with the brute-force sweep", "[graph-core]") {
    // mandatory anchor: the pruned path must reproduce the reference order
    for (int n = 1; n <= 6; ++n) {
        for (const auto& cls : enumerate_nonisomorphic(n)) {
            LabeledGraph g = cls.decode();
            REQUIRE(detail::canonical_bits_backtracking(g) == reference_canonical_bits(g));
        }
    }
    // random relabelings, not just canonical representatives
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        LabeledGraph g = random_graph(n, rng);
        REQUIRE(detail::canonical_bits_backtracking(g) == reference_canonical_bits(g));
    }
    // and the table path agrees as well
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        LabeledGraph g = random_graph(n, rng);
        REQUIRE(canonical_code(g).code == reference_canonical_bits(g));
    }
    // n=8 exercises the backtracking dispatch at its working size
    for (int trial = 0; trial < 10; ++trial) {
        LabeledGraph g = random_graph(8, rng);
        REQUIRE(canonical_code(g).code == reference_canonical_bits(g));
    }
    REQUIRE(canonical_code(complete_graph(8)).code == reference_canonical_bits(complete_graph(8)));
}

TEST_CASE("are_isomorphic", "[graph-core]") {
    std::mt19937_64 rng(17);

    SECTION("every graph matches its own relabelings") {
        for (int trial = 0; trial < 50; ++trial) {
            int n = 1 + static_cast<int>(rng() % 7);
            LabeledGraph g = random_graph(n, rng);
            CHECK(are_isomorphic(g, apply_permutation(random_permutation(n, rng), g)));
        }
    }

    SECTION("path vs triangle") {
        CHECK_FALSE(are_isomorphic(path_graph(3), complete_graph(3)));
    }

    SECTION("equal degree multisets are not enough") {
        LabeledGraph a = triangle_plus_edge();
        LabeledGraph b = path_graph(5);
        auto da = a.degrees();
        auto db = b.degrees();
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        CHECK(da == db);
        CHECK_FALSE(are_isomorphic(a, b));
    }

    SECTION("spot-check the equivalence relation") {
        LabeledGraph g = random_graph(5, rng);
        LabeledGraph h = apply_permutation(random_permutation(5, rng), g);
        LabeledGraph k = apply_permutation(random_permutation(5, rng), h);
        CHECK(are_isomorphic(g, g));
        CHECK(are_isomorphic(g, h) == are_isomorphic(h, g));
        CHECK((are_isomorphic(g, h) && are_isomorphic(h, k) ? are_isomorphic(g, k) : true));
    }
}

TEST_CASE("orbit sizes", "[graph-core]") {
    SECTION("one edge on three vertices has three labelings") {
        CHECK(orbit_size(LabeledGraph(3, {{0, 1}})) == 3);
    }

    SECTION("complete graphs are fixed by everything") {
        for (int n = 1; n <= 7; ++n) CHECK(orbit_size(complete_graph(n)) == 1);
    }

    SECTION("the n-cycle has (n-1)!/2 labelings") {
        for (int n = 3; n <= 7; ++n) CHECK(orbit_size(cycle_graph(n)) == factorial(n - 1) / 2);
    }

    SECTION("orbit-stabilizer: orbit size times automorphism count is n!") {
        std::mt19937_64 rng(23);
        for (int n = 1; n <= 6; ++n) {
            for (int trial = 0; trial < 10; ++trial) {
                LabeledGraph g = random_graph(n, rng);
                CHECK(orbit_size(g) * stabilizer_size(g) == factorial(n));
            }
        }
    }
}

TEST_CASE("canonical codes for the other flavors", "[graph-core]") {
    SECTION("digraph codes separate orientation classes") {
        Digraph cycle3(3, {{0, 1}, {1, 2}, {2, 0}});
        Digraph path3(3, {{0, 1}, {1, 2}});
        CHECK(canonical_code(cycle3) != canonical_code(path3));
        // the two orientations of a 3-cycle are isomorphic
        Digraph reversed(3, {{1, 0}, {2, 1}, {0, 2}});
        CHECK(are_isomorphic(cycle3, reversed));
    }

    SECTION("weighted codes respect numeric weight order") {
        WeightedGraph w(3, {{0, 1, Rational(-1)}, {1, 2, Rational(2)}});
        auto code = canonical_code(w);
        // lex-min puts the most negative weight in the first slot
        CHECK(code.code[0] == Rational(-1));
        CHECK(are_isomorphic(w, apply_permutation(Permutation({2, 0, 1}), w)));
    }

    SECTION("multigraph codes respect integer multiplicity order") {
        Multigraph a(3, {{0, 1, 2}, {1, 2, 1}});
        Multigraph b(3, {{0, 2, 1}, {1, 2, 2}});
        CHECK(are_isomorphic(a, b));
        CHECK_FALSE(are_isomorphic(a, Multigraph(3, {{0, 1, 3}})));
    }
}
