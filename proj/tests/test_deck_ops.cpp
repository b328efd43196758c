#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "deckard/deck.hpp"
#include "deckard/enumerate.hpp"

#include "helpers.hpp"

using namespace deckard;
using namespace test_helpers;

TEST_CASE("cards of the four-vertex example", "[deck-ops]") {
    LabeledGraph g = quad_example();

    SECTION("deleting vertex 2 leaves a single edge on three vertices") {
        auto c = card(g, 2);
        CHECK(c.n == 3);
        CHECK(c.decode().edge_count() == 1);
    }

    SECTION("deleting vertex 1 leaves the triangle") {
        CHECK(card(g, 1) == canonical_code(complete_graph(3)));
    }

    SECTION("deleting vertices 0 and 3 gives isomorphic cards") {
        CHECK(card(g, 0) == card(g, 3));
        CHECK(card(g, 0).decode().edge_count() == 2);
    }

    SECTION("card edge counts are 3,2,2,1 as a multiset") {
        std::multiset<std::size_t> sizes;
        for (int k = 0; k < 4; ++k) sizes.insert(card(g, k).decode().edge_count());
        CHECK(sizes == std::multiset<std::size_t>{1, 2, 2, 3});
    }

    SECTION("out-of-range deletion is an argument error") {
        CHECK_THROWS_AS(card(g, 4), ArgumentError);
        CHECK_THROWS_AS(card(g, -1), ArgumentError);
    }
}

TEST_CASE("decks as sorted multisets", "[deck-ops]") {
    SECTION("any card of a complete graph is the smaller complete graph") {
        for (int n = 2; n <= 7; ++n) {
            Deck d = deck(complete_graph(n));
            for (const auto& c : d.cards) CHECK(c == canonical_code(complete_graph(n - 1)));
        }
    }

    SECTION("the two 2-vertex graphs have the same deck") {
        Deck with_edge = deck(LabeledGraph(2, {{0, 1}}));
        Deck without = deck(LabeledGraph(2));
        CHECK(decks_equal(with_edge, without));
        CHECK_FALSE(are_isomorphic(LabeledGraph(2, {{0, 1}}), LabeledGraph(2)));
    }

    SECTION("the opening puzzle's deck has card multiplicities 1,2,2") {
        Deck d = deck(secret_graph());
        std::map<Canonical<LabeledGraph>, int> mult;
        for (const auto& c : d.cards) ++mult[c];
        REQUIRE(mult.size() == 3);
        std::multiset<int> counts;
        std::multiset<std::size_t> edge_counts;
        for (const auto& [code, count] : mult) {
            counts.insert(count);
            edge_counts.insert(code.decode().edge_count());
        }
        CHECK(counts == std::multiset<int>{1, 2, 2});
        // K4 minus an edge (5 edges) once; the square and the tailed
        // triangle (4 edges each) twice
        CHECK(edge_counts == std::multiset<std::size_t>{4, 4, 5});
        auto square = canonical_code(cycle_graph(4));
        CHECK(mult.at(square) == 2);
    }
}

TEST_CASE("deck equality", "[deck-ops]") {
    std::mt19937_64 rng(31);

    SECTION("decks are label-independent") {
        for (int trial = 0; trial < 30; ++trial) {
            int n = 2 + static_cast<int>(rng() % 6);
            LabeledGraph g = random_graph(n, rng);
            CHECK(decks_equal(deck(g), deck(apply_permutation(random_permutation(n, rng), g))));
        }
    }

    SECTION("the directed pair: equal decks, different graphs") {
        Digraph a(4, {{1, 0}, {0, 2}, {2, 1}, {3, 1}, {3, 0}, {3, 2}});
        Digraph b(4, {{2, 0}, {0, 1}, {1, 2}, {1, 3}, {0, 3}, {2, 3}});
        CHECK(decks_equal(deck(a), deck(b)));
        CHECK_FALSE(are_isomorphic(a, b));
        CHECK(canonical_code(a) != canonical_code(b));
    }
}

TEST_CASE("deck invariants over all classes", "[deck-ops][slow]") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& cls : enumerate_nonisomorphic(n)) {
            LabeledGraph g = cls.decode();
            Deck d = deck(g);
            REQUIRE(static_cast<int>(d.cards.size()) == g.n);
            if (n < 2) continue;
            // every edge lands in exactly n-2 cards
            long long card_edges = 0;
            for (const auto& c : d.cards) card_edges += static_cast<long long>(c.decode().edge_count());
            REQUIRE(card_edges == static_cast<long long>(n - 2) * static_cast<long long>(g.edge_count()));
        }
    }
}

TEST_CASE("weighted deck of a 0/1 graph matches the simple deck", "[deck-ops]") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        LabeledGraph g = random_graph(n, rng);
        WeightedDeck wd = deck(as_weighted(g));
        Deck sd = deck(g);
        REQUIRE(wd.cards.size() == sd.cards.size());
        for (std::size_t k = 0; k < wd.cards.size(); ++k) {
            // translate the weighted code to bits
            const auto& wcode = wd.cards[k].code;
            const auto& scode = sd.cards[k].code;
            REQUIRE(wcode.size() == scode.size());
            for (std::size_t s = 0; s < wcode.size(); ++s)
                REQUIRE((wcode[s] != 0 ? 1 : 0) == scode[s]);
        }
    }
}

TEST_CASE("compaction keeps surviving vertices in relative order", "[deck-ops]") {
    LabeledGraph g(4, {{0, 1}, {1, 2}, {2, 3}});
    LabeledGraph after = delete_vertex(g, 1);
    CHECK(after.n == 3);
    // vertices 2,3 slide down to 1,2; edge {2,3} becomes {1,2}
    CHECK(after.edges == std::vector<Edge>{{1, 2}});
}

TEST_CASE("make_deck validates card sizes", "[deck-ops]") {
    auto c3 = canonical_code(complete_graph(3));
    auto c2 = canonical_code(complete_graph(2));
    CHECK_THROWS_AS(make_deck<LabeledGraph>({c3, c3, c3}), MalformedDeckError);  // 3 cards need n=2 each
    CHECK_THROWS_AS(make_deck<LabeledGraph>({c3, c2, c3, c3}), MalformedDeckError);
    CHECK_THROWS_AS(make_deck<LabeledGraph>({}), MalformedDeckError);
    auto ok = make_deck<LabeledGraph>({c3, c3, c3, c3});
    CHECK(ok.n == 4);
}
