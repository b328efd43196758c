#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "deckard/json_io.hpp"

#include "helpers.hpp"

using namespace deckard;
using namespace test_helpers;

TEST_CASE("rational strings", "[json-io]") {
    CHECK(rational_to_string(Rational(7)) == "7");
    CHECK(rational_to_string(Rational(-3, 6)) == "-1/2");
    CHECK(parse_rational("22/7") == Rational(22, 7));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("deck JSON round trip", "[json-io]") {
    std::mt19937_64 rng(137);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        Deck d = deck(random_graph(n, rng));
        CHECK(decks_equal(deck_from_json(deck_to_json(d)), d));
    }
    CHECK_THROWS_AS(deck_from_json(Json::parse(R"({"cards": []})")), MalformedDeckError);
    CHECK_THROWS_AS(deck_from_json(Json::parse(R"({"n": 3})")), ParseError);
    CHECK_THROWS_AS(deck_from_json(Json::parse(R"({"n": 9, "cards": ["C~","C~","C~","C~"]})")),
                    MalformedDeckError);
}

TEST_CASE("weighted graph JSON round trip", "[json-io]") {
    std::mt19937_64 rng(139);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        WeightedGraph w = random_weighted_graph(n, rng);
        CHECK(weighted_graph_from_json(weighted_graph_to_json(w)) == w);
    }
    // integer weights are accepted unquoted
    WeightedGraph g = weighted_graph_from_json(Json::parse(R"({"n": 3, "edges": [[0, 1, 5]]})"));
    CHECK(g.weight(0, 1) == 5);
}

TEST_CASE("weighted card JSON uses the card's own vertex count", "[json-io]") {
    std::mt19937_64 rng(149);
    WeightedGraph w = random_distinct_weighted_graph(5, rng, false);
    auto c = card(w, 2);
    Json j = weighted_card_to_json(c);
    CHECK(j.at("n_minus_1").get<int>() == 4);
    CHECK(weighted_card_from_json(j) == c);

    Json triple = Json::array({weighted_card_to_json(card(w, 0)), weighted_card_to_json(card(w, 1)),
                               weighted_card_to_json(card(w, 2))});
    auto cards = three_cards_from_json(triple);
    CHECK(cards[0] == card(w, 0));
    CHECK_THROWS_AS(three_cards_from_json(Json::array({j, j})), ParseError);
}

TEST_CASE("weighted deck JSON lists every card", "[json-io]") {
    std::mt19937_64 rng(151);
    WeightedGraph w = random_distinct_weighted_graph(4, rng, false);
    Json j = weighted_deck_to_json(deck(w));
    CHECK(j.at("n").get<int>() == 4);
    REQUIRE(j.at("cards").size() == 4);
    for (const auto& cj : j.at("cards")) CHECK(cj.at("n_minus_1").get<int>() == 3);
}

TEST_CASE("polynomial JSON", "[json-io]") {
    OrbitSum o = make_orbit_sum(Multigraph(3, {{0, 1, 2}, {1, 2, 1}}));
    Json j = orbit_sum_to_json(o);
    CHECK(j.at("n").get<int>() == 3);
    REQUIRE(j.at("terms").size() == 1);
    CHECK(j.at("terms")[0].at("coeff").get<std::string>() == "1");
    CHECK(j.at("terms")[0].at("edges").size() == 2);
}

TEST_CASE("edge list parsing", "[json-io]") {
    SECTION("plain pairs with comments") {
        LabeledGraph g = graph_from_edge_list("# a square\n0 1\n1 2\n2 3\n0 3\n");
        CHECK(g == cycle_graph(4));
    }

    SECTION("the n line pins trailing isolated vertices") {
        LabeledGraph g = graph_from_edge_list("n 5\n0 1\n");
        CHECK(g.n == 5);
        CHECK(g.edge_count() == 1);
    }

    SECTION("bad lines are parse errors") {
        CHECK_THROWS_AS(graph_from_edge_list("0\n"), ParseError);
        CHECK_THROWS_AS(graph_from_edge_list("x y\n"), ParseError);
        CHECK_THROWS_AS(graph_from_edge_list("n -2\n"), ParseError);
    }

    SECTION("empty input is the empty graph") {
        CHECK(graph_from_edge_list("# nothing\n").n == 0);
    }
}
