// deckard: decks, deck-recognizable properties, exhaustive reconstruction
// checks, orbit-sum invariants and weighted 3-card reconstruction.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "deckard/catalog.hpp"
#include "deckard/json_io.hpp"
#include "deckard/reconstruct3.hpp"

namespace {

using namespace deckard;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json parse_json_file(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const Json::exception& e) {
        throw ParseError("bad JSON in " + path + ": " + e.what());
    }
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
    long long seed = 12345;  // reserved for randomized subroutines
    int threads = 1;
    bool max_n_override = false;

    int enumeration_cap() const { return max_n_override ? kEnumerationOverrideCap : kEnumerationCap; }
};

int dispatch(CLI::App& app, const Options& opt) {
    if (auto* cmd = app.get_subcommand("deck"); cmd->parsed()) {
        const std::string g6 = cmd->count("g6") ? cmd->get_option("g6")->as<std::string>() : "";
        const std::string edges = cmd->count("--edges") ? cmd->get_option("--edges")->as<std::string>() : "";
        if (g6.empty() == edges.empty()) throw ParseError("deck: give exactly one of <g6> or --edges FILE");
        LabeledGraph g = g6.empty() ? graph_from_edge_list(read_file(edges)) : parse_graph6(g6);
        if (g.n < 1) throw ArgumentError("deck needs at least one vertex");
        print_json(deck_to_json(deck(g)));
        return 0;
    }
    if (auto* cmd = app.get_subcommand("recognize"); cmd->parsed()) {
        Deck d = deck_from_json(parse_json_file(cmd->get_option("deckfile")->as<std::string>()));
        print_json(report_to_json(analyze_deck(d)));
        return 0;
    }
    if (auto* cmd = app.get_subcommand("reconstruct"); cmd->parsed()) {
        Deck d = deck_from_json(parse_json_file(cmd->get_option("deckfile")->as<std::string>()));
        const std::string cls = cmd->get_option("--class")->as<std::string>();
        LabeledGraph g = cls == "eulerian" ? reconstruct_eulerian(d) : reconstruct_regular(d);
        std::cout << emit_graph6(canonical_code(g).decode()) << "\n";
        return 0;
    }
    if (auto* cmd = app.get_subcommand("verify-rc"); cmd->parsed()) {
        const int n = cmd->get_option("--n")->as<int>();
        VerificationReport r = n == 2 ? deck_collision_report(n, opt.threads, opt.enumeration_cap())
                                      : verify_reconstruction(n, opt.threads, opt.enumeration_cap());
        print_json(verification_report_to_json(r));
        return 0;
    }
    if (auto* cmd = app.get_subcommand("preimages"); cmd->parsed()) {
        Deck d = deck_from_json(parse_json_file(cmd->get_option("deckfile")->as<std::string>()));
        Json out = Json::array();
        for (const auto& c : find_preimages(d, opt.threads, opt.enumeration_cap()))
            out.push_back(emit_graph6(c.decode()));
        print_json(out);
        return 0;
    }
    if (auto* cmd = app.get_subcommand("count"); cmd->parsed()) {
        LabeledGraph host = parse_graph6(cmd->get_option("--host")->as<std::string>());
        if (cmd->count("--hamiltonian")) {
            std::cout << hamiltonian_cycle_count(host) << "\n";
            return 0;
        }
        if (!cmd->count("--pattern")) throw ParseError("count: need --pattern or --hamiltonian");
        LabeledGraph pattern = parse_graph6(cmd->get_option("--pattern")->as<std::string>());
        std::cout << count_subgraphs(pattern, host) << "\n";
        return 0;
    }
    if (auto* cmd = app.get_subcommand("span-check"); cmd->parsed()) {
        const int n = cmd->get_option("--n")->as<int>();
        const int d = cmd->get_option("--degree")->as<int>();
        const int cap_n = cmd->get_option("--cap-n")->as<int>();
        const int cap_d = cmd->get_option("--cap-degree")->as<int>();
        const std::string family = cmd->get_option("--family")->as<std::string>();
        std::vector<OrbitSum> sums;
        if (family == "simple")
            sums = simple_graph_orbit_sums(n, d, opt.enumeration_cap());
        else if (family == "isolated")
            sums = isolated_vertex_orbit_sums(n, d);
        else
            sums = all_orbit_sums(n, d);
        SpanRank r = span_rank(sums, n, d, cap_n, cap_d);
        Json j;
        j["family"] = family;
        j["n"] = n;
        j["degree"] = d;
        j["rank"] = r.rank;
        j["dimension"] = r.dimension;
        print_json(j);
        return 0;
    }
    if (auto* cmd = app.get_subcommand("separate"); cmd->parsed()) {
        WeightedGraph w1 = weighted_graph_from_json(parse_json_file(cmd->get_option("--w1")->as<std::string>()));
        WeightedGraph w2 = weighted_graph_from_json(parse_json_file(cmd->get_option("--w2")->as<std::string>()));
        const int max_degree = cmd->get_option("--max-degree")->as<int>();
        auto sep = separate_by_isolated(w1, w2, max_degree);
        if (!sep) {
            std::cout << "none\n";
            return 0;
        }
        Json j = orbit_sum_to_json(*sep);
        j["value_w1"] = rational_to_string(orbit_sum_eval(*sep, w1));
        j["value_w2"] = rational_to_string(orbit_sum_eval(*sep, w2));
        print_json(j);
        return 0;
    }
    if (auto* cmd = app.get_subcommand("reconstruct3"); cmd->parsed()) {
        auto cards = three_cards_from_json(parse_json_file(cmd->get_option("--cards")->as<std::string>()));
        const WeightMode mode = cmd->count("--relaxed") ? WeightMode::relaxed : WeightMode::strict;
        WeightedGraph g = reconstruct_from_three_cards(cards[0], cards[1], cards[2], mode);
        print_json(weighted_graph_to_json(g));
        return 0;
    }
    if (auto* cmd = app.get_subcommand("stockmeyer-demo"); cmd->parsed()) {
        auto [a, b] = stockmeyer_pair();
        auto arcs_json = [](const Digraph& g) {
            Json arcs = Json::array();
            for (auto [i, j] : g.arcs) arcs.push_back(Json::array({i, j}));
            return arcs;
        };
        Json j;
        j["graph_a"] = {{"n", a.n}, {"arcs", arcs_json(a)}};
        j["graph_b"] = {{"n", b.n}, {"arcs", arcs_json(b)}};
        j["decks_equal"] = decks_equal(deck(a), deck(b));
        j["isomorphic"] = are_isomorphic(a, b);
        print_json(j);
        return 0;
    }
    std::cerr << app.help() << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph reconstruction decks, recognizers and orbit-sum invariants"};
    app.require_subcommand(0, 1);

    Options opt;
    app.add_option("--seed", opt.seed, "seed for randomized subroutines");
    app.add_option("--threads", opt.threads, "worker threads for enumeration-backed commands")
        ->check(CLI::PositiveNumber);
    app.add_flag("--max-n-override", opt.max_n_override, "raise the enumeration cap from 8 to 9");

    auto* cmd_deck = app.add_subcommand("deck", "print the deck of a simple graph as JSON");
    cmd_deck->add_option("g6", "graph6 string");
    cmd_deck->add_option("--edges", "edge list file (one 'i j' per line, '#' comments)");

    auto* cmd_rec = app.add_subcommand("recognize", "print the deck-recognizable properties as JSON");
    cmd_rec->add_option("deckfile", "deck JSON file")->required();

    auto* cmd_rc = app.add_subcommand("reconstruct", "rebuild an Eulerian or regular graph from its deck");
    cmd_rc->add_option("deckfile", "deck JSON file")->required();
    cmd_rc->add_option("--class", "graph class to use")
        ->required()
        ->check(CLI::IsMember({"eulerian", "regular"}));

    auto* cmd_verify = app.add_subcommand("verify-rc", "exhaustively check reconstruction at one size");
    cmd_verify->add_option("--n", "vertex count")->required();

    auto* cmd_pre = app.add_subcommand("preimages", "all isomorphism classes with the given deck");
    cmd_pre->add_option("deckfile", "deck JSON file")->required();

    auto* cmd_count = app.add_subcommand("count", "count subgraphs of a host isomorphic to a pattern");
    cmd_count->add_option("--pattern", "pattern graph6");
    cmd_count->add_option("--host", "host graph6")->required();
    cmd_count->add_flag("--hamiltonian", "count Hamiltonian cycles instead of a pattern");

    auto* cmd_span = app.add_subcommand("span-check", "rank of degree-d products of an orbit-sum family");
    cmd_span->add_option("--n", "vertex count")->required();
    cmd_span->add_option("--degree", "graded degree")->required();
    cmd_span->add_option("--family", "generating family")
        ->required()
        ->check(CLI::IsMember({"simple", "isolated", "all"}));
    cmd_span->add_option("--cap-n", "guard: largest allowed n")->default_val(kLinalgMaxN);
    cmd_span->add_option("--cap-degree", "guard: largest allowed degree")->default_val(kLinalgMaxDegree);

    auto* cmd_sep = app.add_subcommand("separate", "minimal isolated-vertex orbit sum separating two weighted graphs");
    cmd_sep->add_option("--w1", "weighted graph JSON file")->required();
    cmd_sep->add_option("--w2", "weighted graph JSON file")->required();
    cmd_sep->add_option("--max-degree", "search bound")->default_val(6);

    auto* cmd_r3 = app.add_subcommand("reconstruct3", "rebuild a distinct-weight graph from three cards");
    cmd_r3->add_option("--cards", "JSON array of three weighted cards")->required();
    cmd_r3->add_flag("--relaxed", "only require present-edge weights to be distinct");

    app.add_subcommand("stockmeyer-demo", "the directed counterexample: equal decks, non-isomorphic");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        return dispatch(app, opt);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
