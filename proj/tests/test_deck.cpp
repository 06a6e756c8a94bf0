#include <random>

#include "doctest.h"
#include "ldeck/deck.hpp"
#include "ldeck/graph6.hpp"
#include "ldeck/enumerate.hpp"
#include "ldeck/generators.hpp"
#include "ldeck/structure.hpp"
#include "oracles.hpp"

using namespace ldeck;
using namespace ldeck::test;

TEST_CASE("deck of P3 at l=2") {
    Deck d = compute_deck(path_graph(3), 2);
    CHECK(d.cards.size() == 2);
    CHECK(d.cards.at(cached_cert(path_graph(2))) == 2);
    Graph two_isolated(2);
    CHECK(d.cards.at(cached_cert(two_isolated)) == 1);
}

TEST_CASE("deck at l=n is the graph itself") {
    std::mt19937 rng(11);
    Graph g = random_graph(7, 0.5, rng);
    Deck d = compute_deck(g, 7);
    CHECK(d.cards.size() == 1);
    CHECK(d.cards.begin()->first == cached_cert(g));
    CHECK(d.cards.begin()->second == 1);
}

TEST_CASE("figure-1 7-deck total multiplicity is C(13,7)") {
    Deck d = compute_deck(figure1_left(), 7);
    CHECK(d.total_multiplicity() == 1716);
}

TEST_CASE("deck matches the subset-enumeration oracle class by class") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        int ell = 2 + static_cast<int>(rng() % (n - 2));
        Graph g = random_graph(n, 0.45, rng);
        Deck d = compute_deck(g, ell);
        auto oracle = oracle_deck(g, ell);
        CHECK(d.cards.size() == oracle.size());
        for (auto& [rep, mult] : oracle) CHECK(d.cards.at(cached_cert(rep)) == mult);
    }
}

TEST_CASE("deck is isomorphism invariant and thread-count independent") {
    std::mt19937 rng(314);
    Graph g = random_graph(9, 0.4, rng);
    auto perm = random_permutation(9, rng);
    CHECK(serialize_deck(compute_deck(g, 5)) == serialize_deck(compute_deck(g.relabeled(perm), 5)));
    CHECK(serialize_deck(compute_deck(g, 5, 1)) == serialize_deck(compute_deck(g, 5, 3)));
}

TEST_CASE("kelly_count basics") {
    // edge count from the 2-deck
    Deck d2 = compute_deck(path_graph(3), 2);
    CHECK(kelly_count(d2, path_graph(2), CountMode::Induced) == 2);

    // subgraph count of K2 in the 3-deck of P4
    Deck d3 = compute_deck(path_graph(4), 3);
    CHECK(kelly_count(d3, path_graph(2), CountMode::Subgraph) == 3);

    // K1 count is n at any l
    Deck d7 = compute_deck(figure1_left(), 7);
    CHECK(kelly_count(d7, Graph(1), CountMode::Induced) == 13);

    CHECK_THROWS(kelly_count(d2, path_graph(3), CountMode::Induced));
}

TEST_CASE("kelly oracle: counts from deck equal direct counts") {
    std::mt19937 rng(2024);
    // random spread; the acceptance suite runs the exhaustive n <= 8 sweep
    for (int trial = 0; trial < 25; ++trial) {
        int n = 5 + static_cast<int>(rng() % 4);
        Graph g = random_graph(n, 0.5, rng);
        int ell = 3 + static_cast<int>(rng() % (n - 3));
        Deck d = compute_deck(g, ell);
        for (int hn = 1; hn <= std::min(4, ell); ++hn) {
            Graph h = random_graph(hn, 0.5, rng);
            CHECK(kelly_count(d, h, CountMode::Induced) == count_copies(g, h, CountMode::Induced));
            CHECK(kelly_count(d, h, CountMode::Subgraph) == count_copies(g, h, CountMode::Subgraph));
        }
    }
}

TEST_CASE("subdeck equals directly computed deck") {
    Graph p5 = path_graph(5);
    Deck d4 = compute_deck(p5, 4);
    CHECK(serialize_deck(subdeck(d4, 2)) == serialize_deck(compute_deck(p5, 2)));

    // identity at ell
    CHECK(serialize_deck(subdeck(d4, 4)) == serialize_deck(d4));

    std::mt19937 rng(555);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 5 + static_cast<int>(rng() % 4);
        Graph g = random_graph(n, 0.4, rng);
        int ell = 3 + static_cast<int>(rng() % (n - 3));
        int ell2 = 1 + static_cast<int>(rng() % ell);
        Deck big = compute_deck(g, ell);
        CHECK(serialize_deck(subdeck(big, ell2)) == serialize_deck(compute_deck(g, ell2)));
    }
}

TEST_CASE("subdeck composition") {
    std::mt19937 rng(808);
    Graph g = random_graph(8, 0.5, rng);
    Deck d6 = compute_deck(g, 6);
    CHECK(serialize_deck(subdeck(subdeck(d6, 4), 2)) == serialize_deck(subdeck(d6, 2)));
}

TEST_CASE("figure-1 pair: equal 7-decks, distinct 8-decks") {
    Deck left7 = compute_deck(figure1_left(), 7);
    Deck right7 = compute_deck(figure1_right(), 7);
    CHECK(deck_diff(left7, right7).empty());

    CHECK(serialize_deck(subdeck(left7, 2)) == serialize_deck(subdeck(right7, 2)));

    Deck left8 = compute_deck(figure1_left(), 8);
    Deck right8 = compute_deck(figure1_right(), 8);
    CHECK_FALSE(deck_diff(left8, right8).empty());
}

TEST_CASE("path/cycle-plus-path pair share small decks") {
    Deck a = compute_deck(sw_pair_left(10), 5);
    Deck b = compute_deck(sw_pair_right(10), 5);
    CHECK(deck_diff(a, b).empty());
    Deck a6 = compute_deck(sw_pair_left(10), 6);
    Deck b6 = compute_deck(sw_pair_right(10), 6);
    CHECK_FALSE(deck_diff(a6, b6).empty());
}

TEST_CASE("deck_diff validates shapes") {
    Deck a = compute_deck(path_graph(5), 3);
    Deck b = compute_deck(path_graph(6), 3);
    CHECK_THROWS(deck_diff(a, b));
}

TEST_CASE("deck serialization round trips byte-identically") {
    Deck d = compute_deck(figure1_left(), 6);
    std::string text = serialize_deck(d);
    Deck back = parse_deck(text);
    CHECK(serialize_deck(back) == text);
    CHECK(deck_hash(back) == deck_hash(d));
}

TEST_CASE("parse_deck rejects corrupted files") {
    Deck d = compute_deck(path_graph(4), 3);
    std::string text = serialize_deck(d);
    CHECK_THROWS(parse_deck("no header\n"));
    // wrong total multiplicity
    std::string bad = "#deck n=4 l=3\n5 " + cached_cert(path_graph(3)) + "\n";
    CHECK_THROWS(parse_deck(bad));
    // non-canonical card
    std::string noncanon = "#deck n=3 l=2\n3 " + graph6_encode(path_graph(2)) + "X\n";
    CHECK_THROWS(parse_deck(noncanon));
}

TEST_CASE("compute_deck validates the card order") {
    CHECK_THROWS(compute_deck(path_graph(4), 0));
    CHECK_THROWS(compute_deck(path_graph(4), 5));
}
