#include <bit>
#include <map>
#include <random>

#include "doctest.h"
#include "ldeck/enumerate.hpp"
#include "ldeck/extensions.hpp"
#include "ldeck/generators.hpp"
#include "ldeck/structure.hpp"
#include "oracles.hpp"

using namespace ldeck;
using namespace ldeck::test;

namespace {

struct BallOracle {
    bool big = false;
    // class representatives and counts under brute-force marked isomorphism
    std::vector<std::pair<MarkedGraph, long long>> classes;
};

// Independent BFS over explicit adjacency lists.
std::uint64_t oracle_ball(const Graph& g, std::uint64_t a, int d) {
    std::vector<int> dist(static_cast<size_t>(g.order()), 1 << 20);
    std::vector<int> queue;
    for (int v = 0; v < g.order(); ++v)
        if ((a >> v) & 1ULL) {
            dist[v] = 0;
            queue.push_back(v);
        }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int w = 0; w < g.order(); ++w)
            if (g.has_edge(v, w) && dist[w] > dist[v] + 1) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    std::uint64_t mask = 0;
    for (int v = 0; v < g.order(); ++v)
        if (dist[v] <= d) mask |= 1ULL << v;
    return mask;
}

BallOracle oracle_ball_classes(const Graph& g, const Graph& h, int d, int ell) {
    BallOracle out;
    const int n = g.order(), k = h.order();
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= 1ULL << i;
        if (oracle_isomorphic(g.induced(mask), h)) {
            std::uint64_t ball = oracle_ball(g, mask, d);
            if (std::popcount(ball) >= ell) {
                out.big = true;
                return out;
            }
            MarkedGraph mg;
            mg.graph = g.induced(ball);
            mg.marked = 0;
            int pos = 0;
            for (std::uint64_t m = ball; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                if ((mask >> v) & 1ULL) mg.marked |= 1ULL << pos;
                ++pos;
            }
            bool found = false;
            for (auto& [rep, count] : out.classes)
                if (oracle_marked_isomorphic(rep.graph, rep.marked, mg.graph, mg.marked)) {
                    ++count;
                    found = true;
                    break;
                }
            if (!found) out.classes.emplace_back(mg, 1);
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

void check_against_oracle(const Graph& g, const Graph& h, int d, int ell) {
    Deck deck = compute_deck(g, ell);
    BallCounts impl = ball_extension_counts(deck, h, d);
    BallOracle truth = oracle_ball_classes(g, h, d, ell);
    REQUIRE(impl.big_ball == truth.big);
    if (truth.big) return;
    CHECK(impl.counts.size() == truth.classes.size());
    for (auto& [rep, count] : truth.classes) {
        bool matched = false;
        for (auto& [irep, icount] : impl.counts)
            if (oracle_marked_isomorphic(rep.graph, rep.marked, irep.graph, irep.marked)) {
                CHECK(icount == count);
                matched = true;
                break;
            }
        CHECK(matched);
    }
}

}  // namespace

TEST_CASE("1-balls of vertices in P5") {
    Deck d = compute_deck(path_graph(5), 4);
    BallCounts bc = ball_extension_counts(d, Graph(1), 1);
    REQUIRE_FALSE(bc.big_ball);
    REQUIRE(bc.counts.size() == 2);
    CHECK(bc.at_cert(marked_cert({path_graph(2), 1ULL << 0})) == 2);
    CHECK(bc.at_cert(marked_cert({path_graph(3), 1ULL << 1})) == 3);
    CHECK(bc.total() == 5);
}

TEST_CASE("star centre forces a big ball") {
    Deck d = compute_deck(star_graph(6), 5);
    BallCounts bc = ball_extension_counts(d, Graph(1), 1);
    CHECK(bc.big_ball);
}

TEST_CASE("components of 2K2 + K1 via 1-balls of K2") {
    Graph g = path_graph(2).disjoint_union(path_graph(2)).disjoint_union(Graph(1));
    Deck d = compute_deck(g, 4);
    BallCounts bc = ball_extension_counts(d, path_graph(2), 1);
    REQUIRE_FALSE(bc.big_ball);
    REQUIRE(bc.counts.size() == 1);
    CHECK(bc.at_cert(marked_cert({path_graph(2), 0b11})) == 2);

    auto comp = component_count(d, path_graph(2));
    REQUIRE(comp.has_value());
    CHECK(*comp == 2);
}

TEST_CASE("component counts read off the deck") {
    Graph g = cycle_graph(6).disjoint_union(path_graph(4));
    Deck d = compute_deck(g, 9);
    auto p4 = component_count(d, path_graph(4));
    REQUIRE(p4.has_value());
    CHECK(*p4 == 1);
    auto c6 = component_count(d, cycle_graph(6));
    REQUIRE(c6.has_value());
    CHECK(*c6 == 1);
    auto k2 = component_count(d, path_graph(2));
    REQUIRE(k2.has_value());
    CHECK(*k2 == 0);
}

TEST_CASE("ball machinery validates preconditions") {
    Deck d = compute_deck(path_graph(6), 5);
    CHECK_THROWS(ball_extension_counts(d, path_graph(6), 1));  // |h| > ell-1
    CHECK_THROWS(ball_extension_counts(d, path_graph(5), 1));  // |h| = ell
    Deck full = compute_deck(path_graph(6), 6);
    CHECK_THROWS(ball_extension_counts(full, path_graph(2), 1));  // n < ell+1
    CHECK_THROWS(component_count(d, path_graph(6)));
}

TEST_CASE("extension counts match per-copy classification exhaustively (n <= 6)") {
    std::vector<Graph> hs = {Graph(1), path_graph(2), path_graph(3)};
    for (int n = 6; n <= 6; ++n) {
        for (const Graph& g : all_graphs(n)) {
            for (int ell = 5; ell <= n - 1; ++ell) {
                for (const Graph& h : hs) {
                    if (h.order() > ell - 1) continue;
                    for (int dd = 1; dd <= 2; ++dd) check_against_oracle(g, h, dd, ell);
                }
            }
        }
    }
}

TEST_CASE("extension counts match per-copy classification on random graphs n=7,8") {
    std::mt19937 rng(90210);
    std::vector<Graph> hs = {Graph(1), path_graph(2), path_graph(3)};
    for (int trial = 0; trial < 60; ++trial) {
        int n = 7 + static_cast<int>(rng() % 2);
        Graph g = random_graph(n, 0.25 + 0.1 * (rng() % 4), rng);
        int ell = 5 + static_cast<int>(rng() % (n - 5));
        const Graph& h = hs[rng() % hs.size()];
        int dd = 1 + static_cast<int>(rng() % 2);
        check_against_oracle(g, h, dd, ell);
    }
}

TEST_CASE("sum of extension counts is the copy count when no big ball") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 6 + static_cast<int>(rng() % 3);
        Graph g = random_graph(n, 0.3, rng);
        int ell = 5 + static_cast<int>(rng() % (n - 5));
        Deck d = compute_deck(g, ell);
        Graph h = path_graph(2);
        BallCounts bc = ball_extension_counts(d, h, 1);
        if (bc.big_ball) continue;
        CHECK(bc.total() == kelly_count(d, h, CountMode::Induced));
    }
}

TEST_CASE("leaf extensions") {
    auto k1 = leaf_extensions(Graph(1));
    CHECK(k1.size() == 1);
    CHECK(k1[0].graph.order() == 2);

    auto p3 = leaf_extensions(path_graph(3));
    CHECK(p3.size() == 2);

    // class count equals the number of vertex orbits
    Graph f1 = figure1_left();
    std::set<Cert> orbits;
    for (int v = 0; v < f1.order(); ++v) orbits.insert(marked_cert({f1, 1ULL << v}));
    CHECK(leaf_extensions(f1).size() == orbits.size());

    CHECK_THROWS(leaf_extensions(path_graph(2).disjoint_union(Graph(1))));
}
