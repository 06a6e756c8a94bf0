#ifndef LDECK_DECK_HPP
#define LDECK_DECK_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ldeck/bigint.hpp"
#include "ldeck/canon.hpp"
#include "ldeck/counting.hpp"
#include "ldeck/graph.hpp"

namespace ldeck {

/// Raised when a deck fails a structural guarantee (bad multiplicity sum,
/// inexact division in a counting identity, malformed file).
struct DeckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The multiset of all order-`ell` induced subgraphs of an n-vertex graph,
/// grouped by canonical cert. Ordered map so serialization is sorted.
struct Deck {
    int n = 0;
    int ell = 0;
    std::map<Cert, Bigint> cards;

    Bigint total_multiplicity() const {
        Bigint t = 0;
        for (auto& [c, m] : cards) t += m;
        return t;
    }
};

Deck compute_deck(const Graph& g, int ell, int threads = 1);

/// n_H(G) or ñ_H(G) recovered from the deck: sum card-class counts times
/// multiplicity, then divide by C(n-|H|, ell-|H|). Division must be exact.
Bigint kelly_count(const Deck& d, const Graph& h, CountMode mode);

/// The ell2-deck of the same (unknown) graph, via class-by-class averaging.
Deck subdeck(const Deck& d, int ell2);

struct DeckDiffEntry {
    Cert card;
    Bigint mult_left;
    Bigint mult_right;
};

struct DeckDiff {
    std::vector<DeckDiffEntry> entries;
    bool empty() const { return entries.empty(); }
};

DeckDiff deck_diff(const Deck& a, const Deck& b);

/// Text format: "#deck n=<n> l=<ell>" then "<multiplicity> <graph6>" lines
/// sorted by the graph6 field; bit-exact across platforms.
std::string serialize_deck(const Deck& d);
Deck parse_deck(const std::string& text);

/// FNV-1a content hash of the serialized deck; platform independent.
std::uint64_t deck_hash(const Deck& d);

}  // namespace ldeck

#endif
