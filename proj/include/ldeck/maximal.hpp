#ifndef LDECK_MAXIMAL_HPP
#define LDECK_MAXIMAL_HPP

#include <vector>

#include "ldeck/bigint.hpp"
#include "ldeck/deck.hpp"

namespace ldeck {

/// Explicit finite family of pairwise non-isomorphic graphs, with certs
/// precomputed. The pairwise subgraph-copy table is served by the global
/// count_copies memo.
struct FamilySpec {
    std::vector<Graph> members;
    std::vector<Cert> certs;
};

/// Deduplicates by cert; members keep their first-seen representative.
FamilySpec make_family(const std::vector<Graph>& members);

/// Number m(F, G) of maximal family subgraphs of the deck's graph isomorphic
/// to f, where "extends" means a family subgraph on a strictly larger vertex
/// set. Evaluates the alternating chain sum with memoized suffix sums, so a
/// chain contributes nothing as soon as a factor vanishes.
///
/// Caller contract: every family subgraph of G has at most ell vertices and
/// lies in a unique maximal one; neither is checkable from the deck.
Bigint maximal_count(const Deck& d, const Graph& f, const FamilySpec& fam);

}  // namespace ldeck

#endif
