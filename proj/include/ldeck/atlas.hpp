#ifndef LDECK_ATLAS_HPP
#define LDECK_ATLAS_HPP

#include <vector>

#include "ldeck/deck.hpp"

namespace ldeck {

/// Decks of every graph on n vertices at card order ell, aligned with
/// all_graphs(n). Cached process-wide; n <= 9.
const std::vector<Deck>& graph_deck_atlas(int n, int ell);

/// Same for all trees on n vertices; n <= 16.
const std::vector<Deck>& tree_deck_atlas(int n, int ell);

}  // namespace ldeck

#endif
