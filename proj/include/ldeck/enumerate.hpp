#ifndef LDECK_ENUMERATE_HPP
#define LDECK_ENUMERATE_HPP

#include <vector>

#include "ldeck/graph.hpp"

namespace ldeck {

/// All graphs on n vertices up to isomorphism, built by vertex augmentation
/// with canonical dedup. Cached; n <= 9.
const std::vector<Graph>& all_graphs(int n);

/// All trees on n vertices up to isomorphism, built by leaf attachment with
/// canonical dedup. Cached; n <= 16.
const std::vector<Graph>& all_trees(int n);

}  // namespace ldeck

#endif
