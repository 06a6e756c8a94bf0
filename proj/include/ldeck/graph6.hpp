#ifndef LDECK_GRAPH6_HPP
#define LDECK_GRAPH6_HPP

#include <string>
#include <string_view>

#include "ldeck/graph.hpp"

namespace ldeck {

/// Standard header-less graph6 text encoding. Orders up to 64 are supported
/// (63 and 64 use the three-byte long form).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view s);

/// "u v" pairs, one per line, 0-indexed. Lines starting with '#' are skipped.
/// The order is max vertex id + 1 unless a larger `min_n` is given.
Graph edge_list_decode(std::string_view text, int min_n = 0);
std::string edge_list_encode(const Graph& g);

}  // namespace ldeck

#endif
