#ifndef LDECK_STRUCTURE_HPP
#define LDECK_STRUCTURE_HPP

#include <cstdint>
#include <vector>

#include "ldeck/graph.hpp"

namespace ldeck {

constexpr int kInfinity = 1 << 28;

struct StructureProfile {
    std::vector<int> component_orders;  // sorted ascending
    int diameter = 0;                   // max over components
    int girth = kInfinity;              // kInfinity when acyclic
    int longest_path_order = 0;         // vertices on a longest path
    bool is_tree = false;
};

StructureProfile structure_profile(const Graph& g);

std::vector<std::uint64_t> component_masks(const Graph& g);
bool is_connected(const Graph& g);

/// BFS distances from the vertex set `from` (unreachable: kInfinity).
std::vector<int> distances_from(const Graph& g, std::uint64_t from);

/// Induced subgraph on all vertices within distance d of `a`, marked at `a`.
/// The returned marked mask is in the coordinates of the new graph.
MarkedGraph d_ball(const Graph& g, std::uint64_t a, int d);

/// Mask form of the same ball, in the original coordinates.
std::uint64_t d_ball_mask(const Graph& g, std::uint64_t a, int d);

/// Central vertex/vertices of a tree by iterated leaf removal.
std::vector<int> tree_centre(const Graph& t);

/// Exact number of vertices on a longest path. Trees/forests use double BFS
/// per component; general graphs use branch and bound (small n only).
int longest_path_order(const Graph& g);

int girth(const Graph& g);

}  // namespace ldeck

#endif
