#ifndef LDECK_GENERATORS_HPP
#define LDECK_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ldeck/graph.hpp"

namespace ldeck {

/// The 13-vertex tree pair sharing a 7-deck: a 9-vertex spine 0..8 with, on
/// the left, extra edges (2,9),(3,10),(10,11),(5,12) and, on the right,
/// (2,9),(4,10),(5,11),(11,12).
Graph figure1_left();
Graph figure1_right();

/// The path/cycle-plus-path pair with equal k-decks for k <= n/2:
/// left is P_n, right is C_{ceil(n/2)+1} together with P_{floor(n/2)-1}.
Graph sw_pair_left(int n);
Graph sw_pair_right(int n);

/// Path on `spine` vertices with pendant leaves at the given spine positions.
Graph caterpillar(int spine, const std::vector<int>& leg_positions);

/// Centre with `legs` legs, leg i a path of leg_lengths[i] vertices.
Graph spider(const std::vector<int>& leg_lengths);

/// Path on `spine` vertices with `left` pendant leaves at one end and
/// `right` at the other.
Graph double_broom(int spine, int left, int right);

/// Deterministic random tree: a seeded mt19937 drives a random parent
/// sequence (documented in the README so fixtures are portable).
Graph random_tree(int n, std::uint64_t seed);

/// Named-family dispatcher backing the CLI `generate` command.
/// Families: path, cycle, star, complete, caterpillar, spider, double_broom,
/// figure1_left, figure1_right, sw_pair_left, sw_pair_right, random_tree.
Graph generate_family(const std::string& family, const std::vector<long long>& params);

}  // namespace ldeck

#endif
