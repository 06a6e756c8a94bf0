#ifndef LDECK_CANON_HPP
#define LDECK_CANON_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ldeck/graph.hpp"

namespace ldeck {

/// Canonical byte string identifying an isomorphism class. Equal certs iff
/// isomorphic graphs; the cert of a plain graph is the graph6 string of its
/// canonically labeled form, so deck files can print certs directly.
using Cert = std::string;

/// Permutation perm[old] = new producing the canonical labeling. `marked`
/// vertices form a second color class, so the labeling also canonicalizes
/// (graph, subset) pairs.
std::vector<int> canonical_labeling(const Graph& g, std::uint64_t marked = 0);

Cert canonical_cert(const Graph& g);

/// Cert of a two-colored graph: "<graph6>|<marked mask, 16 hex digits>".
Cert marked_cert(const MarkedGraph& m);

Graph cert_to_graph(const Cert& c);
MarkedGraph cert_to_marked(const Cert& c);

bool is_forest(const Graph& g);

}  // namespace ldeck

#endif
