#ifndef LDECK_COUNTING_HPP
#define LDECK_COUNTING_HPP

#include <cstdint>
#include <vector>

#include "ldeck/bigint.hpp"
#include "ldeck/canon.hpp"
#include "ldeck/graph.hpp"

namespace ldeck {

enum class CountMode { Induced, Subgraph };

/// Cached canonical certs keyed by the labeled adjacency; the workhorse for
/// deck computation where the same labeled subgraph recurs constantly.
Cert cached_cert(const Graph& g);

/// Number of labeled embeddings (injective homomorphisms; induced mode also
/// forbids extra edges). Exact; throws when the search budget is exceeded.
Bigint count_embeddings(const Graph& host, const Graph& pattern, CountMode mode);

Bigint automorphism_count(const Graph& g);

/// n_H / ñ_H: number of vertex subsets (induced) or subgraphs (subgraph mode)
/// of `host` isomorphic to `pattern`. Memoized by canonical certs.
Bigint count_copies(const Graph& host, const Graph& pattern, CountMode mode);

/// Vertex masks S with host[S] isomorphic to pattern, each subset once.
std::vector<std::uint64_t> induced_copies(const Graph& host, const Graph& pattern);

void clear_counting_caches();

}  // namespace ldeck

#endif
