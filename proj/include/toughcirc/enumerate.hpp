#pragma once

#include <cstdint>
#include <vector>

#include "toughcirc/graph.hpp"

namespace toughcirc {

/// Largest order accepted by the bundled enumerator.
inline constexpr int kMaxEnumerationOrder = 8;

/// Certificate of the isomorphism class: the largest upper-triangle code
/// over all labelings reachable by individualization and refinement.
/// Requires n <= 11 so the code fits in 64 bits.
std::uint64_t canonical_code(const Graph& g);

/// The graph relabeled so that its upper-triangle code equals canonical_code.
Graph canonical_form(const Graph& g);

/// One representative per isomorphism class on n vertices (n <= 8), grown
/// vertex by vertex from the classes on n-1 vertices. Sorted by code.
std::vector<Graph> all_graphs(int n);

/// The connected members of all_graphs(n).
std::vector<Graph> connected_graphs(int n);

}  // namespace toughcirc
