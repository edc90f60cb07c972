#pragma once

#include <cstdint>
#include <vector>

#include "clutter_algebra/clutter.hpp"

namespace clutter_algebra {

// Least sorted edge-mask list over all vertex orders compatible with a
// stable colour refinement.  Two clutters on n vertices are isomorphic iff
// their canonical lists are equal.
std::vector<VertexSet> canonical_edges(std::size_t n, const std::vector<VertexSet>& edges);

struct EnumerationOptions {
  std::size_t vertices = 0;  // exactly this many
  std::size_t max_edges = 0;
  std::uint64_t edge_sizes = ~std::uint64_t(0);  // bit k allows edges of size k
  bool allow_isolated = false;
  bool connected_only = false;
};

// One representative per isomorphism class, grown edge by edge.
std::vector<Clutter> enumerate_clutters(const EnumerationOptions& opt);

// Graphs on exactly n vertices.
std::vector<Clutter> enumerate_graphs(std::size_t n, bool connected_only, bool allow_isolated = false);

// Every vertex set meets an edge and the edge hypergraph is connected.
bool is_connected_clutter(const Clutter& c);

}  // namespace clutter_algebra
