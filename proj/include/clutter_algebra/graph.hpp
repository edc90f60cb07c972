#pragma once

#include <utility>
#include <vector>

#include "clutter_algebra/clutter.hpp"

namespace clutter_algebra {

// Graphs are 2-uniform clutters.
Clutter make_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                   bool allow_isolated = false);
bool is_graph(const Clutter& c);
void require_graph(const Clutter& c);

std::vector<VertexSet> adjacency(const Clutter& g);
bool is_connected(const Clutter& g);
// Edges with both ends in s, on the original vertex indices.
std::vector<VertexSet> induced_edges(const std::vector<VertexSet>& edges, VertexSet s);

// Two-colouring; a failure carries an odd cycle as a vertex sequence.
Verdict is_bipartite(const Clutter& g);

struct GraphCaps {
  std::size_t max_vertices = 14;
};

// Every two vertex-disjoint odd cycles are joined by an edge.  Applied to
// the whole graph, so odd cycles in different components fail it.
Verdict odd_cycle_pair_criterion(const Clutter& g, const GraphCaps& caps = {});

std::vector<VertexSet> maximal_cliques(const Clutter& g);
// Edges are the maximal cliques.
Clutter clique_clutter(const Clutter& g);

// Induced odd holes and antiholes of length >= 5.  Default cap 12 vertices.
Verdict is_perfect(const Clutter& g, const GraphCaps& caps = {12});

Clutter cone_over(const Clutter& g);
Clutter complement_graph(const Clutter& g);

// All minimal vertex covers have the same size.
Verdict unmixed(const Clutter& c);
std::size_t primitive_cycle_count(const Clutter& g, const GraphCaps& caps = {});
// Compares the Alexander dual of I(complement) with I(G)*.
Verdict triangle_free_dual_check(const Clutter& g);

// No split of the vertex set into two induced subgraphs whose covering
// numbers add up to alpha0(G).  A failure carries the split.
Verdict is_irreducible_graph(const Clutter& g, const GraphCaps& caps = {});
// The same test on the subgraph induced by s.
bool irreducible_induced(const std::vector<VertexSet>& edges, VertexSet s, VertexSet* split = nullptr);

struct InducedSubgraph {
  VertexSet vertices;
  std::size_t alpha0;
  bool operator==(const InducedSubgraph&) const = default;
};
// Computed twice, from the Simis cone's Hilbert basis and by testing every
// induced subgraph; the two lists must agree.  Default cap 10 vertices.
std::vector<InducedSubgraph> irreducible_induced_subgraphs(const Clutter& g, const GraphCaps& caps = {10});

// Halfspaces <h, a> >= 0 of the cone spanned by the edge vectors: a >= 0 and
// sum over N(A) minus sum over A for every nonempty independent set A.
std::vector<IntVector> edge_cone_h_rep(const Clutter& g, bool irredundant = false, const GraphCaps& caps = {});
bool in_edge_cone(const Clutter& g, const IntVector& a);

// Vertices x{k}_{i}, 1 <= k <= d, 1 <= i <= g; one edge per 1 <= i_1 <= ... <= i_d <= g.
Clutter complete_admissible_clutter(std::size_t d, std::size_t g);

}  // namespace clutter_algebra
