#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "clutter_algebra/certificate.hpp"
#include "clutter_algebra/execution.hpp"
#include "clutter_algebra/int_matrix.hpp"

namespace clutter_algebra {

// Bit i stands for vertex i.  Clutters are limited to 64 vertices.
using VertexSet = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

inline bool contains(VertexSet set, std::size_t v) { return (set >> v) & 1u; }
inline std::size_t popcount(VertexSet s) { return static_cast<std::size_t>(__builtin_popcountll(s)); }
inline VertexSet bit(std::size_t v) { return VertexSet(1) << v; }
inline VertexSet all_vertices(std::size_t n) { return n >= 64 ? ~VertexSet(0) : (bit(n) - 1); }
std::vector<std::size_t> members(VertexSet s);
// Orders sets by their sorted member lists.
bool lex_less(VertexSet a, VertexSet b);

struct Clutter {
  std::vector<std::string> vertices;
  std::vector<VertexSet> edges;  // sorted with lex_less

  std::size_t size() const { return vertices.size(); }
  VertexSet vertex_set() const { return all_vertices(vertices.size()); }
  VertexSet covered() const;
  bool uniform() const;
  // Common edge size; throws InvalidInput for a non-uniform clutter.
  std::size_t edge_size() const;
  bool operator==(const Clutter&) const = default;
};

// Names x1..xn.
std::vector<std::string> default_names(std::size_t n);

// Checks the Sperner condition, nonempty edges, and (unless allowed) that
// every vertex lies on an edge.  Sorts the edges.
Clutter make_clutter(std::vector<std::string> vertices, std::vector<VertexSet> edges,
                     bool allow_isolated = false);
// Edges as 0-based index lists over x1..xn.
Clutter make_clutter(std::size_t n, const std::vector<std::vector<std::size_t>>& edges,
                     bool allow_isolated = false);

// Keeps the inclusion-minimal sets, sorted.
std::vector<VertexSet> minimalize(std::vector<VertexSet> sets);

// Incidence matrix: n x q, column j is the characteristic vector of edge j.
IntMatrix incidence_matrix(const Clutter& c);
// Columns of a binary matrix as edges.
Clutter clutter_from_matrix(const IntMatrix& a, bool allow_isolated = false);

struct CoverSet {
  std::vector<VertexSet> covers;  // sorted with lex_less
  std::vector<IntVector> vectors;
};

CoverSet minimal_vertex_covers(const Clutter& c);
std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& edges);
Clutter blocker(const Clutter& c);

// Complement every column: a*_ij = 1 - a_ij.
struct DualStar {
  Clutter clutter;
  IntMatrix matrix;
};
DualStar dual_star(const Clutter& c);
IntMatrix dual_star(const IntMatrix& a);

// Deletion sets x_i = 0, contraction sets x_i = 1.  The result lives on the
// remaining vertices; it may have no edges, or the single empty edge.
Clutter minor(const Clutter& c, VertexSet deleted, VertexSet contracted);
// Removes vertices that lie on no edge.
Clutter drop_isolated(const Clutter& c);
// Same on raw edge masks, without reindexing.
std::vector<VertexSet> minor_edges(const std::vector<VertexSet>& edges, VertexSet deleted, VertexSet contracted);

// C^w: vertices with w_i = 0 are deleted, x_i is duplicated w_i - 1 times
// with names x_i^2 .. x_i^{w_i}.
Clutter parallelization(const Clutter& c, const std::vector<std::size_t>& w);

std::size_t alpha0(const Clutter& c);
std::size_t beta1(const Clutter& c);
std::size_t alpha0(const std::vector<VertexSet>& edges);
std::size_t beta1(const std::vector<VertexSet>& edges);
Verdict koenig(const Clutter& c);

struct PackingOptions {
  std::size_t max_vertices = 12;
  Execution execution = Execution::parallel;
};
// Every minor satisfies alpha0 = beta1.  The certificate is the least
// failing minor in ternary order (digit 0 keep, 1 delete, 2 contract).
Verdict packing_property(const Clutter& c, const PackingOptions& opt = {});

std::optional<std::vector<VertexSet>> perfect_matching(const Clutter& c);

std::size_t alpha0_parallelization(const Clutter& c, const std::vector<std::size_t>& w);
// max{<y,1> : Ay <= w, y in N^q}.
std::size_t beta1_parallelization_bound(const Clutter& c, const std::vector<std::size_t>& w,
                                        std::size_t max_entry = 5);

struct MonomialIdeal {
  std::size_t nvars = 0;
  std::vector<IntVector> generators;  // minimal, lexicographic
  bool operator==(const MonomialIdeal&) const = default;
};
MonomialIdeal edge_ideal(const Clutter& c);
MonomialIdeal symbolic_power(const Clutter& c, std::size_t i);
MonomialIdeal ordinary_power(const Clutter& c, std::size_t i);
// Every generator of `small` is divisible by a generator of `big`.
bool ideal_contained(const MonomialIdeal& small, const MonomialIdeal& big);
std::string format_monomial(const IntVector& a, const std::vector<std::string>& names);
std::string format_ideal(const MonomialIdeal& ideal, const std::vector<std::string>& names);
// Square-free generators as a clutter (names x1..xn).
Clutter clutter_from_ideal(const MonomialIdeal& ideal);

// Adds the edges {x_i, y_i1, ..., y_i(d-1)} to a d-uniform clutter.
Clutter whisker_extension(const Clutter& c);

struct BalancedOptions {
  std::size_t max_rows_plus_cols = 24;
};
// Searches the row/column graph for a chordless cycle of length 2 mod 4.
// The certificate lists the rows and columns of the odd submatrix.
Verdict is_balanced(const IntMatrix& m, const BalancedOptions& opt = {});

Verdict vertex_critical(const Clutter& c);

struct CoverPartition {
  std::optional<std::vector<VertexSet>> covers;
  std::string explanation;
};
// Peels off the least minimal cover meeting every edge exactly once.
CoverPartition disjoint_cover_partition(const Clutter& c, bool require_uniform = true);

// "vertices: x1 x2 ..." then one edge per line; '#' starts a comment.
Clutter parse_clutter(std::istream& in, bool allow_isolated = false);
Clutter parse_clutter(const std::string& text, bool allow_isolated = false);
std::string format_clutter(const Clutter& c);
std::string format_set(VertexSet s, const std::vector<std::string>& names);

}  // namespace clutter_algebra
