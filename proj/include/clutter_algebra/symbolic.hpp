#pragma once

#include <vector>

#include "clutter_algebra/clutter.hpp"
#include "clutter_algebra/lattice.hpp"

namespace clutter_algebra {

// x^a t^b.
struct MonomialGen {
  IntVector a;
  Integer b;
  bool operator==(const MonomialGen&) const = default;
};
// Sorts by (b, a).
bool operator<(const MonomialGen& x, const MonomialGen& y);
// "x1^a1*...*xn^an * t^b"
std::string format_generator(const MonomialGen& g, const std::vector<std::string>& names);
Json to_json(const MonomialGen& g);

struct SymbolicCaps {
  std::size_t max_vertices = 10;
  Execution execution = Execution::parallel;
};

// {(a, b) : a >= 0, b >= 0, <u_k, a> >= b for every minimal vertex cover u_k}.
ConeRep simis_cone(const Clutter& c);
// {(a, b) : a >= 0, b >= 0, <v_i, a> >= b for every edge v_i}.
ConeRep cover_cone(const Clutter& c);

// Hilbert basis of the Simis cone: minimal algebra generators of R_s(I(C)).
std::vector<MonomialGen> symbolic_rees_generators(const Clutter& c, const SymbolicCaps& caps = {});
// Hilbert basis of the cover cone: the irreducible b-covers of C.
std::vector<MonomialGen> cover_algebra_generators(const Clutter& c, const SymbolicCaps& caps = {});
// The irreducible covers of a graph listed from their structural description.
std::vector<MonomialGen> graph_irreducible_covers(const Clutter& g);
// Facets (a, -d) of the Rees cone with d >= 1, read as d-covers.
std::vector<MonomialGen> rees_cone_facet_covers(const Clutter& c);

bool is_cover(const Clutter& c, const IntVector& a, const Integer& b);
// A failure carries parts (c, i), (d, j) with c + d = a, i + j = b.
Verdict is_irreducible_cover(const Clutter& c, const IntVector& a, const Integer& b);

// For a facet (a, -b) of the cover cone of G with every a_i >= 1, the
// generator x^a x_{n+1}^{|a| - b} t^{|a|} of R_s(I(cone_over(G))).
MonomialGen cone_generator_lift(const Clutter& g, const IntVector& facet);
// Applies the lift r times, each time over the previous cone graph.
MonomialGen iterated_cone_lift(const Clutter& g, const IntVector& facet, std::size_t r);

// Symbolic Rees generators against the clique generators x^a t^r,
// supp(a) a clique on r + 1 vertices.  Holds when the sets agree; checked
// against is_perfect.
Verdict clique_generators_check(const Clutter& g, const SymbolicCaps& caps = {});

}  // namespace clutter_algebra
