#pragma once

#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "clutter_algebra/clutter.hpp"

namespace clutter_algebra {

struct Poset {
  std::vector<std::string> elements;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (a, b) means a < b
  std::vector<VertexSet> above;  // transitive closure: strict upper sets

  std::size_t size() const { return elements.size(); }
  bool less(std::size_t a, std::size_t b) const { return contains(above[a], b); }
  bool comparable(std::size_t a, std::size_t b) const { return less(a, b) || less(b, a); }
};

// Relations may be any generating set; cycles are rejected.
Poset make_poset(std::vector<std::string> elements, std::vector<std::pair<std::size_t, std::size_t>> relations);
// One relation "a < b" per line; '#' starts a comment.
Poset parse_poset(std::istream& in);
Poset parse_poset(const std::string& text);
std::string format_poset(const Poset& p);

// May have no edges (an antichain); isolated elements are kept.
Clutter comparability_graph(const Poset& p);

struct Dilworth {
  VertexSet max_antichain = 0;
  std::vector<VertexSet> chains;  // a minimum chain partition
};
struct Mirsky {
  std::vector<std::size_t> max_chain;  // bottom to top
  std::vector<VertexSet> antichains;  // a minimum antichain partition
};
Dilworth dilworth(const Poset& p);
Mirsky mirsky(const Poset& p);

// Random order on n elements: each pair i < j of a random linear extension
// is related with the given probability, then closed transitively.
Poset random_poset(std::size_t n, double density, std::mt19937_64& rng);

}  // namespace clutter_algebra
