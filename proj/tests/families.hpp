#pragma once

#include <utility>
#include <vector>

#include "clutter_algebra/graph.hpp"

namespace testing {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

inline clutter_algebra::Clutter cycle_graph(std::size_t n) {
  Edges e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return clutter_algebra::make_graph(n, e);
}

inline clutter_algebra::Clutter complete_graph(std::size_t n) {
  Edges e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j});
  return clutter_algebra::make_graph(n, e);
}

inline clutter_algebra::Clutter path_graph(std::size_t n) {
  Edges e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return clutter_algebra::make_graph(n, e);
}

inline clutter_algebra::Clutter complete_bipartite(std::size_t a, std::size_t b) {
  Edges e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.push_back({i, a + j});
  return clutter_algebra::make_graph(a + b, e);
}

// Vertex-disjoint copies of C_n.
inline clutter_algebra::Clutter disjoint_cycles(std::size_t n, std::size_t copies) {
  Edges e;
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < n; ++i) e.push_back({c * n + i, c * n + (i + 1) % n});
  return clutter_algebra::make_graph(n * copies, e);
}

}  // namespace testing
