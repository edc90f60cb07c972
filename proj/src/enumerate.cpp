#include "clutter_algebra/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "clutter_algebra/errors.hpp"

namespace clutter_algebra {

namespace {

std::vector<std::size_t> refine_colours(std::size_t n, const std::vector<VertexSet>& edges) {
  std::vector<std::size_t> colour(n, 0);
  std::size_t classes = 1;
  for (;;) {
    std::vector<std::pair<std::vector<std::vector<std::size_t>>, std::size_t>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].second = colour[v];
      for (auto e : edges) {
        if (!contains(e, v)) continue;
        std::vector<std::size_t> inside;
        for (auto u : members(e))
          if (u != v) inside.push_back(colour[u]);
        std::sort(inside.begin(), inside.end());
        sig[v].first.push_back(std::move(inside));
      }
      std::sort(sig[v].first.begin(), sig[v].first.end());
    }
    std::map<std::pair<std::size_t, std::vector<std::vector<std::size_t>>>, std::size_t> ids;
    for (std::size_t v = 0; v < n; ++v) ids.emplace(std::make_pair(sig[v].second, sig[v].first), 0);
    std::size_t next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (std::size_t v = 0; v < n; ++v) colour[v] = ids.at({sig[v].second, sig[v].first});
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return colour;
}

std::vector<VertexSet> relabel(const std::vector<VertexSet>& edges, const std::vector<std::size_t>& pos) {
  std::vector<VertexSet> out;
  out.reserve(edges.size());
  for (auto e : edges) {
    VertexSet m = 0;
    for (auto v : members(e)) m |= bit(pos[v]);
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<VertexSet> canonical_edges(std::size_t n, const std::vector<VertexSet>& edges) {
  if (n > kMaxVertices) throw CapExceeded("more than 64 vertices");
  const auto colour = refine_colours(n, edges);
  std::vector<std::vector<std::size_t>> classes;
  {
    std::map<std::size_t, std::vector<std::size_t>> by_colour;
    for (std::size_t v = 0; v < n; ++v) by_colour[colour[v]].push_back(v);
    for (auto& [c, vs] : by_colour) classes.push_back(vs);
  }
  // Each class occupies a fixed block of positions; permute within blocks.
  std::vector<std::size_t> pos(n);
  std::vector<VertexSet> best;
  bool first = true;
  std::vector<std::vector<std::size_t>> order = classes;
  std::vector<std::size_t> offset(classes.size(), 0);
  for (std::size_t k = 1; k < classes.size(); ++k) offset[k] = offset[k - 1] + classes[k - 1].size();
  for (;;) {
    for (std::size_t k = 0; k < order.size(); ++k)
      for (std::size_t j = 0; j < order[k].size(); ++j) pos[order[k][j]] = offset[k] + j;
    auto cand = relabel(edges, pos);
    if (first || cand < best) {
      best = std::move(cand);
      first = false;
    }
    std::size_t k = 0;
    while (k < order.size() && !std::next_permutation(order[k].begin(), order[k].end())) ++k;
    if (k == order.size()) break;
  }
  return best;
}

bool is_connected_clutter(const Clutter& c) {
  if (c.size() == 0) return true;
  VertexSet reached = bit(0);
  for (bool grew = true; grew;) {
    grew = false;
    for (auto e : c.edges)
      if ((e & reached) && (e & ~reached)) {
        reached |= e;
        grew = true;
      }
  }
  return reached == c.vertex_set();
}

std::vector<Clutter> enumerate_clutters(const EnumerationOptions& opt) {
  const std::size_t n = opt.vertices;
  if (n == 0) throw InvalidInput("need at least one vertex");
  if (n > 16) throw CapExceeded("enumeration is limited to 16 vertices");
  std::vector<VertexSet> candidates;
  for (VertexSet s = 1; s <= all_vertices(n); ++s)
    if ((opt.edge_sizes >> popcount(s)) & 1u) candidates.push_back(s);

  std::vector<Clutter> out;
  auto emit = [&](const std::vector<VertexSet>& edges) {
    Clutter c;
    c.vertices = default_names(n);
    c.edges = edges;
    std::sort(c.edges.begin(), c.edges.end(), lex_less);
    if (!opt.allow_isolated && c.covered() != c.vertex_set()) return;
    if (opt.connected_only && !is_connected_clutter(c)) return;
    out.push_back(std::move(c));
  };

  std::set<std::vector<VertexSet>> level;
  for (auto s : candidates) level.insert(canonical_edges(n, {s}));
  for (std::size_t q = 1; q <= opt.max_edges && !level.empty(); ++q) {
    for (const auto& edges : level) emit(edges);
    if (q == opt.max_edges) break;
    std::set<std::vector<VertexSet>> next;
    for (const auto& edges : level)
      for (auto s : candidates) {
        bool ok = true;
        for (auto e : edges)
          if ((e & s) == e || (e & s) == s) {
            ok = false;
            break;
          }
        if (!ok) continue;
        auto grown = edges;
        grown.push_back(s);
        next.insert(canonical_edges(n, grown));
      }
    level = std::move(next);
  }
  return out;
}

std::vector<Clutter> enumerate_graphs(std::size_t n, bool connected_only, bool allow_isolated) {
  EnumerationOptions opt;
  opt.vertices = n;
  opt.max_edges = n * (n - 1) / 2;
  opt.edge_sizes = std::uint64_t(1) << 2;
  opt.allow_isolated = allow_isolated;
  opt.connected_only = connected_only;
  return enumerate_clutters(opt);
}

}  // namespace clutter_algebra
