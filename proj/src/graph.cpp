#include "clutter_algebra/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "clutter_algebra/errors.hpp"
#include "clutter_algebra/symbolic.hpp"

namespace clutter_algebra {

Clutter make_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges, bool allow_isolated) {
  std::vector<std::vector<std::size_t>> e;
  for (auto [a, b] : edges) {
    if (a == b) throw InvalidInput("loops are not allowed");
    e.push_back({a, b});
  }
  return make_clutter(n, e, allow_isolated);
}

bool is_graph(const Clutter& c) {
  return std::all_of(c.edges.begin(), c.edges.end(), [](VertexSet e) { return popcount(e) == 2; });
}

void require_graph(const Clutter& c) {
  if (!is_graph(c)) throw InvalidInput("expected a graph (every edge of size 2)");
}

std::vector<VertexSet> adjacency(const Clutter& g) {
  std::vector<VertexSet> adj(g.size(), 0);
  for (auto e : g.edges) {
    auto m = members(e);
    if (m.size() != 2) throw InvalidInput("expected a graph (every edge of size 2)");
    adj[m[0]] |= bit(m[1]);
    adj[m[1]] |= bit(m[0]);
  }
  return adj;
}

namespace {

VertexSet component_of(const std::vector<VertexSet>& adj, std::size_t v, VertexSet within) {
  VertexSet seen = bit(v), frontier = bit(v);
  while (frontier) {
    VertexSet next = 0;
    for (auto u : members(frontier)) next |= adj[u] & within;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

bool is_connected(const Clutter& g) {
  if (g.size() == 0) return true;
  return component_of(adjacency(g), 0, g.vertex_set()) == g.vertex_set();
}

std::vector<VertexSet> induced_edges(const std::vector<VertexSet>& edges, VertexSet s) {
  std::vector<VertexSet> out;
  for (auto e : edges)
    if ((e & s) == e) out.push_back(e);
  return out;
}

Verdict is_bipartite(const Clutter& g) {
  auto adj = adjacency(g);
  const std::size_t n = g.size();
  std::vector<int> colour(n, -1);
  std::vector<std::size_t> parent(n, 0);
  Verdict v;
  v.holds = true;
  v.basis = "two-colouring by breadth-first search";
  for (std::size_t root = 0; root < n && v.holds; ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    parent[root] = root;
    std::deque<std::size_t> queue{root};
    while (!queue.empty() && v.holds) {
      auto x = queue.front();
      queue.pop_front();
      for (auto y : members(adj[x])) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          parent[y] = x;
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          // Tree paths to the common ancestor close an odd cycle.
          std::vector<std::size_t> px{x}, py{y};
          while (px.back() != root) px.push_back(parent[px.back()]);
          while (py.back() != root) py.push_back(parent[py.back()]);
          while (px.size() > 1 && py.size() > 1 && px[px.size() - 2] == py[py.size() - 2]) {
            px.pop_back();
            py.pop_back();
          }
          std::vector<std::size_t> cycle(px.begin(), px.end());
          for (std::size_t k = py.size() - 1; k-- > 0;) cycle.push_back(py[k]);
          v.holds = false;
          Certificate c;
          c.kind = "odd-cycle";
          Json arr = Json::array();
          std::string text;
          for (auto u : cycle) {
            arr.push_back(g.vertices[u]);
            text += (text.empty() ? "" : " ") + g.vertices[u];
          }
          c.data["cycle"] = arr;
          c.text = text;
          v.certificate = c;
          break;
        }
      }
    }
  }
  return v;
}

namespace {

// hamiltonian[s] : the graph induced by s has a Hamiltonian cycle.
std::vector<bool> cycle_supports(const std::vector<VertexSet>& adj, std::size_t n) {
  const std::size_t full = std::size_t(1) << n;
  std::vector<bool> out(full, false);
  // reach[s] bit v: a path from min(s) through all of s ends at v.
  std::vector<VertexSet> reach(full, 0);
  for (std::size_t v = 0; v < n; ++v) reach[bit(v)] = bit(v);
  for (std::size_t s = 1; s < full; ++s) {
    if (!reach[s]) continue;
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(s));
    for (auto v : members(reach[s])) {
      if (popcount(s) >= 3 && contains(adj[v], low)) out[s] = true;
      VertexSet next = adj[v] & ~VertexSet(s) & ~all_vertices(low + 1);
      for (auto u : members(next)) reach[s | bit(u)] |= bit(u);
    }
  }
  return out;
}

std::string set_text(VertexSet s, const Clutter& g) { return format_set(s, g.vertices); }

}  // namespace

Verdict odd_cycle_pair_criterion(const Clutter& g, const GraphCaps& caps) {
  require_graph(g);
  const std::size_t n = g.size();
  if (n > caps.max_vertices) throw CapExceeded("instance too large");
  auto adj = adjacency(g);
  auto supports = cycle_supports(adj, n);
  std::vector<VertexSet> odd;
  for (std::size_t s = 0; s < supports.size(); ++s)
    if (supports[s] && popcount(s) % 2 == 1) odd.push_back(s);
  Verdict v;
  v.holds = true;
  v.basis = "any two vertex-disjoint odd cycles are joined by an edge";
  for (std::size_t i = 0; i < odd.size() && v.holds; ++i) {
    VertexSet nb = 0;
    for (auto u : members(odd[i])) nb |= adj[u];
    for (std::size_t j = i + 1; j < odd.size(); ++j)
      if (!(odd[i] & odd[j]) && !(nb & odd[j])) {
        v.holds = false;
        Certificate c;
        c.kind = "disjoint-odd-cycles";
        c.data["first"] = set_text(odd[i], g);
        c.data["second"] = set_text(odd[j], g);
        c.text = set_text(odd[i], g) + " | " + set_text(odd[j], g);
        v.certificate = c;
        break;
      }
  }
  return v;
}

std::vector<VertexSet> maximal_cliques(const Clutter& g) {
  auto adj = adjacency(g);
  std::vector<VertexSet> out;
  std::function<void(VertexSet, VertexSet, VertexSet)> bk = [&](VertexSet r, VertexSet p, VertexSet x) {
    if (!p && !x) {
      out.push_back(r);
      return;
    }
    const VertexSet px = p | x;
    std::size_t pivot = static_cast<std::size_t>(__builtin_ctzll(px));
    std::size_t best = 0;
    for (auto u : members(px))
      if (popcount(p & adj[u]) >= best) {
        best = popcount(p & adj[u]);
        pivot = u;
      }
    for (auto v : members(p & ~adj[pivot])) {
      bk(r | bit(v), p & adj[v], x & adj[v]);
      p &= ~bit(v);
      x |= bit(v);
    }
  };
  bk(0, g.vertex_set(), 0);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

Clutter clique_clutter(const Clutter& g) { return make_clutter(g.vertices, maximal_cliques(g)); }

Clutter complement_graph(const Clutter& g) {
  auto adj = adjacency(g);
  Clutter out;
  out.vertices = g.vertices;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!contains(adj[i], j)) out.edges.push_back(bit(i) | bit(j));
  std::sort(out.edges.begin(), out.edges.end(), lex_less);
  return out;
}

namespace {

// Least induced cycle (in search order) of odd length >= 5, as a vertex sequence.
std::optional<std::vector<std::size_t>> odd_hole(const std::vector<VertexSet>& adj, std::size_t n) {
  std::vector<std::size_t> path;
  std::optional<std::vector<std::size_t>> found;
  std::function<void(VertexSet)> extend = [&](VertexSet on_path) {
    const std::size_t last = path.back(), start = path.front();
    const VertexSet inner = on_path & ~bit(last) & ~bit(start);
    for (auto v : members(adj[last])) {
      if (found) return;
      if (v <= start || contains(on_path, v) || (adj[v] & inner)) continue;
      if (path.size() >= 2 && contains(adj[v], start)) {
        const std::size_t len = path.size() + 1;
        if (len >= 5 && len % 2 == 1) {
          path.push_back(v);
          found = path;
          return;
        }
        continue;
      }
      path.push_back(v);
      extend(on_path | bit(v));
      path.pop_back();
    }
  };
  for (std::size_t s = 0; s < n && !found; ++s) {
    path = {s};
    extend(bit(s));
  }
  return found;
}

}  // namespace

Verdict is_perfect(const Clutter& g, const GraphCaps& caps) {
  require_graph(g);
  const std::size_t n = g.size();
  if (n > caps.max_vertices) throw CapExceeded("instance too large");
  auto adj = adjacency(g);
  std::vector<VertexSet> co(n);
  for (std::size_t i = 0; i < n; ++i) co[i] = g.vertex_set() & ~adj[i] & ~bit(i);
  Verdict v;
  v.holds = true;
  v.basis = "no induced odd hole or odd antihole of length at least five";
  auto report = [&](const std::vector<std::size_t>& cyc, const char* kind) {
    v.holds = false;
    Certificate c;
    c.kind = kind;
    Json arr = Json::array();
    std::string text;
    for (auto u : cyc) {
      arr.push_back(g.vertices[u]);
      text += (text.empty() ? "" : " ") + g.vertices[u];
    }
    c.data["cycle"] = arr;
    c.text = text;
    v.certificate = c;
  };
  if (auto h = odd_hole(adj, n))
    report(*h, "odd-hole");
  else if (auto a = odd_hole(co, n))
    report(*a, "odd-antihole");
  return v;
}

Clutter cone_over(const Clutter& g) {
  require_graph(g);
  if (g.size() >= kMaxVertices) throw CapExceeded("clutters are limited to 64 vertices");
  auto names = g.vertices;
  std::string apex = "x" + std::to_string(g.size() + 1);
  while (std::find(names.begin(), names.end(), apex) != names.end()) apex += "'";
  names.push_back(apex);
  auto edges = g.edges;
  for (std::size_t i = 0; i < g.size(); ++i) edges.push_back(bit(i) | bit(g.size()));
  return make_clutter(std::move(names), std::move(edges), true);
}

Verdict unmixed(const Clutter& c) {
  auto covers = minimal_transversals(c.edges);
  Verdict v;
  v.holds = true;
  v.basis = "all minimal vertex covers have the same size";
  for (auto s : covers)
    if (popcount(s) != popcount(covers.front())) {
      v.holds = false;
      Certificate cert;
      cert.kind = "covers-of-different-size";
      cert.data["first"] = format_set(covers.front(), c.vertices);
      cert.data["second"] = format_set(s, c.vertices);
      cert.text = format_set(covers.front(), c.vertices) + " | " + format_set(s, c.vertices);
      v.certificate = cert;
      break;
    }
  return v;
}

std::size_t primitive_cycle_count(const Clutter& g, const GraphCaps& caps) {
  require_graph(g);
  const std::size_t n = g.size();
  if (n > caps.max_vertices) throw CapExceeded("instance too large");
  auto adj = adjacency(g);
  std::size_t count = 0;
  std::vector<std::size_t> path;
  std::function<void(VertexSet)> extend = [&](VertexSet on_path) {
    const std::size_t last = path.back(), start = path.front();
    const VertexSet inner = on_path & ~bit(last) & ~bit(start);
    for (auto v : members(adj[last])) {
      if (v <= start || contains(on_path, v) || (adj[v] & inner)) continue;
      if (path.size() >= 2 && contains(adj[v], start)) {
        // Each cycle is met in both directions; count the one with path[1] < v.
        if (path[1] < v) ++count;
        continue;
      }
      path.push_back(v);
      extend(on_path | bit(v));
      path.pop_back();
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    extend(bit(s));
  }
  return count;
}

Verdict triangle_free_dual_check(const Clutter& g) {
  require_graph(g);
  // Minimal covers of the complement are complements of maximal cliques of G.
  std::set<VertexSet> dual, star;
  for (auto s : minimal_transversals(complement_graph(g).edges)) dual.insert(s);
  for (auto e : g.edges) star.insert(g.vertex_set() & ~e);
  Verdict v;
  v.holds = dual == star;
  v.basis = "Alexander dual of the complement's edge ideal equals I(G)*";
  bool triangle = false;
  for (auto q : maximal_cliques(g))
    if (popcount(q) >= 3) triangle = true;
  const bool comparable = !complement_graph(g).edges.empty() && g.covered() == g.vertex_set();
  if (comparable && v.holds == triangle)
    throw CrossCheckFailure("dual comparison disagrees with triangle detection");
  if (!v.holds) {
    Certificate c;
    c.kind = "generator-mismatch";
    std::vector<VertexSet> only;
    std::set_symmetric_difference(dual.begin(), dual.end(), star.begin(), star.end(), std::back_inserter(only));
    c.data["generator"] = format_set(only.front(), g.vertices);
    c.data["in_dual"] = dual.count(only.front()) > 0;
    c.text = format_set(only.front(), g.vertices);
    v.certificate = c;
  }
  return v;
}

bool irreducible_induced(const std::vector<VertexSet>& edges, VertexSet s, VertexSet* split) {
  auto inside = induced_edges(edges, s);
  const std::size_t a = inside.empty() ? 0 : alpha0(inside);
  if (popcount(s) <= 1) return true;
  const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(s));
  const VertexSet rest = s & ~bit(low);
  // Enumerate the part containing the lowest vertex.
  for (VertexSet sub = rest;; sub = (sub - 1) & rest) {
    const VertexSet h1 = sub | bit(low), h2 = s & ~h1;
    if (h2) {
      auto e1 = induced_edges(inside, h1), e2 = induced_edges(inside, h2);
      const std::size_t a1 = e1.empty() ? 0 : alpha0(e1), a2 = e2.empty() ? 0 : alpha0(e2);
      if (a1 + a2 == a) {
        if (split) *split = h1;
        return false;
      }
    }
    if (!sub) break;
  }
  return true;
}

Verdict is_irreducible_graph(const Clutter& g, const GraphCaps& caps) {
  require_graph(g);
  if (g.size() > caps.max_vertices) throw CapExceeded("instance too large");
  VertexSet split = 0;
  Verdict v;
  v.holds = irreducible_induced(g.edges, g.vertex_set(), &split);
  v.basis = "no vertex split into induced subgraphs with additive covering numbers";
  if (!v.holds) {
    Certificate c;
    c.kind = "additive-split";
    c.data["first"] = format_set(split, g.vertices);
    c.data["second"] = format_set(g.vertex_set() & ~split, g.vertices);
    c.text = format_set(split, g.vertices) + " | " + format_set(g.vertex_set() & ~split, g.vertices);
    v.certificate = c;
  }
  return v;
}

std::vector<InducedSubgraph> irreducible_induced_subgraphs(const Clutter& g, const GraphCaps& caps) {
  require_graph(g);
  const std::size_t n = g.size();
  if (n > caps.max_vertices) throw CapExceeded("instance too large");
  std::vector<InducedSubgraph> direct;
  for (VertexSet s = 1; s <= g.vertex_set(); ++s)
    if (irreducible_induced(g.edges, s)) {
      auto e = induced_edges(g.edges, s);
      direct.push_back({s, e.empty() ? 0 : alpha0(e)});
    }
  std::vector<InducedSubgraph> from_basis;
  for (const auto& gen : symbolic_rees_generators(g, {std::max<std::size_t>(n, 1)})) {
    bool binary = true;
    VertexSet s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (gen.a[i] > 1) binary = false;
      if (gen.a[i] == 1) s |= bit(i);
    }
    if (binary && s) from_basis.push_back({s, static_cast<std::size_t>(gen.b.get_ui())});
  }
  auto order = [](const InducedSubgraph& x, const InducedSubgraph& y) { return x.vertices < y.vertices; };
  std::sort(direct.begin(), direct.end(), order);
  std::sort(from_basis.begin(), from_basis.end(), order);
  if (direct != from_basis)
    throw CrossCheckFailure("irreducible induced subgraphs: Hilbert basis and direct test disagree");
  std::sort(direct.begin(), direct.end(), [](const InducedSubgraph& x, const InducedSubgraph& y) {
    return lex_less(x.vertices, y.vertices);
  });
  return direct;
}

std::vector<IntVector> edge_cone_h_rep(const Clutter& g, bool irredundant, const GraphCaps& caps) {
  require_graph(g);
  const std::size_t n = g.size();
  if (n > caps.max_vertices) throw CapExceeded("instance too large");
  if (!is_connected(g)) throw InvalidInput("edge cone description needs a connected graph");
  auto adj = adjacency(g);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector h(n, Integer(0));
    h[i] = 1;
    out.push_back(h);
  }
  for (VertexSet a = 1; a <= g.vertex_set(); ++a) {
    VertexSet nb = 0;
    bool independent = true;
    for (auto v : members(a)) {
      if (adj[v] & a) independent = false;
      nb |= adj[v];
    }
    if (!independent) continue;
    IntVector h(n, Integer(0));
    for (auto v : members(nb)) h[v] += 1;
    for (auto v : members(a)) h[v] -= 1;
    out.push_back(h);
  }
  if (irredundant) {
    ConeRep c = cone_from_halfspaces(n, out);
    out = c.facet_normals;
    for (const auto& e : c.equations) {
      out.push_back(e);
      IntVector ne = e;
      for (auto& x : ne) x = -x;
      out.push_back(ne);
    }
  }
  return out;
}

bool in_edge_cone(const Clutter& g, const IntVector& a) {
  for (const auto& h : edge_cone_h_rep(g))
    if (sgn(dot(h, a)) < 0) return false;
  return true;
}

Clutter complete_admissible_clutter(std::size_t d, std::size_t g) {
  if (d < 2 || g < 2) throw InvalidInput("complete admissible clutter needs d >= 2 and g >= 2");
  if (d * g > kMaxVertices) throw CapExceeded("clutters are limited to 64 vertices");
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= d; ++k)
    for (std::size_t i = 1; i <= g; ++i) names.push_back("x" + std::to_string(k) + "_" + std::to_string(i));
  std::vector<VertexSet> edges;
  std::vector<std::size_t> idx(d, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t from) {
    if (k == d) {
      VertexSet e = 0;
      for (std::size_t j = 0; j < d; ++j) e |= bit(j * g + idx[j]);
      edges.push_back(e);
      return;
    }
    for (std::size_t i = from; i < g; ++i) {
      idx[k] = i;
      rec(k + 1, i);
    }
  };
  rec(0, 0);
  return make_clutter(std::move(names), std::move(edges));
}

}  // namespace clutter_algebra
