#include "clutter_algebra/symbolic.hpp"

#include <algorithm>
#include <set>

#include "clutter_algebra/errors.hpp"
#include "clutter_algebra/graph.hpp"

namespace clutter_algebra {

bool operator<(const MonomialGen& x, const MonomialGen& y) {
  if (x.b != y.b) return x.b < y.b;
  return x.a < y.a;
}

std::string format_generator(const MonomialGen& g, const std::vector<std::string>& names) {
  std::string out = is_zero(g.a) ? "" : format_monomial(g.a, names);
  if (g.b == 0) return out.empty() ? "1" : out;
  if (!out.empty()) out += " * ";
  return out + "t^" + g.b.get_str();
}

Json to_json(const MonomialGen& g) {
  Json a = Json::array();
  for (const auto& x : g.a) a.push_back(x.get_si());
  return Json{{"a", a}, {"b", g.b.get_si()}};
}

namespace {

IntVector unit(std::size_t dim, std::size_t i) {
  IntVector e(dim, Integer(0));
  e[i] = 1;
  return e;
}

std::vector<IntVector> lifted_halfspaces(std::size_t n, const std::vector<VertexSet>& sets) {
  std::vector<IntVector> hs;
  for (std::size_t i = 0; i <= n; ++i) hs.push_back(unit(n + 1, i));
  for (auto s : sets) {
    IntVector h(n + 1, Integer(0));
    for (auto v : members(s)) h[v] = 1;
    h[n] = -1;
    hs.push_back(std::move(h));
  }
  return hs;
}

std::vector<MonomialGen> as_generators(const std::vector<IntVector>& elements, std::size_t n) {
  std::vector<MonomialGen> out;
  for (const auto& x : elements) out.push_back({IntVector(x.begin(), x.begin() + static_cast<long>(n)), x[n]});
  std::sort(out.begin(), out.end());
  return out;
}

void check_cap(const Clutter& c, const SymbolicCaps& caps) {
  if (c.size() > caps.max_vertices) throw CapExceeded("instance too large");
}

}  // namespace

ConeRep simis_cone(const Clutter& c) {
  return cone_from_halfspaces(c.size() + 1, lifted_halfspaces(c.size(), minimal_transversals(c.edges)));
}

ConeRep cover_cone(const Clutter& c) { return cone_from_halfspaces(c.size() + 1, lifted_halfspaces(c.size(), c.edges)); }

std::vector<MonomialGen> symbolic_rees_generators(const Clutter& c, const SymbolicCaps& caps) {
  check_cap(c, caps);
  return as_generators(hilbert_basis(simis_cone(c), caps.execution).elements, c.size());
}

std::vector<MonomialGen> cover_algebra_generators(const Clutter& c, const SymbolicCaps& caps) {
  check_cap(c, caps);
  return as_generators(hilbert_basis(cover_cone(c), caps.execution).elements, c.size());
}

std::vector<MonomialGen> graph_irreducible_covers(const Clutter& g) {
  require_graph(g);
  const std::size_t n = g.size();
  std::vector<MonomialGen> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({unit(n, i), 0});
  for (auto s : minimal_transversals(g.edges)) {
    IntVector a(n, Integer(0));
    for (auto v : members(s)) a[v] = 1;
    out.push_back({a, 1});
  }
  if (!is_bipartite(g).holds) {
    out.push_back({IntVector(n, Integer(1)), 2});
    auto adj = adjacency(g);
    const VertexSet all = g.vertex_set();
    for (VertexSet a = 1; a <= all; ++a) {
      VertexSet nb = 0;
      bool independent = true;
      for (auto v : members(a)) {
        if (adj[v] & a) independent = false;
        nb |= adj[v];
      }
      if (!independent) continue;
      const VertexSet rest = all & ~(a | nb);
      if (!rest) continue;
      // N(A) must not cover every edge.
      bool nb_covers = true;
      for (auto e : g.edges)
        if (!(e & nb)) nb_covers = false;
      if (nb_covers) continue;
      auto inside = induced_edges(g.edges, rest);
      VertexSet touched = 0;
      for (auto e : inside) touched |= e;
      if (touched != rest) continue;
      Clutter sub;
      sub.vertices = g.vertices;
      sub.edges = inside;
      if (is_bipartite(sub).holds) continue;
      IntVector vec(n, Integer(1));
      for (auto v : members(a)) vec[v] = 0;
      for (auto v : members(nb)) vec[v] = 2;
      out.push_back({vec, 2});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MonomialGen> rees_cone_facet_covers(const Clutter& c) {
  const std::size_t n = c.size();
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(unit(n + 1, i));
  for (auto e : c.edges) {
    IntVector v(n + 1, Integer(0));
    for (auto x : members(e)) v[x] = 1;
    v[n] = 1;
    gens.push_back(std::move(v));
  }
  std::vector<MonomialGen> out;
  for (const auto& f : cone_irreducible_rep(gens).facet_normals)
    if (f[n] < 0) out.push_back({IntVector(f.begin(), f.begin() + static_cast<long>(n)), -f[n]});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Integer cover_value(const Clutter& c, const IntVector& a) {
  Integer best = -1;
  for (auto e : c.edges) {
    Integer s = 0;
    for (auto v : members(e)) s += a[v];
    if (best < 0 || s < best) best = s;
  }
  return best;
}

}  // namespace

bool is_cover(const Clutter& c, const IntVector& a, const Integer& b) {
  if (a.size() != c.size()) throw InvalidInput("cover vector has the wrong length");
  for (const auto& x : a)
    if (x < 0) return false;
  return b >= 0 && cover_value(c, a) >= b;
}

Verdict is_irreducible_cover(const Clutter& c, const IntVector& a, const Integer& b) {
  if (!is_cover(c, a, b)) throw InvalidInput("not a cover");
  const std::size_t n = a.size();
  Integer cells = 1;
  for (const auto& x : a) cells *= x + 1;
  if (cells > max_cells()) throw CapExceeded("cover split search exceeds the cell cap");
  Verdict v;
  v.holds = true;
  v.basis = "no split into an i-cover and a j-cover with i + j = b";
  IntVector part(n, Integer(0));
  for (;;) {
    std::size_t pos = 0;
    while (pos < n && part[pos] == a[pos]) part[pos++] = 0;
    if (pos == n) break;
    part[pos] += 1;
    IntVector rest(n);
    for (std::size_t i = 0; i < n; ++i) rest[i] = a[i] - part[i];
    if (is_zero(rest)) continue;
    Integer i = std::min(b, cover_value(c, part));
    Integer j = b - i;
    if (cover_value(c, rest) >= j) {
      v.holds = false;
      Certificate cert;
      cert.kind = "cover-decomposition";
      cert.data["parts"] = Json::array({to_json(MonomialGen{part, i}), to_json(MonomialGen{rest, j})});
      cert.text = format_generator({part, i}, c.vertices) + " + " + format_generator({rest, j}, c.vertices);
      v.certificate = cert;
      break;
    }
  }
  return v;
}

MonomialGen cone_generator_lift(const Clutter& g, const IntVector& facet) {
  require_graph(g);
  const std::size_t n = g.size();
  if (facet.size() != n + 1) throw InvalidInput("facet must have n + 1 entries");
  Integer sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (facet[i] < 1) throw InvalidInput("hypothesis requires a_i >= 1");
    sum += facet[i];
  }
  const Integer b = -facet[n];
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(unit(n + 1, i));
  for (auto s : minimal_transversals(g.edges)) {
    IntVector u(n + 1, Integer(0));
    for (auto v : members(s)) u[v] = 1;
    u[n] = 1;
    gens.push_back(std::move(u));
  }
  auto facets = cone_irreducible_rep(gens).facet_normals;
  if (std::find(facets.begin(), facets.end(), facet) == facets.end())
    throw InvalidInput("not a facet of the Rees cone of the cover ideal");
  IntVector a(facet.begin(), facet.begin() + static_cast<long>(n));
  a.push_back(sum - b);
  return {a, sum};
}

MonomialGen iterated_cone_lift(const Clutter& g, const IntVector& facet, std::size_t r) {
  if (r == 0) throw InvalidInput("lift count must be at least 1");
  Clutter h = g;
  IntVector f = facet;
  MonomialGen out;
  for (std::size_t k = 0; k < r; ++k) {
    out = cone_generator_lift(h, f);
    h = cone_over(h);
    f = out.a;
    f.push_back(-out.b);
  }
  return out;
}

Verdict clique_generators_check(const Clutter& g, const SymbolicCaps& caps) {
  require_graph(g);
  check_cap(g, caps);
  const std::size_t n = g.size();
  auto adj = adjacency(g);
  std::set<MonomialGen> cliques;
  for (VertexSet s = 1; s <= g.vertex_set(); ++s) {
    auto vs = members(s);
    if (!std::all_of(vs.begin(), vs.end(), [&](std::size_t v) { return (s & ~bit(v) & ~adj[v]) == 0; })) continue;
    IntVector a(n, Integer(0));
    for (auto v : members(s)) a[v] = 1;
    cliques.insert({a, static_cast<unsigned long>(popcount(s) - 1)});
  }
  auto gens = symbolic_rees_generators(g, caps);
  std::set<MonomialGen> sym(gens.begin(), gens.end());
  Verdict v;
  v.holds = sym == cliques;
  v.basis = "symbolic Rees generators are exactly the clique monomials";
  if (!v.holds) {
    std::vector<MonomialGen> extra;
    std::set_difference(sym.begin(), sym.end(), cliques.begin(), cliques.end(), std::back_inserter(extra));
    if (extra.empty())
      std::set_difference(cliques.begin(), cliques.end(), sym.begin(), sym.end(), std::back_inserter(extra));
    Certificate cert;
    cert.kind = "non-clique-generator";
    cert.data["generator"] = to_json(extra.front());
    cert.text = format_generator(extra.front(), g.vertices);
    v.certificate = cert;
  }
  if (v.holds != is_perfect(g, {std::max<std::size_t>(n, 12)}).holds)
    throw CrossCheckFailure("clique generator comparison disagrees with the perfect graph test");
  return v;
}

}  // namespace clutter_algebra
