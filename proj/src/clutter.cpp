#include "clutter_algebra/clutter.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "clutter_algebra/errors.hpp"

namespace clutter_algebra {

std::vector<std::size_t> members(VertexSet s) {
  std::vector<std::size_t> out;
  while (s) {
    out.push_back(static_cast<std::size_t>(__builtin_ctzll(s)));
    s &= s - 1;
  }
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  while (a && b) {
    auto x = __builtin_ctzll(a), y = __builtin_ctzll(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

VertexSet Clutter::covered() const {
  VertexSet s = 0;
  for (auto e : edges) s |= e;
  return s;
}

bool Clutter::uniform() const {
  for (auto e : edges)
    if (popcount(e) != popcount(edges.front())) return false;
  return !edges.empty();
}

std::size_t Clutter::edge_size() const {
  if (!uniform()) throw InvalidInput("clutter is not uniform");
  return popcount(edges.front());
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<VertexSet> minimalize(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> out;
  for (auto s : sets) {
    bool dominated = false;
    for (auto t : out)
      if ((t & s) == t) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

Clutter make_clutter(std::vector<std::string> vertices, std::vector<VertexSet> edges, bool allow_isolated) {
  const std::size_t n = vertices.size();
  if (n > kMaxVertices) throw CapExceeded("clutters are limited to 64 vertices");
  if (edges.empty()) throw InvalidInput("clutter has no edges");
  std::set<std::string> names(vertices.begin(), vertices.end());
  if (names.size() != n) throw InvalidInput("duplicate vertex name");
  for (auto e : edges) {
    if (e == 0) throw InvalidInput("empty edge");
    if (e & ~all_vertices(n)) throw InvalidInput("edge uses an unknown vertex");
  }
  std::sort(edges.begin(), edges.end(), lex_less);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    if (edges[i] == edges[i + 1]) throw InvalidInput("repeated edge");
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (i != j && (edges[i] & edges[j]) == edges[i])
        throw InvalidInput("edges are not a clutter: one edge contains another");
  Clutter c{std::move(vertices), std::move(edges)};
  if (!allow_isolated && c.covered() != c.vertex_set()) throw InvalidInput("isolated vertex");
  return c;
}

Clutter make_clutter(std::size_t n, const std::vector<std::vector<std::size_t>>& edges, bool allow_isolated) {
  if (n > kMaxVertices) throw CapExceeded("clutters are limited to 64 vertices");
  std::vector<VertexSet> masks;
  for (const auto& e : edges) {
    VertexSet m = 0;
    for (auto v : e) {
      if (v >= n) throw InvalidInput("edge uses an unknown vertex");
      m |= bit(v);
    }
    masks.push_back(m);
  }
  return make_clutter(default_names(n), std::move(masks), allow_isolated);
}

IntMatrix incidence_matrix(const Clutter& c) {
  IntMatrix a(c.size(), c.edges.size());
  for (std::size_t j = 0; j < c.edges.size(); ++j)
    for (auto v : members(c.edges[j])) a(v, j) = 1;
  return a;
}

Clutter clutter_from_matrix(const IntMatrix& a, bool allow_isolated) {
  if (!a.is_binary()) throw InvalidInput("incidence matrix must be binary");
  if (a.rows() > kMaxVertices) throw CapExceeded("clutters are limited to 64 vertices");
  std::vector<VertexSet> edges;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    VertexSet m = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (a(i, j) == 1) m |= bit(i);
    edges.push_back(m);
  }
  return make_clutter(default_names(a.rows()), std::move(edges), allow_isolated);
}

std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& edges) {
  std::vector<VertexSet> current{0};
  for (auto e : edges) {
    if (e == 0) return {};
    std::vector<VertexSet> next;
    for (auto t : current) {
      if (t & e) {
        next.push_back(t);
        continue;
      }
      for (auto v : members(e)) next.push_back(t | bit(v));
    }
    current = minimalize(std::move(next));
    if (current.size() > max_cells()) throw CapExceeded("transversal enumeration exceeds the cell cap");
  }
  return current;
}

CoverSet minimal_vertex_covers(const Clutter& c) {
  CoverSet out;
  out.covers = minimal_transversals(c.edges);
  for (auto s : out.covers) {
    IntVector u(c.size(), Integer(0));
    for (auto v : members(s)) u[v] = 1;
    out.vectors.push_back(std::move(u));
  }
  return out;
}

Clutter blocker(const Clutter& c) {
  return make_clutter(c.vertices, minimal_transversals(c.edges), true);
}

IntMatrix dual_star(const IntMatrix& a) {
  if (!a.is_binary()) throw InvalidInput("dual_star needs a binary matrix");
  IntMatrix s(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = 1 - a(i, j);
  return s;
}

DualStar dual_star(const Clutter& c) {
  DualStar out;
  out.matrix = dual_star(incidence_matrix(c));
  if (out.matrix.has_zero_column()) throw InvalidInput("an edge contains every vertex; its complement is empty");
  out.clutter = clutter_from_matrix(out.matrix, true);
  out.clutter.vertices = c.vertices;
  return out;
}

std::vector<VertexSet> minor_edges(const std::vector<VertexSet>& edges, VertexSet deleted, VertexSet contracted) {
  std::vector<VertexSet> out;
  for (auto e : edges)
    if (!(e & deleted)) out.push_back(e & ~contracted);
  if (std::find(out.begin(), out.end(), VertexSet(0)) != out.end()) return {0};
  return minimalize(std::move(out));
}

Clutter minor(const Clutter& c, VertexSet deleted, VertexSet contracted) {
  if (deleted & contracted) throw InvalidInput("deleted and contracted sets overlap");
  if ((deleted | contracted) & ~c.vertex_set()) throw InvalidInput("minor uses an unknown vertex");
  const VertexSet keep = c.vertex_set() & ~(deleted | contracted);
  std::vector<std::size_t> index(c.size(), 0);
  Clutter out;
  for (auto v : members(keep)) {
    index[v] = out.vertices.size();
    out.vertices.push_back(c.vertices[v]);
  }
  for (auto e : minor_edges(c.edges, deleted, contracted)) {
    VertexSet m = 0;
    for (auto v : members(e)) m |= bit(index[v]);
    out.edges.push_back(m);
  }
  std::sort(out.edges.begin(), out.edges.end(), lex_less);
  return out;
}

Clutter drop_isolated(const Clutter& c) {
  Clutter out;
  auto keep = members(c.covered());
  for (auto v : keep) out.vertices.push_back(c.vertices[v]);
  for (auto e : c.edges) {
    VertexSet m = 0;
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (contains(e, keep[j])) m |= bit(j);
    out.edges.push_back(m);
  }
  std::sort(out.edges.begin(), out.edges.end(), lex_less);
  return out;
}

Clutter parallelization(const Clutter& c, const std::vector<std::size_t>& w) {
  if (w.size() != c.size()) throw InvalidInput("weight vector has the wrong length");
  std::vector<std::vector<std::size_t>> copies(c.size());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t k = 1; k <= w[i]; ++k) {
      if (names.size() == kMaxVertices) throw CapExceeded("parallelization exceeds 64 vertices");
      copies[i].push_back(names.size());
      names.push_back(k == 1 ? c.vertices[i] : c.vertices[i] + "^" + std::to_string(k));
    }
  std::vector<VertexSet> edges;
  for (auto e : c.edges) {
    auto vs = members(e);
    if (std::any_of(vs.begin(), vs.end(), [&](std::size_t v) { return w[v] == 0; })) continue;
    std::vector<std::size_t> pick(vs.size(), 0);
    for (;;) {
      VertexSet m = 0;
      for (std::size_t k = 0; k < vs.size(); ++k) m |= bit(copies[vs[k]][pick[k]]);
      edges.push_back(m);
      std::size_t pos = 0;
      while (pos < vs.size() && ++pick[pos] == copies[vs[pos]].size()) pick[pos++] = 0;
      if (pos == vs.size()) break;
    }
  }
  Clutter out;
  out.vertices = std::move(names);
  out.edges = std::move(edges);
  std::sort(out.edges.begin(), out.edges.end(), lex_less);
  return out;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Clutter parse_clutter(std::istream& in, bool allow_isolated) {
  std::string line;
  std::vector<std::string> names;
  bool have_header = false;
  std::map<std::string, std::size_t> index;
  std::vector<VertexSet> edges;
  while (std::getline(in, line)) {
    line = strip_comment(line);
    if (!have_header) {
      auto toks = split_ws(line);
      if (toks.empty()) continue;
      if (toks[0] != "vertices:") throw InvalidInput("clutter file must start with 'vertices:'");
      names.assign(toks.begin() + 1, toks.end());
      if (names.size() > kMaxVertices) throw CapExceeded("clutters are limited to 64 vertices");
      for (std::size_t i = 0; i < names.size(); ++i)
        if (!index.emplace(names[i], i).second) throw InvalidInput("duplicate vertex name " + names[i]);
      have_header = true;
      continue;
    }
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    VertexSet m = 0;
    for (const auto& t : toks) {
      auto it = index.find(t);
      if (it == index.end()) throw InvalidInput("unknown vertex " + t);
      m |= bit(it->second);
    }
    edges.push_back(m);
  }
  if (!have_header) throw InvalidInput("missing 'vertices:' line");
  return make_clutter(std::move(names), std::move(edges), allow_isolated);
}

Clutter parse_clutter(const std::string& text, bool allow_isolated) {
  std::istringstream in(text);
  return parse_clutter(in, allow_isolated);
}

std::string format_set(VertexSet s, const std::vector<std::string>& names) {
  std::string out;
  for (auto v : members(s)) {
    if (!out.empty()) out += ' ';
    out += names[v];
  }
  return out;
}

std::string format_clutter(const Clutter& c) {
  std::string out = "vertices:";
  for (const auto& v : c.vertices) out += " " + v;
  out += '\n';
  for (auto e : c.edges) out += format_set(e, c.vertices) + '\n';
  return out;
}

}  // namespace clutter_algebra
