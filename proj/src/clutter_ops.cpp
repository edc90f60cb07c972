#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <set>

#include "clutter_algebra/clutter.hpp"
#include "clutter_algebra/errors.hpp"

namespace clutter_algebra {

namespace {

void cover_search(const std::vector<VertexSet>& edges, VertexSet chosen, std::size_t count, std::size_t& best) {
  // Disjoint unhit edges give a lower bound on what is still needed.
  VertexSet used = 0;
  std::size_t bound = 0;
  const VertexSet* first = nullptr;
  for (const auto& e : edges) {
    if (e & chosen) continue;
    if (!first) first = &e;
    if (!(e & used)) {
      used |= e;
      ++bound;
    }
  }
  if (!first) {
    best = std::min(best, count);
    return;
  }
  if (count + bound >= best) return;
  for (auto v : members(*first)) cover_search(edges, chosen | bit(v), count + 1, best);
}

void matching_search(const std::vector<VertexSet>& edges, std::size_t from, VertexSet used, std::size_t count,
                     std::size_t& best) {
  best = std::max(best, count);
  if (count + (edges.size() - from) <= best) return;
  for (std::size_t j = from; j < edges.size(); ++j)
    if (!(edges[j] & used)) matching_search(edges, j + 1, used | edges[j], count + 1, best);
}

}  // namespace

std::size_t alpha0(const std::vector<VertexSet>& edges) {
  if (std::find(edges.begin(), edges.end(), VertexSet(0)) != edges.end())
    throw InvalidInput("the empty edge has no cover");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  cover_search(edges, 0, 0, best);
  return best;
}

std::size_t beta1(const std::vector<VertexSet>& edges) {
  std::size_t best = 0;
  matching_search(edges, 0, 0, 0, best);
  return best;
}

std::size_t alpha0(const Clutter& c) { return alpha0(c.edges); }
std::size_t beta1(const Clutter& c) { return beta1(c.edges); }

Verdict koenig(const Clutter& c) {
  const std::size_t a = alpha0(c), b = beta1(c);
  Verdict v;
  v.holds = a == b;
  v.basis = "covering number equals matching number";
  if (!v.holds) {
    Certificate cert;
    cert.kind = "covering-matching-gap";
    cert.data["alpha0"] = a;
    cert.data["beta1"] = b;
    cert.text = "alpha0=" + std::to_string(a) + " beta1=" + std::to_string(b);
    v.certificate = cert;
  }
  return v;
}

namespace {

bool minor_is_koenig(const std::vector<VertexSet>& edges, std::uint64_t index, std::size_t n, VertexSet& del,
                     VertexSet& con) {
  del = con = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto digit = index % 3;
    index /= 3;
    if (digit == 1) del |= bit(v);
    if (digit == 2) con |= bit(v);
  }
  auto m = minor_edges(edges, del, con);
  // No edges, or the empty edge: nothing to cover or to match.
  if (m.empty() || m.front() == 0) return true;
  return alpha0(m) == beta1(m);
}

}  // namespace

Verdict packing_property(const Clutter& c, const PackingOptions& opt) {
  const std::size_t n = c.size();
  if (n > opt.max_vertices) throw CapExceeded("instance too large");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::uint64_t least = total;
  if (opt.execution == Execution::parallel) {
    std::atomic<std::uint64_t> found{total};
#pragma omp parallel for schedule(dynamic, 64)
    for (std::uint64_t t = 0; t < total; ++t) {
      if (t > found.load(std::memory_order_relaxed)) continue;
      VertexSet d, k;
      if (!minor_is_koenig(c.edges, t, n, d, k)) {
        auto cur = found.load();
        while (t < cur && !found.compare_exchange_weak(cur, t)) {
        }
      }
    }
    least = found.load();
  } else {
    for (std::uint64_t t = 0; t < total; ++t) {
      VertexSet d, k;
      if (!minor_is_koenig(c.edges, t, n, d, k)) {
        least = t;
        break;
      }
    }
  }
  Verdict v;
  v.holds = least == total;
  v.basis = "every minor has covering number equal to matching number";
  if (!v.holds) {
    VertexSet d, k;
    minor_is_koenig(c.edges, least, n, d, k);
    Clutter m = minor(c, d, k);
    Certificate cert;
    cert.kind = "failing-minor";
    cert.data["index"] = least;
    cert.data["deleted"] = format_set(d, c.vertices);
    cert.data["contracted"] = format_set(k, c.vertices);
    cert.data["alpha0"] = alpha0(m);
    cert.data["beta1"] = beta1(m);
    cert.text = format_clutter(drop_isolated(m));
    v.certificate = cert;
  }
  return v;
}

std::optional<std::vector<VertexSet>> perfect_matching(const Clutter& c) {
  const VertexSet all = c.covered() | c.vertex_set();
  std::vector<VertexSet> chosen;
  std::function<bool(VertexSet)> search = [&](VertexSet used) -> bool {
    if (used == all) return true;
    const std::size_t v = static_cast<std::size_t>(__builtin_ctzll(~used & all));
    for (auto e : c.edges)
      if (contains(e, v) && !(e & used)) {
        chosen.push_back(e);
        if (search(used | e)) return true;
        chosen.pop_back();
      }
    return false;
  };
  if (!search(0)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end(), lex_less);
  return chosen;
}

std::size_t alpha0_parallelization(const Clutter& c, const std::vector<std::size_t>& w) {
  if (w.size() != c.size()) throw InvalidInput("weight vector has the wrong length");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (auto cover : minimal_transversals(c.edges)) {
    std::size_t s = 0;
    for (auto v : members(cover)) s += w[v];
    best = std::min(best, s);
  }
  return best;
}

std::size_t beta1_parallelization_bound(const Clutter& c, const std::vector<std::size_t>& w, std::size_t max_entry) {
  if (w.size() != c.size()) throw InvalidInput("weight vector has the wrong length");
  for (auto x : w)
    if (x > max_entry) throw CapExceeded("weight entries exceed the cap of " + std::to_string(max_entry));
  std::vector<std::size_t> slack = w;
  std::size_t best = 0;
  std::function<void(std::size_t, std::size_t)> search = [&](std::size_t j, std::size_t value) {
    if (j == c.edges.size()) {
      best = std::max(best, value);
      return;
    }
    auto vs = members(c.edges[j]);
    std::size_t cap = std::numeric_limits<std::size_t>::max();
    for (auto v : vs) cap = std::min(cap, slack[v]);
    for (std::size_t y = cap + 1; y-- > 0;) {
      for (auto v : vs) slack[v] -= y;
      search(j + 1, value + y);
      for (auto v : vs) slack[v] += y;
    }
  };
  search(0, 0);
  return best;
}

namespace {

bool divides(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<IntVector> minimal_monomials(std::vector<IntVector> gens) {
  auto degree = [](const IntVector& a) {
    Integer s = 0;
    for (const auto& x : a) s += x;
    return s;
  };
  std::sort(gens.begin(), gens.end(), [&](const IntVector& a, const IntVector& b) {
    auto da = degree(a), db = degree(b);
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<IntVector> out;
  for (auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const IntVector& h) { return divides(h, g); }))
      out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MonomialIdeal edge_ideal(const Clutter& c) {
  MonomialIdeal out;
  out.nvars = c.size();
  for (auto e : c.edges) {
    IntVector a(c.size(), Integer(0));
    for (auto v : members(e)) a[v] = 1;
    out.generators.push_back(std::move(a));
  }
  out.generators = minimal_monomials(std::move(out.generators));
  return out;
}

MonomialIdeal symbolic_power(const Clutter& c, std::size_t i) {
  if (i == 0) throw InvalidInput("symbolic power index must be at least 1");
  const std::size_t n = c.size();
  auto covers = minimal_transversals(c.edges);
  // Entries above i never help: every cover vector is binary.
  std::vector<std::size_t> a(n, 0), sums(covers.size(), 0);
  std::vector<std::vector<std::size_t>> on_vertex(n);
  for (std::size_t k = 0; k < covers.size(); ++k)
    for (auto v : members(covers[k])) on_vertex[v].push_back(k);
  std::vector<IntVector> gens;
  std::size_t visited = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (++visited > max_cells()) throw CapExceeded("symbolic power search exceeds the cell cap");
    if (j == n) {
      for (auto s : sums)
        if (s < i) return;
      // Minimal iff lowering any positive entry breaks some cover inequality.
      for (std::size_t v = 0; v < n; ++v) {
        if (!a[v]) continue;
        bool tight = false;
        for (auto k : on_vertex[v])
          if (sums[k] == i) tight = true;
        if (!tight) return;
      }
      IntVector g(n);
      for (std::size_t v = 0; v < n; ++v) g[v] = static_cast<unsigned long>(a[v]);
      gens.push_back(std::move(g));
      return;
    }
    for (std::size_t x = 0; x <= i; ++x) {
      a[j] = x;
      for (auto k : on_vertex[j]) sums[k] += x;
      // A cover whose vertices are all assigned must already be satisfied.
      bool ok = true;
      for (auto k : on_vertex[j])
        if (sums[k] < i && (covers[k] >> (j + 1)) == 0) ok = false;
      if (ok) rec(j + 1);
      for (auto k : on_vertex[j]) sums[k] -= x;
    }
    a[j] = 0;
  };
  rec(0);
  MonomialIdeal out;
  out.nvars = n;
  out.generators = minimal_monomials(std::move(gens));
  return out;
}

MonomialIdeal ordinary_power(const Clutter& c, std::size_t i) {
  if (i == 0) throw InvalidInput("power index must be at least 1");
  MonomialIdeal base = edge_ideal(c);
  std::vector<IntVector> current = base.generators;
  for (std::size_t k = 1; k < i; ++k) {
    std::set<IntVector> next;
    for (const auto& g : current)
      for (const auto& h : base.generators) {
        IntVector s(g.size());
        for (std::size_t v = 0; v < g.size(); ++v) s[v] = g[v] + h[v];
        next.insert(std::move(s));
      }
    if (next.size() > max_cells()) throw CapExceeded("power exceeds the cell cap");
    current = minimal_monomials({next.begin(), next.end()});
  }
  MonomialIdeal out;
  out.nvars = c.size();
  out.generators = current;
  return out;
}

bool ideal_contained(const MonomialIdeal& small, const MonomialIdeal& big) {
  for (const auto& g : small.generators)
    if (std::none_of(big.generators.begin(), big.generators.end(), [&](const IntVector& h) { return divides(h, g); }))
      return false;
  return true;
}

std::string format_monomial(const IntVector& a, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (a[i] != 1) out += "^" + a[i].get_str();
  }
  return out.empty() ? "1" : out;
}

std::string format_ideal(const MonomialIdeal& ideal, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& g : ideal.generators) out += format_monomial(g, names) + '\n';
  return out;
}

Clutter clutter_from_ideal(const MonomialIdeal& ideal) {
  std::vector<VertexSet> edges;
  for (const auto& g : ideal.generators) {
    VertexSet m = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (g[v] > 1 || g[v] < 0) throw InvalidInput("ideal is not square-free");
      if (g[v] == 1) m |= bit(v);
    }
    edges.push_back(m);
  }
  return make_clutter(default_names(ideal.nvars), std::move(edges), true);
}

Clutter whisker_extension(const Clutter& c) {
  const std::size_t d = c.edge_size();
  const std::size_t n = c.size();
  if (n * d > kMaxVertices) throw CapExceeded("whisker extension exceeds 64 vertices");
  std::vector<std::string> names = c.vertices;
  std::vector<VertexSet> edges = c.edges;
  for (std::size_t i = 0; i < n; ++i) {
    VertexSet e = bit(i);
    for (std::size_t j = 1; j < d; ++j) {
      e |= bit(names.size());
      names.push_back("y" + std::to_string(i + 1) + "_" + std::to_string(j));
    }
    edges.push_back(e);
  }
  return make_clutter(std::move(names), std::move(edges), true);
}

Verdict is_balanced(const IntMatrix& m, const BalancedOptions& opt) {
  if (!m.is_binary()) throw InvalidInput("is_balanced needs a binary matrix");
  const std::size_t r = m.rows(), nodes = m.rows() + m.cols();
  if (nodes > opt.max_rows_plus_cols) throw CapExceeded("instance too large");
  // Row/column bipartite graph: rows are 0..r-1, columns r..
  std::vector<VertexSet> adj(nodes, 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) == 1) {
        adj[i] |= bit(r + j);
        adj[r + j] |= bit(i);
      }
  std::vector<std::size_t> path;
  std::optional<std::vector<std::size_t>> hole;
  // Extend chordless paths from `start` through vertices above it.
  std::function<void(VertexSet)> extend = [&](VertexSet on_path) {
    if (hole) return;
    const std::size_t last = path.back(), start = path.front();
    VertexSet inner = on_path & ~bit(last) & ~bit(start);
    for (auto v : members(adj[last])) {
      if (v <= start || contains(on_path, v)) continue;
      if (adj[v] & inner) continue;  // chord to the interior of the path
      if (path.size() >= 2 && contains(adj[v], start)) {
        const std::size_t len = path.size() + 1;
        if (len >= 6 && len % 4 == 2) {
          path.push_back(v);
          hole = path;
          return;
        }
        continue;
      }
      path.push_back(v);
      extend(on_path | bit(v));
      path.pop_back();
      if (hole) return;
    }
  };
  for (std::size_t s = 0; s < nodes && !hole; ++s) {
    path = {s};
    extend(bit(s));
  }
  Verdict v;
  v.holds = !hole;
  v.basis = "no chordless cycle of length 2 mod 4 in the row-column graph";
  if (hole) {
    std::vector<std::size_t> rows, cols;
    for (auto x : *hole) (x < r ? rows : cols).push_back(x < r ? x : x - r);
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    Certificate cert;
    cert.kind = "odd-cycle-submatrix";
    cert.data["rows"] = rows;
    cert.data["cols"] = cols;
    IntMatrix sub(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(rows[i], cols[j]);
    cert.text = format_matrix(sub);
    v.certificate = cert;
  }
  return v;
}

Verdict vertex_critical(const Clutter& c) {
  const std::size_t a = alpha0(c);
  Verdict v;
  v.holds = true;
  v.basis = "deleting any vertex lowers the covering number";
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto rest = minor_edges(c.edges, bit(i), 0);
    const std::size_t b = rest.empty() ? 0 : alpha0(rest);
    if (b >= a) {
      v.holds = false;
      Certificate cert;
      cert.kind = "non-critical-vertex";
      cert.data["vertex"] = c.vertices[i];
      cert.data["alpha0"] = a;
      cert.data["alpha0_after_deletion"] = b;
      cert.text = c.vertices[i];
      v.certificate = cert;
      break;
    }
  }
  return v;
}

CoverPartition disjoint_cover_partition(const Clutter& c, bool require_uniform) {
  if (require_uniform) c.edge_size();
  CoverPartition out;
  std::vector<VertexSet> edges = c.edges;
  std::vector<VertexSet> covers;
  for (std::size_t stage = 1;; ++stage) {
    auto candidates = minimal_transversals(edges);
    std::optional<VertexSet> pick;
    for (auto t : candidates)
      if (std::all_of(edges.begin(), edges.end(), [&](VertexSet e) { return popcount(e & t) == 1; })) {
        pick = t;
        break;
      }
    if (!pick) {
      out.explanation = "stage " + std::to_string(stage) + ": no minimal vertex cover meets every edge exactly once";
      return out;
    }
    covers.push_back(*pick);
    std::size_t emptied = 0;
    for (auto& e : edges) {
      e &= ~*pick;
      if (!e) ++emptied;
    }
    if (emptied == edges.size()) break;
    if (emptied) {
      out.explanation = "stage " + std::to_string(stage) + ": some edges are exhausted before others";
      return out;
    }
  }
  VertexSet all = 0;
  for (auto s : covers) all |= s;
  if (all != c.vertex_set()) {
    out.explanation = "the covers do not exhaust the vertex set";
    return out;
  }
  out.covers = covers;
  out.explanation = "partition into " + std::to_string(covers.size()) + " disjoint minimal vertex covers";
  return out;
}

}  // namespace clutter_algebra
