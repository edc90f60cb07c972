#include "clutter_algebra/poset.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <sstream>

#include "clutter_algebra/errors.hpp"

namespace clutter_algebra {

Poset make_poset(std::vector<std::string> elements, std::vector<std::pair<std::size_t, std::size_t>> relations) {
  const std::size_t n = elements.size();
  if (n > kMaxVertices) throw CapExceeded("posets are limited to 64 elements");
  Poset p;
  p.elements = std::move(elements);
  p.above.assign(n, 0);
  for (auto [a, b] : relations) {
    if (a >= n || b >= n) throw InvalidInput("relation uses an unknown element");
    if (a == b) throw InvalidInput("relation a < a");
    p.above[a] |= bit(b);
  }
  // Transitive closure by repeated propagation.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      VertexSet up = p.above[a];
      for (auto b : members(p.above[a])) up |= p.above[b];
      if (up != p.above[a]) {
        p.above[a] = up;
        changed = true;
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (contains(p.above[a], a)) throw InvalidInput("relations contain a cycle");
  // Keep only cover relations.
  for (std::size_t a = 0; a < n; ++a)
    for (auto b : members(p.above[a])) {
      bool cover = true;
      for (auto c : members(p.above[a]))
        if (contains(p.above[c], b)) cover = false;
      if (cover) p.covers.emplace_back(a, b);
    }
  return p;
}

Poset parse_poset(std::istream& in) {
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  auto id = [&](const std::string& s) {
    auto [it, fresh] = index.emplace(s, names.size());
    if (fresh) names.push_back(s);
    return it->second;
  };
  std::string line;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    std::istringstream ls(line);
    std::string a, op, b, extra;
    if (!(ls >> a)) continue;
    if (!(ls >> op)) {
      id(a);  // a lone element
      continue;
    }
    if (op != "<" || !(ls >> b) || (ls >> extra)) throw InvalidInput("poset lines must read 'a < b'");
    rel.emplace_back(id(a), id(b));
  }
  if (names.empty()) throw InvalidInput("empty poset");
  return make_poset(std::move(names), std::move(rel));
}

Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  return parse_poset(in);
}

std::string format_poset(const Poset& p) {
  std::string out;
  std::vector<bool> mentioned(p.size(), false);
  for (auto [a, b] : p.covers) {
    out += p.elements[a] + " < " + p.elements[b] + "\n";
    mentioned[a] = mentioned[b] = true;
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!mentioned[i]) out += p.elements[i] + "\n";
  return out;
}

Clutter comparability_graph(const Poset& p) {
  Clutter g;
  g.vertices = p.elements;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (auto b : members(p.above[a])) g.edges.push_back(bit(a) | bit(b));
  std::sort(g.edges.begin(), g.edges.end(), lex_less);
  return g;
}

namespace {

// Maximum matching from "lower copies" to "upper copies" along a < b.
std::vector<long> order_matching(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<long> match_up(n, -1);  // match_up[b] = a
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> seen(n, false);
    std::function<bool(std::size_t)> augment = [&](std::size_t x) -> bool {
      for (auto b : members(p.above[x])) {
        if (seen[b]) continue;
        seen[b] = true;
        if (match_up[b] < 0 || augment(static_cast<std::size_t>(match_up[b]))) {
          match_up[b] = static_cast<long>(x);
          return true;
        }
      }
      return false;
    };
    augment(a);
  }
  return match_up;
}

}  // namespace

Dilworth dilworth(const Poset& p) {
  const std::size_t n = p.size();
  auto match_up = order_matching(p);
  std::vector<long> match_down(n, -1);
  for (std::size_t b = 0; b < n; ++b)
    if (match_up[b] >= 0) match_down[static_cast<std::size_t>(match_up[b])] = static_cast<long>(b);
  Dilworth d;
  for (std::size_t x = 0; x < n; ++x) {
    if (match_up[x] >= 0) continue;  // not the bottom of a chain
    VertexSet chain = 0;
    for (long y = static_cast<long>(x); y >= 0; y = match_down[static_cast<std::size_t>(y)]) chain |= bit(static_cast<std::size_t>(y));
    d.chains.push_back(chain);
  }
  // Koenig: alternating reachability from unmatched lower copies.
  std::vector<bool> lower_reached(n, false), upper_reached(n, false);
  std::function<void(std::size_t)> walk = [&](std::size_t a) {
    if (lower_reached[a]) return;
    lower_reached[a] = true;
    for (auto b : members(p.above[a]))
      if (!upper_reached[b] && match_down[a] != static_cast<long>(b)) {
        upper_reached[b] = true;
        if (match_up[b] >= 0) walk(static_cast<std::size_t>(match_up[b]));
      }
  };
  for (std::size_t a = 0; a < n; ++a)
    if (match_down[a] < 0) walk(a);
  // Minimum vertex cover = unreached lower copies plus reached upper copies.
  for (std::size_t x = 0; x < n; ++x)
    if (lower_reached[x] && !upper_reached[x]) d.max_antichain |= bit(x);
  if (popcount(d.max_antichain) != d.chains.size())
    throw CrossCheckFailure("largest antichain differs from the number of chains");
  for (std::size_t a = 0; a < n; ++a)
    if (contains(d.max_antichain, a) && (p.above[a] & d.max_antichain))
      throw CrossCheckFailure("Dilworth antichain is not an antichain");
  std::sort(d.chains.begin(), d.chains.end(), lex_less);
  return d;
}

Mirsky mirsky(const Poset& p) {
  const std::size_t n = p.size();
  // level[x] = number of elements on a longest chain ending at x.
  std::vector<std::size_t> level(n, 0), pred(n, n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::vector<std::size_t> below(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (auto b : members(p.above[a])) ++below[b];
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  for (auto x : order) {
    level[x] = 1;
    for (std::size_t a = 0; a < n; ++a)
      if (p.less(a, x) && level[a] + 1 > level[x]) {
        level[x] = level[a] + 1;
        pred[x] = a;
      }
  }
  Mirsky m;
  std::size_t height = 0, top = 0;
  for (std::size_t x = 0; x < n; ++x)
    if (level[x] > height) {
      height = level[x];
      top = x;
    }
  m.antichains.assign(height, 0);
  for (std::size_t x = 0; x < n; ++x) m.antichains[level[x] - 1] |= bit(x);
  for (std::size_t x = top; x != n; x = pred[x]) m.max_chain.push_back(x);
  std::reverse(m.max_chain.begin(), m.max_chain.end());
  if (m.max_chain.size() != m.antichains.size())
    throw CrossCheckFailure("longest chain differs from the number of antichains");
  for (auto s : m.antichains)
    for (auto a : members(s))
      if (p.above[a] & s) throw CrossCheckFailure("Mirsky layer is not an antichain");
  return m;
}

Poset random_poset(std::size_t n, double density, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) rel.emplace_back(perm[i], perm[j]);
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
  return make_poset(std::move(names), std::move(rel));
}

}  // namespace clutter_algebra
