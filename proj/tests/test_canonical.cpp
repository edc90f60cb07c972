#include <doctest.h>

#include <functional>
#include <set>

#include "clutter_algebra/canonical.hpp"
#include "clutter_algebra/enumerate.hpp"
#include "clutter_algebra/errors.hpp"
#include "clutter_algebra/graph.hpp"
#include "clutter_algebra/polyhedra.hpp"
#include "clutter_algebra/rounding.hpp"
#include "families.hpp"
#include "helpers.hpp"

using namespace clutter_algebra;
using namespace testing;

namespace {

// Minimal interior lattice points (a, b) of the cone over {(w, 1) : w <= v_i},
// scanning entries of a up to b and b up to b_max.
std::set<MonomialGen> interior_scan(const IntMatrix& a, long b_max) {
  std::vector<IntVector> gens;
  for (auto w : lower_vectors(a)) {
    w.push_back(1);
    gens.push_back(w);
  }
  const auto cone = cone_irreducible_rep(gens);
  const std::size_t n = a.rows();
  auto interior = [&](const IntVector& p) {
    for (const auto& f : cone.facet_normals)
      if (dot(f, p) <= 0) return false;
    return true;
  };
  std::vector<IntVector> points;
  IntVector p(n + 1);
  for (long b = 1; b <= b_max; ++b) {
    p[n] = b;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == n) {
        if (interior(p)) points.push_back(p);
        return;
      }
      for (long k = 0; k <= b; ++k) {
        p[i] = k;
        go(i + 1);
      }
    };
    go(0);
  }
  std::set<MonomialGen> out;
  for (const auto& x : points) {
    bool minimal = true;
    for (const auto& y : points) {
      if (x == y) continue;
      IntVector r(n + 1);
      for (std::size_t i = 0; i <= n; ++i) r[i] = x[i] - y[i];
      if (cone.contains(r)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert({IntVector(x.begin(), x.end() - 1), x[n]});
  }
  return out;
}

std::set<RatVector> ells(const IntMatrix& a) {
  std::set<RatVector> out;
  for (const auto& m : maximal_vertices(a)) out.insert(m.ell);
  return out;
}

}  // namespace

TEST_SUITE("canonical-invariants") {
  TEST_CASE("maximal vertices") {
    auto k2 = maximal_vertices(incidence_matrix(complete_graph(2)));
    CHECK(ells(incidence_matrix(complete_graph(2))) == std::set<RatVector>{rv({"1", "0"}), rv({"0", "1"})});
    for (const auto& m : k2) CHECK(m.d == 1);
    CHECK(ells(incidence_matrix(path_graph(3))) == std::set<RatVector>{rv({"0", "1", "0"}), rv({"1", "0", "1"})});
    bool half = false;
    for (const auto& m : maximal_vertices(incidence_matrix(cycle_graph(3))))
      if (m.ell == rv({"1/2", "1/2", "1/2"})) {
        half = true;
        CHECK(m.d == 2);
        CHECK(m.norm == Rational(3, 2));
      }
    CHECK(half);
  }

  TEST_CASE("a-invariants") {
    CHECK(a_invariant_S(incidence_matrix(complete_graph(2))) == -2);
    CHECK(a_invariant_S(incidence_matrix(path_graph(3))) == -3);
    for (std::size_t n = 2; n <= 5; ++n)
      CHECK(a_invariant_S(incidence_matrix(clique_clutter(complete_graph(n)))) == -2);
    CHECK_THROWS_AS(a_invariant_S(incidence_matrix(disjoint_cycles(3, 2))), InvalidInput);
  }

  TEST_CASE("canonical module generators match an interior scan") {
    const auto k2 = incidence_matrix(complete_graph(2));
    auto m = canonical_module_gens(k2, 4);
    CHECK(m.generators == std::vector<MonomialGen>{{iv({1, 1}), 2}});
    CHECK(interior_scan(k2, 4) == std::set<MonomialGen>{{iv({1, 1}), 2}});

    const auto single = IntMatrix::from_columns({iv({1})}, 1);
    auto s = canonical_module_gens(single, 4);
    CHECK(s.generators == std::vector<MonomialGen>{{iv({1}), 2}});
    CHECK(s.a_invariant == -2);

    const auto p3 = incidence_matrix(path_graph(3));
    auto p = canonical_module_gens(p3, 5);
    CHECK(p.generators.size() >= 2);
    CHECK(std::set<MonomialGen>(p.generators.begin(), p.generators.end()) == interior_scan(p3, 5));
    CHECK(p.a_invariant == -p.generators.front().b);
  }

  TEST_CASE("a-invariant equals minus the least interior degree") {
    for (std::size_t n = 2; n <= 4; ++n) {
      EnumerationOptions opt;
      opt.vertices = n;
      opt.max_edges = 3;
      for (const auto& c : enumerate_clutters(opt)) {
        const auto a = incidence_matrix(c);
        RoundingOptions ro;
        ro.falsifier_bound = 0;
        if (!irp_le(a, ro).holds) continue;
        const auto scan = interior_scan(a, 5);
        REQUIRE_FALSE(scan.empty());
        CHECK(a_invariant_S(a) == -scan.begin()->b);
      }
    }
  }

  TEST_CASE("Gorenstein subrings") {
    auto k2 = is_gorenstein_S(incidence_matrix(complete_graph(2)));
    CHECK(k2.holds);
    CHECK_FALSE(is_gorenstein_S(incidence_matrix(path_graph(3))).holds);
    for (std::size_t n = 2; n <= 6; ++n)
      for (const auto& g : enumerate_graphs(n, true))
        if (is_bipartite(g).holds) CHECK(is_gorenstein_S(extended_rees_system(g)).holds == unmixed(g).holds);
  }

  TEST_CASE("canonical modules of normal monoids") {
    auto quad = canonical_module_general({iv({1, 0}), iv({0, 1})}, rv({"1", "1"}));
    CHECK(quad.generators == std::vector<IntVector>{iv({1, 1})});
    CHECK(quad.a_invariant == -2);
    std::vector<IntVector> c4;
    for (const auto& v : incidence_matrix(cycle_graph(4)).column_list()) c4.push_back(v);
    auto m = canonical_module_general(c4, rv({"1/2", "1/2", "1/2", "1/2"}));
    CHECK(m.a_invariant == -2);
    CHECK(m.generators.front() == iv({1, 1, 1, 1}));
    auto cube = canonical_module_general({iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}, rv({"1", "1", "1"}));
    CHECK(cube.a_invariant == -3);
    CHECK_THROWS_AS(canonical_module_general({iv({2})}, rv({"1/2"})), InvalidInput);
  }

  TEST_CASE("perfect graphs") {
    CHECK(perfect_graph_canonical(complete_graph(3)).a_invariant == -2);
    CHECK(perfect_graph_canonical(cycle_graph(4)).a_invariant == -3);
    auto p3 = perfect_graph_canonical(path_graph(3));
    CHECK(p3.a_invariant == -3);
    CHECK(p3.a_invariant == a_invariant_S(incidence_matrix(clique_clutter(path_graph(3)))));
    CHECK_THROWS_AS(perfect_graph_canonical(cycle_graph(5)), InvalidInput);
  }

  TEST_CASE("complete intersections") {
    CHECK(complete_intersection_bipartite(path_graph(4)).holds);
    CHECK(complete_intersection_bipartite(cycle_graph(4)).holds);
    CHECK_FALSE(complete_intersection_bipartite(complete_bipartite(3, 3)).holds);
    CHECK_FALSE(complete_intersection_bipartite(cycle_graph(3)).holds);
  }
}
