#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "clutter_algebra/clutter.hpp"
#include "clutter_algebra/lattice.hpp"
#include "clutter_algebra/polyhedra.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace clutter_algebra;
using testing::iv;

namespace {

// Irreducible lattice points of a pointed cone, by scanning a box that
// contains the parallelepipeds of the generators.
std::set<IntVector> scan_hilbert_basis(const std::vector<IntVector>& gens) {
  const auto cone = cone_irreducible_rep(gens);
  const std::size_t d = gens.front().size();
  IntVector lo(d, Integer(0)), hi(d, Integer(0));
  for (const auto& g : gens)
    for (std::size_t i = 0; i < d; ++i) (g[i] < 0 ? lo[i] : hi[i]) += g[i];
  std::vector<IntVector> points;
  IntVector x(d);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == d) {
      if (!is_zero(x) && cone.contains(x)) points.push_back(x);
      return;
    }
    for (Integer k = lo[i]; k <= hi[i]; ++k) {
      x[i] = k;
      go(i + 1);
    }
  };
  go(0);
  std::set<IntVector> in(points.begin(), points.end());
  std::set<IntVector> out;
  for (const auto& p : points) {
    bool reducible = false;
    for (const auto& q : points) {
      IntVector r(d);
      for (std::size_t i = 0; i < d; ++i) r[i] = p[i] - q[i];
      if (!is_zero(r) && p != q && cone.contains(r)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.insert(p);
  }
  return out;
}

std::vector<IntVector> rees_generators(const Clutter& c) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < c.size(); ++i) {
    IntVector e(c.size() + 1, Integer(0));
    e[i] = 1;
    gens.push_back(e);
  }
  for (auto v : incidence_matrix(c).column_list()) {
    v.push_back(1);
    gens.push_back(v);
  }
  return gens;
}

}  // namespace

TEST_SUITE("lattice-semigroups") {
  TEST_CASE("Hilbert bases of small cones") {
    auto hb = hilbert_basis_of({iv({1, 0}), iv({1, 2})});
    CHECK(hb.elements == std::vector<IntVector>{iv({1, 0}), iv({1, 1}), iv({1, 2})});
    auto simplicial = hilbert_basis_of({iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})});
    CHECK(simplicial.elements.size() == 3);
    auto rees = hilbert_basis_of({iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 1})});
    CHECK(std::set<IntVector>(rees.elements.begin(), rees.elements.end()) ==
          std::set<IntVector>{iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 1})});
    CHECK(scan_hilbert_basis({iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 1})}) ==
          std::set<IntVector>{iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 1})});
  }

  TEST_CASE("Hilbert bases agree with a box scan, serial and parallel") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> entry(0, 3);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t d = 2 + trial % 2;
      std::vector<IntVector> gens;
      for (std::size_t k = 0; k < d + 1; ++k) {
        IntVector g(d);
        for (auto& x : g) x = entry(rng);
        g[d - 1] += 1;  // keeps the cone pointed
        gens.push_back(g);
      }
      const auto oracle_basis = scan_hilbert_basis(gens);
      const auto par = hilbert_basis_of(gens, Execution::parallel);
      const auto ser = hilbert_basis_of(gens, Execution::serial);
      CHECK(ser.elements == par.elements);
      CHECK(std::set<IntVector>(par.elements.begin(), par.elements.end()) == oracle_basis);
    }
  }

  TEST_CASE("Hilbert basis tests from the examples") {
    auto c = parse_clutter(testing::data_file("uniform_four_edges.clutter"));
    std::vector<IntVector> lifted;
    for (auto v : incidence_matrix(c).column_list()) {
      v.push_back(1);
      lifted.push_back(v);
    }
    CHECK(is_hilbert_basis(lifted).holds);
    auto a = parse_matrix(testing::data_file("mfmc_nonuniform.mat"));
    auto v = is_hilbert_basis(a.column_list());
    CHECK_FALSE(v.holds);
    REQUIRE(v.certificate);
    CHECK(v.certificate->kind == "unreachable-point");
    CHECK(is_hilbert_basis({iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}).holds);
  }

  TEST_CASE("semigroup membership") {
    auto w = semigroup_member({iv({1, 0}), iv({0, 1})}, iv({2, 2}));
    REQUIRE(w);
    CHECK(w->coefficients == iv({2, 2}));
    auto self = semigroup_member({iv({1, 2}), iv({3, 1})}, iv({3, 1}));
    REQUIRE(self);
    CHECK(self->coefficients == iv({0, 1}));
    auto c = parse_clutter(testing::data_file("two_triangles.clutter"));
    const auto gens = rees_generators(c);
    const auto target = iv({1, 1, 1, 1, 1, 1, 3});
    CHECK_FALSE(semigroup_member(gens, target).has_value());
    CHECK_FALSE(oracle::semigroup_reachable(gens, target));
  }

  TEST_CASE("lattice points") {
    auto seg = polyhedron_from_generators(1, {testing::rv({"0"}), testing::rv({"1"})}, {});
    CHECK(lattice_points(seg, 2) == std::vector<IntVector>{iv({0}), iv({1}), iv({2})});
    auto c = parse_clutter(testing::data_file("uniform_four_edges.clutter"));
    std::vector<RatVector> verts;
    for (const auto& v : incidence_matrix(c).column_list()) verts.push_back(to_rational(v));
    auto p = polyhedron_from_generators(8, verts, {});
    auto pts = lattice_points(p);
    CHECK(pts.size() == 4);
    auto cols = incidence_matrix(c).column_list();
    CHECK(std::set<IntVector>(pts.begin(), pts.end()) == std::set<IntVector>(cols.begin(), cols.end()));
    Polyhedron empty = polyhedron_from_inequalities(1, {{iv({1}), 1}, {iv({-1}), 0}});
    CHECK(lattice_points(empty, 3).empty());
  }

  TEST_CASE("integer decomposition property of blocking polyhedra") {
    auto blocking = [](const Clutter& c) {
      std::vector<RatVector> verts;
      for (const auto& v : incidence_matrix(c).column_list()) verts.push_back(to_rational(v));
      std::vector<IntVector> rays;
      for (std::size_t i = 0; i < c.size(); ++i) {
        IntVector e(c.size(), Integer(0));
        e[i] = 1;
        rays.push_back(e);
      }
      return polyhedron_from_generators(c.size(), verts, rays);
    };
    CHECK(idp_check(blocking(make_clutter(2, {{0, 1}})), 3).holds);
    auto v = idp_check(blocking(parse_clutter(testing::data_file("two_triangles.clutter"))), 3);
    CHECK_FALSE(v.holds);
    auto point = polyhedron_from_generators(2, {testing::rv({"1", "2"})}, {});
    CHECK(idp_check(point, 3).holds);
  }

  TEST_CASE("minimal interior elements") {
    auto cone = cone_irreducible_rep({iv({0, 0, 1}), iv({1, 0, 1}), iv({0, 1, 1}), iv({1, 1, 1})});
    std::vector<bool> strict(cone.facet_normals.size(), true);
    auto mins = minimal_semigroup_elements(cone, strict, iv({0, 0, 1}), 4);
    CHECK(mins == std::vector<IntVector>{iv({1, 1, 2})});
    auto ray = cone_irreducible_rep({iv({1})});
    CHECK(minimal_semigroup_elements(ray, {true}, iv({1}), 3) == std::vector<IntVector>{iv({1})});
  }
}
