#include <doctest.h>

#include <random>
#include <set>

#include "clutter_algebra/clutter.hpp"
#include "clutter_algebra/enumerate.hpp"
#include "clutter_algebra/errors.hpp"
#include "clutter_algebra/graph.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace clutter_algebra;
using testing::iv;

namespace {

Clutter k2() { return make_clutter(2, {{0, 1}}); }
Clutter c3() { return make_clutter(3, {{0, 1}, {1, 2}, {0, 2}}); }
Clutter c5() { return make_clutter(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }
Clutter p3() { return make_clutter(3, {{0, 1}, {1, 2}}); }
Clutter two_partitionable() { return parse_clutter(testing::data_file("two_partitionable.clutter")); }

std::set<std::string> cover_names(const Clutter& c) {
  std::set<std::string> out;
  for (auto s : minimal_vertex_covers(c).covers) out.insert(format_set(s, c.vertices));
  return out;
}

Clutter random_clutter(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<VertexSet> pick(1, all_vertices(n));
  std::vector<VertexSet> sets;
  for (int k = 0; k < 5; ++k) sets.push_back(pick(rng));
  auto edges = minimalize(sets);
  Clutter c;
  c.vertices = default_names(n);
  c.edges = edges;
  std::sort(c.edges.begin(), c.edges.end(), lex_less);
  return drop_isolated(c);
}

}  // namespace

TEST_SUITE("clutters") {
  TEST_CASE("minimal vertex covers") {
    CHECK(cover_names(k2()) == std::set<std::string>{"x1", "x2"});
    CHECK(cover_names(two_partitionable()) ==
          std::set<std::string>{"x1 x2", "x3 x4", "x5 x6", "x1 x4 x5", "x1 x3 x6", "x2 x4 x6", "x2 x3 x5"});
    auto covers = minimal_vertex_covers(c5()).covers;
    CHECK(covers.size() == 5);
    for (auto s : covers) CHECK(popcount(s) == 3);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 30; ++k) {
      auto c = random_clutter(rng, 6);
      auto got = minimal_vertex_covers(c).covers;
      auto want = oracle::minimal_covers(c.edges, c.size());
      CHECK(std::set<VertexSet>(got.begin(), got.end()) == std::set<VertexSet>(want.begin(), want.end()));
    }
  }

  TEST_CASE("blocker") {
    CHECK(blocker(k2()).edges.size() == 2);
    CHECK(blocker(make_clutter(2, {{0}, {1}})) == k2());
    CHECK(blocker(two_partitionable()).edges.size() == 7);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 50; ++k) {
      auto c = random_clutter(rng, 6);
      CHECK(blocker(blocker(c)) == c);
    }
  }

  TEST_CASE("dual star") {
    auto d = dual_star(c3());
    // Complement of x1x2 is x3, and so on.
    std::set<std::string> names;
    for (auto e : d.clutter.edges) names.insert(format_set(e, d.clutter.vertices));
    CHECK(names == std::set<std::string>{"x1", "x2", "x3"});
    CHECK_THROWS_AS(dual_star(make_clutter(2, {{0, 1}})), InvalidInput);
  }

  TEST_CASE("minors") {
    auto del = minor(c3(), bit(0), 0);
    CHECK(del.edges.size() == 1);
    CHECK(format_set(del.edges[0], del.vertices) == "x2 x3");
    auto con = minor(c3(), 0, bit(0));
    std::set<std::string> names;
    for (auto e : con.edges) names.insert(format_set(e, con.vertices));
    CHECK(names == std::set<std::string>{"x2", "x3"});
  }

  TEST_CASE("parallelization") {
    auto k33 = parallelization(k2(), {3, 3});
    CHECK(k33.size() == 6);
    CHECK(k33.edges.size() == 9);
    CHECK(parallelization(c3(), {1, 1, 1}) == c3());
    auto g = parallelization(c3(), {2, 1, 1});
    CHECK(g.edges.size() == 5);
    auto [n, edges] = oracle::parallelize(c3().edges, {2, 1, 1});
    CHECK(n == 4);
    CHECK(std::set<VertexSet>(edges.begin(), edges.end()) == std::set<VertexSet>(g.edges.begin(), g.edges.end()));
  }

  TEST_CASE("covering and matching numbers") {
    CHECK(alpha0(c5()) == 3);
    CHECK(beta1(c5()) == 2);
    CHECK(alpha0(k2()) == 1);
    CHECK(beta1(k2()) == 1);
    CHECK(alpha0(two_partitionable()) == 2);
    CHECK(beta1(two_partitionable()) == 1);
    std::mt19937_64 rng(9);
    for (int k = 0; k < 30; ++k) {
      auto c = random_clutter(rng, 7);
      CHECK(alpha0(c) == oracle::alpha0(c.edges, c.size()));
      CHECK(beta1(c) == oracle::beta1(c.edges));
    }
  }

  TEST_CASE("Koenig and packing") {
    CHECK(koenig(k2()).holds);
    CHECK_FALSE(koenig(c3()).holds);
    auto v = koenig(two_partitionable());
    CHECK_FALSE(v.holds);
    REQUIRE(v.certificate);
    CHECK(v.certificate->data["alpha0"] == 2);
    CHECK(v.certificate->data["beta1"] == 1);
    CHECK(packing_property(p3()).holds);
    CHECK_FALSE(packing_property(c3()).holds);
    auto a = parse_matrix(testing::data_file("mfmc_nonuniform.mat"));
    CHECK(packing_property(clutter_from_matrix(a)).holds);
  }

  TEST_CASE("packing: serial and parallel agree on every small clutter") {
    for (std::size_t n = 2; n <= 5; ++n) {
      EnumerationOptions opt;
      opt.vertices = n;
      opt.max_edges = 5;
      for (const auto& c : enumerate_clutters(opt)) {
        PackingOptions ser, par;
        ser.execution = Execution::serial;
        par.execution = Execution::parallel;
        auto s = packing_property(c, ser), p = packing_property(c, par);
        CHECK(s.holds == p.holds);
        if (s.certificate && p.certificate) CHECK(s.certificate->text == p.certificate->text);
      }
    }
  }

  TEST_CASE("perfect matchings") {
    auto m = perfect_matching(k2());
    REQUIRE(m);
    CHECK(m->size() == 1);
    CHECK_FALSE(perfect_matching(c5()).has_value());
    // Any two edges meet, so beta1 = 1 and no matching covers all six vertices.
    CHECK_FALSE(perfect_matching(two_partitionable()).has_value());
    auto pm = perfect_matching(make_clutter(4, {{0, 1}, {1, 2}, {2, 3}}));
    REQUIRE(pm);
    CHECK(*pm == std::vector<VertexSet>{bit(0) | bit(1), bit(2) | bit(3)});
  }

  TEST_CASE("parallelization numbers") {
    CHECK(alpha0_parallelization(k2(), {3, 3}) == 3);
    CHECK(alpha0_parallelization(c5(), {1, 1, 1, 1, 1}) == 3);
    for (std::vector<std::size_t> w : {std::vector<std::size_t>{0, 2, 1}, {2, 0, 0}, {1, 2, 2}}) {
      auto [n, edges] = oracle::parallelize(c3().edges, w);
      CHECK(alpha0_parallelization(c3(), w) == oracle::alpha0(edges, n));
    }
    CHECK(beta1_parallelization_bound(k2(), {3, 3}) == 3);
    CHECK(beta1_parallelization_bound(k2(), {0, 0}) == 0);
    CHECK(beta1_parallelization_bound(c3(), {1, 1, 1}) == 1);
    CHECK_THROWS_AS(beta1_parallelization_bound(k2(), {6, 1}), CapExceeded);
  }

  TEST_CASE("powers of edge ideals") {
    auto i1 = symbolic_power(c3(), 1);
    CHECK(i1 == edge_ideal(c3()));
    auto s2 = symbolic_power(c3(), 2);
    CHECK(std::find(s2.generators.begin(), s2.generators.end(), iv({1, 1, 1})) != s2.generators.end());
    auto o2 = ordinary_power(c3(), 2);
    CHECK(o2.generators.size() == 6);
    CHECK(std::find(o2.generators.begin(), o2.generators.end(), iv({1, 1, 1})) == o2.generators.end());
    CHECK(ordinary_power(k2(), 2).generators == std::vector<IntVector>{iv({2, 2})});
    auto s3 = symbolic_power(c5(), 3);
    auto covers = oracle::minimal_covers(c5().edges, 5);
    CHECK(oracle::in_symbolic_power(covers, iv({1, 1, 1, 1, 1}), 3));
    CHECK(std::find(s3.generators.begin(), s3.generators.end(), iv({1, 1, 1, 1, 1})) != s3.generators.end());
    for (const auto& g : s2.generators) CHECK(oracle::in_symbolic_power(oracle::minimal_covers(c3().edges, 3), g, 2));
  }

  TEST_CASE("whisker extension") {
    auto w = whisker_extension(k2());
    CHECK(w.size() == 4);
    CHECK(w.edges.size() == 3);
    auto t = whisker_extension(c3());
    CHECK(t.size() == 6);
    CHECK(t.edges.size() == 6);
  }

  TEST_CASE("balanced matrices") {
    auto v = is_balanced(incidence_matrix(c3()));
    CHECK_FALSE(v.holds);
    REQUIRE(v.certificate);
    CHECK(is_balanced(parse_matrix(testing::data_file("balanced_not_unimodular.mat"))).holds);
    CHECK(is_balanced(incidence_matrix(make_clutter(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}))).holds);
  }

  TEST_CASE("vertex critical") {
    CHECK(vertex_critical(k2()).holds);
    CHECK(vertex_critical(c5()).holds);
    CHECK_FALSE(vertex_critical(p3()).holds);
  }

  TEST_CASE("disjoint cover partitions") {
    auto part = disjoint_cover_partition(two_partitionable());
    REQUIRE(part.covers);
    std::set<std::string> names;
    for (auto s : *part.covers) names.insert(format_set(s, two_partitionable().vertices));
    CHECK(names == std::set<std::string>{"x1 x2", "x3 x4", "x5 x6"});
    auto k = disjoint_cover_partition(k2());
    REQUIRE(k.covers);
    CHECK(k.covers->size() == 2);
    CHECK_FALSE(disjoint_cover_partition(c3()).covers.has_value());
  }

  TEST_CASE("parsing") {
    CHECK(parse_clutter(format_clutter(two_partitionable())) == two_partitionable());
    CHECK_THROWS_AS(parse_clutter("vertices: x1\n"), InvalidInput);
    CHECK_THROWS_AS(parse_clutter("vertices: x1 x2\nx1\nx1 x2\n"), InvalidInput);
    CHECK_THROWS_AS(parse_clutter("x1 x2\n"), InvalidInput);
    CHECK_THROWS_AS(parse_clutter("vertices: x1 x2\nx3\n"), InvalidInput);
  }

  TEST_CASE("canonical forms identify isomorphic clutters") {
    auto a = make_clutter(4, {{0, 1}, {1, 2}, {2, 3}});
    auto b = make_clutter(4, {{3, 0}, {0, 2}, {2, 1}});
    CHECK(canonical_edges(4, a.edges) == canonical_edges(4, b.edges));
    auto star = make_clutter(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(canonical_edges(4, a.edges) != canonical_edges(4, star.edges));
    // Graphs on 4 vertices without isolated vertices: 7 classes.
    CHECK(enumerate_graphs(4, false).size() == 7);
    // Connected graphs on 5 vertices: 21.
    CHECK(enumerate_graphs(5, true).size() == 21);
  }
}
