// Acceptance run: one PASS/FAIL line per criterion.  Usage: acceptance <data dir>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "clutter_algebra/canonical.hpp"
#include "clutter_algebra/clutter.hpp"
#include "clutter_algebra/enumerate.hpp"
#include "clutter_algebra/errors.hpp"
#include "clutter_algebra/exact_linalg.hpp"
#include "clutter_algebra/graph.hpp"
#include "clutter_algebra/lattice.hpp"
#include "clutter_algebra/polyhedra.hpp"
#include "clutter_algebra/poset.hpp"
#include "clutter_algebra/rounding.hpp"
#include "clutter_algebra/symbolic.hpp"
#include "clutter_algebra/triangulation.hpp"
#include "oracles.hpp"

using namespace clutter_algebra;

namespace {

std::string data_dir = "data";

std::string slurp(const std::string& name) {
  std::ifstream in(data_dir + "/" + name);
  if (!in) throw InvalidInput("missing data file " + name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& id, double budget_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_seconds) {
    o.pass = false;
    o.detail += " [over time budget " + std::to_string(budget_seconds) + "s]";
  }
  if (!o.pass) ++failures;
  char t[32];
  std::snprintf(t, sizeof t, "%.2fs", secs);
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " (" << t << ") " << o.detail
            << std::endl;
}

IntVector ones(std::size_t n) { return IntVector(n, Integer(1)); }

std::vector<IntVector> lifted_columns(const IntMatrix& a) {
  std::vector<IntVector> out;
  for (auto v : a.column_list()) {
    v.push_back(1);
    out.push_back(std::move(v));
  }
  return out;
}

std::string names_of(VertexSet s, const Clutter& c) { return "{" + format_set(s, c.vertices) + "}"; }

// Counter of checked instances and the first few disagreements.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ < 3) first += " [" + what + "]";
  }
};

std::vector<Clutter> graphs_up_to(std::size_t n_max, bool connected) {
  std::vector<Clutter> out;
  for (std::size_t n = 2; n <= n_max; ++n)
    for (auto& g : enumerate_graphs(n, connected)) out.push_back(std::move(g));
  return out;
}

// Least degree of an interior lattice point of cone(lifted), and whether
// the interior points have a single minimal element, by scanning degrees.
struct ScanResult {
  Integer a_invariant;
  bool principal = false;
};

ScanResult interior_scan(const std::vector<IntVector>& lifted, std::size_t extra_degrees) {
  const auto cone = cone_irreducible_rep(lifted);
  const std::size_t d = lifted.front().size();
  const std::size_t n = d - 1;
  auto interior = [&](const IntVector& x) {
    for (const auto& h : cone.facet_normals)
      if (dot(h, x) <= 0) return false;
    return true;
  };
  auto in_cone = [&](const IntVector& x) {
    for (const auto& h : cone.facet_normals)
      if (dot(h, x) < 0) return false;
    return true;
  };
  std::vector<IntVector> found;
  std::optional<std::size_t> least;
  for (std::size_t b = 1; !least || b <= *least + extra_degrees; ++b) {
    if (b > 40) throw CapExceeded("scan found no interior point");
    // Every x_i is bounded by b times the largest entry of a generator.
    std::size_t bound = 0;
    for (const auto& g : lifted)
      for (std::size_t i = 0; i < n; ++i) bound = std::max<std::size_t>(bound, g[i].get_ui());
    bound *= b;
    IntVector x(d, Integer(0));
    x[n] = static_cast<unsigned long>(b);
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == n) {
        if (interior(x)) found.push_back(x);
        return;
      }
      for (std::size_t k = 0; k <= bound; ++k) {
        x[i] = static_cast<unsigned long>(k);
        go(i + 1);
      }
      x[i] = 0;
    };
    go(0);
    if (!least && !found.empty()) least = b;
  }
  std::size_t minimal = 0;
  for (const auto& x : found) {
    bool is_min = true;
    for (const auto& y : found) {
      if (x == y) continue;
      IntVector diff(d);
      for (std::size_t i = 0; i < d; ++i) diff[i] = x[i] - y[i];
      if (in_cone(diff)) is_min = false;
    }
    minimal += is_min;
  }
  return {-Integer(static_cast<unsigned long>(*least)), minimal == 1};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) data_dir = argv[1];

  criterion("1", 1.0, [] {
    const auto c = parse_clutter(slurp("two_partitionable.clutter"));
    const auto covers = minimal_vertex_covers(c).covers;
    const std::set<std::string> listed{"x1 x2", "x3 x4", "x5 x6", "x1 x4 x5", "x1 x3 x6", "x2 x4 x6", "x2 x3 x5"};
    std::set<std::string> got;
    for (auto s : covers) got.insert(format_set(s, c.vertices));
    const auto a = incidence_matrix(c);
    const bool q_integral = is_integral(covering_polyhedron(a)).holds;
    const bool k = koenig(c).holds;
    const std::size_t r = rank(a);
    const bool ok = got == listed && covers.size() == 7 && r == 4 && q_integral && !k;
    return Outcome{ok, "covers=" + std::to_string(covers.size()) + " rank=" + std::to_string(r) +
                           " Q integral=" + std::to_string(q_integral) + " koenig=" + std::to_string(k)};
  });

  criterion("2", 5.0, [] {
    const auto a = parse_matrix(slurp("mfmc_nonuniform.mat"));
    const auto c = clutter_from_matrix(a);
    const bool m = mfmc(c).holds;
    const bool hb = is_hilbert_basis(a.column_list()).holds;
    const auto diag = snf(a).diag;
    const bool factor = std::any_of(diag.begin(), diag.end(), [](const Integer& x) { return x > 1; });
    return Outcome{m && !hb && factor,
                   "mfmc=" + std::to_string(m) + " columns HB=" + std::to_string(hb) + " snf=" + to_string(diag)};
  });

  criterion("3", 1.0, [] {
    const auto a = incidence_matrix(parse_clutter(slurp("triangle.clutter")));
    const auto b = a.stacked(ones(a.cols()));
    const auto da = delta_r(a, 3), db = delta_r(b, 3);
    return Outcome{da == 2 && db == 1, "Delta3(A)=" + to_string(da) + " Delta3(B)=" + to_string(db)};
  });

  criterion("4", 10.0, [] {
    const auto a = incidence_matrix(parse_clutter(slurp("uniform_four_edges.clutter")));
    const bool hb = is_hilbert_basis(lifted_columns(a)).holds;
    const bool ge = irp_ge(a).holds, le = irp_le(a).holds;
    return Outcome{hb && !ge && !le,
                   "lifted HB=" + std::to_string(hb) + " irp_ge=" + std::to_string(ge) + " irp_le=" + std::to_string(le)};
  });

  criterion("5", 60.0, [] {
    const auto a = parse_matrix(slurp("dual_not_normal.mat"));
    const bool ge = irp_ge(a).holds;
    const auto report = duality_report(clutter_from_matrix(a));
    const bool dual_normal = report.at("a_dual_ideal_normal").holds;
    std::string skipped;
    for (const auto& s : report.skipped) skipped += " skipped: " + s + ";";
    return Outcome{ge && !dual_normal,
                   "irp_ge(A)=" + std::to_string(ge) + " R[I*t] normal=" + std::to_string(dual_normal) + skipped};
  });

  criterion("6", 10.0, [] {
    const auto c = parse_clutter(slurp("two_triangles.clutter"));
    const auto v = is_normal_ideal(c);
    const auto a = incidence_matrix(c);
    IntVector witness = ones(6);
    witness.push_back(3);
    bool certificate_matches = false;
    if (v.certificate) {
      IntVector got;
      for (const auto& x : v.certificate->data["a"]) got.push_back(Integer(x.get<std::string>()));
      got.push_back(Integer(v.certificate->data["b"].get<std::string>()));
      certificate_matches = got == witness;
    }
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < 6; ++i) {
      IntVector e(7, Integer(0));
      e[i] = 1;
      gens.push_back(e);
    }
    for (auto& g : lifted_columns(a)) gens.push_back(g);
    // Half the sum of the lifted edges, so the witness lies in the cone.
    IntVector twice(7, Integer(0));
    for (const auto& g : lifted_columns(a))
      for (std::size_t i = 0; i < 7; ++i) twice[i] += g[i];
    bool in_cone = true;
    for (std::size_t i = 0; i < 7; ++i) in_cone = in_cone && twice[i] == 2 * witness[i];
    const bool unreachable = !oracle::semigroup_reachable(gens, witness);
    const bool odd = odd_cycle_pair_criterion(c).holds;
    const bool ok = !v.holds && certificate_matches && in_cone && unreachable && !odd;
    return Outcome{ok, "normal=" + std::to_string(v.holds) +
                           " witness=" + (v.certificate ? v.certificate->text : std::string("none")) +
                           " brute-force unreachable=" + std::to_string(unreachable) +
                           " odd-cycle criterion=" + std::to_string(odd)};
  });

  criterion("7", 60.0, [] {
    const auto c = parse_clutter(slurp("cone_over_pentagon.clutter"));
    const auto gens = symbolic_rees_generators(c);
    std::set<MonomialGen> expected;
    for (std::size_t i = 0; i < 6; ++i) {
      IntVector e(6, Integer(0));
      e[i] = 1;
      expected.insert({e, 0});
    }
    for (auto v : incidence_matrix(c).column_list()) expected.insert({v, 1});
    expected.insert({IntVector{1, 1, 1, 1, 1, 0}, 3});
    expected.insert({IntVector{1, 1, 1, 1, 1, 1}, 4});
    expected.insert({IntVector{1, 1, 1, 1, 1, 2}, 5});
    const std::set<MonomialGen> got(gens.begin(), gens.end());
    std::string extra, missing;
    const auto covers = oracle::minimal_covers(c.edges, 6);
    for (const auto& g : got)
      if (!expected.count(g)) {
        const bool symbolic = oracle::in_symbolic_power(covers, g.a, g.b);
        const bool ordinary = oracle::in_ordinary_power(c.edges, g.a, g.b.get_si());
        extra += " " + format_generator(g, c.vertices) + (symbolic && !ordinary ? " (in I^(b), not in I^b)" : "");
      }
    for (const auto& g : expected)
      if (!got.count(g)) missing += " " + format_generator(g, c.vertices);
    const bool ok = extra.empty() && missing.empty();
    std::string detail = std::to_string(got.size()) + " generators";
    if (!missing.empty()) detail += "; missing:" + missing;
    if (!extra.empty()) detail += "; beyond the listed set:" + extra;
    return Outcome{ok, detail};
  });

  criterion("8", 30.0, [] {
    std::string detail;
    bool ok = true;
    for (const char* file : {"comparability_cliques_a.clutter", "comparability_cliques_b.clutter"}) {
      const auto c = parse_clutter(slurp(file));
      const bool m = mfmc(c).holds, t = normally_torsion_free(c).holds;
      ok = ok && m && t;
      detail += std::string(file) + ": mfmc=" + std::to_string(m) + " ntf=" + std::to_string(t) + " ";
    }
    return Outcome{ok, detail};
  });

  criterion("9", 10.0, [] {
    const auto a = parse_matrix(slurp("balanced_not_unimodular.mat"));
    const bool bal = is_balanced(a).holds;
    const bool uni = is_unimodular_simplex(a.column_list(), {0, 1, 2, 3, 4, 5, 9, 10, 11, 12});
    return Outcome{bal && !uni, "balanced=" + std::to_string(bal) + " simplex unimodular=" + std::to_string(uni)};
  });

  criterion("10a", 600.0, [] {
    Tally t;
    for (const auto& g : graphs_up_to(7, true)) {
      const auto a = incidence_matrix(g);
      const std::string s = format_clutter(g);
      const bool eq = irp_eq(a).holds, ge = irp_ge(a).holds, le = irp_le(a).holds;
      t.check(eq == is_bipartite(g).holds, "irp_eq vs bipartite: " + s);
      t.check(ge == le, "irp_ge vs irp_le: " + s);
      t.check(odd_cycle_pair_criterion(g).holds == le, "odd cycles vs irp_le: " + s);
    }
    return Outcome{t.failed == 0, std::to_string(t.checked) + " checks, " + std::to_string(t.failed) + " failed" +
                                      t.first};
  });

  criterion("10b", 600.0, [] {
    Tally t;
    std::size_t clutters = 0, excluded = 0, partial = 0;
    DualityOptions opt;
    opt.max_subring_generators = 400;
    for (std::size_t n = 1; n <= 6; ++n) {
      EnumerationOptions e;
      e.vertices = n;
      e.max_edges = 6;
      for (const auto& c : enumerate_clutters(e)) {
        ++clutters;
        if (std::any_of(c.edges.begin(), c.edges.end(), [&](VertexSet s) { return s == c.vertex_set(); })) {
          ++excluded;
          continue;
        }
        const std::string s = format_clutter(c);
        try {
          const auto r = duality_report(c, opt);
          std::set<bool> values;
          for (const auto& [name, v] : r.verdicts)
            if (name != "ideal_normal") values.insert(v.holds);
          partial += !r.skipped.empty();
          t.check(values.size() == 1, "duality clauses: " + s);
        } catch (const CrossCheckFailure& e) {
          t.check(false, std::string(e.what()) + ": " + s);
        }
        if (mfmc(c).holds) t.check(packing_property(c).holds, "mfmc without packing: " + s);
      }
    }
    return Outcome{t.failed == 0 && partial == 0,
                   std::to_string(clutters) + " clutters (" + std::to_string(excluded) +
                       " with an edge equal to the vertex set excluded), " + std::to_string(t.checked) + " checks, " +
                       std::to_string(t.failed) + " failed, " + std::to_string(partial) + " with skipped clauses" +
                       t.first};
  });

  criterion("10c", 300.0, [] {
    Tally t;
    std::mt19937_64 rng(20261017);
    for (std::size_t k = 0; k < 100; ++k) {
      const std::size_t n = 1 + k % 8;
      const double density = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
      const auto p = random_poset(n, density, rng);
      const std::string s = format_poset(p);
      const auto cl = clique_clutter(comparability_graph(p));
      t.check(mfmc(cl).holds, "clique clutter mfmc: " + s);
      t.check(normally_torsion_free(cl).holds, "clique clutter ntf: " + s);

      auto comparable = [&](std::size_t i, std::size_t j) { return p.comparable(i, j); };
      std::size_t widest = 0, longest = 0;
      for (VertexSet m = 1; m < (VertexSet(1) << n); ++m) {
        if (oracle::is_antichain(m, comparable, n)) widest = std::max<std::size_t>(widest, popcount(m));
        if (oracle::is_chain(m, comparable, n)) longest = std::max<std::size_t>(longest, popcount(m));
      }
      const auto dw = dilworth(p);
      const auto mi = mirsky(p);
      VertexSet chain_union = 0, antichain_union = 0;
      bool chains_ok = true, antichains_ok = true;
      for (auto ch : dw.chains) {
        chains_ok = chains_ok && oracle::is_chain(ch, comparable, n) && !(chain_union & ch);
        chain_union |= ch;
      }
      for (auto an : mi.antichains) {
        antichains_ok = antichains_ok && oracle::is_antichain(an, comparable, n) && !(antichain_union & an);
        antichain_union |= an;
      }
      const VertexSet all = all_vertices(n);
      t.check(popcount(dw.max_antichain) == widest && dw.chains.size() == widest && chains_ok && chain_union == all,
              "dilworth: " + s);
      t.check(mi.max_chain.size() == longest && mi.antichains.size() == longest && antichains_ok &&
                  antichain_union == all,
              "mirsky: " + s);
    }
    return Outcome{t.failed == 0, std::to_string(t.checked) + " checks, " + std::to_string(t.failed) + " failed" +
                                      t.first};
  });

  criterion("10d", 300.0, [] {
    Tally t;
    for (std::size_t d : {2, 3})
      for (std::size_t g : {2, 3}) {
        const auto c = complete_admissible_clutter(d, g);
        t.check(normally_torsion_free(c).holds, "d=" + std::to_string(d) + " g=" + std::to_string(g));
      }
    return Outcome{t.failed == 0, std::to_string(t.checked) + " clutters, " + std::to_string(t.failed) + " failed" +
                                      t.first};
  });

  criterion("10e", 900.0, [] {
    Tally t;
    for (std::size_t n = 2; n <= 7; ++n)
      for (const auto& g : enumerate_graphs(n, false)) {
        const std::string s = format_clutter(g);
        auto structural = graph_irreducible_covers(g);
        auto computed = cover_algebra_generators(g);
        std::sort(structural.begin(), structural.end());
        std::sort(computed.begin(), computed.end());
        t.check(structural == computed, "irreducible covers: " + s);

        std::set<std::pair<VertexSet, long>> binary, irreducible;
        for (const auto& gen : symbolic_rees_generators(g)) {
          VertexSet m = 0;
          bool is_binary = true;
          for (std::size_t i = 0; i < n; ++i) {
            if (gen.a[i] > 1) is_binary = false;
            if (gen.a[i] == 1) m |= bit(i);
          }
          if (is_binary) binary.insert({m, gen.b.get_si()});
        }
        for (VertexSet m = 1; m <= g.vertex_set(); ++m)
          if (oracle::irreducible_induced(g.edges, n, m))
            irreducible.insert({m, static_cast<long>(oracle::alpha0(oracle::induced(g.edges, m), n))});
        t.check(binary == irreducible, "binary generators vs irreducible subgraphs: " + s);
        t.check(clique_generators_check(g).holds == is_perfect(g).holds, "clique generators vs perfect: " + s);
      }
    return Outcome{t.failed == 0, std::to_string(t.checked) + " checks, " + std::to_string(t.failed) + " failed" +
                                      t.first};
  });

  criterion("10f", 600.0, [] {
    Tally t;
    for (const auto& g : graphs_up_to(7, true)) {
      if (!is_bipartite(g).holds) continue;
      const std::string s = format_clutter(g);
      t.check(is_gorenstein_S(extended_rees_system(g)).holds == unmixed(g).holds, "gorenstein vs unmixed: " + s);
      t.check(in_edge_cone(g, ones(g.size())) == perfect_matching(g).has_value(), "edge cone vs matching: " + s);
    }
    return Outcome{t.failed == 0, std::to_string(t.checked) + " checks, " + std::to_string(t.failed) + " failed" +
                                      t.first};
  });

  criterion("10g", 60.0, [] {
    std::string detail;
    bool ok = true;
    struct Case {
      const char* name;
      Clutter g;
      long a;
      bool gorenstein;
    };
    for (const auto& cs : {Case{"K2", make_graph(2, {{0, 1}}), -2, true},
                           Case{"P3", make_graph(3, {{0, 1}, {1, 2}}), -3, false}}) {
      const auto a = incidence_matrix(cs.g);
      const auto closed = a_invariant_S(a);
      const bool gor = is_gorenstein_S(a).holds;
      const auto scan = interior_scan(lifted_columns(IntMatrix::from_columns(lower_vectors(a), a.rows())),
                                      a.rows() + 1);
      const bool case_ok = closed == cs.a && scan.a_invariant == cs.a && gor == cs.gorenstein &&
                           scan.principal == cs.gorenstein;
      ok = ok && case_ok;
      detail += std::string(cs.name) + ": a(S)=" + to_string(closed) + " scan=" + to_string(scan.a_invariant) +
                " gorenstein=" + std::to_string(gor) + " scan principal=" + std::to_string(scan.principal) + " ";
    }
    return Outcome{ok, detail};
  });

  criterion("10h", 120.0, [] {
    Tally t;
    auto run = [&](const Clutter& c, std::size_t top) {
      const std::size_t n = c.size();
      std::vector<std::size_t> w(n, 0);
      for (;;) {
        const auto [m, edges] = oracle::parallelize(c.edges, w);
        std::string ws = to_string(IntVector(w.begin(), w.end()));
        t.check(alpha0_parallelization(c, w) == oracle::alpha0(edges, m), "alpha0 at w=" + ws);
        if (std::all_of(w.begin(), w.end(), [](std::size_t x) { return x > 0; })) {
          try {
            const auto pair = parallelization_preserves_normality_test(c, w);
            t.check(!pair.before.holds || pair.after.holds, "normality at w=" + ws);
          } catch (const CrossCheckFailure& e) {
            t.check(false, std::string(e.what()) + " at w=" + ws);
          }
        }
        std::size_t i = 0;
        while (i < n && w[i] == top) w[i++] = 0;
        if (i == n) break;
        ++w[i];
      }
    };
    run(make_graph(2, {{0, 1}}), 3);
    run(make_graph(3, {{0, 1}, {1, 2}, {0, 2}}), 2);
    return Outcome{t.failed == 0, std::to_string(t.checked) + " checks, " + std::to_string(t.failed) + " failed" +
                                      t.first};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
