// clutter-algebra: one subcommand per decision procedure.
//
// Exit codes: 0 property holds or computation done, 1 property fails
// (certificate printed), 2 usage or parse error, 3 instance over a cap,
// 4 internal cross-check failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "clutter_algebra/canonical.hpp"
#include "clutter_algebra/clutter.hpp"
#include "clutter_algebra/errors.hpp"
#include "clutter_algebra/exact_linalg.hpp"
#include "clutter_algebra/graph.hpp"
#include "clutter_algebra/lattice.hpp"
#include "clutter_algebra/polyhedra.hpp"
#include "clutter_algebra/report.hpp"
#include "clutter_algebra/rounding.hpp"
#include "clutter_algebra/symbolic.hpp"
#include "sweep.hpp"

using namespace clutter_algebra;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;

struct Input {
  std::string path;
  std::string format = "auto";  // auto | clutter | matrix
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

bool looks_like_clutter(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (ls >> tok) return tok == "vertices:";
  }
  return false;
}

bool is_clutter_input(const Input& in, const std::string& text) {
  if (in.format == "clutter") return true;
  if (in.format == "matrix") return false;
  return looks_like_clutter(text);
}

// Clutter files directly; a binary matrix is read column by column.
Clutter load_clutter(const Input& in) {
  const auto text = slurp(in.path);
  if (is_clutter_input(in, text)) return parse_clutter(text);
  auto a = parse_matrix(text);
  if (!a.is_binary()) throw InvalidInput("matrix is not binary");
  return clutter_from_matrix(a);
}

Clutter load_graph(const Input& in) {
  auto g = load_clutter(in);
  require_graph(g);
  return g;
}

// Matrix files directly; a clutter becomes its incidence matrix.
IntMatrix load_matrix(const Input& in) {
  const auto text = slurp(in.path);
  if (is_clutter_input(in, text)) return incidence_matrix(parse_clutter(text));
  return parse_matrix(text);
}

IntVector parse_vector(const std::string& s) {
  IntVector v;
  std::string tok;
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  while (in >> tok) {
    Integer x;
    if (x.set_str(tok, 10) != 0) throw InvalidInput("not an integer: " + tok);
    v.push_back(x);
  }
  return v;
}

VertexSet parse_vertex_list(const std::string& s, const Clutter& c) {
  VertexSet out = 0;
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::string tok;
  while (in >> tok) {
    auto it = std::find(c.vertices.begin(), c.vertices.end(), tok);
    if (it == c.vertices.end()) throw InvalidInput("unknown vertex: " + tok);
    out |= bit(static_cast<std::size_t>(it - c.vertices.begin()));
  }
  return out;
}

Json clutter_json(const Clutter& c) {
  Json edges = Json::array();
  for (auto e : c.edges) {
    Json names = Json::array();
    for (auto v : members(e)) names.push_back(c.vertices[v]);
    edges.push_back(names);
  }
  return Json{{"vertices", c.vertices}, {"edges", edges}};
}

Json vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::string vector_text(const IntVector& v) { return to_string(v); }

Report plain(const std::string& title, const std::string& statement) {
  Report r;
  r.title = title;
  r.statement = statement;
  return r;
}

Report generators_report(const std::string& title, const std::string& statement, const std::vector<MonomialGen>& gens,
                         const std::vector<std::string>& names) {
  auto r = plain(title, statement);
  r.json = Json::array();
  for (const auto& g : gens) {
    r.json.push_back(to_json(g));
    r.text += format_generator(g, names) + "\n";
  }
  return r;
}

struct Output {
  bool json = false;
};

// Registers a subcommand with the common input options and wires its action.
class Registry {
 public:
  Registry(CLI::App& app, Output& out, Report& report) : app_(app), out_(out), report_(report) {}

  template <class F>
  CLI::App* add(const std::string& name, const std::string& statement, Input& in, F action) {
    auto* sub = app_.add_subcommand(name, statement);
    sub->add_option("input", in.path, "clutter or matrix file ('-' for stdin)")->required();
    sub->add_option("--format", in.format, "input format")
        ->check(CLI::IsMember({"auto", "clutter", "matrix"}))
        ->capture_default_str();
    sub->add_flag("--json", out_.json, "print the report as JSON");
    sub->callback([this, action]() { report_ = action(); });
    return sub;
  }

 private:
  CLI::App& app_;
  Output& out_;
  Report& report_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decision procedures for clutters, graphs and nonnegative integer matrices"};
  app.require_subcommand(1);
  app.allow_extras(false);

  Output out;
  Report report;
  Registry reg(app, out, report);

  Input in;
  std::string deleted, contracted, system = "ge", point, facet, b_max_str;
  std::size_t r_arg = 0, lifts = 1, max_vertices = 12, falsifier = 0, subring_cap = 160;
  bool stacked = false, no_falsifier = false, check_cones = false;
  bool explicit_falsifier = false;

  reg.add("covers", "minimal vertex covers of C, the edges of the blocker b(C)", in, [&] {
    auto c = load_clutter(in);
    auto cs = minimal_vertex_covers(c);
    auto r = plain("covers", "minimal vertex covers of C");
    r.json = Json::array();
    for (auto s : cs.covers) {
      Json names = Json::array();
      for (auto v : members(s)) names.push_back(c.vertices[v]);
      r.json.push_back(names);
      r.text += format_set(s, c.vertices) + "\n";
    }
    return r;
  });

  reg.add("blocker", "b(C): the clutter of minimal vertex covers; b(b(C)) = C", in, [&] {
    auto c = load_clutter(in);
    auto b = blocker(c);
    auto r = plain("blocker", "b(C) has the minimal vertex covers of C as edges");
    r.json = clutter_json(b);
    r.text = format_clutter(b);
    return r;
  });

  auto* minors_cmd = reg.add("minors", "minor C with x_i = 0 on deleted and x_i = 1 on contracted vertices", in, [&] {
    auto c = load_clutter(in);
    auto m = minor(c, parse_vertex_list(deleted, c), parse_vertex_list(contracted, c));
    auto r = plain("minor", "deletion sets x_i = 0, contraction sets x_i = 1");
    r.json = clutter_json(m);
    r.text = format_clutter(m);
    return r;
  });
  minors_cmd->add_option("--delete", deleted, "vertices to delete, comma separated");
  minors_cmd->add_option("--contract", contracted, "vertices to contract, comma separated");

  reg.add("alpha-beta", "covering number alpha0 and matching number beta1", in, [&] {
    auto c = load_clutter(in);
    auto a = alpha0(c), b = beta1(c);
    auto r = plain("alpha-beta", "alpha0 = least size of a vertex cover, beta1 = most pairwise disjoint edges");
    r.json = Json{{"alpha0", a}, {"beta1", b}};
    r.text = "alpha0=" + std::to_string(a) + " beta1=" + std::to_string(b) + "\n";
    return r;
  });

  reg.add("koenig", "Koenig property: alpha0 = beta1", in, [&] {
    return verdict_report("koenig", "C has the Koenig property iff alpha0(C) = beta1(C)", koenig(load_clutter(in)));
  });

  auto* packing_cmd = reg.add("packing", "packing property: every minor is Koenig", in, [&] {
    PackingOptions opt;
    opt.max_vertices = max_vertices;
    return verdict_report("packing", "C packs iff every minor satisfies alpha0 = beta1",
                          packing_property(load_clutter(in), opt));
  });
  packing_cmd->add_option("--max-vertices", max_vertices, "cap on the vertex count")->capture_default_str();

  reg.add("matching", "perfect matching: disjoint edges covering every vertex", in, [&] {
    auto c = load_clutter(in);
    auto m = perfect_matching(c);
    Verdict v;
    v.holds = m.has_value();
    v.basis = "exhaustive search over edge subsets";
    auto r = verdict_report("matching", "C has a perfect matching", v);
    if (m) {
      Json edges = Json::array();
      for (auto e : *m) {
        edges.push_back(format_set(e, c.vertices));
        r.text += format_set(e, c.vertices) + "\n";
      }
      r.json["matching"] = edges;
    }
    return r;
  });

  reg.add("balanced", "balanced: no odd square submatrix with two ones per row and column", in, [&] {
    return verdict_report("balanced", "A is balanced iff it has no odd-order square submatrix with exactly two ones "
                                      "in every row and column",
                          is_balanced(load_matrix(in)));
  });

  reg.add("snf", "Smith normal form and the quotient Z^n / (column lattice)", in, [&] {
    auto a = load_matrix(in);
    auto s = snf(a);
    auto q = lattice_quotient(a);
    auto r = plain("snf", "left * A * right = diag(d_1, ..., d_r) with d_1 | d_2 | ... | d_r");
    r.json = Json{{"rank", s.rank}, {"invariant_factors", vector_json(s.diag)},
                  {"free_rank", q.free_rank}, {"torsion", vector_json(q.torsion)}};
    r.text = "rank: " + std::to_string(s.rank) + "\ninvariant factors: " + vector_text(s.diag) +
             "\nquotient: Z^" + std::to_string(q.free_rank) +
             (q.torsion.empty() ? std::string() : " + torsion " + vector_text(q.torsion)) + "\n";
    return r;
  });

  auto* delta_cmd = reg.add("delta", "Delta_r: gcd of the nonzero r x r minors", in, [&] {
    auto a = load_matrix(in);
    if (stacked) a = a.stacked(IntVector(a.cols(), Integer(1)));
    const std::size_t r = r_arg ? r_arg : rank(a);
    auto d = delta_r(a, r);
    auto rep = plain("delta", "Delta_r(A) is the gcd of all nonzero r x r minors, the product of the first r "
                              "invariant factors");
    rep.json = Json{{"r", r}, {"stacked", stacked}, {"delta", to_string(d)}};
    rep.text = "Delta_" + std::to_string(r) + " = " + to_string(d) + "\n";
    return rep;
  });
  delta_cmd->add_option("--r", r_arg, "minor order (default: the rank)");
  delta_cmd->add_flag("--stacked", stacked, "append a row of ones first");

  reg.add("normal", "normality of R[It]", in, [&] {
    auto text = slurp(in.path);
    Verdict v = is_clutter_input(in, text) ? is_normal_ideal(parse_clutter(text)) : is_normal_ideal(parse_matrix(text));
    return verdict_report("normal", "R[It] is normal iff {e_1, ..., e_n, (v_1, 1), ..., (v_q, 1)} is a Hilbert basis",
                          v);
  });

  auto* irp_cmd = reg.add("irp", "integer rounding property of xA >= 1, xA <= 1 with x >= 0, or xA <= 1", in, [&] {
    RoundingOptions opt;
    if (no_falsifier) opt.falsifier_bound = 0;
    else if (explicit_falsifier) opt.falsifier_bound = falsifier;
    auto s = system == "ge" ? RoundingSystem::ge : system == "le" ? RoundingSystem::le : RoundingSystem::eq;
    const char* statement =
        s == RoundingSystem::ge ? "x >= 0; xA >= 1 has the rounding property iff R[It] is normal"
        : s == RoundingSystem::le
            ? "x >= 0; xA <= 1 has the rounding property iff the lifted lower vectors {(w, 1) : w <= v_i} form a "
              "Hilbert basis"
            : "xA <= 1 has the rounding property iff {(v_i, 1)} together with (0, 1) is a Hilbert basis";
    return verdict_report(std::string("irp ") + system_name(s), statement, irp(load_matrix(in), s, opt));
  });
  irp_cmd->add_option("--system", system, "ge | le | eq")->check(CLI::IsMember({"ge", "le", "eq"}))->capture_default_str();
  irp_cmd->add_option("--falsifier-bound", falsifier, "LP/IP comparison box [0, b]^n (default by size)")
      ->each([&](const std::string&) { explicit_falsifier = true; });
  irp_cmd->add_flag("--no-falsifier", no_falsifier, "skip the LP/IP comparison");

  reg.add("mfmc", "max-flow min-cut property", in, [&] {
    return verdict_report("mfmc", "C has the max-flow min-cut property iff Q(A) is integral and R[It] is normal",
                          mfmc(load_clutter(in)));
  });

  reg.add("ntf", "normally torsion-free: I^i = I^(i) for all i", in, [&] {
    return verdict_report("ntf", "I is normally torsion-free iff C has the max-flow min-cut property",
                          normally_torsion_free(load_clutter(in)));
  });

  auto* duality_cmd = reg.add("duality", "duality between x >= 0; xA* >= 1 and x >= 0; xA <= 1", in, [&] {
    DualityOptions opt;
    opt.max_subring_generators = subring_cap;
    return property_report("duality",
                           "for A* = (1 - a_ij): R[I* t] normal iff the lower vectors of A lift to a Hilbert basis "
                           "iff {-e_i, (v_j, 1)} is a Hilbert basis iff x >= 0; xA* >= 1 rounds iff x >= 0; "
                           "xA <= 1 rounds",
                           duality_report(load_clutter(in), opt));
  });
  duality_cmd->add_option("--max-subring-generators", subring_cap, "skip subring clauses above this size")
      ->capture_default_str();

  reg.add("uniform-consequences", "consequences of mfmc for a clutter", in, [&] {
    return property_report("uniform-consequences",
                           "if C has the max-flow min-cut property then Delta_r(B) = 1, the columns form a Hilbert "
                           "basis, and for uniform C a perfect matching exists iff n = d alpha0",
                           uniform_mfmc_consequences(load_clutter(in)));
  });

  reg.add("a-invariant", "a-invariant of S = K[x^w t : w <= v_i]", in, [&] {
    auto a = load_matrix(in);
    auto ainv = a_invariant_S(a);
    auto r = plain("a-invariant", "a(S) = -max_i ceil(1/d_i + |l_i|) over the maximal vertices l_i of P");
    Json mv = Json::array();
    for (const auto& m : maximal_vertices(a)) {
      Json e{{"d", to_string(m.d)}, {"norm", to_string(m.norm)}};
      Json ell = Json::array();
      for (const auto& x : m.ell) ell.push_back(to_string(x));
      e["vertex"] = ell;
      mv.push_back(e);
      r.text += "vertex " + to_string(m.ell) + "  d=" + to_string(m.d) + " |l|=" + to_string(m.norm) + "\n";
    }
    r.json = Json{{"a_invariant", to_string(ainv)}, {"maximal_vertices", mv}};
    r.text = "a(S) = " + to_string(ainv) + "\n" + r.text;
    return r;
  });

  auto* canonical_cmd = reg.add("canonical", "minimal generators of the canonical module of S", in, [&] {
    auto a = load_matrix(in);
    Integer b_max = -a_invariant_S(a) + Integer(a.rows()) + 1;
    if (!b_max_str.empty()) {
      if (b_max.set_str(b_max_str, 10) != 0) throw InvalidInput("bad --b-max");
    }
    auto m = canonical_module_gens(a, b_max);
    auto names = default_names(a.rows());
    auto r = generators_report("canonical", "omega_S is spanned by the x^a t^b with (a, b) in the relative interior "
                                            "of the cone of S",
                               m.generators, names);
    r.json = Json{{"a_invariant", to_string(m.a_invariant)}, {"degree_bound", to_string(m.degree_bound)},
                  {"generators", r.json}};
    r.text = "a(S) = " + to_string(m.a_invariant) + "\ndegree bound " + to_string(m.degree_bound) + "\n" + r.text;
    return r;
  });
  canonical_cmd->add_option("--b-max", b_max_str, "largest t-degree reported (default -a(S) + n + 1)");

  reg.add("gorenstein", "Gorenstein property of S", in, [&] {
    return verdict_report("gorenstein",
                          "S is Gorenstein iff its canonical module is principal; for integral P iff "
                          "a(S) = -(|l_i| + 1) at every maximal vertex",
                          is_gorenstein_S(load_matrix(in)));
  });

  reg.add("ci-bipartite", "complete intersection test for K[G] of a connected graph", in, [&] {
    return verdict_report("ci-bipartite",
                          "K[G] is a complete intersection iff G is bipartite with q - n + 1 primitive cycles",
                          complete_intersection_bipartite(load_graph(in)));
  });

  auto* edge_cone_cmd = reg.add("edge-cone", "irreducible representation of the edge cone of a graph", in, [&] {
    auto g = load_graph(in);
    if (!point.empty()) {
      auto a = parse_vector(point);
      if (a.size() != g.size()) throw InvalidInput("point must have one entry per vertex");
      Verdict v;
      v.holds = in_edge_cone(g, a);
      v.basis = "a >= 0 and sum over N(A) >= sum over A for every independent set A";
      return verdict_report("edge-cone", "a lies in the cone spanned by the edge vectors", v);
    }
    auto h = edge_cone_h_rep(g, true);
    auto r = plain("edge-cone", "the edge cone is cut out by a >= 0 and sum over N(A) minus sum over A >= 0 for "
                                "independent sets A");
    r.json = Json::array();
    for (const auto& v : h) {
      r.json.push_back(vector_json(v));
      r.text += vector_text(v) + "\n";
    }
    return r;
  });
  edge_cone_cmd->add_option("--point", point, "test membership of this vector instead");

  auto* sym_cmd = reg.add("symbolic-gens", "minimal generators of the symbolic Rees algebra", in, [&] {
    SymbolicCaps caps;
    caps.max_vertices = max_vertices;
    auto c = load_clutter(in);
    return generators_report("symbolic-gens", "R_s(I) is generated by the Hilbert basis of the Simis cone",
                             symbolic_rees_generators(c, caps), c.vertices);
  });
  sym_cmd->add_option("--max-vertices", max_vertices, "cap on the vertex count");

  auto* cover_cmd = reg.add("cover-gens", "irreducible b-covers: generators of the vertex cover algebra", in, [&] {
    SymbolicCaps caps;
    caps.max_vertices = max_vertices;
    auto c = load_clutter(in);
    auto r = generators_report("cover-gens", "the vertex cover algebra is generated by the Hilbert basis of the cover "
                                             "cone, the irreducible covers",
                               cover_algebra_generators(c, caps), c.vertices);
    if (check_cones && is_graph(c)) {
      auto structural = graph_irreducible_covers(c);
      auto computed = cover_algebra_generators(c, caps);
      std::sort(structural.begin(), structural.end());
      std::sort(computed.begin(), computed.end());
      if (structural != computed) throw CrossCheckFailure("structural irreducible covers disagree with the cone");
      r.text += "structural description agrees\n";
    }
    return r;
  });
  cover_cmd->add_option("--max-vertices", max_vertices, "cap on the vertex count");
  cover_cmd->add_flag("--check", check_cones, "compare with the structural list for graphs");

  reg.add("irreducible-subgraphs", "induced subgraphs that are irreducible graphs", in, [&] {
    auto g = load_graph(in);
    auto subs = irreducible_induced_subgraphs(g);
    auto r = plain("irreducible-subgraphs",
                   "the binary generators x^a t^b of R_s(I(G)) are the irreducible induced subgraphs with b = alpha0");
    r.json = Json::array();
    for (const auto& s : subs) {
      r.json.push_back(Json{{"vertices", format_set(s.vertices, g.vertices)}, {"alpha0", s.alpha0}});
      r.text += format_set(s.vertices, g.vertices) + "  alpha0=" + std::to_string(s.alpha0) + "\n";
    }
    return r;
  });

  reg.add("irreducible-graph", "G admits no split into two induced subgraphs with additive alpha0", in, [&] {
    return verdict_report("irreducible-graph",
                          "G is irreducible iff no vertex partition into induced H1, H2 has "
                          "alpha0(G) = alpha0(H1) + alpha0(H2)",
                          is_irreducible_graph(load_graph(in)));
  });

  auto* lift_cmd = reg.add("cone-lift", "lift a cover-cone facet to a symbolic generator of the cone graph", in, [&] {
    auto g = load_graph(in);
    auto f = parse_vector(facet);
    auto gen = iterated_cone_lift(g, f, lifts);
    auto names = g.vertices;
    for (std::size_t k = 0; k < lifts; ++k) names.push_back("x" + std::to_string(g.size() + k + 1));
    return generators_report("cone-lift",
                             "a facet (a, -b) of the cover cone with all a_i >= 1 gives the generator "
                             "x^a x_{n+1}^{|a| - b} t^{|a|} of R_s(I(cone over G))",
                             {gen}, names);
  });
  lift_cmd->add_option("--facet", facet, "facet (a_1, ..., a_n, -b), comma separated")->required();
  lift_cmd->add_option("--times", lifts, "number of iterated cones")->capture_default_str();

  cli::SweepConfig sweep_cfg;
  std::string conjecture;
  auto* sweep_cmd = app.add_subcommand("sweep", "bounded falsifier sweep for an open statement; never asserts it");
  sweep_cmd->add_option("--conjecture", conjecture, "cc | ehrhart | delta-one | unimodular-triangulation | "
                                                    "gorenstein-closed-form")
      ->required()
      ->check(CLI::IsMember({"cc", "ehrhart", "delta-one", "unimodular-triangulation", "gorenstein-closed-form"}));
  sweep_cmd->add_option("--min-vertices", sweep_cfg.min_vertices)->capture_default_str();
  sweep_cmd->add_option("--max-vertices", sweep_cfg.max_vertices)->capture_default_str();
  sweep_cmd->add_option("--max-edges", sweep_cfg.max_edges)->capture_default_str();
  sweep_cmd->add_option("--triangulation-tries", sweep_cfg.triangulation_tries)->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_cfg.seed)->capture_default_str();
  sweep_cmd->add_option("--report", sweep_cfg.report_path, "write the JSON report here");
  sweep_cmd->add_option("--violators-dir", sweep_cfg.violators_dir, "write violating instances here");
  sweep_cmd->add_flag("--json", out.json, "print the report as JSON");
  sweep_cmd->callback([&] {
    sweep_cfg.conjecture = cli::parse_conjecture(conjecture);
    report = cli::run_sweep(sweep_cfg);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "over cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CrossCheckFailure& e) {
    std::cerr << "internal cross-check failed: " << e.what() << "\n";
    return kExitInternal;
  }

  std::cout << (out.json ? render_json(report) : render_text(report));
  return exit_code(report);
}
