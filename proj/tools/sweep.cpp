#include "sweep.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include "clutter_algebra/canonical.hpp"
#include "clutter_algebra/clutter.hpp"
#include "clutter_algebra/enumerate.hpp"
#include "clutter_algebra/errors.hpp"
#include "clutter_algebra/exact_linalg.hpp"
#include "clutter_algebra/graph.hpp"
#include "clutter_algebra/lattice.hpp"
#include "clutter_algebra/rounding.hpp"
#include "clutter_algebra/triangulation.hpp"

namespace clutter_algebra::cli {

namespace {

struct Token {
  const char* name;
  Conjecture value;
};
constexpr Token kTokens[] = {
    {"cc", Conjecture::cc},
    {"ehrhart", Conjecture::ehrhart},
    {"delta-one", Conjecture::delta_one},
    {"unimodular-triangulation", Conjecture::unimodular_triangulation},
    {"gorenstein-closed-form", Conjecture::gorenstein_closed_form},
};

const char* conjecture_statement(Conjecture c) {
  switch (c) {
    case Conjecture::cc:
      return "if a clutter has the packing property then it has the max-flow min-cut property";
    case Conjecture::ehrhart:
      return "if a uniform clutter has the packing property then K[Pt] equals the Ehrhart ring A(P)";
    case Conjecture::delta_one:
      return "if a uniform clutter has the packing property then Delta_r(B) = 1 for B = A stacked on a ones row";
    case Conjecture::unimodular_triangulation:
      return "if a uniform clutter has the max-flow min-cut property then cone(A) has a unimodular regular "
             "triangulation";
    case Conjecture::gorenstein_closed_form:
      return "for a connected graph whose system x >= 0, xA <= 1 has the rounding property, S is Gorenstein iff "
             "-a(S) = 1/d_i + |l_i| for every maximal vertex";
  }
  return "";
}

std::vector<Clutter> uniform_clutters(const SweepConfig& cfg) {
  std::vector<Clutter> out;
  for (std::size_t n = std::max<std::size_t>(cfg.min_vertices, 1); n <= cfg.max_vertices; ++n)
    for (std::size_t d = 1; d <= n; ++d) {
      EnumerationOptions opt;
      opt.vertices = n;
      opt.max_edges = cfg.max_edges;
      opt.edge_sizes = std::uint64_t(1) << d;
      for (auto& c : enumerate_clutters(opt)) out.push_back(std::move(c));
    }
  return out;
}

// Placing triangulations are regular; the index order is tried first, then
// random orders.
std::optional<Triangulation> unimodular_placing(const std::vector<IntVector>& points, std::size_t tries,
                                                std::mt19937_64& rng) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t t = 0; t <= tries; ++t) {
    if (t > 0) std::shuffle(order.begin(), order.end(), rng);
    std::vector<IntVector> placed;
    for (auto i : order) placed.push_back(points[i]);
    auto tri = placing_triangulation(placed);
    bool ok = std::all_of(tri.simplices.begin(), tri.simplices.end(),
                          [&](const auto& s) { return is_unimodular_simplex(placed, s); });
    if (ok) {
      for (auto& s : tri.simplices) {
        for (auto& i : s) i = order[i];
        std::sort(s.begin(), s.end());
      }
      return tri;
    }
  }
  return std::nullopt;
}

struct Outcome {
  bool premise = false;
  bool violated = false;
  bool undecided = false;
  Json data = Json::object();
};

Outcome evaluate(const SweepConfig& cfg, const Clutter& c, std::mt19937_64& rng) {
  Outcome o;
  const IntMatrix a = incidence_matrix(c);
  switch (cfg.conjecture) {
    case Conjecture::cc: {
      o.premise = packing_property(c).holds;
      if (o.premise) o.violated = !mfmc(c).holds;
      break;
    }
    case Conjecture::ehrhart: {
      o.premise = packing_property(c).holds;
      if (!o.premise) break;
      std::vector<IntVector> lifted;
      for (auto v : a.column_list()) {
        v.push_back(1);
        lifted.push_back(std::move(v));
      }
      o.violated = !is_hilbert_basis(lifted).holds;
      break;
    }
    case Conjecture::delta_one: {
      o.premise = packing_property(c).holds;
      if (!o.premise) break;
      const Integer delta = stacked_delta(c);
      o.data["delta"] = to_string(delta);
      o.data["perfect_matching_alpha0_two"] = perfect_matching(c).has_value() && alpha0(c) == 2;
      o.violated = delta != 1;
      break;
    }
    case Conjecture::unimodular_triangulation: {
      o.premise = mfmc(c).holds;
      if (!o.premise) break;
      auto tri = unimodular_placing(a.column_list(), cfg.triangulation_tries, rng);
      if (tri) {
        Json s = Json::array();
        for (const auto& simplex : tri->simplices) s.push_back(simplex);
        o.data["simplices"] = s;
      } else {
        o.undecided = true;
      }
      break;
    }
    case Conjecture::gorenstein_closed_form: {
      o.premise = irp_le(a).holds;
      if (!o.premise) break;
      const bool gorenstein = is_gorenstein_S(a).holds;
      const Integer ainv = a_invariant_S(a);
      const Rational minus_a = Rational(-ainv);
      bool condition = true;
      for (const auto& m : maximal_vertices(a))
        condition = condition && minus_a == Rational(1) / Rational(m.d) + m.norm;
      o.data["gorenstein"] = gorenstein;
      o.data["condition"] = condition;
      o.data["a_invariant"] = to_string(ainv);
      o.violated = gorenstein != condition;
      break;
    }
  }
  return o;
}

void write_file(const std::filesystem::path& p, const std::string& body) {
  std::ofstream out(p);
  if (!out) throw InvalidInput("cannot write " + p.string());
  out << body;
}

}  // namespace

Conjecture parse_conjecture(const std::string& token) {
  for (const auto& t : kTokens)
    if (token == t.name) return t.value;
  throw InvalidInput("unknown conjecture: " + token);
}

const char* conjecture_token(Conjecture c) {
  for (const auto& t : kTokens)
    if (t.value == c) return t.name;
  return "";
}

Report run_sweep(const SweepConfig& cfg) {
  if (cfg.max_vertices > 8) throw CapExceeded("sweeps are limited to 8 vertices");
  std::vector<Clutter> instances;
  if (cfg.conjecture == Conjecture::gorenstein_closed_form) {
    for (std::size_t n = std::max<std::size_t>(cfg.min_vertices, 2); n <= cfg.max_vertices; ++n)
      for (auto& g : enumerate_graphs(n, true)) instances.push_back(std::move(g));
  } else {
    instances = uniform_clutters(cfg);
  }

  std::mt19937_64 rng(cfg.seed);
  std::size_t premise = 0, violators = 0, undecided = 0;
  Json cases = Json::array();
  if (!cfg.violators_dir.empty()) std::filesystem::create_directories(cfg.violators_dir);

  for (std::size_t k = 0; k < instances.size(); ++k) {
    const Clutter& c = instances[k];
    Outcome o;
    try {
      o = evaluate(cfg, c, rng);
    } catch (const CapExceeded& e) {
      o.undecided = true;
      o.data["skipped"] = e.what();
    }
    if (!o.premise && !o.undecided) continue;
    premise += o.premise;
    violators += o.violated;
    undecided += o.undecided;
    Json entry{{"index", k}, {"clutter", format_clutter(c)}, {"violated", o.violated}, {"undecided", o.undecided}};
    entry["data"] = o.data;
    if ((o.violated || o.undecided) && !cfg.violators_dir.empty()) {
      const auto name = std::string(conjecture_token(cfg.conjecture)) + (o.violated ? "_violator_" : "_undecided_") +
                        std::to_string(k) + ".clutter";
      const auto path = std::filesystem::path(cfg.violators_dir) / name;
      write_file(path, "# " + std::string(conjecture_token(cfg.conjecture)) + " sweep instance " +
                           std::to_string(k) + "\n" + format_clutter(c));
      entry["file"] = path.string();
    }
    cases.push_back(std::move(entry));
  }

  Report r;
  r.title = std::string("sweep ") + conjecture_token(cfg.conjecture);
  r.statement = conjecture_statement(cfg.conjecture);
  r.json = Json{{"conjecture", conjecture_token(cfg.conjecture)},
                {"min_vertices", cfg.min_vertices},
                {"max_vertices", cfg.max_vertices},
                {"max_edges", cfg.max_edges},
                {"instances", instances.size()},
                {"premise_holds", premise},
                {"violators", violators},
                {"undecided", undecided},
                {"cases", cases}};
  r.text = "instances: " + std::to_string(instances.size()) + "\npremise holds: " + std::to_string(premise) +
           "\nviolators: " + std::to_string(violators) + "\nundecided: " + std::to_string(undecided) + "\n";
  for (const auto& e : cases)
    if (e["violated"].get<bool>() || e["undecided"].get<bool>())
      r.text += std::string(e["violated"].get<bool>() ? "violator" : "undecided") + " #" +
                std::to_string(e["index"].get<std::size_t>()) + "\n" + e["clutter"].get<std::string>();
  if (!cfg.report_path.empty()) write_file(cfg.report_path, render_json(r));
  return r;
}

}  // namespace clutter_algebra::cli
