#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "clutter_algebra/errors.hpp"
#include "clutter_algebra/report.hpp"
#include "families.hpp"
#include "helpers.hpp"
#include "sweep.hpp"

using namespace clutter_algebra;
using namespace clutter_algebra::cli;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("clutter_algebra_" + name);
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST_SUITE("cli-report") {
  TEST_CASE("verdict reports") {
    auto holds = verdict_report("koenig", "alpha0 equals beta1", koenig(testing::complete_graph(2)));
    CHECK(exit_code(holds) == 0);
    CHECK(render_text(holds).rfind("koenig: true\nstatement: alpha0 equals beta1\n", 0) == 0);

    auto fails = verdict_report("koenig", "alpha0 equals beta1", koenig(parse_clutter(testing::data_file("two_partitionable.clutter"))));
    CHECK(exit_code(fails) == 1);
    const auto j = Json::parse(render_json(fails));
    CHECK(j["holds"] == false);
    CHECK(j["result"]["certificate"]["data"]["alpha0"] == 2);
    CHECK(j["result"]["certificate"]["data"]["beta1"] == 1);

    Report plain;
    plain.title = "snf";
    CHECK(exit_code(plain) == 0);
    CHECK(Json::parse(render_json(plain))["holds"].is_null());
  }

  TEST_CASE("property reports list skipped clauses") {
    DualityOptions tight;
    tight.max_subring_generators = 1;
    auto r = property_report("duality", "equivalent normality conditions", duality_report(testing::cycle_graph(4), tight));
    CHECK(r.holds == true);
    const auto text = render_text(r);
    CHECK(text.find("skipped: b_subring_normal") != std::string::npos);
    CHECK(text.find("skipped: e_irp_le") != std::string::npos);
    CHECK(text.find("a_dual_ideal_normal: true") != std::string::npos);
  }

  TEST_CASE("conjecture tokens round trip") {
    for (auto c : {Conjecture::cc, Conjecture::ehrhart, Conjecture::delta_one, Conjecture::unimodular_triangulation,
                   Conjecture::gorenstein_closed_form})
      CHECK(parse_conjecture(conjecture_token(c)) == c);
    CHECK_THROWS_AS(parse_conjecture("2.2.15"), InvalidInput);
  }

  TEST_CASE("sweeps are deterministic and never assert") {
    SweepConfig cfg;
    cfg.conjecture = Conjecture::cc;
    cfg.max_vertices = 5;
    const auto path = scratch_dir("cc_report.json");
    cfg.report_path = path.string();
    auto first = run_sweep(cfg);
    auto second = run_sweep(cfg);
    CHECK_FALSE(first.holds.has_value());
    CHECK(render_json(first) == render_json(second));
    CHECK(first.json["instances"].get<std::size_t>() > 0);
    CHECK(first.json["premise_holds"].get<std::size_t>() > 0);
    std::ifstream in(path);
    CHECK(Json::parse(in)["result"]["conjecture"] == "cc");
    std::filesystem::remove(path);
  }

  TEST_CASE("delta-one sweep covers the perfect matching family") {
    SweepConfig cfg;
    cfg.conjecture = Conjecture::delta_one;
    cfg.max_vertices = 6;
    cfg.max_edges = 4;
    auto r = run_sweep(cfg);
    std::size_t family = 0;
    for (const auto& c : r.json["cases"])
      if (c["data"]["perfect_matching_alpha0_two"].get<bool>()) {
        ++family;
        CHECK(c["data"]["delta"] == "1");
      }
    CHECK(family > 0);
  }

  TEST_CASE("Gorenstein sweep logs both sides") {
    SweepConfig cfg;
    cfg.conjecture = Conjecture::gorenstein_closed_form;
    cfg.max_vertices = 5;
    auto r = run_sweep(cfg);
    CHECK(r.json["cases"].size() == r.json["premise_holds"].get<std::size_t>());
    for (const auto& c : r.json["cases"]) {
      CHECK(c["data"].contains("gorenstein"));
      CHECK(c["data"].contains("condition"));
    }
  }

  TEST_CASE("violators and undecided instances are written as input files") {
    SweepConfig cfg;
    cfg.conjecture = Conjecture::unimodular_triangulation;
    cfg.max_vertices = 5;
    cfg.triangulation_tries = 0;
    const auto dir = scratch_dir("violators");
    cfg.violators_dir = dir.string();
    auto r = run_sweep(cfg);
    for (const auto& c : r.json["cases"])
      if (c.contains("file")) CHECK(parse_clutter(testing::data_file_at(c["file"].get<std::string>())).size() > 0);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("sweep caps") {
    SweepConfig cfg;
    cfg.max_vertices = 9;
    CHECK_THROWS_AS(run_sweep(cfg), CapExceeded);
  }
}
