#pragma once

#include <cstddef>
#include <string>

#include "clutter_algebra/report.hpp"

namespace clutter_algebra::cli {

// Open statements that are only ever probed, never asserted.
enum class Conjecture {
  cc,                       // packing property implies max-flow min-cut
  ehrhart,                  // uniform + packing: K[Pt] equals the Ehrhart ring
  delta_one,                // uniform + packing: Delta_r of A stacked on ones is 1
  unimodular_triangulation, // uniform + mfmc: cone(A) has a unimodular regular triangulation
  gorenstein_closed_form,   // graphs with rounding: Gorenstein iff -a = 1/d_i + |l_i| for all i
};

Conjecture parse_conjecture(const std::string& token);
const char* conjecture_token(Conjecture c);

struct SweepConfig {
  Conjecture conjecture = Conjecture::cc;
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 5;
  std::size_t max_edges = 6;
  std::size_t triangulation_tries = 8;  // random liftings tried per instance
  std::uint64_t seed = 1;
  std::string report_path;       // empty: no file
  std::string violators_dir;     // empty: no files
};

// Instances are visited in enumeration order, so the report is identical
// across runs.  Violators are written as replayable input files; the
// returned report never asserts the conjecture (holds is left empty).
Report run_sweep(const SweepConfig& cfg);

}  // namespace clutter_algebra::cli
