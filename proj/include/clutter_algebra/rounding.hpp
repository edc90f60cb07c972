#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clutter_algebra/clutter.hpp"
#include "clutter_algebra/lattice.hpp"

namespace clutter_algebra {

struct PropertyReport {
  std::vector<std::pair<std::string, Verdict>> verdicts;
  std::vector<std::string> cross_check_failures;
  std::vector<std::string> skipped;  // clauses not evaluated, with the reason

  const Verdict& at(const std::string& name) const;
  Json to_json() const;
};

// R[It] is normal iff {e_1..e_n, (v_1,1)..(v_q,1)} is a Hilbert basis.  A
// failure carries (a, b) with x^a t^b in the integral closure of I^b but not in I^b.
Verdict is_normal_ideal(const MonomialIdeal& ideal);
Verdict is_normal_ideal(const IntMatrix& a);  // columns are the exponent vectors
Verdict is_normal_ideal(const Clutter& c);

// The three rounding systems for a nonnegative A with columns v_1..v_q:
//   ge: xA >= 1, x >= 0    le: xA <= 1, x >= 0    eq: xA <= 1
enum class RoundingSystem { ge, le, eq };
const char* system_name(RoundingSystem s);

struct RoundingCounterexample {
  IntVector w;
  Rational lp;
  std::optional<Integer> ip;  // absent when the integer program is infeasible
};
// Compares the LP optimum (exact, over the vertices of the dual polyhedron)
// with the integer optimum for every integral w in [0, bound]^n where the LP
// is finite.
std::optional<RoundingCounterexample> rounding_falsifier(const IntMatrix& a, RoundingSystem s, std::size_t bound);
// 2 for n <= 5, 1 for n <= 8, otherwise 0 (skipped).
std::size_t default_falsifier_bound(std::size_t n);

struct RoundingOptions {
  // Falsifier box; nullopt picks default_falsifier_bound.
  std::optional<std::size_t> falsifier_bound;
  std::size_t max_generators = 4096;
  bool cross_checks = true;
};

Verdict irp_ge(const IntMatrix& a, const RoundingOptions& opt = {});
Verdict irp_le(const IntMatrix& a, const RoundingOptions& opt = {});
Verdict irp_eq(const IntMatrix& a, const RoundingOptions& opt = {});
Verdict irp(const IntMatrix& a, RoundingSystem s, const RoundingOptions& opt = {});
// All alpha in N^n with alpha <= v_i for some column v_i, sorted.
std::vector<IntVector> lower_vectors(const IntMatrix& a);

struct MfmcOptions {
  // Parallelization check beta1(C^w) = alpha0(C^w) over w in [0, bound]^n.
  std::size_t weight_bound = 2;
  std::size_t weight_check_max_vertices = 8;
};
Verdict mfmc(const Clutter& c, const MfmcOptions& opt = {});
Verdict normally_torsion_free(const Clutter& c, const MfmcOptions& opt = {});

struct DualityOptions {
  // Clauses built on the subring K[x^w t : w <= v_i] are skipped, and listed
  // as such, when it has more generators than this.
  std::size_t max_subring_generators = 160;
};
// Requires every edge to differ from the vertex set (A* without zero columns).
PropertyReport duality_report(const Clutter& c, const DualityOptions& opt = {});
PropertyReport uniform_mfmc_consequences(const Clutter& c);

// Delta_r of A with an all-ones row appended, r its rank.
Integer stacked_delta(const Clutter& c);

Verdict is_minimally_non_normal(const Clutter& c, std::size_t max_vertices = 10);

struct NormalityPair {
  Verdict before;
  Verdict after;
};
NormalityPair parallelization_preserves_normality_test(const Clutter& c, const std::vector<std::size_t>& w);

}  // namespace clutter_algebra
