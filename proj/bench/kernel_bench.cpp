// Serial reference against the OpenMP kernels on fixed instances.

#include <benchmark/benchmark.h>

#include "clutter_algebra/clutter.hpp"
#include "clutter_algebra/graph.hpp"
#include "clutter_algebra/lattice.hpp"
#include "clutter_algebra/symbolic.hpp"

using namespace clutter_algebra;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

Clutter cone_over_pentagon() { return cone_over(make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})); }

// Rees algebra generators of two disjoint triangles: {e_i} and {(v_j, 1)}.
std::vector<IntVector> rees_generators() {
  auto c = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto a = incidence_matrix(c);
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < 6; ++i) {
    IntVector e(7, Integer(0));
    e[i] = 1;
    gens.push_back(e);
  }
  for (auto v : a.column_list()) {
    v.push_back(1);
    gens.push_back(v);
  }
  return gens;
}

void BM_HilbertBasis(benchmark::State& state) {
  const auto gens = rees_generators();
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis_of(gens, mode(state)).elements.size());
}
BENCHMARK(BM_HilbertBasis)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_SymbolicGenerators(benchmark::State& state) {
  const auto c = cone_over_pentagon();
  SymbolicCaps caps;
  caps.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_rees_generators(c, caps).size());
}
BENCHMARK(BM_SymbolicGenerators)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_PackingProperty(benchmark::State& state) {
  // Fano plane: every minor is scanned before the verdict.
  const auto fano = make_clutter(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
  PackingOptions opt;
  opt.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(packing_property(fano, opt).holds);
}
BENCHMARK(BM_PackingProperty)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
