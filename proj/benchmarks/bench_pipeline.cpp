#include "patchglue/glue.hpp"
#include "patchglue/patchwork.hpp"
#include "patchglue/sampling.hpp"
#include "patchglue/strata.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace patchglue;

namespace {

std::vector<LatticePolyhedron> raw_cells(const Subdivision& s) {
  std::vector<LatticePolyhedron> out;
  for (std::size_t id : s.maximal) out.push_back(s.cells[id]);
  return out;
}

ViroInput harnack_input(long long d) {
  auto [points, signs] = harnack_signs(d);
  ViroInput in;
  in.n = 2;
  in.points = points;
  in.signs = signs;
  in.lifting = quadratic_lifting(points);
  return in;
}

void BM_ValidateSubdivision(benchmark::State& state) {
  std::mt19937 rng(static_cast<unsigned>(state.range(0)));
  Subdivision sample = random_subdivision_2d(rng);
  std::vector<LatticePolyhedron> cells = raw_cells(sample);
  for (auto _ : state) {
    Subdivision s = validate_subdivision(2, cells);
    benchmark::DoNotOptimize(s.cells.size());
  }
  state.counters["cells"] = static_cast<double>(sample.cells.size());
}

void BM_ChiPipeline(benchmark::State& state) {
  std::mt19937 rng(static_cast<unsigned>(state.range(0)));
  Subdivision s = random_subdivision_2d(rng);
  for (auto _ : state) {
    Int formula = chi_formula(s).chi_positive;
    Int direct = chi_direct(build_glued_complex(s));
    if (formula != direct) state.SkipWithError("chi mismatch");
    benchmark::DoNotOptimize(direct);
  }
}

void BM_GluedSurface(benchmark::State& state) {
  std::mt19937 rng(static_cast<unsigned>(state.range(0)));
  Subdivision s = random_subdivision_2d(rng);
  GluedComplex g = build_glued_complex(s);
  for (auto _ : state) {
    SurfaceReport surf = surface_type(g);
    benchmark::DoNotOptimize(surf.closed);
  }
}

void BM_Patchwork(benchmark::State& state) {
  ViroInput in = harnack_input(state.range(0));
  RegularSubdivision g = regular_subdivision(in);
  for (auto _ : state) {
    CurveReport r = curve_report(build_patchwork(in, g));
    benchmark::DoNotOptimize(r.components);
  }
  state.counters["points"] = static_cast<double>(in.points.size());
}

void BM_NumericOracle(benchmark::State& state) {
  ViroInput in = harnack_input(3);
  in.coeffs.clear();
  for (Sign s : in.signs) in.coeffs.push_back(s == Sign::Plus ? Rat(1) : Rat(-1));
  for (auto _ : state) {
    OracleReport r = numeric_oracle(in, Rat(1, 1024), state.range(0));
    benchmark::DoNotOptimize(r.components);
  }
}

BENCHMARK(BM_ValidateSubdivision)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChiPipeline)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GluedSurface)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Patchwork)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NumericOracle)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
