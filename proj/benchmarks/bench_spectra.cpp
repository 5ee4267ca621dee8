// Micro-benchmarks for the hot paths: exact matrix assembly, basis
// construction, and the tridiagonal eigenvalue machinery.

#include "kohn/bounds.hpp"
#include "kohn/harmonics.hpp"
#include "kohn/rossi_operator.hpp"
#include "kohn/tridiag.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace kohn;

void bm_basis_hm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // bypass the library cache so the solve cost itself is measured
    for (int p = 0; p <= m; ++p)
      benchmark::DoNotOptimize(basis_hpq_solve(p, m - p));
  }
}
BENCHMARK(bm_basis_hm)->Arg(3)->Arg(5);

void bm_assemble_full(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const RossiParam t(Rational(1, 2));
  basis_hm(m);  // warm the basis cache; the assembly cost is what matters
  for (auto _ : state) benchmark::DoNotOptimize(assemble_full(m, t));
}
BENCHMARK(bm_assemble_full)->Arg(3)->Arg(5);

void bm_lambda_min(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const SymTridiag block = block_symmetric(closed_form_block(k, BlockKind::W, RossiParam(Rational(1, 2))));
  for (auto _ : state) benchmark::DoNotOptimize(lambda_min(block, 1e-12));
}
BENCHMARK(bm_lambda_min)->Arg(20)->Arg(100);

void bm_bound_chain(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const RossiParam t(Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(bound_chain(k, t));
}
BENCHMARK(bm_bound_chain)->Arg(5)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
