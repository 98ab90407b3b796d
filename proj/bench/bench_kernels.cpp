// Serial reference vs OpenMP kernels.
//   OMP_NUM_THREADS=8 ./hilbres_bench

#include <benchmark/benchmark.h>

#include <random>

#include "hilbres/assembler.hpp"
#include "hilbres/kernels.hpp"

using namespace hilbres;

namespace {

ContextPtr bench_context() {
  ContextSpec s;
  s.residue_vars = {"z1", "z2", "z3", "z4"};
  s.geometry_symbols = {{"L", 1}, {"c1", 1}, {"c2", 2}};
  return VariableContext::make(s);
}

MPoly random_poly(std::mt19937& rng, const ContextPtr& ctx, int terms) {
  std::uniform_int_distribution<int> coeff(-9, 9), ex(-3, 5);
  MPoly p(ctx);
  for (int t = 0; t < terms; ++t) {
    MPoly m(ctx, Rational(coeff(rng)));
    for (std::size_t v = 0; v < ctx->size(); ++v) {
      int e = ex(rng);
      if (!ctx->is_residue(v)) e = std::abs(e) % 3;
      if (e) m *= MPoly::variable(ctx, v, e);
    }
    p += m;
  }
  return p;
}

template <MPoly (*Kernel)(const MPoly&, const MPoly&)>
void BM_Multiply(benchmark::State& state) {
  auto ctx = bench_context();
  std::mt19937 rng(1);
  MPoly a = random_poly(rng, ctx, static_cast<int>(state.range(0)));
  MPoly b = random_poly(rng, ctx, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
  state.counters["pairs"] = static_cast<double>(a.size() * b.size());
}

void BM_ResidueA2(benchmark::State& state) {
  Assembled a = assemble_severi(2);
  ResidueOptions o;
  o.exec = state.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : state) benchmark::DoNotOptimize(iterated_residue(a.problem, o));
}

void BM_GrassmannResidue(benchmark::State& state) {
  auto ctx = grassmann_context(7, 3);
  auto p = grassmann_residue_problem(ctx, 7, 3, parse_poly(ctx, "z1^6*z2^4*z3^2"));
  ResidueOptions o;
  o.exec = state.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : state) benchmark::DoNotOptimize(iterated_residue(p, o));
}

// Term-level evaluation of the geometric component: one term per set partition.
void BM_GhilbTermsSerial(benchmark::State& state) {
  auto terms = assemble_ghilb(static_cast<int>(state.range(0)), BundleModel{},
                              SurfaceModel::preset("generic-surface"), ChernPolynomial{"c3^2"});
  for (auto _ : state)
    for (const auto& t : terms) benchmark::DoNotOptimize(evaluate(*t.integrand));
}

void BM_GhilbTermsParallel(benchmark::State& state) {
  auto terms = assemble_ghilb(static_cast<int>(state.range(0)), BundleModel{},
                              SurfaceModel::preset("generic-surface"), ChernPolynomial{"c3^2"});
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_terms(terms));
}

}  // namespace

BENCHMARK(BM_Multiply<multiply_serial>)->Name("multiply/serial")->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_Multiply<multiply_parallel>)->Name("multiply/parallel")->Arg(64)->Arg(256)->Arg(1024)->UseRealTime();
BENCHMARK(BM_ResidueA2)->Name("residue_a2")->Arg(0)->Arg(1)->UseRealTime();
BENCHMARK(BM_GrassmannResidue)->Name("residue_grassmann_7_3")->Arg(0)->Arg(1)->UseRealTime();
BENCHMARK(BM_GhilbTermsSerial)->Name("ghilb_terms/serial")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GhilbTermsParallel)->Name("ghilb_terms/parallel")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
