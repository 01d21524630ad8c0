#include <benchmark/benchmark.h>

#include "primeul/arrangement/builders.hpp"
#include "primeul/coxstats/coxstats.hpp"
#include "primeul/fanface/fan.hpp"
#include "primeul/peul/peul.hpp"

using namespace primeul;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "parallel" : "serial"); }

void BM_flats_mobius(benchmark::State& s) {
  const auto a = arr::type_b(4);
  for (auto _ : s) benchmark::DoNotOptimize(peul::peul_mobius(a, exec_of(s)));
  label(s);
}

void BM_regions(benchmark::State& s) {
  const auto a = arr::type_b(4);
  for (auto _ : s) benchmark::DoNotOptimize(fan::enumerate_regions(a, exec_of(s)));
  label(s);
}

void BM_faces(benchmark::State& s) {
  const auto a = arr::type_d(4);
  for (auto _ : s) benchmark::DoNotOptimize(fan::enumerate_faces(a, exec_of(s)));
  label(s);
}

void BM_halfspace(benchmark::State& s) {
  const auto fan = fan::enumerate_faces(arr::type_b(4));
  const auto v = *peul::canonical_vector("B 4");
  for (auto _ : s) benchmark::DoNotOptimize(fan::faces_in_halfspace(fan, v, exec_of(s)));
  label(s);
}

void BM_descents_B(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(cox::peul_B_des(6, exec_of(s)));
  label(s);
}

void BM_excedances_A(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(cox::peul_A_exc(9, exec_of(s)));
  label(s);
}

}  // namespace

BENCHMARK(BM_flats_mobius)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_regions)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_faces)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_halfspace)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_descents_B)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_excedances_A)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
