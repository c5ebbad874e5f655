#include <benchmark/benchmark.h>

#include "ringlab/classify.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/subsets.hpp"

namespace {

using namespace ringlab;

const Config kCfg{};

const FiniteRing& m2z4() {
  static const FiniteRing ring = matrix_ring(zmod_ring(4), 2, kCfg).ring;
  return ring;
}

const FiniteRing& t2z8() {
  static const FiniteRing ring = upper_triangular_ring(zmod_ring(8), 2, kCfg).ring;
  return ring;
}

void bench_validate_m2z4(benchmark::State& state) {
  const FiniteRing& ring = m2z4();
  for (auto _ : state) ring.revalidate();
}
BENCHMARK(bench_validate_m2z4);

void bench_units_t2z8(benchmark::State& state) {
  const FiniteRing& ring = t2z8();
  for (auto _ : state) benchmark::DoNotOptimize(units(ring));
}
BENCHMARK(bench_units_t2z8);

void bench_delta_t2z8(benchmark::State& state) {
  const FiniteRing& ring = t2z8();
  const UnitTable ut = units(ring);
  for (auto _ : state) benchmark::DoNotOptimize(delta_set(ring, ut));
}
BENCHMARK(bench_delta_t2z8);

void bench_sdc_witness_search_t2z8(benchmark::State& state) {
  const FiniteRing& ring = t2z8();
  const SubsetProfile profile = SubsetProfile::compute(ring);
  for (auto _ : state) benchmark::DoNotOptimize(is_strongly_delta_clean(ring, profile));
}
BENCHMARK(bench_sdc_witness_search_t2z8);

void bench_group_ring_f2d4(benchmark::State& state) {
  const FiniteRing f2 = galois_field(2);
  const FiniteGroup d4 = dihedral_4();
  for (auto _ : state) benchmark::DoNotOptimize(group_ring(f2, d4, kCfg));
}
BENCHMARK(bench_group_ring_f2d4);

void bench_ideal_lattice_t2z4(benchmark::State& state) {
  const FiniteRing ring = upper_triangular_ring(zmod_ring(4), 2, kCfg).ring;
  for (auto _ : state)
    benchmark::DoNotOptimize(ideal_lattice(ring, Side::Right, kCfg.ideal_budget));
}
BENCHMARK(bench_ideal_lattice_t2z4);

void bench_standard_corpus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(standard_corpus(kCfg));
}
BENCHMARK(bench_standard_corpus)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
