#include <benchmark/benchmark.h>

#include "zgrade/census.hpp"

using namespace zgrade;

namespace {

InvolutionSpec pick(const char* base, int k, bool hermitian, int index) {
  for (auto& spec : classify_involutions(parse_finite_kind(base)))
    if (spec.k == k && spec.hermitian() == hermitian)
      for (int i : spec.equivalent_indices)
        if (i == index) return spec;
  throw InputError("no such class");
}

void BM_GradedData(benchmark::State& state, const char* base, int k, bool hermitian, int index) {
  const auto spec = pick(base, k, hermitian, index);
  for (auto _ : state) benchmark::DoNotOptimize(graded_data(spec));
}

void BM_Minuscule(benchmark::State& state, const char* base, int k, bool hermitian, int index) {
  const auto gd = graded_data(pick(base, k, hermitian, index));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sigma_minuscule(gd));
}

void BM_Oracle(benchmark::State& state, const char* base, int k, bool hermitian, int index) {
  const auto gd = graded_data(pick(base, k, hermitian, index));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_abelian_subalgebras(gd));
}

void BM_ClosedForm(benchmark::State& state, const char* base, int k, bool hermitian, int index) {
  const auto gd = graded_data(pick(base, k, hermitian, index));
  const auto finite = gd.ars().finite_part();
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_count(gd, finite));
}

void BM_Classify(benchmark::State& state, const char* base) {
  const auto kind = parse_finite_kind(base);
  for (auto _ : state) benchmark::DoNotOptimize(classify_involutions(kind));
}

}  // namespace

BENCHMARK_CAPTURE(BM_GradedData, E8_p7, "E8", 1, false, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Minuscule, G2_p1, "G2", 1, false, 1);
BENCHMARK_CAPTURE(BM_Minuscule, F4_p1, "F4", 1, false, 1);
BENCHMARK_CAPTURE(BM_Minuscule, E6_q1, "E6", 1, true, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Minuscule, E8_p7, "E8", 1, false, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Oracle, F4_p1, "F4", 1, false, 1);
BENCHMARK_CAPTURE(BM_Oracle, A8_twisted, "A8", 2, false, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Oracle, E6_p2, "E6", 1, false, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Oracle, E8_p7, "E8", 1, false, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ClosedForm, E8_p7, "E8", 1, false, 7);
BENCHMARK_CAPTURE(BM_Classify, E7, "E7")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
