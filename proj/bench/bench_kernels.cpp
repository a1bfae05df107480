// Serial reference vs OpenMP for the parallel kernels.

#include <benchmark/benchmark.h>

#include "ratcurve/catalog.hpp"
#include "ratcurve/construction.hpp"
#include "ratcurve/permcheck.hpp"
#include "ratcurve/sampling.hpp"

using namespace ratcurve;

namespace {

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

FieldPtr eis() { return NumberField::builtin("eisenstein"); }

void BM_sample_curve(benchmark::State& st) {
  auto K = eis();
  auto g = printed_g(K);
  auto post = parse_rational_function("1/(1+z)", K);
  for (auto _ : st) benchmark::DoNotOptimize(sample_curve(g, post, 2000, 128, mode(st)));
}

void BM_self_intersections(benchmark::State& st) {
  auto K = eis();
  auto s = sample_curve(printed_g(K), parse_rational_function("1/(1+z)", K), 2000, 64, Exec::Serial);
  for (auto _ : st) benchmark::DoNotOptimize(self_intersections(s, mode(st)));
}

void BM_normalization_search(benchmark::State& st) {
  auto K = eis();
  auto h = printed_h(K);
  auto src = compose(compose(Moebius(K->from_rational(-12), K->zero(), K->zero(), K->one()).to_function(), h),
                     parse_rational_function("-z/24", K));
  SearchOptions o;
  o.exec = mode(st);
  for (auto _ : st) benchmark::DoNotOptimize(search_normalization(src, h, o));
}

void BM_group_search(benchmark::State& st) {
  SearchParams p;
  p.max_degree = 7;
  p.group_budget = 20;
  p.exec = mode(st);
  for (auto _ : st) benchmark::DoNotOptimize(search(p));
}

void BM_certify_injective(benchmark::State& st) {
  auto g = printed_g(eis());
  CertifyOptions o;
  o.exec = mode(st);
  for (auto _ : st) benchmark::DoNotOptimize(certify_injective(g, o));
}

}  // namespace

BENCHMARK(BM_sample_curve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_self_intersections)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_normalization_search)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_group_search)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_certify_injective)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
