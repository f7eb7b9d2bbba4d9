// Serial reference vs OpenMP intersection kernel on generated representations.

#include <benchmark/benchmark.h>

#include "halinbox/embed.hpp"
#include "halinbox/gen.hpp"
#include "halinbox/verify.hpp"

namespace {

using namespace halinbox;

BoxRepresentation make_rep(int internal) {
  return build_boxes(generate({42, internal, 3, true}));
}

void BM_IntersectionSerial(benchmark::State& state) {
  auto rep = make_rep(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersection_edges_serial(rep.boxes, Axes::Both));
  }
  state.counters["boxes"] = static_cast<double>(rep.boxes.size());
}

void BM_IntersectionParallel(benchmark::State& state) {
  auto rep = make_rep(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersection_edges(rep.boxes, Axes::Both));
  }
  state.counters["boxes"] = static_cast<double>(rep.boxes.size());
}

}  // namespace

BENCHMARK(BM_IntersectionSerial)->Arg(100)->Arg(500)->Arg(2000);
BENCHMARK(BM_IntersectionParallel)->Arg(100)->Arg(500)->Arg(2000);

BENCHMARK_MAIN();
