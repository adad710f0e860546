// Parallel kernels against their serial references, and the int64 fast path
// against exact arithmetic. Thread counts come from OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <vector>

#include "vbraid/dynnikov.hpp"
#include "vbraid/kernel_hunt.hpp"
#include "vbraid/rng.hpp"

using namespace vbraid;

namespace {

const char* kBeta = "s1 r2 s1 S2 s1 s2 S1 r1 s2 r1 s1 r2 S1 r2 S2 S1 s2 S1 r2 S1";

hunt::HuntConfig hunt_config(std::int64_t words) {
  hunt::HuntConfig cfg;
  cfg.strands = 3;
  cfg.word_count = words;
  cfg.seed = 1;
  return cfg;
}

void BM_HuntParallel(benchmark::State& state) {
  const auto cfg = hunt_config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hunt::run_hunt(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_HuntSerial(benchmark::State& state) {
  const auto cfg = hunt_config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hunt::run_hunt_serial(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MovedFractionParallel(benchmark::State& state) {
  const auto beta = parse_word(kBeta, 3);
  for (auto _ : state) benchmark::DoNotOptimize(hunt::moved_fraction(beta, state.range(0), 100, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MovedFractionSerial(benchmark::State& state) {
  const auto beta = parse_word(kBeta, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hunt::moved_fraction_serial(beta, state.range(0), 100, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<std::vector<std::int64_t>> probes(std::size_t count) {
  auto rng = make_rng(7, 0);
  std::uniform_int_distribution<std::int64_t> coeff(-100, 100);
  std::vector<std::vector<std::int64_t>> out(count, std::vector<std::int64_t>(6));
  for (auto& v : out) {
    for (auto& x : v) x = coeff(rng);
  }
  return out;
}

void BM_ActFast(benchmark::State& state) {
  const auto beta = parse_word(kBeta, 3);
  const auto vs = probes(1000);
  std::vector<std::int64_t> work(6);
  for (auto _ : state) {
    for (const auto& v : vs) {
      work = v;
      benchmark::DoNotOptimize(act_word_fast(work, beta));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(vs.size()));
}

void BM_ActExact(benchmark::State& state) {
  const auto beta = parse_word(kBeta, 3);
  std::vector<Coordinates> vs;
  for (const auto& v : probes(1000)) vs.push_back(Coordinates::from_int64(v));
  for (auto _ : state) {
    for (const auto& v : vs) benchmark::DoNotOptimize(act_word(v, beta));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(vs.size()));
}

}  // namespace

BENCHMARK(BM_HuntParallel)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HuntSerial)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MovedFractionParallel)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MovedFractionSerial)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ActFast)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ActExact)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
