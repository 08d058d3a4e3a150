#include <benchmark/benchmark.h>

#include "rpv/binsplit.hpp"
#include "rpv/catalog.hpp"
#include "rpv/hyper.hpp"
#include "rpv/pi.hpp"

namespace {

const rpv::SeriesSpec& entry(const char* id) {
  static const auto cat = rpv::load_catalog(rpv::default_catalog_path());
  return rpv::find_entry(cat, id).spec;
}

void BM_ChudnovskyDigits(benchmark::State& state) {
  const auto& s = entry("x11");
  for (auto _ : state) benchmark::DoNotOptimize(rpv::pi_digits(s, state.range(0)));
  state.counters["terms"] = static_cast<double>(rpv::terms_for_digits(s, state.range(0)));
}
BENCHMARK(BM_ChudnovskyDigits)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_ChudnovskyDigitsParallel(benchmark::State& state) {
  const auto& s = entry("x11");
  for (auto _ : state) benchmark::DoNotOptimize(rpv::pi_digits(s, 100000, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ChudnovskyDigitsParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_RamanujanDigits(benchmark::State& state) {
  const auto& s = entry("q11");
  for (auto _ : state) benchmark::DoNotOptimize(rpv::pi_digits(s, state.range(0)));
}
BENCHMARK(BM_RamanujanDigits)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_PiOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rpv::pi_oracle(state.range(0)));
}
BENCHMARK(BM_PiOracle)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_EvalNumeric(benchmark::State& state) {
  const auto& s = entry("h4");
  for (auto _ : state)
    benchmark::DoNotOptimize(rpv::eval_numeric(s.family, s.a, s.b, s.z, state.range(0)));
}
BENCHMARK(BM_EvalNumeric)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
