// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS to vary threads.

#include <benchmark/benchmark.h>

#include "ssm/hadamard.hpp"
#include "ssm/kernels.hpp"
#include "ssm/numerics.hpp"
#include "ssm/spectra.hpp"

using namespace ssm;

namespace {

const kernels::ScanConfig kScan{4, 15, 2, 10};

std::vector<IntegerDigits> oracle_sets() {
  auto all = kernels::enumerate_digit_sets(4, 12);
  all.erase(all.begin() + 16, all.end());
  return all;
}

std::vector<double> cantor_points(int level) {
  auto raw = spectrum_truncation(HadamardTriple{4, {0, 2}, {0, 1}}, level).points;
  return {raw.begin(), raw.end()};
}

template <auto Fn>
void BM_Scan(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(Fn(kScan));
}

template <auto Fn>
void BM_Oracle(benchmark::State& st) {
  const auto sets = oracle_sets();
  for (auto _ : st) benchmark::DoNotOptimize(Fn(sets, 100, 4));
}

template <auto Fn>
void BM_QGrid(benchmark::State& st) {
  const MuHatEvaluator ev(IntegerDigits::make({0, 2}), std::int64_t{4});
  const auto pts = cantor_points(static_cast<int>(st.range(0)));
  const auto grid = unit_grid(1.0 / 256);
  for (auto _ : st) benchmark::DoNotOptimize(Fn(ev, pts, grid, 0));
}

template <auto Fn>
void BM_Gram(benchmark::State& st) {
  const MuHatEvaluator ev(IntegerDigits::make({0, 2}), std::int64_t{4});
  const auto pts = cantor_points(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(Fn(ev, pts));
}

}  // namespace

BENCHMARK(BM_Scan<kernels::scan_serial>)->Name("scan/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scan<kernels::scan_parallel>)->Name("scan/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Oracle<kernels::oracle_sweep_serial>)->Name("oracle/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Oracle<kernels::oracle_sweep_parallel>)->Name("oracle/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QGrid<kernels::q_grid_serial>)->Name("qgrid/serial")->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QGrid<kernels::q_grid_parallel>)->Name("qgrid/parallel")->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Gram<kernels::gram_serial>)->Name("gram/serial")->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Gram<kernels::gram_parallel>)->Name("gram/parallel")->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
