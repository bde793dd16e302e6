#include "afm/cli/tables.hpp"

#include <benchmark/benchmark.h>

#include <sstream>

using namespace afm::cli;

namespace {

void BM_BuildTable(benchmark::State& state) {
  const TableId id = all_tables()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(to_string(id));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_table(id).rows.size());
  }
}
BENCHMARK(BM_BuildTable)->DenseRange(0, 9)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_WriteTable(benchmark::State& state) {
  const Table t = build_table(TableId::ExpResults);
  const Format f = state.range(0) == 0 ? Format::Csv : Format::Json;
  for (auto _ : state) {
    std::ostringstream os;
    write_table(os, t, f);
    benchmark::DoNotOptimize(os.str().size());
  }
}
BENCHMARK(BM_WriteTable)->Arg(0)->Arg(1);

} // namespace

BENCHMARK_MAIN();
