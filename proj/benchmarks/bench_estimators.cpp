#include <benchmark/benchmark.h>

#include <string>

#include "qenergy/catalog.hpp"
#include "qenergy/circuit.hpp"
#include "qenergy/decoder_table.hpp"
#include "qenergy/estimate.hpp"
#include "qenergy/ftqc.hpp"
#include "qenergy/nisq.hpp"
#include "qenergy/report.hpp"
#include "qenergy/workload.hpp"

namespace {

using namespace qenergy;

const char* kNisqDoc = R"({
  "name": "bench", "regime": "nisq", "qpu_seconds": 991,
  "nisq": {"gate_counts": {"counts": {"cx": 2404, "rz": 4000, "sx": 3000}, "qubit_count": 100},
           "qem": {"zne_folds": [1, 3, 5], "pt_copies": 10, "shots": 100000,
                   "fold_mode": "partial", "folded_gate_count": 1263}}})";

const char* kFtqcDoc = R"({
  "name": "bench", "regime": "ftqc",
  "ftqc": {"logical": {"logical_qubits": 100, "t_count": 1000000, "clifford_count": 500000,
                       "logical_depth": 100000},
           "code": {"p": 0.001, "p_th": 0.01, "target_pl": 1e-12},
           "factory": {"protocol": "distillation"}, "decoder": "BPOSD"}})";

void BM_SolveDistance(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_distance(1e-3, 1e-2, 1e-15));
}
BENCHMARK(BM_SolveDistance);

void BM_CountGates(benchmark::State& state) {
  std::string text = "OPENQASM 2.0;\nqreg q[100];\ncreg c[100];\n";
  for (int i = 0; i < state.range(0); ++i)
    text += "h q[" + std::to_string(i % 100) + "];\ncx q[" + std::to_string(i % 100) + "],q[" +
            std::to_string((i + 1) % 100) + "];\n";
  text += "measure q -> c;\n";
  for (auto _ : state) benchmark::DoNotOptimize(count_gates_circuit_text(text));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 2);
}
BENCHMARK(BM_CountGates)->Range(64, 16384);

void BM_EstimateNisq(benchmark::State& state) {
  const auto spec = parse_workload(kNisqDoc);
  const ProfileCatalog catalog;
  const auto decoders = builtin_decoder_table();
  for (auto _ : state) benchmark::DoNotOptimize(estimate(spec, catalog, decoders));
}
BENCHMARK(BM_EstimateNisq);

void BM_EstimateFtqc(benchmark::State& state) {
  const auto spec = parse_workload(kFtqcDoc);
  const ProfileCatalog catalog;
  const auto decoders = builtin_decoder_table();
  for (auto _ : state) benchmark::DoNotOptimize(estimate(spec, catalog, decoders));
}
BENCHMARK(BM_EstimateFtqc);

void BM_RenderMachine(benchmark::State& state) {
  const auto report = estimate(parse_workload(kFtqcDoc), ProfileCatalog{}, builtin_decoder_table());
  for (auto _ : state) benchmark::DoNotOptimize(render_report(report, ReportFormat::machine));
}
BENCHMARK(BM_RenderMachine);

void BM_Sweep(benchmark::State& state) {
  const auto spec = parse_workload(kFtqcDoc);
  std::vector<double> values;
  for (int i = 0; i < state.range(0); ++i) values.push_back(1000.0 * i);
  const ProfileCatalog catalog;
  const auto decoders = builtin_decoder_table();
  for (auto _ : state)
    benchmark::DoNotOptimize(run_sweep(spec, "ftqc.logical.t_count", values, catalog, decoders));
}
BENCHMARK(BM_Sweep)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
