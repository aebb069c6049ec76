#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "oracles/oracles.hpp"
#include "qenergy/circuit.hpp"
#include "qenergy/error.hpp"
#include "qenergy/workload.hpp"
#include "support.hpp"

namespace qenergy {
namespace {

using testing::fixture;
using testing::workload_fixture;

std::map<std::uint32_t, std::uint64_t> as_map(const std::vector<FoldCount>& folds) {
  std::map<std::uint32_t, std::uint64_t> out;
  for (const auto& f : folds) out[f.alpha] = f.expanded_total;
  return out;
}

GateCounts cx_only(std::uint64_t n) {
  GateCounts g;
  g.counts["cx"] = n;
  g.qubit_count = 2;
  return g;
}

QemStack partial(std::uint64_t folded) {
  QemStack q;
  q.zne_folds = {1, 3, 5};
  q.pt_copies = 10;
  q.fold_mode = FoldMode::partial;
  q.folded_gate_count = folded;
  return q;
}

TEST(CircuitText, BellCountsGatesAndDepth) {
  const auto text = read_text_file(fixture("circuits/bell.qasm"));
  const auto g = count_gates_circuit_text(text);
  EXPECT_EQ(g.counts, (std::map<std::string, std::uint64_t>{{"h", 1}, {"cx", 1}, {"measure", 2}}));
  EXPECT_EQ(g.qubit_count, 2u);
  EXPECT_EQ(g.depth, 3u);
}

TEST(CircuitText, IndexedMeasureFormMatchesBroadcast) {
  const auto a = count_gates_circuit_text(read_text_file(fixture("circuits/bell.qasm")));
  const auto b =
      count_gates_circuit_text(read_text_file(fixture("circuits/bell_indexed_measure.qasm")));
  EXPECT_EQ(a, b);
}

TEST(CircuitText, EmptyBodyIsAllZero) {
  const auto g = count_gates_circuit_text(read_text_file(fixture("circuits/empty.qasm")));
  EXPECT_EQ(g.total(), 0u);
  EXPECT_EQ(g.depth, 0u);
}

TEST(CircuitText, UnknownGatePolicies) {
  const auto text = read_text_file(fixture("circuits/custom_gate.qasm"));
  EXPECT_THROW(count_gates_circuit_text(text), ParseError);
  const auto g = count_gates_circuit_text(text, UnknownGatePolicy::count_as_other);
  EXPECT_EQ(g.counts.at("other"), 1u);
  EXPECT_EQ(g.counts.at("h"), 1u);
}

TEST(CircuitText, BarrierSynchronizesDepth) {
  const auto g = count_gates_circuit_text(read_text_file(fixture("circuits/ghz5.qasm")));
  EXPECT_EQ(g.counts.at("cx"), 4u);
  EXPECT_EQ(g.counts.at("measure"), 5u);
  EXPECT_EQ(g.qubit_count, 5u);
  // h, 4 chained cx, rz, then measure after the barrier
  EXPECT_EQ(g.depth, 7u);
}

TEST(CircuitText, Errors) {
  EXPECT_THROW(count_gates_circuit_text("qreg q[1];\nh q[0];\n"), ParseError);
  EXPECT_THROW(count_gates_circuit_text("OPENQASM 2.0;\nqreg q[1];\nh q[3];\n"), ParseError);
  EXPECT_THROW(count_gates_circuit_text("OPENQASM 2.0;\nqreg q[2];\ncx q[0];\n"), ParseError);
  try {
    count_gates_circuit_text("OPENQASM 2.0;\nqreg q[1];\nh r[0];\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(ExpandQem, PartialModeReproducesObcRow) {
  EXPECT_EQ(as_map(expand_qem(cx_only(2404), partial(1263))),
            (std::map<std::uint32_t, std::uint64_t>{{1, 24040}, {3, 49300}, {5, 74560}}));
}

TEST(ExpandQem, PartialModeReproducesPbcRow) {
  EXPECT_EQ(as_map(expand_qem(cx_only(2540), partial(1224))),
            (std::map<std::uint32_t, std::uint64_t>{{1, 25400}, {3, 49880}, {5, 74360}}));
}

TEST(ExpandQem, GlobalModeMultipliesEverything) {
  QemStack q;
  q.zne_folds = {1, 3, 5};
  EXPECT_EQ(as_map(expand_qem(cx_only(37), q)),
            (std::map<std::uint32_t, std::uint64_t>{{1, 37}, {3, 111}, {5, 185}}));
}

TEST(ExpandQem, MeasuredModeIsVerbatim) {
  QemStack q;
  q.zne_folds = {1, 3};
  q.fold_mode = FoldMode::measured;
  q.measured_fold_counts = std::map<std::uint32_t, std::uint64_t>{{1, 50}, {3, 123}};
  EXPECT_EQ(as_map(expand_qem(cx_only(50), q)),
            (std::map<std::uint32_t, std::uint64_t>{{1, 50}, {3, 123}}));
}

TEST(ExpandQem, RejectsInvalidStacks) {
  QemStack even;
  even.zne_folds = {1, 2};
  EXPECT_THROW(expand_qem(cx_only(10), even), ValidationError);
  QemStack unordered;
  unordered.zne_folds = {3, 1};
  EXPECT_THROW(expand_qem(cx_only(10), unordered), ValidationError);
  EXPECT_THROW(expand_qem(cx_only(10), partial(11)), ValidationError);
  QemStack missing;
  missing.zne_folds = {1, 3};
  missing.fold_mode = FoldMode::measured;
  missing.measured_fold_counts = std::map<std::uint32_t, std::uint64_t>{{1, 10}};
  EXPECT_THROW(expand_qem(cx_only(10), missing), ValidationError);
}

TEST(ExpandQemProperty, MatchesExplicitFoldedCircuit) {
  std::mt19937_64 rng(20241015);
  std::uniform_int_distribution<std::uint64_t> base_dist(1, 300);
  std::uniform_int_distribution<std::uint32_t> copies_dist(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto base = base_dist(rng);
    const auto folded = std::uniform_int_distribution<std::uint64_t>(0, base)(rng);
    QemStack q = partial(folded);
    q.zne_folds = {1, 3, 5, 7};
    q.pt_copies = copies_dist(rng);
    for (const auto& f : expand_qem(cx_only(base), q))
      ASSERT_EQ(f.expanded_total,
                oracle::folded_gate_list_length(base, folded, f.alpha, q.pt_copies));
  }
}

TEST(ExpandQemProperty, MonotoneInFoldFactor) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto base = std::uniform_int_distribution<std::uint64_t>(1, 1'000'000)(rng);
    QemStack q;
    q.zne_folds = {1, 3, 5, 9, 15};
    q.pt_copies = std::uniform_int_distribution<std::uint32_t>(1, 100)(rng);
    const auto folds = expand_qem(cx_only(base), q);
    for (std::size_t k = 1; k < folds.size(); ++k)
      ASSERT_GT(folds[k].expanded_total, folds[k - 1].expanded_total);
  }
}

TEST(Workload, MinimalNisqDocument) {
  const auto spec = parse_workload(R"({
    "name": "min", "regime": "nisq",
    "nisq": {"gate_counts": {"counts": {"cx": 10}, "qubit_count": 2},
             "qem": {"zne_folds": [1], "pt_copies": 1, "shots": 1}}})");
  ASSERT_TRUE(spec.nisq);
  const auto& job = std::get<NisqCircuitJob>(*spec.nisq);
  EXPECT_EQ(job.gate_counts.counts.at("cx"), 10u);
  EXPECT_EQ(job.qem.zne_folds, std::vector<std::uint32_t>{1});
  EXPECT_EQ(job.qem.pt_copies, 1u);
  EXPECT_EQ(job.qem.shots, 1u);
  EXPECT_EQ(parse_workload(render_workload(spec)), spec);
}

TEST(Workload, RegimePayloadMismatch) {
  try {
    parse_workload(R"({"name": "x", "regime": "ftqc",
      "nisq": {"gate_counts": {"counts": {"cx": 10}, "qubit_count": 2},
               "qem": {"zne_folds": [1], "pt_copies": 1, "shots": 1}}})");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("regime/payload mismatch"), std::string::npos);
  }
}

TEST(Workload, SchemaErrorsNameTheField) {
  try {
    parse_workload(R"({"name": "x", "regime": "nisq", "bogus": 1,
      "nisq": {"gate_counts": {"counts": {"cx": 1}, "qubit_count": 1}}})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("bogus"), std::string::npos);
  }
  EXPECT_THROW(parse_workload("{\"name\": "), ParseError);
  EXPECT_THROW(parse_workload(R"({"name": "x", "regime": "nisq",
      "nisq": {"gate_counts": {"counts": {"cx": -1}, "qubit_count": 1}}})"),
               Error);
}

TEST(Workload, ObcCaseStudyFixture) {
  const auto spec = load_workload(workload_fixture("obc_heisenberg"));
  const auto& job = std::get<NisqCircuitJob>(*spec.nisq);
  EXPECT_EQ(job.qem.fold_mode, FoldMode::measured);
  EXPECT_EQ(job.qem.shots, 100000u);
  EXPECT_EQ(job.qem.pt_copies, 10u);
  EXPECT_EQ(*job.qem.measured_fold_counts,
            (std::map<std::uint32_t, std::uint64_t>{{1, 24040}, {3, 49300}, {5, 74560}}));
  EXPECT_EQ(spec.qpu_seconds, 991.0);
}

TEST(Workload, CircuitFileIsResolvedRelativeToDocument) {
  const auto spec = load_workload(workload_fixture("ghz_circuit_file"));
  const auto& job = std::get<NisqCircuitJob>(*spec.nisq);
  EXPECT_EQ(job.gate_counts.counts.at("cx"), 4u);
  EXPECT_EQ(job.gate_counts.qubit_count, 5u);
}

TEST(Workload, MissingFileIsIoError) {
  EXPECT_THROW(load_workload(workload_fixture("does_not_exist")), IoError);
}

TEST(WorkloadProperty, ParseRenderIdentityOnCorpus) {
  std::size_t n = 0;
  for (const auto& entry :
       std::filesystem::directory_iterator(std::filesystem::path(QENERGY_FIXTURE_DIR) / "workloads")) {
    SCOPED_TRACE(entry.path().string());
    const auto spec = load_workload(entry.path());
    const auto text = render_workload(spec);
    const auto again = parse_workload(text);
    EXPECT_EQ(again, spec);
    EXPECT_EQ(render_workload(again), text);
    ++n;
  }
  EXPECT_GE(n, 10u);
}

}  // namespace
}  // namespace qenergy
