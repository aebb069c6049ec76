#include <gtest/gtest.h>

#include <random>

#include "qenergy/catalog.hpp"
#include "qenergy/error.hpp"
#include "qenergy/nisq.hpp"

namespace qenergy {
namespace {

TechnologyProfile uniform_profile(double joules) {
  auto p = builtin_profiles().at("superconducting");
  for (auto& [cls, e] : p.gate_energy) e = joules;
  return p;
}

GateCounts counts(std::map<std::string, std::uint64_t> c) {
  GateCounts g;
  g.counts = std::move(c);
  g.qubit_count = 2;
  return g;
}

QemStack measured(std::map<std::uint32_t, std::uint64_t> folds, std::uint64_t shots) {
  QemStack q;
  q.zne_folds.clear();
  for (const auto& [alpha, n] : folds) q.zne_folds.push_back(alpha);
  q.pt_copies = 10;
  q.shots = shots;
  q.fold_mode = FoldMode::measured;
  q.measured_fold_counts = std::move(folds);
  return q;
}

TEST(GateEnergy, WeightsByClass) {
  auto p = uniform_profile(0.0);
  p.gate_energy[GateClass::two_qubit] = 0.18;
  p.gate_energy[GateClass::single_qubit] = 0.01;
  EXPECT_NEAR(gate_energy(counts({{"cx", 100}, {"rz", 200}}), p), 20.0, 1e-12);
  EXPECT_EQ(gate_energy(GateCounts{}, p), 0.0);
}

TEST(GateEnergy, TrappedIon) {
  const auto ion = builtin_profiles().at("trapped_ion");
  EXPECT_EQ(gate_energy(counts({{"ms", 10}}), ion), 150.0);
}

TEST(GateEnergy, UnknownGateNameFallsBackToOther) {
  auto p = builtin_profiles().at("superconducting");
  EXPECT_EQ(gate_energy(counts({{"frobnicate", 1}}), p), p.energy_of(GateClass::other));
  p.gate_energy.erase(GateClass::other);
  EXPECT_THROW(gate_energy(counts({{"frobnicate", 1}}), p), ValidationError);
}

TEST(NisqExec, MeasuredObcFolds) {
  const auto b = nisq_exec_energy(counts({{"cx", 2404}}),
                                  measured({{1, 24040}, {3, 49300}, {5, 74560}}, 100000),
                                  uniform_profile(0.18));
  EXPECT_EQ(b.per_fold_energy_joules.at(1), 432720000.0);
  EXPECT_EQ(b.per_fold_energy_joules.at(3), 887400000.0);
  EXPECT_EQ(b.per_fold_energy_joules.at(5), 1342080000.0);
  EXPECT_EQ(b.total_exec_joules, 2662200000.0);
  EXPECT_EQ(b.baseline_shot_energy_joules, 2404 * 0.18 * 100000);
  EXPECT_NEAR(b.baseline_shot_energy_joules + b.qem_overhead_joules, b.total_exec_joules, 1e-3);
}

TEST(NisqExec, TrivialStackCollapsesToGateSum) {
  QemStack q;
  const auto b = nisq_exec_energy(counts({{"cx", 10}}), q, uniform_profile(1.0));
  EXPECT_EQ(b.total_exec_joules, 10.0);
  EXPECT_EQ(b.qem_overhead_joules, 0.0);
}

TEST(NisqExec, GlobalMode) {
  QemStack q;
  q.zne_folds = {1, 3, 5};
  q.pt_copies = 10;
  q.shots = 1000;
  const auto b = nisq_exec_energy(counts({{"cx", 100}}), q, uniform_profile(0.18));
  EXPECT_NEAR(b.total_exec_joules, 1.62e6, 1e-6);
}

TEST(NisqExec, MeasuredCountsBelowBaseAreRejected) {
  EXPECT_THROW(nisq_exec_energy(counts({{"cx", 100}}), measured({{1, 99}}, 1), uniform_profile(1)),
               ValidationError);
}

TEST(NisqExec, M3CalibrationIsAdded) {
  QemStack q;
  q.m3_cal_shots = 2000;
  q.m3_amortize_over = 10;
  const auto b = nisq_exec_energy(counts({{"cx", 10}}), q, uniform_profile(1.0));
  EXPECT_EQ(b.m3_calibration_joules, 2000.0);
  EXPECT_EQ(b.total_exec_joules, 2010.0);
}

TEST(M3, Amortization) {
  EXPECT_NEAR(m3_amortized_energy(1000, 0.01, 100), 0.1, 1e-15);
  EXPECT_EQ(m3_amortized_energy(0, 123.0, 7), 0.0);
  EXPECT_NEAR(m3_amortized_energy(10000, 0.18, 1), 1800.0, 1e-9);
  EXPECT_THROW(m3_amortized_energy(1, 1.0, 0), ValidationError);
}

TEST(Vqe, ProductForm) {
  VqeSpec v{50, 10, 10000, 100};
  const auto sc = builtin_profiles().at("superconducting");
  EXPECT_EQ(vqe_energy(v, sc), 9.0e7);
  QemStack q;
  q.zne_folds = {1, 3, 5};
  q.pt_copies = 10;
  EXPECT_EQ(vqe_energy(v, sc, q), 8.1e9);
  v.iterations = 0;
  EXPECT_EQ(vqe_energy(v, sc), 0.0);
}

TEST(Power, Division) {
  EXPECT_NEAR(nisq_power(2.6622e9, 991) / 1e6, 2.686, 2.686e-3);
  EXPECT_NEAR(nisq_power(2.69352e9, 1004) / 1e6, 2.684, 2.684e-3);
  EXPECT_EQ(nisq_power(0.0, 10.0), 0.0);
  EXPECT_THROW(nisq_power(1.0, 0.0), ValidationError);
}

TEST(NisqProperty, LinearInShotsAndMonotoneInFolds) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::uint64_t> n(1, 100000);
  const auto p = uniform_profile(0.18);
  for (int trial = 0; trial < 200; ++trial) {
    QemStack q;
    q.zne_folds = {1, 3, 5};
    q.pt_copies = static_cast<std::uint32_t>(n(rng) % 50 + 1);
    q.shots = n(rng);
    const auto base = counts({{"cx", n(rng)}, {"h", n(rng)}});
    const auto one = nisq_exec_energy(base, q, p);
    q.shots *= 10;
    const auto ten = nisq_exec_energy(base, q, p);
    ASSERT_NEAR(ten.total_exec_joules, 10 * one.total_exec_joules, 1e-9 * ten.total_exec_joules);
    ASSERT_LT(one.per_fold_energy_joules.at(1), one.per_fold_energy_joules.at(3));
    ASSERT_LT(one.per_fold_energy_joules.at(3), one.per_fold_energy_joules.at(5));
    double sum = 0;
    for (const auto& [alpha, e] : one.per_fold_energy_joules) sum += e;
    ASSERT_NEAR(one.total_exec_joules, sum, 1e-9 * sum);
  }
}

TEST(NisqProperty, GateEnergyIsAdditive) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> n(0, 1'000'000);
  const auto p = builtin_profiles().at("trapped_ion");
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = counts({{"ms", n(rng)}, {"rz", n(rng)}});
    const auto b = counts({{"ms", n(rng)}, {"measure", n(rng)}});
    auto sum = a;
    for (const auto& [g, k] : b.counts) sum.counts[g] += k;
    ASSERT_NEAR(gate_energy(sum, p), gate_energy(a, p) + gate_energy(b, p),
                1e-12 * gate_energy(sum, p));
  }
}

}  // namespace
}  // namespace qenergy
