#include "qenergy/nisq.hpp"

#include <cmath>
#include <set>
#include <string>

#include "qenergy/error.hpp"
#include "util.hpp"

namespace qenergy {

double NisqBreakdown::sampling_joules() const {
  double sum = 0.0;
  for (const auto& [alpha, e] : per_fold_energy_joules) sum += e;
  return sum;
}

namespace {

GateClass resolve_class(const std::string& name, const TechnologyProfile& profile) {
  const auto cls = profile.class_of(name);
  if (!cls)
    throw ValidationError("gate '" + name + "' has no energy class in profile '" + profile.key +
                          "' and the profile defines no 'other' energy");
  return *cls;
}

}  // namespace

double gate_energy(const GateCounts& counts, const TechnologyProfile& profile) {
  double sum = 0.0;
  for (const auto& [name, n] : counts.counts) {
    if (n == 0) continue;
    sum += profile.energy_of(resolve_class(name, profile)) * static_cast<double>(n);
  }
  return sum;
}

double effective_gate_energy(const GateCounts& counts, const TechnologyProfile& profile) {
  std::set<GateClass> classes;
  for (const auto& [name, n] : counts.counts)
    if (n > 0) classes.insert(resolve_class(name, profile));
  if (classes.empty()) return 0.0;
  if (classes.size() == 1) return profile.energy_of(*classes.begin());
  return gate_energy(counts, profile) / static_cast<double>(counts.total());
}

NisqBreakdown nisq_exec_energy(const GateCounts& base, const QemStack& qem,
                               const TechnologyProfile& profile) {
  const auto folds = expand_qem(base, qem);
  const double e_g = effective_gate_energy(base, profile);

  NisqBreakdown out;
  for (const auto& f : folds) {
    out.per_fold_gate_totals[f.alpha] = f.expanded_total;
    out.per_fold_energy_joules[f.alpha] = count_product({f.expanded_total, qem.shots}) * e_g;
  }
  out.baseline_shot_energy_joules = count_product({base.total(), qem.shots}) * e_g;
  out.m3_calibration_joules =
      m3_amortized_energy(qem.m3_cal_shots, gate_energy(base, profile), qem.m3_amortize_over);
  const double sampling = out.sampling_joules();
  out.qem_overhead_joules = sampling - out.baseline_shot_energy_joules;
  out.total_exec_joules = sampling + out.m3_calibration_joules;
  return out;
}

double m3_amortized_energy(std::uint64_t cal_shots, double per_shot_energy_joules,
                           std::uint64_t amortize_over) {
  if (amortize_over == 0) throw ValidationError("m3_amortize_over must be >= 1");
  if (cal_shots == 0) return 0.0;
  return static_cast<double>(cal_shots) * per_shot_energy_joules /
         static_cast<double>(amortize_over);
}

double vqe_energy(const VqeSpec& spec, const TechnologyProfile& profile,
                  const std::optional<QemStack>& qem) {
  spec.validate();
  const double e_2q = profile.energy_of(GateClass::two_qubit);
  const auto g = spec.ansatz_two_qubit_gates, m = spec.pauli_groups, s = spec.shots_per_circuit,
             k = spec.iterations;
  if (!qem) return count_product({g, m, s, k}) * e_2q;
  qem->validate();
  return count_product({g, m, s, k, qem->fold_sum(), qem->pt_copies}) * e_2q;
}

NisqBreakdown vqe_breakdown(const VqeSpec& spec, const TechnologyProfile& profile,
                            const std::optional<QemStack>& qem) {
  spec.validate();
  const double e_2q = profile.energy_of(GateClass::two_qubit);
  const auto g = spec.ansatz_two_qubit_gates, m = spec.pauli_groups, s = spec.shots_per_circuit,
             k = spec.iterations;
  const std::uint64_t copies = qem ? qem->pt_copies : 1;
  const std::vector<std::uint32_t> folds = qem ? qem->zne_folds : std::vector<std::uint32_t>{1};
  if (qem) qem->validate();

  NisqBreakdown out;
  for (auto alpha : folds) {
    out.per_fold_gate_totals[alpha] = checked_mul(checked_mul(alpha, copies), g);
    out.per_fold_energy_joules[alpha] = count_product({alpha, copies, g, m, s, k}) * e_2q;
  }
  out.baseline_shot_energy_joules = count_product({g, m, s, k}) * e_2q;
  if (qem)
    out.m3_calibration_joules = m3_amortized_energy(
        qem->m3_cal_shots, static_cast<double>(g) * e_2q, qem->m3_amortize_over);
  const double sampling = out.sampling_joules();
  out.qem_overhead_joules = sampling - out.baseline_shot_energy_joules;
  out.total_exec_joules = sampling + out.m3_calibration_joules;
  return out;
}

double nisq_power(double total_energy_joules, double qpu_seconds) {
  if (!(qpu_seconds > 0) || !std::isfinite(qpu_seconds))
    throw ValidationError("QPU duration must be positive");
  return total_energy_joules / qpu_seconds;
}

}  // namespace qenergy
