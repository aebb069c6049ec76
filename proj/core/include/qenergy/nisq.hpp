#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "qenergy/catalog.hpp"
#include "qenergy/circuit.hpp"

namespace qenergy {

/// Itemized NISQ execution energy. Per-fold energies already include the
/// Pauli-twirl copies and the shot count.
struct NisqBreakdown {
  std::map<std::uint32_t, double> per_fold_energy_joules;
  std::map<std::uint32_t, std::uint64_t> per_fold_gate_totals;
  double baseline_shot_energy_joules = 0.0;  // alpha = {1}, P = 1
  double qem_overhead_joules = 0.0;
  double m3_calibration_joules = 0.0;
  double total_exec_joules = 0.0;

  /// Sum of the per-fold energies (everything except M3 calibration).
  double sampling_joules() const;

  bool operator==(const NisqBreakdown&) const = default;
};

/// Sum over gates of E_g * N_g. Throws ValidationError for a gate name the
/// profile cannot price.
double gate_energy(const GateCounts& counts, const TechnologyProfile& profile);

/// Count-weighted mean energy per gate of `counts`. Exactly the class
/// energy when every gate falls into one class; 0 for an empty circuit.
double effective_gate_energy(const GateCounts& counts, const TechnologyProfile& profile);

NisqBreakdown nisq_exec_energy(const GateCounts& base, const QemStack& qem,
                               const TechnologyProfile& profile);

/// Calibration shots spread over `amortize_over` evaluations.
double m3_amortized_energy(std::uint64_t cal_shots, double per_shot_energy_joules,
                           std::uint64_t amortize_over);

/// G * M * S * K * E_g(2q), times (sum of folds) * P when a QEM stack is
/// given. The fold mode is ignored: VQE uses the global-fold multiplier.
double vqe_energy(const VqeSpec& spec, const TechnologyProfile& profile,
                  const std::optional<QemStack>& qem = std::nullopt);

/// VQE energy itemized per fold (alpha * P * G * M * S * K * E_g(2q)).
NisqBreakdown vqe_breakdown(const VqeSpec& spec, const TechnologyProfile& profile,
                            const std::optional<QemStack>& qem = std::nullopt);

/// Average power over the measured QPU time.
double nisq_power(double total_energy_joules, double qpu_seconds);

}  // namespace qenergy
