#include "qenergy/circuit.hpp"

#include <algorithm>
#include <string>

#include "qenergy/error.hpp"
#include "util.hpp"

namespace qenergy {

std::uint64_t GateCounts::total() const {
  std::uint64_t sum = 0;
  for (const auto& [name, n] : counts) sum = checked_add(sum, n);
  return sum;
}

void GateCounts::validate() const {
  if (total() > 0 && qubit_count == 0)
    throw ValidationError("gate_counts: qubit_count must be >= 1 when gates are present");
}

std::string_view to_string(FoldMode mode) {
  switch (mode) {
    case FoldMode::global: return "global";
    case FoldMode::partial: return "partial";
    case FoldMode::measured: return "measured";
  }
  return "global";
}

std::optional<FoldMode> fold_mode_from_string(std::string_view text) {
  if (text == "global") return FoldMode::global;
  if (text == "partial") return FoldMode::partial;
  if (text == "measured") return FoldMode::measured;
  return std::nullopt;
}

void QemStack::validate() const {
  if (zne_folds.empty()) throw ValidationError("qem.zne_folds must not be empty");
  for (std::size_t k = 0; k < zne_folds.size(); ++k) {
    const auto alpha = zne_folds[k];
    if (alpha == 0 || alpha % 2 == 0)
      throw ValidationError("qem.zne_folds: fold factor " + std::to_string(alpha) +
                            " is not a positive odd integer");
    if (k > 0 && alpha <= zne_folds[k - 1])
      throw ValidationError("qem.zne_folds must be strictly increasing");
  }
  if (pt_copies == 0) throw ValidationError("qem.pt_copies must be >= 1");
  if (shots == 0) throw ValidationError("qem.shots must be >= 1");
  if (m3_amortize_over == 0) throw ValidationError("qem.m3_amortize_over must be >= 1");
  if (fold_mode == FoldMode::partial && !folded_gate_count)
    throw ValidationError("qem: partial fold mode requires folded_gate_count");
  if (fold_mode == FoldMode::measured) {
    if (!measured_fold_counts)
      throw ValidationError("qem: measured fold mode requires measured_fold_counts");
    for (auto alpha : zne_folds) {
      if (!measured_fold_counts->contains(alpha))
        throw ValidationError("qem.measured_fold_counts: missing fold " + std::to_string(alpha));
    }
  }
}

std::uint64_t QemStack::fold_sum() const {
  std::uint64_t sum = 0;
  for (auto alpha : zne_folds) sum += alpha;
  return sum;
}

void VqeSpec::validate() const {
  if (ansatz_two_qubit_gates == 0) throw ValidationError("vqe.ansatz_two_qubit_gates must be >= 1");
  if (pauli_groups == 0) throw ValidationError("vqe.pauli_groups must be >= 1");
  if (shots_per_circuit == 0) throw ValidationError("vqe.shots_per_circuit must be >= 1");
}

void LogicalCircuit::validate() const {
  if (logical_qubits == 0) throw ValidationError("logical.logical_qubits must be >= 1");
  if (logical_depth == 0) throw ValidationError("logical.logical_depth must be >= 1");
  if (t_count + clifford_count == 0)
    throw ValidationError("logical: t_count + clifford_count must be >= 1");
  if (spacetime_volume_override) {
    const double v = *spacetime_volume_override;
    if (!(v > 0) || !std::isfinite(v))
      throw ValidationError("logical.spacetime_volume must be a positive number");
    if (v < static_cast<double>(logical_qubits))
      throw ValidationError("logical.spacetime_volume must be >= logical_qubits");
  }
}

std::vector<FoldCount> expand_qem(const GateCounts& base, const QemStack& qem) {
  qem.validate();
  const std::uint64_t n = base.total();
  if (n == 0) throw ValidationError("expand_qem: base circuit has no gates");

  std::vector<FoldCount> out;
  out.reserve(qem.zne_folds.size());
  switch (qem.fold_mode) {
    case FoldMode::global:
      for (auto alpha : qem.zne_folds)
        out.push_back({alpha, checked_mul(checked_mul(qem.pt_copies, alpha), n)});
      break;
    case FoldMode::partial: {
      const std::uint64_t f = *qem.folded_gate_count;
      if (f > n)
        throw ValidationError("qem.folded_gate_count (" + std::to_string(f) +
                              ") exceeds the base gate total (" + std::to_string(n) + ")");
      for (auto alpha : qem.zne_folds) {
        const std::uint64_t folded = checked_add(n, checked_mul(alpha - 1, f));
        out.push_back({alpha, checked_mul(qem.pt_copies, folded)});
      }
      break;
    }
    case FoldMode::measured:
      for (auto alpha : qem.zne_folds) {
        const std::uint64_t measured = qem.measured_fold_counts->at(alpha);
        if (measured < n)
          throw ValidationError("qem.measured_fold_counts[" + std::to_string(alpha) +
                                "] is below the base gate total");
        out.push_back({alpha, measured});
      }
      break;
  }
  return out;
}

}  // namespace qenergy
