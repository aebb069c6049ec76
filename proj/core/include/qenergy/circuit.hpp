#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qenergy {

/// Gate histogram of a physical circuit, keyed by gate name ("cx", "rz",
/// "measure", ...). Names are resolved to energy classes by a
/// TechnologyProfile, so this type stays technology agnostic.
struct GateCounts {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t qubit_count = 0;
  std::uint64_t depth = 0;  // 0 = unknown

  std::uint64_t total() const;

  /// Throws ValidationError when a non-empty histogram has no qubits.
  void validate() const;

  bool operator==(const GateCounts&) const = default;
};

enum class FoldMode {
  global,    // every gate is folded: P * alpha * N
  partial,   // only F gates are folded: P * (N + (alpha - 1) * F)
  measured,  // PT-expanded totals taken from a measured campaign
};

std::string_view to_string(FoldMode mode);
std::optional<FoldMode> fold_mode_from_string(std::string_view text);

/// Error-mitigation stack applied on top of the shot baseline: ZNE fold
/// factors, Pauli-twirl copies, and M3 readout calibration.
struct QemStack {
  std::vector<std::uint32_t> zne_folds{1};
  std::uint32_t pt_copies = 1;
  std::uint64_t shots = 1;
  FoldMode fold_mode = FoldMode::global;
  std::optional<std::uint64_t> folded_gate_count;
  std::optional<std::map<std::uint32_t, std::uint64_t>> measured_fold_counts;
  std::uint64_t m3_cal_shots = 0;
  std::uint64_t m3_amortize_over = 1;

  /// Checks the stack on its own (folds odd and strictly increasing, P, S,
  /// amortization positive, measured mode covers every fold).
  void validate() const;

  /// Sum of the fold factors.
  std::uint64_t fold_sum() const;

  bool operator==(const QemStack&) const = default;
};

struct VqeSpec {
  std::uint64_t ansatz_two_qubit_gates = 1;  // G
  std::uint64_t pauli_groups = 1;            // M
  std::uint64_t shots_per_circuit = 1;       // S
  std::uint64_t iterations = 0;              // K

  void validate() const;

  bool operator==(const VqeSpec&) const = default;
};

/// Output of logical-circuit synthesis and (optionally) lattice-surgery
/// compilation.
struct LogicalCircuit {
  std::uint64_t logical_qubits = 1;  // N_L
  std::uint64_t t_count = 0;         // N_T
  std::uint64_t clifford_count = 0;  // N_C
  std::uint64_t logical_depth = 1;   // D_L
  std::optional<double> spacetime_volume_override;  // V_ls in cells

  void validate() const;

  bool operator==(const LogicalCircuit&) const = default;
};

struct FoldCount {
  std::uint32_t alpha = 1;
  std::uint64_t expanded_total = 0;

  bool operator==(const FoldCount&) const = default;
};

/// Expands a base circuit through ZNE folding and Pauli twirling into the
/// per-fold gate totals that are actually executed.
std::vector<FoldCount> expand_qem(const GateCounts& base, const QemStack& qem);

enum class UnknownGatePolicy { error, count_as_other };

/// Counts gates in a circuit written in a small OpenQASM 2 subset: version
/// header, optional include, qreg/creg declarations, gate applications,
/// measure, reset and barrier. Register-wide operands are broadcast, so
/// `measure q -> c;` on a two-qubit register counts two measurements.
/// Depth is the per-qubit critical path; barriers synchronize their
/// operands but are not counted.
GateCounts count_gates_circuit_text(std::string_view text,
                                    UnknownGatePolicy policy = UnknownGatePolicy::error);

}  // namespace qenergy
