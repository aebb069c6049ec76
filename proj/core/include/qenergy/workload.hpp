#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "qenergy/circuit.hpp"
#include "qenergy/ftqc.hpp"
#include "qenergy/overhead.hpp"

namespace qenergy {

enum class Regime { nisq, ftqc };

std::string_view to_string(Regime regime);
std::optional<Regime> regime_from_string(std::string_view text);

/// A physical circuit run through a QEM stack.
struct NisqCircuitJob {
  GateCounts gate_counts;
  QemStack qem;

  bool operator==(const NisqCircuitJob&) const = default;
};

struct NisqVqeJob {
  VqeSpec vqe;
  std::optional<QemStack> qem;

  bool operator==(const NisqVqeJob&) const = default;
};

using NisqPayload = std::variant<NisqCircuitJob, NisqVqeJob>;

struct WorkloadSpec {
  std::string name;
  Regime regime = Regime::nisq;
  std::string technology = "superconducting";
  std::optional<double> qpu_seconds;
  std::optional<NisqPayload> nisq;
  std::optional<FtqcConfig> ftqc;
  std::optional<ClassicalOverheadSpec> classical;

  /// Exactly one regime payload, matching `regime`, and every nested
  /// invariant.
  void validate() const;

  bool operator==(const WorkloadSpec&) const = default;
};

/// Parses a workload document (JSON). `circuit_file` and `counter_file`
/// references are resolved relative to `base_dir` and replaced by their
/// parsed contents. Throws ParseError with a byte offset on syntax errors
/// and with the field path on schema errors; IoError when a referenced file
/// cannot be read.
WorkloadSpec parse_workload(std::string_view text,
                            const std::filesystem::path& base_dir = {});

/// Canonical rendering: fixed key order, every defaulted field explicit.
std::string render_workload(const WorkloadSpec& spec);

/// Reads and parses a workload file.
WorkloadSpec load_workload(const std::filesystem::path& path);

/// Whole-file read; throws IoError.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace qenergy
