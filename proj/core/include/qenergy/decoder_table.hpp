#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qenergy {

enum class DecoderKind { bposd, mwpm };

/// "BPOSD" / "MWPM".
std::string_view to_string(DecoderKind kind);
std::optional<DecoderKind> decoder_kind_from_string(std::string_view text);

/// Hardware metrics of one decoder instance serving one logical qubit.
/// Latency is kept in nanoseconds, the unit the metrics are tabulated in.
struct DecoderEntry {
  DecoderKind decoder = DecoderKind::bposd;
  unsigned distance = 1;
  double area_mm2 = 0.0;
  double power_watts = 0.0;
  double latency_ns = 0.0;

  double latency_seconds() const { return latency_ns * 1e-9; }

  bool operator==(const DecoderEntry&) const = default;
};

enum class Interpolation { exact_only, piecewise_linear };

struct DecoderTable {
  std::vector<DecoderEntry> entries;
  Interpolation interpolation = Interpolation::piecewise_linear;

  /// Unique (decoder, distance) rows, positive metrics, and strictly
  /// increasing distances per decoder (rows are kept sorted).
  void validate() const;

  bool operator==(const DecoderTable&) const = default;
};

/// The measured BPOSD/MWPM ASIC metrics at d = 7, 11, 13, 32.
DecoderTable builtin_decoder_table();

/// Exact row when tabulated; otherwise each metric is interpolated linearly
/// in d between the bracketing rows (piecewise_linear policy only).
/// Throws InfeasibleError below the table or above it (no extrapolation),
/// and for untabulated d under exact_only.
DecoderEntry decoder_lookup(const DecoderTable& table, DecoderKind decoder,
                            unsigned distance);

/// Text format, one row per line: `decoder,d,area_mm2,power_watts,latency_ns`.
/// Blank lines and `#` comments are ignored, an optional header row naming
/// the columns is skipped, and a line `interpolation=exact_only` (or
/// `piecewise_linear`) selects the policy.
DecoderTable parse_decoder_table(std::string_view text);
std::string render_decoder_table(const DecoderTable& table);

}  // namespace qenergy
