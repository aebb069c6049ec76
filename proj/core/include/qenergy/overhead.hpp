#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qenergy/catalog.hpp"
#include "qenergy/ftqc.hpp"
#include "qenergy/nisq.hpp"

namespace qenergy {

struct PowerSample {
  double t_seconds = 0.0;
  double power_watts = 0.0;

  bool operator==(const PowerSample&) const = default;
};

/// Sampled power of one IT subsystem (package, DRAM, GPU, NIC, ...).
struct PowerSeries {
  std::string label;
  std::vector<PowerSample> samples;

  void validate() const;

  bool operator==(const PowerSeries&) const = default;
};

struct PueInterval {
  double t_start_seconds = 0.0;
  double pue = 1.0;

  bool operator==(const PueInterval&) const = default;
};

/// Step function over time; the last interval extends to infinity.
struct PueProfile {
  std::vector<PueInterval> intervals{PueInterval{}};

  void validate() const;

  bool operator==(const PueProfile&) const = default;
};

struct ClassicalOverheadSpec {
  std::vector<PowerSeries> it_series;
  PueProfile pue;
  double shared_joules = 0.0;
  double net_wan_joules = 0.0;
  double storage_joules = 0.0;

  void validate() const;

  bool operator==(const ClassicalOverheadSpec&) const = default;
};

/// Trapezoidal integral of the series, over its whole span or over
/// [window.first, window.second] (linear interpolation at the window edges).
double integrate_power(const PowerSeries& series,
                       std::optional<std::pair<double, double>> window = std::nullopt);

/// PUE-weighted IT energy plus the shared, network and storage constants.
/// The IT integral is split at PUE step boundaries; IT samples before the
/// first step are weighted by the first PUE value.
double classical_energy(const ClassicalOverheadSpec& spec);

struct MaintenanceEnergy {
  double joules = 0.0;
  bool double_count_advisory = false;  // cooling already inside E_g

  bool operator==(const MaintenanceEnergy&) const = default;
};

MaintenanceEnergy maintenance_energy(const TechnologyProfile& profile, double wall_seconds);

struct EnergyTerm {
  std::string name;
  double joules = 0.0;

  bool operator==(const EnergyTerm&) const = default;
};

/// E_tot = E_sys + E_cls + exactly one regime-specific execution term.
struct EnergyTotal {
  double e_sys_joules = 0.0;
  double e_cls_joules = 0.0;
  double exec_joules = 0.0;
  double total_joules = 0.0;
  std::optional<NisqBreakdown> nisq;
  std::optional<FtqcBreakdown> ftqc;

  /// Itemized terms in a fixed order; they re-sum to total_joules.
  std::vector<EnergyTerm> terms() const;

  /// Name of the largest term.
  std::string dominant_term() const;

  double exec_fraction() const { return total_joules > 0 ? exec_joules / total_joules : 0.0; }
};

/// Throws ValidationError unless exactly one breakdown is supplied.
EnergyTotal total_energy(double e_sys_joules, double e_cls_joules,
                         const std::optional<NisqBreakdown>& nisq,
                         const std::optional<FtqcBreakdown>& ftqc);

/// Runtime speedup at which a quantum machine drawing
/// `quantum_continuous_watts` breaks even with a classical machine drawing
/// `classical_watts` on the same work.
double required_speedup(double quantum_continuous_watts, double classical_watts);

/// Counter ingestion file: `label,t_seconds,power_watts` rows, sorted by
/// time within each label. Series are returned in order of first
/// appearance.
std::vector<PowerSeries> parse_power_counters(std::string_view text);

}  // namespace qenergy
