#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qenergy/catalog.hpp"
#include "qenergy/ftqc.hpp"
#include "qenergy/nisq.hpp"
#include "qenergy/overhead.hpp"
#include "qenergy/workload.hpp"

namespace qenergy {

enum class MaintenanceMode {
  include,  // always add E_sys to the total
  exclude,  // never add it
  flag,     // add it unless the profile's gate energies already include cooling
};

std::string_view to_string(MaintenanceMode mode);
std::optional<MaintenanceMode> maintenance_mode_from_string(std::string_view text);

struct EnergyReport {
  std::string workload;
  Regime regime = Regime::nisq;
  MaintenanceMode maintenance_mode = MaintenanceMode::flag;

  double maintenance_joules = 0.0;  // computed E_sys, included or not
  bool maintenance_included = true;
  double e_sys_joules = 0.0;  // contribution to the total
  double e_cls_joules = 0.0;
  std::optional<NisqBreakdown> nisq;
  std::optional<FtqcBreakdown> ftqc;
  std::vector<EnergyTerm> terms;
  double total_joules = 0.0;
  std::string dominant_term;

  std::optional<double> duration_seconds;
  std::optional<double> power_watts;
  std::vector<std::string> advisories;

  TechnologyProfile profile;
  WorkloadSpec inputs;

  bool operator==(const EnergyReport&) const = default;
};

enum class ReportFormat { table, machine };

std::optional<ReportFormat> report_format_from_string(std::string_view text);

/// Table: per-fold rows with gate totals, kJ, total and power for NISQ; an
/// itemized lattice / magic / decoding ledger for FTQC.
/// Machine: JSON with a stable key order, energies in plain joules.
std::string render_report(const EnergyReport& report, ReportFormat format);

/// Inverse of the machine rendering.
EnergyReport parse_report(std::string_view machine_text);

/// 2662200000 -> "2,662,200,000"; fractional digits kept up to `decimals`
/// with trailing zeros trimmed.
std::string group_thousands(double value, int decimals = 0);

/// 24775000 -> "24.775 MJ".
std::string humanize_joules(double joules);
std::string humanize_watts(double watts);

}  // namespace qenergy
