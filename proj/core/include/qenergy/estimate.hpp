#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qenergy/catalog.hpp"
#include "qenergy/decoder_table.hpp"
#include "qenergy/report.hpp"
#include "qenergy/workload.hpp"

namespace qenergy {

struct EstimateOptions {
  MaintenanceMode maintenance = MaintenanceMode::flag;
};

/// Runs the full model on a parsed workload.
EnergyReport estimate(const WorkloadSpec& spec, const ProfileCatalog& catalog,
                      const DecoderTable& decoders, const EstimateOptions& options = {});

/// Loads the workload file and estimates it.
EnergyReport run_estimate(const std::filesystem::path& workload_path,
                          const ProfileCatalog& catalog, const DecoderTable& decoders,
                          const EstimateOptions& options = {});

/// Returns a copy of `spec` with the numeric field at the dotted path
/// (e.g. "ftqc.logical.t_count", "nisq.qem.zne_folds.2") set to `value`.
/// Integer fields require an integral value. Throws ValidationError for
/// unknown paths and non-numeric targets.
WorkloadSpec with_parameter(const WorkloadSpec& spec, std::string_view path, double value);

struct SweepPoint {
  double value = 0.0;
  EnergyReport report;
};

/// One report per value, in input order. Points are evaluated concurrently.
std::vector<SweepPoint> run_sweep(const WorkloadSpec& spec, std::string_view path,
                                  const std::vector<double>& values,
                                  const ProfileCatalog& catalog, const DecoderTable& decoders,
                                  const EstimateOptions& options = {});

/// Flat (value, E_tot, dominant_term) table, or a JSON array of
/// {value, total_joules, dominant_term, report} in machine format.
std::string render_sweep(const std::vector<SweepPoint>& points, ReportFormat format);

}  // namespace qenergy
