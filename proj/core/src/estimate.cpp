#include "qenergy/estimate.hpp"

#include <charconv>
#include <cmath>
#include <future>
#include <sstream>

#include "codec.hpp"
#include "qenergy/error.hpp"
#include "qenergy/ftqc.hpp"
#include "qenergy/nisq.hpp"
#include "qenergy/overhead.hpp"
#include "util.hpp"

namespace qenergy {

using json_util::Json;

namespace {

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void add_ftqc_advisories(const FtqcConfig& config, const FtqcBreakdown& b,
                         std::vector<std::string>& out) {
  if (!config.code.d) {
    std::string msg = "code distance " + std::to_string(b.layout.d) +
                      " solved from p=" + shortest(config.code.p) +
                      ", p_th=" + shortest(config.code.p_th) +
                      ", target p_L=" + shortest(config.code.target_pl) +
                      ", prefactor A=" + shortest(config.code.prefactor_a);
    if (config.code.margin_steps > 0)
      msg += " plus " + std::to_string(config.code.margin_steps) + " margin step(s)";
    out.push_back(msg);
  }
  const auto defaults = FactorySpec::defaults_for(config.factory.protocol);
  const std::string protocol(to_string(config.factory.protocol));
  if (config.factory.cost_mode == MagicCostMode::ratio &&
      config.factory.ratio_to_cycle == defaults.ratio_to_cycle)
    out.push_back("E_ms uses the default " + protocol + " ratio E_ms/E_cyc = " +
                  shortest(defaults.ratio_to_cycle) + " (a mid-band default, not a measured value)");
  if (config.factory.cost_mode == MagicCostMode::patch_cycles &&
      config.factory.patch_cycles_per_t == defaults.patch_cycles_per_t)
    out.push_back("E_ms uses the default " + protocol + " cost of " +
                  shortest(defaults.patch_cycles_per_t) + " patch-rounds per T state at d_f=" +
                  std::to_string(config.factory.d_f));
  if (!config.logical.spacetime_volume_override)
    out.push_back("spacetime volume estimated as ceil((1 + rho) * N_L) * D_L with rho=" +
                  shortest(config.rho) + "; supply logical.spacetime_volume for a compiled layout");
  if (b.decoder_entry.distance == b.layout.d && b.stall_factor > 1.0)
    out.push_back("decoder latency " + shortest(b.decoder_entry.latency_ns) +
                  " ns exceeds the decode budget; logical clock stalls by x" +
                  shortest(b.stall_factor));
}

}  // namespace

EnergyReport estimate(const WorkloadSpec& spec, const ProfileCatalog& catalog,
                      const DecoderTable& decoders, const EstimateOptions& options) {
  spec.validate();
  const TechnologyProfile& profile = catalog.at(spec.technology);
  profile.validate();

  EnergyReport r;
  r.workload = spec.name;
  r.regime = spec.regime;
  r.maintenance_mode = options.maintenance;
  r.profile = profile;
  r.inputs = spec;

  std::optional<NisqBreakdown> nisq;
  std::optional<FtqcBreakdown> ftqc;
  if (spec.nisq) {
    if (const auto* job = std::get_if<NisqCircuitJob>(&*spec.nisq)) {
      nisq = nisq_exec_energy(job->gate_counts, job->qem, profile);
    } else {
      const auto& vqe = std::get<NisqVqeJob>(*spec.nisq);
      nisq = vqe_breakdown(vqe.vqe, profile, vqe.qem);
      if (vqe.qem && vqe.qem->fold_mode != FoldMode::global)
        r.advisories.push_back("VQE folds use the global multiplier (sum of folds) * P; fold_mode '" +
                               std::string(to_string(vqe.qem->fold_mode)) + "' is ignored");
    }
    r.duration_seconds = spec.qpu_seconds;
  } else {
    ftqc = ftqc_exec_energy(*spec.ftqc, profile, decoders);
    add_ftqc_advisories(*spec.ftqc, *ftqc, r.advisories);
    r.duration_seconds = ftqc->wall_seconds;
    if (spec.qpu_seconds)
      r.advisories.push_back("qpu_seconds is ignored for FTQC workloads; the modeled wall time is used");
  }

  if (r.duration_seconds) {
    const auto m = maintenance_energy(profile, *r.duration_seconds);
    r.maintenance_joules = m.joules;
    switch (options.maintenance) {
      case MaintenanceMode::include: r.maintenance_included = true; break;
      case MaintenanceMode::exclude: r.maintenance_included = false; break;
      case MaintenanceMode::flag: r.maintenance_included = !m.double_count_advisory; break;
    }
    if (m.double_count_advisory && m.joules > 0) {
      if (r.maintenance_included)
        r.advisories.push_back("maintenance energy " + humanize_joules(m.joules) +
                               " is included although the gate energies of profile '" +
                               profile.key + "' already include cooling; possible double counting");
      else if (options.maintenance == MaintenanceMode::flag)
        r.advisories.push_back("maintenance energy " + humanize_joules(m.joules) +
                               " not added: the gate energies of profile '" + profile.key +
                               "' already include cooling (use --maintenance include to add it)");
    }
  } else {
    r.maintenance_included = false;
    r.advisories.push_back("no QPU duration given; maintenance energy and power not computed");
  }
  r.e_sys_joules = r.maintenance_included ? r.maintenance_joules : 0.0;
  r.e_cls_joules = spec.classical ? classical_energy(*spec.classical) : 0.0;

  const auto total = total_energy(r.e_sys_joules, r.e_cls_joules, nisq, ftqc);
  r.nisq = std::move(nisq);
  r.ftqc = std::move(ftqc);
  r.terms = total.terms();
  r.total_joules = total.total_joules;
  r.dominant_term = total.dominant_term();
  if (r.duration_seconds && *r.duration_seconds > 0)
    r.power_watts = nisq_power(r.total_joules, *r.duration_seconds);
  return r;
}

EnergyReport run_estimate(const std::filesystem::path& workload_path,
                          const ProfileCatalog& catalog, const DecoderTable& decoders,
                          const EstimateOptions& options) {
  return estimate(load_workload(workload_path), catalog, decoders, options);
}

WorkloadSpec with_parameter(const WorkloadSpec& spec, std::string_view path, double value) {
  Json doc = workload_to_json(spec);
  Json* node = &doc;
  const std::string where(path);
  if (path.empty()) throw ValidationError("empty parameter path");
  for (auto segment : split(path, '.')) {
    const std::string key(segment);
    if (node->is_object()) {
      const auto it = node->find(key);
      if (it == node->end()) throw ValidationError("unknown parameter path '" + where + "'");
      node = &*it;
    } else if (node->is_array()) {
      std::size_t index = 0;
      const auto res = std::from_chars(key.data(), key.data() + key.size(), index);
      if (res.ec != std::errc{} || res.ptr != key.data() + key.size() || index >= node->size())
        throw ValidationError("unknown parameter path '" + where + "'");
      node = &(*node)[index];
    } else {
      throw ValidationError("unknown parameter path '" + where + "'");
    }
  }
  if (!node->is_number())
    throw ValidationError("parameter path '" + where + "' does not address a numeric field");
  if (node->is_number_integer()) {
    if (!(value >= 0) || value != std::floor(value) || value > 9.007199254740992e15)
      throw ValidationError("parameter '" + where + "' needs a non-negative integer value");
    *node = static_cast<std::uint64_t>(value);
  } else {
    *node = value;
  }
  return workload_from_json(json_util::Node(doc, ""), {});
}

std::vector<SweepPoint> run_sweep(const WorkloadSpec& spec, std::string_view path,
                                  const std::vector<double>& values,
                                  const ProfileCatalog& catalog, const DecoderTable& decoders,
                                  const EstimateOptions& options) {
  std::vector<WorkloadSpec> specs;
  specs.reserve(values.size());
  for (double v : values) specs.push_back(with_parameter(spec, path, v));

  std::vector<std::future<EnergyReport>> futures;
  futures.reserve(specs.size());
  for (const auto& s : specs)
    futures.push_back(std::async(std::launch::async, [&catalog, &decoders, &options, &s] {
      return estimate(s, catalog, decoders, options);
    }));

  std::vector<SweepPoint> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out.push_back({values[i], futures[i].get()});
  return out;
}

std::string render_sweep(const std::vector<SweepPoint>& points, ReportFormat format) {
  if (format == ReportFormat::machine) {
    Json j = Json::array();
    for (const auto& p : points) {
      Json row;
      row["value"] = p.value;
      row["total_joules"] = p.report.total_joules;
      row["dominant_term"] = p.report.dominant_term;
      row["report"] = Json::parse(render_report(p.report, ReportFormat::machine));
      j.push_back(std::move(row));
    }
    return j.dump(2) + "\n";
  }
  if (points.empty()) return {};
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-16s %28s  %s\n", "value", "total_joules", "dominant_term");
  out << line;
  for (const auto& p : points) {
    std::snprintf(line, sizeof line, "%-16s %28s  %s\n", shortest(p.value).c_str(),
                  group_thousands(p.report.total_joules, 3).c_str(), p.report.dominant_term.c_str());
    out << line;
  }
  return out.str();
}

}  // namespace qenergy
