#include "qenergy/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "codec.hpp"
#include "qenergy/error.hpp"

namespace qenergy {

using json_util::Json;
using json_util::Node;

std::string_view to_string(MaintenanceMode mode) {
  switch (mode) {
    case MaintenanceMode::include: return "include";
    case MaintenanceMode::exclude: return "exclude";
    case MaintenanceMode::flag: return "flag";
  }
  return "flag";
}

std::optional<MaintenanceMode> maintenance_mode_from_string(std::string_view text) {
  if (text == "include") return MaintenanceMode::include;
  if (text == "exclude") return MaintenanceMode::exclude;
  if (text == "flag") return MaintenanceMode::flag;
  return std::nullopt;
}

std::optional<ReportFormat> report_format_from_string(std::string_view text) {
  if (text == "table") return ReportFormat::table;
  if (text == "machine") return ReportFormat::machine;
  return std::nullopt;
}

std::string group_thousands(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, std::abs(value));
  std::string digits(buf);
  std::string frac;
  if (const auto dot = digits.find('.'); dot != std::string::npos) {
    frac = digits.substr(dot + 1);
    digits.resize(dot);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
  }
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0 && (digits.size() - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  if (!frac.empty()) out += "." + frac;
  const bool negative = value < 0 && out.find_first_not_of("0,.") != std::string::npos;
  return negative ? "-" + out : out;
}

namespace {

std::string humanize(double value, const char* unit) {
  static constexpr const char* kPrefixes[] = {"", "k", "M", "G", "T", "P"};
  int k = 0;
  double scaled = value;
  while (std::abs(scaled) >= 1000.0 && k < 5) {
    scaled /= 1000.0;
    ++k;
  }
  return group_thousands(scaled, 3) + " " + kPrefixes[k] + unit;
}

Json nisq_to_json(const NisqBreakdown& b) {
  Json j;
  j["per_fold"] = Json::array();
  for (const auto& [alpha, joules] : b.per_fold_energy_joules) {
    Json row;
    row["alpha"] = alpha;
    const auto it = b.per_fold_gate_totals.find(alpha);
    row["gate_total"] = it == b.per_fold_gate_totals.end() ? 0 : it->second;
    row["joules"] = joules;
    j["per_fold"].push_back(std::move(row));
  }
  j["baseline_shot_energy_joules"] = b.baseline_shot_energy_joules;
  j["qem_overhead_joules"] = b.qem_overhead_joules;
  j["m3_calibration_joules"] = b.m3_calibration_joules;
  j["total_exec_joules"] = b.total_exec_joules;
  return j;
}

NisqBreakdown nisq_from_json(const Node& n) {
  n.only_keys({"per_fold", "baseline_shot_energy_joules", "qem_overhead_joules",
               "m3_calibration_joules", "total_exec_joules"});
  NisqBreakdown b;
  n.at("per_fold").for_each_element([&](const Node& row) {
    row.only_keys({"alpha", "gate_total", "joules"});
    const auto alpha = row.at("alpha").as_uint32();
    b.per_fold_gate_totals[alpha] = row.at("gate_total").as_uint();
    b.per_fold_energy_joules[alpha] = row.at("joules").as_number();
  });
  b.baseline_shot_energy_joules = n.at("baseline_shot_energy_joules").as_number();
  b.qem_overhead_joules = n.at("qem_overhead_joules").as_number();
  b.m3_calibration_joules = n.at("m3_calibration_joules").as_number();
  b.total_exec_joules = n.at("total_exec_joules").as_number();
  return b;
}

Json decoder_entry_to_json(const DecoderEntry& e) {
  Json j;
  j["decoder"] = std::string(to_string(e.decoder));
  j["distance"] = e.distance;
  j["area_mm2"] = e.area_mm2;
  j["power_watts"] = e.power_watts;
  j["latency_ns"] = e.latency_ns;
  return j;
}

DecoderEntry decoder_entry_from_json(const Node& n) {
  n.only_keys({"decoder", "distance", "area_mm2", "power_watts", "latency_ns"});
  DecoderEntry e;
  const auto kind = decoder_kind_from_string(n.at("decoder").as_string());
  if (!kind) n.fail("unknown decoder");
  e.decoder = *kind;
  e.distance = n.at("distance").as_uint32();
  e.area_mm2 = n.at("area_mm2").as_number();
  e.power_watts = n.at("power_watts").as_number();
  e.latency_ns = n.at("latency_ns").as_number();
  return e;
}

Json ftqc_to_json(const FtqcBreakdown& b) {
  Json j;
  Json& layout = j["layout"];
  layout["d"] = b.layout.d;
  layout["physical_qubits_per_patch"] = b.layout.physical_qubits_per_patch;
  layout["n_patches"] = b.layout.n_patches;
  layout["routing_overhead_rho"] = b.layout.routing_overhead_rho;
  layout["physical_qubits"] = b.layout.physical_qubits();
  j["decoder"] = decoder_entry_to_json(b.decoder_entry);
  j["v_ls_cells"] = b.v_ls_cells;
  j["e_cyc_joules"] = b.e_cyc_joules;
  j["lattice_energy_joules"] = b.lattice_energy_joules;
  j["e_ms_joules"] = b.e_ms_joules;
  j["magic_energy_joules"] = b.magic_energy_joules;
  j["e_dec_joules"] = b.e_dec_joules;
  j["stall_factor"] = b.stall_factor;
  j["wall_seconds"] = b.wall_seconds;
  j["total_exec_joules"] = b.total_exec_joules;
  return j;
}

FtqcBreakdown ftqc_from_json(const Node& n) {
  n.only_keys({"layout", "decoder", "v_ls_cells", "e_cyc_joules", "lattice_energy_joules",
               "e_ms_joules", "magic_energy_joules", "e_dec_joules", "stall_factor",
               "wall_seconds", "total_exec_joules"});
  FtqcBreakdown b;
  const auto layout = n.at("layout");
  layout.only_keys({"d", "physical_qubits_per_patch", "n_patches", "routing_overhead_rho",
                    "physical_qubits"});
  b.layout.d = layout.at("d").as_uint32();
  b.layout.physical_qubits_per_patch = layout.at("physical_qubits_per_patch").as_uint();
  b.layout.n_patches = layout.at("n_patches").as_uint();
  b.layout.routing_overhead_rho = layout.at("routing_overhead_rho").as_number();
  b.decoder_entry = decoder_entry_from_json(n.at("decoder"));
  b.v_ls_cells = n.at("v_ls_cells").as_number();
  b.e_cyc_joules = n.at("e_cyc_joules").as_number();
  b.lattice_energy_joules = n.at("lattice_energy_joules").as_number();
  b.e_ms_joules = n.at("e_ms_joules").as_number();
  b.magic_energy_joules = n.at("magic_energy_joules").as_number();
  b.e_dec_joules = n.at("e_dec_joules").as_number();
  b.stall_factor = n.at("stall_factor").as_number();
  b.wall_seconds = n.at("wall_seconds").as_number();
  b.total_exec_joules = n.at("total_exec_joules").as_number();
  return b;
}

// Right-aligned columns for the per-fold rows.
std::string fold_table(const NisqBreakdown& b) {
  std::vector<std::string> folds, gates, kj;
  for (const auto& [alpha, joules] : b.per_fold_energy_joules) {
    folds.push_back(std::to_string(alpha));
    const auto it = b.per_fold_gate_totals.find(alpha);
    gates.push_back(group_thousands(it == b.per_fold_gate_totals.end() ? 0.0 : it->second));
    kj.push_back(group_thousands(joules / 1e3, 3));
  }
  std::size_t width = 8;
  for (const auto* col : {&folds, &gates, &kj})
    for (const auto& cell : *col) width = std::max(width, cell.size() + 2);
  const auto row = [&](const std::string& label, const std::vector<std::string>& cells) {
    std::string line = label;
    line.resize(24, ' ');
    for (const auto& c : cells) line += std::string(width - c.size(), ' ') + c;
    return line + "\n";
  };
  return row("ZNE fold", folds) + row("No. of gates with PT", gates) +
         row("Energy (kJ) with PT", kj);
}

std::string kv(const std::string& label, const std::string& value) {
  std::string line = "  " + label;
  if (line.size() < 30) line.resize(30, ' ');
  else line += ' ';
  return line + value + "\n";
}

std::string render_table(const EnergyReport& r) {
  std::ostringstream out;
  out << "workload: " << r.workload << "\n";
  out << "regime: " << to_string(r.regime) << "   technology: " << r.profile.key << "\n\n";

  if (r.nisq) {
    out << fold_table(*r.nisq) << "\n";
    out << kv("Baseline shots (kJ)", group_thousands(r.nisq->baseline_shot_energy_joules / 1e3, 3));
    out << kv("QEM overhead (kJ)", group_thousands(r.nisq->qem_overhead_joules / 1e3, 3));
    out << kv("M3 calibration (kJ)", group_thousands(r.nisq->m3_calibration_joules / 1e3, 3));
    out << kv("Execution energy (kJ)", group_thousands(r.nisq->total_exec_joules / 1e3, 3));
  }
  if (r.ftqc) {
    const auto& f = *r.ftqc;
    out << kv("code distance", std::to_string(f.layout.d));
    out << kv("patches", group_thousands(static_cast<double>(f.layout.n_patches)) + " x " +
                             group_thousands(static_cast<double>(f.layout.physical_qubits_per_patch)) +
                             " physical qubits");
    out << kv("physical qubits", group_thousands(static_cast<double>(f.layout.physical_qubits())));
    out << kv("decoder", std::string(to_string(f.decoder_entry.decoder)) + " at d=" +
                             std::to_string(f.decoder_entry.distance) + ", " +
                             humanize_watts(f.decoder_entry.power_watts) + ", " +
                             group_thousands(f.decoder_entry.latency_ns, 3) + " ns");
    out << kv("stall factor", group_thousands(f.stall_factor, 4));
    out << kv("wall time", group_thousands(f.wall_seconds, 6) + " s");
    out << kv("spacetime volume", group_thousands(f.v_ls_cells, 3) + " cells");
    out << kv("E_cyc", humanize_joules(f.e_cyc_joules));
    out << kv("E_ms", humanize_joules(f.e_ms_joules));
    out << "\nexecution ledger\n";
    out << kv("lattice (V_ls * E_cyc)", humanize_joules(f.lattice_energy_joules));
    out << kv("magic states (N_T * E_ms)", humanize_joules(f.magic_energy_joules));
    out << kv("decoding (E_dec)", humanize_joules(f.e_dec_joules));
    out << kv("execution total", humanize_joules(f.total_exec_joules));
  }

  out << "\nenergy ledger\n";
  for (const auto& t : r.terms) out << kv(t.name, humanize_joules(t.joules));
  if (!r.maintenance_included)
    out << kv("(e_sys not included)", humanize_joules(r.maintenance_joules));
  out << kv("Total Energy (kJ)", group_thousands(r.total_joules / 1e3, 3));
  out << kv("Total Energy", humanize_joules(r.total_joules));
  if (r.power_watts) {
    if (r.regime == Regime::nisq) out << kv("Power (MW)", group_thousands(*r.power_watts / 1e6, 3));
    else out << kv("Power", humanize_watts(*r.power_watts));
    out << kv("duration", group_thousands(*r.duration_seconds, 6) + " s");
  }
  out << kv("dominant term", r.dominant_term);
  if (!r.advisories.empty()) {
    out << "\nadvisories\n";
    for (const auto& a : r.advisories) out << "  - " << a << "\n";
  }
  return out.str();
}

Json report_to_json(const EnergyReport& r) {
  Json j;
  j["workload"] = r.workload;
  j["regime"] = std::string(to_string(r.regime));
  j["maintenance_mode"] = std::string(to_string(r.maintenance_mode));
  j["total_joules"] = r.total_joules;
  j["dominant_term"] = r.dominant_term;
  j["terms"] = Json::array();
  for (const auto& t : r.terms) {
    Json term;
    term["name"] = t.name;
    term["joules"] = t.joules;
    j["terms"].push_back(std::move(term));
  }
  j["maintenance_joules"] = r.maintenance_joules;
  j["maintenance_included"] = r.maintenance_included;
  j["e_sys_joules"] = r.e_sys_joules;
  j["e_cls_joules"] = r.e_cls_joules;
  if (r.nisq) j["nisq"] = nisq_to_json(*r.nisq);
  if (r.ftqc) j["ftqc"] = ftqc_to_json(*r.ftqc);
  if (r.duration_seconds) j["duration_seconds"] = *r.duration_seconds;
  if (r.power_watts) j["power_watts"] = *r.power_watts;
  j["advisories"] = r.advisories;
  j["profile"] = profile_to_json(r.profile);
  j["inputs"] = workload_to_json(r.inputs);
  return j;
}

}  // namespace

std::string humanize_joules(double joules) { return humanize(joules, "J"); }
std::string humanize_watts(double watts) { return humanize(watts, "W"); }

std::string render_report(const EnergyReport& report, ReportFormat format) {
  if (format == ReportFormat::table) return render_table(report);
  return report_to_json(report).dump(2) + "\n";
}

EnergyReport parse_report(std::string_view machine_text) {
  const auto doc = json_util::parse_document(machine_text, "report");
  const Node n(doc, "");
  n.only_keys({"workload", "regime", "maintenance_mode", "total_joules", "dominant_term", "terms",
               "maintenance_joules", "maintenance_included", "e_sys_joules", "e_cls_joules",
               "nisq", "ftqc", "duration_seconds", "power_watts", "advisories", "profile",
               "inputs"});
  EnergyReport r;
  r.workload = n.at("workload").as_string();
  const auto regime = regime_from_string(n.at("regime").as_string());
  if (!regime) n.at("regime").fail("regime must be nisq or ftqc");
  r.regime = *regime;
  const auto mode = maintenance_mode_from_string(n.at("maintenance_mode").as_string());
  if (!mode) n.at("maintenance_mode").fail("unknown maintenance mode");
  r.maintenance_mode = *mode;
  r.total_joules = n.at("total_joules").as_number();
  r.dominant_term = n.at("dominant_term").as_string();
  n.at("terms").for_each_element([&](const Node& t) {
    t.only_keys({"name", "joules"});
    r.terms.push_back({t.at("name").as_string(), t.at("joules").as_number()});
  });
  r.maintenance_joules = n.at("maintenance_joules").as_number();
  r.maintenance_included = n.at("maintenance_included").as_bool();
  r.e_sys_joules = n.at("e_sys_joules").as_number();
  r.e_cls_joules = n.at("e_cls_joules").as_number();
  if (const auto v = n.find("nisq")) r.nisq = nisq_from_json(*v);
  if (const auto v = n.find("ftqc")) r.ftqc = ftqc_from_json(*v);
  if (const auto v = n.find("duration_seconds")) r.duration_seconds = v->as_number();
  if (const auto v = n.find("power_watts")) r.power_watts = v->as_number();
  n.at("advisories").for_each_element([&](const Node& a) { r.advisories.push_back(a.as_string()); });
  r.profile = profile_from_json(n.at("profile"));
  r.inputs = workload_from_json(n.at("inputs"), {});
  return r;
}

}  // namespace qenergy
