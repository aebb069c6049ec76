#include "qenergy/overhead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "qenergy/error.hpp"
#include "util.hpp"

namespace qenergy {

namespace {

void check_constant(double v, const char* what) {
  if (!(v >= 0) || !std::isfinite(v))
    throw ValidationError(std::string(what) + " must be finite and >= 0");
}

double power_at(const PowerSample& a, const PowerSample& b, double t) {
  if (t <= a.t_seconds) return a.power_watts;
  if (t >= b.t_seconds) return b.power_watts;
  const double frac = (t - a.t_seconds) / (b.t_seconds - a.t_seconds);
  return a.power_watts + frac * (b.power_watts - a.power_watts);
}

// Trapezoid over [lo, hi] clipped to the series span; no range checks.
double integrate_clipped(const std::vector<PowerSample>& s, double lo, double hi) {
  double sum = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const auto& a = s[i - 1];
    const auto& b = s[i];
    const double x0 = std::max(a.t_seconds, lo);
    const double x1 = std::min(b.t_seconds, hi);
    if (x1 <= x0) continue;
    sum += 0.5 * (power_at(a, b, x0) + power_at(a, b, x1)) * (x1 - x0);
  }
  return sum;
}

}  // namespace

void PowerSeries::validate() const {
  if (samples.empty()) throw ValidationError("power series '" + label + "' has no samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (!std::isfinite(s.t_seconds))
      throw ValidationError("power series '" + label + "': non-finite timestamp");
    if (!(s.power_watts >= 0) || !std::isfinite(s.power_watts))
      throw ValidationError("power series '" + label + "': power must be finite and >= 0");
    if (i > 0 && !(s.t_seconds > samples[i - 1].t_seconds))
      throw ValidationError("power series '" + label + "': timestamps must be strictly increasing");
  }
}

void PueProfile::validate() const {
  if (intervals.empty()) throw ValidationError("PUE profile has no intervals");
  if (intervals.front().t_start_seconds != 0.0)
    throw ValidationError("PUE profile must start at t = 0");
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const auto& iv = intervals[i];
    if (!(iv.pue >= 1.0) || !std::isfinite(iv.pue)) throw ValidationError("PUE values must be >= 1");
    if (i > 0 && !(iv.t_start_seconds > intervals[i - 1].t_start_seconds))
      throw ValidationError("PUE interval starts must be strictly increasing");
  }
}

void ClassicalOverheadSpec::validate() const {
  for (const auto& s : it_series) s.validate();
  pue.validate();
  check_constant(shared_joules, "classical.shared_joules");
  check_constant(net_wan_joules, "classical.net_wan_joules");
  check_constant(storage_joules, "classical.storage_joules");
}

double integrate_power(const PowerSeries& series, std::optional<std::pair<double, double>> window) {
  series.validate();
  const auto& s = series.samples;
  if (!window) return integrate_clipped(s, s.front().t_seconds, s.back().t_seconds);

  const auto [t0, t1] = *window;
  if (!(t0 <= t1)) throw ValidationError("integration window must satisfy t0 <= t1");
  if (t0 == t1) return 0.0;
  if (s.size() < 2)
    throw ValidationError("power series '" + series.label +
                          "' needs at least 2 samples to integrate over a window");
  if (t0 < s.front().t_seconds || t1 > s.back().t_seconds)
    throw ValidationError("integration window lies outside the samples of '" + series.label + "'");
  return integrate_clipped(s, t0, t1);
}

double classical_energy(const ClassicalOverheadSpec& spec) {
  spec.validate();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const auto& iv = spec.pue.intervals;
  double it = 0.0;
  for (const auto& series : spec.it_series) {
    for (std::size_t i = 0; i < iv.size(); ++i) {
      const double lo = i == 0 ? -kInf : iv[i].t_start_seconds;
      const double hi = i + 1 < iv.size() ? iv[i + 1].t_start_seconds : kInf;
      it += iv[i].pue * integrate_clipped(series.samples, lo, hi);
    }
  }
  return it + spec.shared_joules + spec.net_wan_joules + spec.storage_joules;
}

MaintenanceEnergy maintenance_energy(const TechnologyProfile& profile, double wall_seconds) {
  if (!(wall_seconds >= 0) || !std::isfinite(wall_seconds))
    throw ValidationError("maintenance duration must be finite and >= 0");
  return MaintenanceEnergy{profile.maintenance_power_watts * wall_seconds,
                           profile.cooling_included_in_gate_energy};
}

std::vector<EnergyTerm> EnergyTotal::terms() const {
  std::vector<EnergyTerm> out{{"e_sys", e_sys_joules}, {"e_cls", e_cls_joules}};
  if (nisq) {
    out.push_back({"qem_sampling", nisq->sampling_joules()});
    out.push_back({"m3_calibration", nisq->m3_calibration_joules});
  }
  if (ftqc) {
    out.push_back({"lattice", ftqc->lattice_energy_joules});
    out.push_back({"magic_states", ftqc->magic_energy_joules});
    out.push_back({"decoding", ftqc->e_dec_joules});
  }
  return out;
}

std::string EnergyTotal::dominant_term() const {
  const auto items = terms();
  const auto it = std::max_element(items.begin(), items.end(),
                                   [](const auto& a, const auto& b) { return a.joules < b.joules; });
  return it->name;
}

EnergyTotal total_energy(double e_sys_joules, double e_cls_joules,
                         const std::optional<NisqBreakdown>& nisq,
                         const std::optional<FtqcBreakdown>& ftqc) {
  if (nisq.has_value() == ftqc.has_value())
    throw ValidationError("exactly one regime-specific execution term must be supplied");
  check_constant(e_sys_joules, "E_sys");
  check_constant(e_cls_joules, "E_cls");
  EnergyTotal out;
  out.e_sys_joules = e_sys_joules;
  out.e_cls_joules = e_cls_joules;
  out.nisq = nisq;
  out.ftqc = ftqc;
  out.exec_joules = nisq ? nisq->total_exec_joules : ftqc->total_exec_joules;
  out.total_joules = e_sys_joules + e_cls_joules + out.exec_joules;
  return out;
}

double required_speedup(double quantum_continuous_watts, double classical_watts) {
  if (!(quantum_continuous_watts > 0) || !(classical_watts > 0))
    throw ValidationError("required_speedup needs positive power draws");
  return quantum_continuous_watts / classical_watts;
}

std::vector<PowerSeries> parse_power_counters(std::string_view text) {
  std::vector<PowerSeries> out;
  std::map<std::string, std::size_t, std::less<>> index;
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "counter file line " + std::to_string(line_no);
    const auto fields = split(line, ',');
    if (fields.size() != 3) throw ParseError(where + ": expected label,t_seconds,power_watts");
    const std::string label(trim(fields[0]));
    if (label == "label") continue;  // header row
    if (label.empty()) throw ParseError(where + ": empty label");
    const PowerSample sample{parse_double_field(fields[1], where + " t_seconds"),
                             parse_double_field(fields[2], where + " power_watts")};
    auto [it, inserted] = index.try_emplace(label, out.size());
    if (inserted) out.push_back(PowerSeries{label, {}});
    auto& series = out[it->second];
    if (!series.samples.empty() && !(sample.t_seconds > series.samples.back().t_seconds))
      throw ParseError(where + ": samples for '" + label + "' are not sorted by time");
    series.samples.push_back(sample);
  }
  for (const auto& s : out) {
    try {
      s.validate();
    } catch (const ValidationError& e) {
      throw ParseError(e.what());
    }
  }
  return out;
}

}  // namespace qenergy
