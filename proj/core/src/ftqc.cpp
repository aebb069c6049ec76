#include "qenergy/ftqc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qenergy/error.hpp"

namespace qenergy {

namespace {

// Relative slack when comparing a logical error rate against its target.
constexpr double kRateSlack = 1e-9;

// Largest (d + 1) / 2 the solver will search before giving up.
constexpr unsigned kMaxHalfDistance = 1u << 20;

void check_finite_positive(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v))
    throw ValidationError(std::string(what) + " must be a positive finite number");
}

void check_error_model(double p, double p_th, double prefactor_a) {
  if (!(p >= 0) || !(p < 1)) throw ValidationError("physical error rate p must be in [0, 1)");
  if (!(p_th > 0) || !(p_th < 1)) throw ValidationError("threshold p_th must be in (0, 1)");
  check_finite_positive(prefactor_a, "prefactor_a");
  if (p >= p_th)
    throw InfeasibleError("physical error rate " + std::to_string(p) +
                          " is above threshold " + std::to_string(p_th) +
                          "; no code distance suppresses errors");
}

double rate_at_half_distance(double ratio, unsigned half, double prefactor_a) {
  return prefactor_a * std::pow(ratio, static_cast<double>(half));
}

}  // namespace

std::string_view to_string(FactoryProtocol protocol) {
  return protocol == FactoryProtocol::distillation ? "distillation" : "cultivation";
}

std::optional<FactoryProtocol> factory_protocol_from_string(std::string_view text) {
  if (text == "distillation") return FactoryProtocol::distillation;
  if (text == "cultivation") return FactoryProtocol::cultivation;
  return std::nullopt;
}

std::string_view to_string(MagicCostMode mode) {
  return mode == MagicCostMode::ratio ? "ratio" : "patch_cycles";
}

std::optional<MagicCostMode> magic_cost_mode_from_string(std::string_view text) {
  if (text == "ratio") return MagicCostMode::ratio;
  if (text == "patch_cycles") return MagicCostMode::patch_cycles;
  return std::nullopt;
}

void CodeParams::validate() const {
  if (!(p >= 0) || !(p < 1)) throw ValidationError("code.p must be in [0, 1)");
  if (!(p_th > 0) || !(p_th < 1)) throw ValidationError("code.p_th must be in (0, 1)");
  if (!(target_pl > 0) || !(target_pl < 1)) throw ValidationError("code.target_pl must be in (0, 1)");
  check_finite_positive(prefactor_a, "code.prefactor_a");
  if (d && *d < 3) throw ValidationError("code.d must be >= 3");
}

FactorySpec FactorySpec::defaults_for(FactoryProtocol protocol) {
  FactorySpec f;
  f.protocol = protocol;
  if (protocol == FactoryProtocol::cultivation) {
    f.patch_cycles_per_t = 81.0;
    f.ratio_to_cycle = 316.22776601683796;  // 10^2.5
  }
  return f;
}

void FactorySpec::validate() const {
  if (d_f < 3) throw ValidationError("factory.d_f must be >= 3");
  check_finite_positive(patch_cycles_per_t, "factory.patch_cycles_per_t");
  check_finite_positive(ratio_to_cycle, "factory.ratio_to_cycle");
  check_finite_positive(output_error, "factory.output_error");
}

void FtqcConfig::validate() const {
  logical.validate();
  code.validate();
  factory.validate();
  if (!(rho >= 0) || !std::isfinite(rho)) throw ValidationError("ftqc.rho must be >= 0");
  if (cycle_energy_override &&
      (!(*cycle_energy_override >= 0) || !std::isfinite(*cycle_energy_override)))
    throw ValidationError("ftqc.cycle_energy_override must be >= 0");
}

double logical_error_rate(double p, double p_th, unsigned d, double prefactor_a) {
  check_error_model(p, p_th, prefactor_a);
  if (d % 2 == 0) throw ValidationError("code distance must be odd");
  return rate_at_half_distance(p / p_th, (d + 1) / 2, prefactor_a);
}

unsigned solve_distance(double p, double p_th, double target_pl, double prefactor_a) {
  check_error_model(p, p_th, prefactor_a);
  if (!(target_pl > 0) || !(target_pl < 1))
    throw ValidationError("target logical error rate must be in (0, 1)");
  if (p == 0) return 3;

  const double ratio = p / p_th;
  const auto meets = [&](unsigned half) {
    return rate_at_half_distance(ratio, half, prefactor_a) <= target_pl * (1 + kRateSlack);
  };
  // Start near the closed-form answer, then settle on the exact boundary.
  const double guess = std::log(target_pl / prefactor_a) / std::log(ratio);
  unsigned half = 2;
  if (std::isfinite(guess) && guess > 2)
    half = static_cast<unsigned>(std::min(guess, static_cast<double>(kMaxHalfDistance)));
  while (!meets(half)) {
    if (++half > kMaxHalfDistance)
      throw InfeasibleError("no code distance below " + std::to_string(2 * kMaxHalfDistance - 1) +
                            " meets the target logical error rate");
  }
  while (half > 2 && meets(half - 1)) --half;
  return 2 * half - 1;
}

unsigned resolve_distance(const CodeParams& code) {
  code.validate();
  check_error_model(code.p, code.p_th, code.prefactor_a);
  if (code.d) return *code.d;
  return solve_distance(code.p, code.p_th, code.target_pl, code.prefactor_a) +
         2 * code.margin_steps;
}

std::uint64_t physical_qubits_per_logical(unsigned d) {
  const auto dd = static_cast<std::uint64_t>(d);
  return 2 * dd * dd - 1;
}

std::uint64_t patch_count(std::uint64_t logical_qubits, double rho) {
  const double x = (1.0 + rho) * static_cast<double>(logical_qubits);
  const double nearest = std::nearbyint(x);
  if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, x)) return static_cast<std::uint64_t>(nearest);
  return static_cast<std::uint64_t>(std::ceil(x));
}

SurfaceLayout surface_layout(unsigned d, std::uint64_t logical_qubits, double rho) {
  return SurfaceLayout{d, physical_qubits_per_logical(d), patch_count(logical_qubits, rho), rho};
}

double spacetime_volume(const LogicalCircuit& logical, double rho) {
  if (logical.spacetime_volume_override) return *logical.spacetime_volume_override;
  return static_cast<double>(patch_count(logical.logical_qubits, rho)) *
         static_cast<double>(logical.logical_depth);
}

double round_energy(unsigned d, const TechnologyProfile& profile) {
  const double stabilizers = static_cast<double>(d) * d - 1.0;
  return stabilizers * (4 * profile.energy_of(GateClass::two_qubit) +
                        profile.energy_of(GateClass::measure) +
                        profile.energy_of(GateClass::reset));
}

double cycle_energy(unsigned d, const TechnologyProfile& profile,
                    std::optional<double> override_joules) {
  if (override_joules) return *override_joules;
  if (d < 3) throw ValidationError("cycle energy needs code distance >= 3");
  return static_cast<double>(d) * round_energy(d, profile);
}

double magic_state_energy(const FactorySpec& factory, double e_cyc_joules,
                          const TechnologyProfile& profile) {
  factory.validate();
  if (factory.cost_mode == MagicCostMode::ratio) return factory.ratio_to_cycle * e_cyc_joules;
  return factory.patch_cycles_per_t * round_energy(factory.d_f, profile);
}

double decoder_energy(const SurfaceLayout& layout, const DecoderEntry& entry,
                      double wall_seconds) {
  if (!(wall_seconds >= 0)) throw ValidationError("wall time must be >= 0");
  return static_cast<double>(layout.n_patches) * entry.power_watts * wall_seconds;
}

double backlog_stall(double decoder_latency_seconds, double budget_seconds) {
  check_finite_positive(decoder_latency_seconds, "decoder latency");
  check_finite_positive(budget_seconds, "decode budget");
  return std::max(1.0, decoder_latency_seconds / budget_seconds);
}

double ftqc_wall_time(const LogicalCircuit& logical, unsigned d, double t_cycle_seconds,
                      double stall) {
  if (!(t_cycle_seconds >= 0) || !(stall >= 1))
    throw ValidationError("wall time needs t_cycle >= 0 and stall >= 1");
  return static_cast<double>(logical.logical_depth) * d * t_cycle_seconds * stall;
}

FtqcBreakdown ftqc_exec_energy(const FtqcConfig& config, const TechnologyProfile& profile,
                               const DecoderTable& decoders) {
  config.validate();
  const unsigned d = resolve_distance(config.code);

  FtqcBreakdown out;
  out.layout = surface_layout(d, config.logical.logical_qubits, config.rho);
  out.decoder_entry = decoder_lookup(decoders, config.decoder, d);
  out.stall_factor =
      backlog_stall(out.decoder_entry.latency_seconds(), profile.decode_budget_seconds);
  out.wall_seconds =
      ftqc_wall_time(config.logical, d, profile.cycle_time_seconds, out.stall_factor);

  out.v_ls_cells = spacetime_volume(config.logical, config.rho);
  out.e_cyc_joules = cycle_energy(d, profile, config.cycle_energy_override);
  out.lattice_energy_joules = out.v_ls_cells * out.e_cyc_joules;
  out.e_ms_joules = magic_state_energy(config.factory, out.e_cyc_joules, profile);
  out.magic_energy_joules = static_cast<double>(config.logical.t_count) * out.e_ms_joules;
  out.e_dec_joules = decoder_energy(out.layout, out.decoder_entry, out.wall_seconds);
  out.total_exec_joules = out.lattice_energy_joules + out.magic_energy_joules + out.e_dec_joules;
  return out;
}

}  // namespace qenergy
