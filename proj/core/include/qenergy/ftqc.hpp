#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "qenergy/catalog.hpp"
#include "qenergy/circuit.hpp"
#include "qenergy/decoder_table.hpp"

namespace qenergy {

// Surface-code error model p_L = A * (p / p_th)^((d + 1) / 2).
struct CodeParams {
  double p = 1e-3;
  double p_th = 1e-2;
  double target_pl = 1e-12;
  double prefactor_a = 1.0;
  std::optional<unsigned> d;  // solved when absent
  unsigned margin_steps = 0;  // adds 2 * margin_steps to a solved distance

  void validate() const;

  bool operator==(const CodeParams&) const = default;
};

struct SurfaceLayout {
  unsigned d = 3;
  std::uint64_t physical_qubits_per_patch = 0;  // 2d^2 - 1
  std::uint64_t n_patches = 0;                  // ceil((1 + rho) * N_L)
  double routing_overhead_rho = 0.0;

  std::uint64_t physical_qubits() const { return physical_qubits_per_patch * n_patches; }

  bool operator==(const SurfaceLayout&) const = default;
};

enum class FactoryProtocol { distillation, cultivation };
enum class MagicCostMode { patch_cycles, ratio };

std::string_view to_string(FactoryProtocol protocol);
std::optional<FactoryProtocol> factory_protocol_from_string(std::string_view text);
std::string_view to_string(MagicCostMode mode);
std::optional<MagicCostMode> magic_cost_mode_from_string(std::string_view text);

/// Magic-state factory cost model. Use `defaults_for` to obtain the
/// protocol defaults; the cultivation defaults are the distillation ones
/// divided by ten in both cost modes.
struct FactorySpec {
  FactoryProtocol protocol = FactoryProtocol::distillation;
  unsigned d_f = 15;
  MagicCostMode cost_mode = MagicCostMode::ratio;
  double patch_cycles_per_t = 810.0;
  double ratio_to_cycle = 3162.2776601683795;  // 10^3.5
  double output_error = 1e-8;

  static FactorySpec defaults_for(FactoryProtocol protocol);

  void validate() const;

  bool operator==(const FactorySpec&) const = default;
};

struct FtqcConfig {
  LogicalCircuit logical;
  CodeParams code;
  FactorySpec factory;
  DecoderKind decoder = DecoderKind::bposd;
  double rho = 0.5;
  std::optional<double> cycle_energy_override;

  void validate() const;

  bool operator==(const FtqcConfig&) const = default;
};

/// Itemized FTQC execution energy: lattice + magic states + decoding.
struct FtqcBreakdown {
  SurfaceLayout layout;
  DecoderEntry decoder_entry;
  double v_ls_cells = 0.0;
  double e_cyc_joules = 0.0;
  double lattice_energy_joules = 0.0;
  double e_ms_joules = 0.0;
  double magic_energy_joules = 0.0;
  double e_dec_joules = 0.0;
  double stall_factor = 1.0;
  double wall_seconds = 0.0;
  double total_exec_joules = 0.0;

  bool operator==(const FtqcBreakdown&) const = default;
};

/// Throws InfeasibleError when p >= p_th.
double logical_error_rate(double p, double p_th, unsigned d, double prefactor_a = 1.0);

/// Smallest odd d >= 3 meeting the target. Rates are compared with a
/// relative slack of 1e-9 so that a target hit exactly (0.1^12 vs 1e-12)
/// is not lost to rounding in pow().
unsigned solve_distance(double p, double p_th, double target_pl, double prefactor_a = 1.0);

/// Distance used by an FTQC config: supplied d, or the solved one plus
/// 2 * margin_steps.
unsigned resolve_distance(const CodeParams& code);

/// 2d^2 - 1: d^2 data qubits and d^2 - 1 syndrome ancillas.
std::uint64_t physical_qubits_per_logical(unsigned d);

SurfaceLayout surface_layout(unsigned d, std::uint64_t logical_qubits, double rho);

/// ceil((1 + rho) * N_L), treating values within 1e-9 of an integer as
/// that integer.
std::uint64_t patch_count(std::uint64_t logical_qubits, double rho);

/// Compiled volume when supplied, else patch_count * D_L cells.
double spacetime_volume(const LogicalCircuit& logical, double rho);

/// Energy of one stabilizer round of a distance-d patch:
/// (d^2 - 1) * (4 E_2q + E_measure + E_reset).
double round_energy(unsigned d, const TechnologyProfile& profile);

/// One spacetime cell spans d rounds: d * round_energy(d).
double cycle_energy(unsigned d, const TechnologyProfile& profile,
                    std::optional<double> override_joules = std::nullopt);

double magic_state_energy(const FactorySpec& factory, double e_cyc_joules,
                          const TechnologyProfile& profile);

/// One decoder per patch running for the whole wall time.
double decoder_energy(const SurfaceLayout& layout, const DecoderEntry& entry,
                      double wall_seconds);

/// max(1, latency / budget).
double backlog_stall(double decoder_latency_seconds, double budget_seconds);

/// D_L * d * t_cycle * stall.
double ftqc_wall_time(const LogicalCircuit& logical, unsigned d, double t_cycle_seconds,
                      double stall);

FtqcBreakdown ftqc_exec_energy(const FtqcConfig& config, const TechnologyProfile& profile,
                               const DecoderTable& decoders);

}  // namespace qenergy
