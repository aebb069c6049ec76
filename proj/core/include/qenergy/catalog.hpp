#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace qenergy {

enum class GateClass { single_qubit, two_qubit, measure, reset, other };

/// "1q", "2q", "measure", "reset", "other".
std::string_view to_string(GateClass cls);
std::optional<GateClass> gate_class_from_string(std::string_view text);

/// Energy and timing constants of one qubit technology.
struct TechnologyProfile {
  std::string key;
  std::map<GateClass, double> gate_energy;  // joules per gate
  std::map<std::string, GateClass> gate_name_to_class;
  double maintenance_power_watts = 0.0;
  double cycle_time_seconds = 1e-6;
  double decode_budget_seconds = 400e-9;
  bool cooling_included_in_gate_energy = false;

  /// Class of a gate name. Class names themselves ("2q") resolve to their
  /// class; unmapped names resolve to `other` only when that class has an
  /// energy.
  std::optional<GateClass> class_of(std::string_view gate_name) const;

  /// Energy of a class; throws ValidationError when the profile has none.
  double energy_of(GateClass cls) const;

  void validate() const;

  bool operator==(const TechnologyProfile&) const = default;
};

/// Builtin profiles plus any loaded from profile files. Builtin keys are
/// reserved and cannot be redefined.
class ProfileCatalog {
 public:
  ProfileCatalog();

  /// Adds a user profile. Throws ValidationError on reserved or duplicate
  /// keys.
  void add(TechnologyProfile profile);

  /// Throws ValidationError for unknown keys.
  const TechnologyProfile& at(std::string_view key) const;

  const std::map<std::string, TechnologyProfile, std::less<>>& profiles() const {
    return profiles_;
  }

 private:
  std::map<std::string, TechnologyProfile, std::less<>> profiles_;
};

/// "superconducting" and "trapped_ion".
std::map<std::string, TechnologyProfile, std::less<>> builtin_profiles();

bool is_builtin_profile_key(std::string_view key);

/// Profile file: one object with the TechnologyProfile fields.
TechnologyProfile parse_profile(std::string_view text);
std::string render_profile(const TechnologyProfile& profile);

}  // namespace qenergy
