#include "qenergy/catalog.hpp"

#include <cmath>
#include <initializer_list>

#include "codec.hpp"
#include "qenergy/error.hpp"

namespace qenergy {

std::string_view to_string(GateClass cls) {
  switch (cls) {
    case GateClass::single_qubit: return "1q";
    case GateClass::two_qubit: return "2q";
    case GateClass::measure: return "measure";
    case GateClass::reset: return "reset";
    case GateClass::other: return "other";
  }
  return "other";
}

std::optional<GateClass> gate_class_from_string(std::string_view text) {
  for (auto cls : {GateClass::single_qubit, GateClass::two_qubit, GateClass::measure,
                   GateClass::reset, GateClass::other}) {
    if (to_string(cls) == text) return cls;
  }
  return std::nullopt;
}

std::optional<GateClass> TechnologyProfile::class_of(std::string_view gate_name) const {
  if (const auto it = gate_name_to_class.find(std::string(gate_name)); it != gate_name_to_class.end())
    return it->second;
  if (const auto cls = gate_class_from_string(gate_name)) return cls;
  if (gate_energy.contains(GateClass::other)) return GateClass::other;
  return std::nullopt;
}

double TechnologyProfile::energy_of(GateClass cls) const {
  const auto it = gate_energy.find(cls);
  if (it == gate_energy.end())
    throw ValidationError("profile '" + key + "' has no energy for gate class '" +
                          std::string(to_string(cls)) + "'");
  return it->second;
}

void TechnologyProfile::validate() const {
  const auto bad = [&](const std::string& what) {
    throw ValidationError("profile '" + key + "': " + what);
  };
  if (key.empty()) bad("key must not be empty");
  for (const auto& [cls, e] : gate_energy) {
    if (!(e >= 0) || !std::isfinite(e))
      bad("gate energy for '" + std::string(to_string(cls)) + "' must be finite and >= 0");
  }
  const auto two_q = gate_energy.find(GateClass::two_qubit);
  if (two_q == gate_energy.end() || !(two_q->second > 0)) bad("2q gate energy must be > 0");
  if (!(maintenance_power_watts >= 0) || !std::isfinite(maintenance_power_watts))
    bad("maintenance_power_watts must be finite and >= 0");
  if (!(cycle_time_seconds > 0) || !std::isfinite(cycle_time_seconds))
    bad("cycle_time_seconds must be > 0");
  if (!(decode_budget_seconds > 0) || !std::isfinite(decode_budget_seconds))
    bad("decode_budget_seconds must be > 0");
  if (key.starts_with("superconducting") && decode_budget_seconds > 1e-3)
    bad("decode_budget_seconds must be <= 1 ms for superconducting profiles");
}

namespace {

void map_names(TechnologyProfile& profile, GateClass cls,
               std::initializer_list<const char*> names) {
  for (const char* n : names) profile.gate_name_to_class[n] = cls;
}

void map_common_gate_names(TechnologyProfile& p) {
  map_names(p, GateClass::single_qubit,
            {"U", "u", "u0", "u1", "u2", "u3", "p", "id", "x", "y", "z", "h", "s", "sdg", "t",
             "tdg", "rx", "ry", "rz", "sx", "sxdg"});
  map_names(p, GateClass::two_qubit,
            {"CX", "cx", "cy", "cz", "ch", "crx", "cry", "crz", "cu1", "cp", "cu3", "cu", "csx",
             "swap", "rxx", "rzz", "ecr", "iswap", "ms"});
  map_names(p, GateClass::measure, {"measure"});
  map_names(p, GateClass::reset, {"reset"});
}

TechnologyProfile uniform_profile(std::string key, double joules_per_gate) {
  TechnologyProfile p;
  p.key = std::move(key);
  for (auto cls : {GateClass::single_qubit, GateClass::two_qubit, GateClass::measure,
                   GateClass::reset, GateClass::other})
    p.gate_energy[cls] = joules_per_gate;
  map_common_gate_names(p);
  return p;
}

}  // namespace

std::map<std::string, TechnologyProfile, std::less<>> builtin_profiles() {
  // Only the two-qubit gate energies are published; both include cooling,
  // and the same per-gate figure is applied to every counted operation.
  auto sc = uniform_profile("superconducting", 0.18);
  sc.maintenance_power_watts = 25e3;  // top of the 10-25 kW dilution-fridge range
  sc.cycle_time_seconds = 1e-6;
  sc.decode_budget_seconds = 400e-9;
  sc.cooling_included_in_gate_energy = true;

  // Placeholder timing: no published cycle time, budget or continuous draw.
  auto ion = uniform_profile("trapped_ion", 15.0);
  map_names(ion, GateClass::single_qubit, {"gpi", "gpi2"});
  map_names(ion, GateClass::two_qubit, {"zz"});
  ion.maintenance_power_watts = 0.0;
  ion.cycle_time_seconds = 1e-4;
  ion.decode_budget_seconds = 1e-4;
  ion.cooling_included_in_gate_energy = true;

  std::map<std::string, TechnologyProfile, std::less<>> out;
  out.emplace(sc.key, std::move(sc));
  out.emplace(ion.key, std::move(ion));
  return out;
}

bool is_builtin_profile_key(std::string_view key) {
  return key == "superconducting" || key == "trapped_ion";
}

ProfileCatalog::ProfileCatalog() : profiles_(builtin_profiles()) {}

void ProfileCatalog::add(TechnologyProfile profile) {
  profile.validate();
  if (is_builtin_profile_key(profile.key))
    throw ValidationError("profile key '" + profile.key + "' is reserved for a builtin profile");
  if (profiles_.contains(profile.key))
    throw ValidationError("profile key '" + profile.key + "' is already defined");
  const std::string key = profile.key;
  profiles_.emplace(key, std::move(profile));
}

const TechnologyProfile& ProfileCatalog::at(std::string_view key) const {
  const auto it = profiles_.find(key);
  if (it == profiles_.end())
    throw ValidationError("unknown technology profile '" + std::string(key) + "'");
  return it->second;
}

TechnologyProfile profile_from_json(const json_util::Node& root) {
  using json_util::Node;
  root.only_keys({"key", "gate_energy", "gate_name_to_class", "maintenance_power_watts",
                  "cycle_time_seconds", "decode_budget_seconds",
                  "cooling_included_in_gate_energy"});
  TechnologyProfile p;
  p.key = root.at("key").as_string();
  root.at("gate_energy").for_each_member([&](const std::string& name, const Node& v) {
    const auto cls = gate_class_from_string(name);
    if (!cls) v.fail("unknown gate class (expected 1q, 2q, measure, reset or other)");
    p.gate_energy[*cls] = v.as_number();
  });
  if (const auto names = root.find("gate_name_to_class")) {
    names->for_each_member([&](const std::string& name, const Node& v) {
      const auto cls = gate_class_from_string(v.as_string());
      if (!cls) v.fail("unknown gate class '" + v.as_string() + "'");
      p.gate_name_to_class[name] = *cls;
    });
  }
  p.maintenance_power_watts = root.at("maintenance_power_watts").as_number();
  p.cycle_time_seconds = root.at("cycle_time_seconds").as_number();
  if (const auto v = root.find("decode_budget_seconds")) p.decode_budget_seconds = v->as_number();
  if (const auto v = root.find("cooling_included_in_gate_energy"))
    p.cooling_included_in_gate_energy = v->as_bool();
  try {
    p.validate();
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  return p;
}

json_util::Json profile_to_json(const TechnologyProfile& profile) {
  json_util::Json j;
  j["key"] = profile.key;
  j["gate_energy"] = json_util::Json::object();
  for (const auto& [cls, e] : profile.gate_energy) j["gate_energy"][std::string(to_string(cls))] = e;
  j["gate_name_to_class"] = json_util::Json::object();
  for (const auto& [name, cls] : profile.gate_name_to_class)
    j["gate_name_to_class"][name] = std::string(to_string(cls));
  j["maintenance_power_watts"] = profile.maintenance_power_watts;
  j["cycle_time_seconds"] = profile.cycle_time_seconds;
  j["decode_budget_seconds"] = profile.decode_budget_seconds;
  j["cooling_included_in_gate_energy"] = profile.cooling_included_in_gate_energy;
  return j;
}

TechnologyProfile parse_profile(std::string_view text) {
  const auto doc = json_util::parse_document(text, "profile");
  return profile_from_json(json_util::Node(doc, ""));
}

std::string render_profile(const TechnologyProfile& profile) {
  return profile_to_json(profile).dump(2) + "\n";
}

}  // namespace qenergy
