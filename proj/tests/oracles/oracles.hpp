#pragma once

// Reference computations used only by the tests. Each one takes a
// deliberately different route from the library code it checks.

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qenergy/overhead.hpp"

namespace qenergy::oracle {

/// Builds the folded gate list explicitly: the first `folded` gates of the
/// circuit become G (G^dag G)^((alpha-1)/2), then the whole list is copied
/// once per Pauli-twirl instance, and the list length is returned.
inline std::uint64_t folded_gate_list_length(std::uint64_t base_total, std::uint64_t folded,
                                             std::uint32_t alpha, std::uint32_t copies) {
  std::vector<char> circuit;
  for (std::uint64_t g = 0; g < base_total; ++g) {
    circuit.push_back('G');
    if (g < folded) {
      for (std::uint32_t k = 0; k < (alpha - 1) / 2; ++k) {
        circuit.push_back('D');  // G^dagger
        circuit.push_back('G');
      }
    }
  }
  std::vector<char> twirled;
  for (std::uint32_t c = 0; c < copies; ++c) {
    for (char gate : circuit) {
      twirled.push_back(gate);
    }
  }
  return twirled.size();
}

/// Smallest odd d >= 3 by enumeration, multiplying the suppression factor
/// in long double and comparing with the same relative slack.
inline unsigned enumerate_distance(double p, double p_th, double target, double a) {
  const long double ratio = static_cast<long double>(p) / p_th;
  long double rate = a * ratio * ratio;  // d = 3
  for (unsigned d = 3; d < 100001; d += 2) {
    if (rate <= static_cast<long double>(target) * (1 + 1e-9L)) return d;
    rate *= ratio;
  }
  return 0;
}

/// Midpoint-rule energy of PUE-weighted IT power on a uniform grid.
inline double riemann_classical_energy(const ClassicalOverheadSpec& spec, std::size_t steps) {
  const auto pue_at = [&](double t) {
    double pue = spec.pue.intervals.front().pue;
    for (const auto& iv : spec.pue.intervals)
      if (t >= iv.t_start_seconds) pue = iv.pue;
    return pue;
  };
  double total = 0.0;
  for (const auto& series : spec.it_series) {
    const auto& s = series.samples;
    if (s.size() < 2) continue;
    const double t0 = s.front().t_seconds;
    const double t1 = s.back().t_seconds;
    const double h = (t1 - t0) / static_cast<double>(steps);
    std::size_t seg = 1;
    for (std::size_t i = 0; i < steps; ++i) {
      const double t = t0 + (static_cast<double>(i) + 0.5) * h;
      while (seg + 1 < s.size() && s[seg].t_seconds < t) ++seg;
      const auto& a = s[seg - 1];
      const auto& b = s[seg];
      const double w = (t - a.t_seconds) / (b.t_seconds - a.t_seconds);
      const double power = a.power_watts + w * (b.power_watts - a.power_watts);
      total += pue_at(t) * power * h;
    }
  }
  return total + spec.shared_joules + spec.net_wan_joules + spec.storage_joules;
}

}  // namespace qenergy::oracle
