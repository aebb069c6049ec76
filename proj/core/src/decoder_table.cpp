#include "qenergy/decoder_table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "qenergy/error.hpp"
#include "util.hpp"

namespace qenergy {

std::string_view to_string(DecoderKind kind) {
  return kind == DecoderKind::bposd ? "BPOSD" : "MWPM";
}

std::optional<DecoderKind> decoder_kind_from_string(std::string_view text) {
  if (text == "BPOSD") return DecoderKind::bposd;
  if (text == "MWPM") return DecoderKind::mwpm;
  return std::nullopt;
}

namespace {

bool row_less(const DecoderEntry& a, const DecoderEntry& b) {
  if (a.decoder != b.decoder) return a.decoder < b.decoder;
  return a.distance < b.distance;
}

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

void DecoderTable::validate() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const std::string where =
        std::string(to_string(e.decoder)) + " d=" + std::to_string(e.distance);
    if (e.distance == 0) throw ValidationError("decoder table: distance must be positive");
    for (double m : {e.area_mm2, e.power_watts, e.latency_ns}) {
      if (!(m > 0) || !std::isfinite(m))
        throw ValidationError("decoder table: " + where + " has a non-positive metric");
    }
    if (i > 0) {
      const auto& prev = entries[i - 1];
      if (prev.decoder == e.decoder && prev.distance == e.distance)
        throw ValidationError("decoder table: duplicate row " + where);
      if (!row_less(prev, e))
        throw ValidationError("decoder table: rows must be sorted by decoder then distance");
    }
  }
}

DecoderTable builtin_decoder_table() {
  using enum DecoderKind;
  DecoderTable t;
  t.interpolation = Interpolation::piecewise_linear;
  t.entries = {
      {bposd, 7, 0.90, 0.27, 19.6},    {bposd, 11, 1.62, 0.28, 26.6},
      {bposd, 13, 4.35, 0.36, 32.8},   {bposd, 32, 57.45, 2.49, 145.0},
      {mwpm, 7, 0.38, 0.19, 14.4},     {mwpm, 11, 1.76, 0.92, 35.5},
      {mwpm, 13, 3.10, 1.62, 49.6},    {mwpm, 32, 59.09, 30.33, 300.5},
  };
  return t;
}

DecoderEntry decoder_lookup(const DecoderTable& table, DecoderKind decoder, unsigned distance) {
  std::vector<const DecoderEntry*> rows;
  for (const auto& e : table.entries)
    if (e.decoder == decoder) rows.push_back(&e);
  const std::string name(to_string(decoder));
  if (rows.empty()) throw InfeasibleError("decoder table has no rows for " + name);

  const auto lo = rows.front()->distance;
  const auto hi = rows.back()->distance;
  if (distance < lo)
    throw InfeasibleError(name + " decoder: d=" + std::to_string(distance) +
                          " is below the table range (min d=" + std::to_string(lo) + ")");
  if (distance > hi)
    throw InfeasibleError(name + " decoder: d=" + std::to_string(distance) +
                          " is above the table range (max d=" + std::to_string(hi) +
                          "); extrapolation refused");

  const auto upper = std::find_if(rows.begin(), rows.end(),
                                  [&](const DecoderEntry* e) { return e->distance >= distance; });
  if ((*upper)->distance == distance) return **upper;
  if (table.interpolation == Interpolation::exact_only)
    throw InfeasibleError(name + " decoder: d=" + std::to_string(distance) +
                          " is not tabulated and interpolation is disabled");

  const DecoderEntry& a = **(upper - 1);
  const DecoderEntry& b = **upper;
  const double t = static_cast<double>(distance - a.distance) /
                   static_cast<double>(b.distance - a.distance);
  const auto lerp = [t](double x, double y) { return x + t * (y - x); };
  return DecoderEntry{decoder, distance, lerp(a.area_mm2, b.area_mm2),
                      lerp(a.power_watts, b.power_watts), lerp(a.latency_ns, b.latency_ns)};
}

DecoderTable parse_decoder_table(std::string_view text) {
  DecoderTable table;
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "decoder table line " + std::to_string(line_no);
    if (line.starts_with("interpolation")) {
      const auto eq = line.find('=');
      const auto value = eq == std::string_view::npos ? std::string_view{} : trim(line.substr(eq + 1));
      if (value == "exact_only") table.interpolation = Interpolation::exact_only;
      else if (value == "piecewise_linear") table.interpolation = Interpolation::piecewise_linear;
      else throw ParseError(where + ": interpolation must be exact_only or piecewise_linear");
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 5) throw ParseError(where + ": expected 5 comma-separated fields");
    if (trim(fields[0]) == "decoder") continue;  // header row
    const auto kind = decoder_kind_from_string(trim(fields[0]));
    if (!kind) throw ParseError(where + ": decoder must be BPOSD or MWPM");
    const double d = parse_double_field(fields[1], where + " d");
    if (d < 1 || d != std::floor(d) || d > 1e6) throw ParseError(where + ": d must be a positive integer");
    table.entries.push_back(DecoderEntry{*kind, static_cast<unsigned>(d),
                                         parse_double_field(fields[2], where + " area_mm2"),
                                         parse_double_field(fields[3], where + " power_watts"),
                                         parse_double_field(fields[4], where + " latency_ns")});
  }
  std::stable_sort(table.entries.begin(), table.entries.end(), row_less);
  try {
    table.validate();
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  return table;
}

std::string render_decoder_table(const DecoderTable& table) {
  std::string out = "interpolation=";
  out += table.interpolation == Interpolation::exact_only ? "exact_only" : "piecewise_linear";
  out += "\ndecoder,d,area_mm2,power_watts,latency_ns\n";
  for (const auto& e : table.entries) {
    out += std::string(to_string(e.decoder)) + "," + std::to_string(e.distance) + "," +
           shortest(e.area_mm2) + "," + shortest(e.power_watts) + "," + shortest(e.latency_ns) +
           "\n";
  }
  return out;
}

}  // namespace qenergy
