#include <gtest/gtest.h>

#include <random>

#include "qenergy/catalog.hpp"
#include "qenergy/decoder_table.hpp"
#include "qenergy/error.hpp"
#include "qenergy/workload.hpp"
#include "support.hpp"

namespace qenergy {
namespace {

using testing::fixture;

// Published per-logical-qubit decoder metrics: d, area B/M, power B/M, latency B/M.
struct PublishedRow {
  unsigned d;
  double area_b, area_m, power_b, power_m, latency_b, latency_m;
};
constexpr PublishedRow kPublished[] = {
    {7, 0.90, 0.38, 0.27, 0.19, 19.6, 14.4},
    {11, 1.62, 1.76, 0.28, 0.92, 26.6, 35.5},
    {13, 4.35, 3.10, 0.36, 1.62, 32.8, 49.6},
    {32, 57.45, 59.09, 2.49, 30.33, 145.0, 300.5},
};

TEST(Catalog, BuiltinSuperconducting) {
  const ProfileCatalog catalog;
  const auto& sc = catalog.at("superconducting");
  EXPECT_EQ(sc.energy_of(GateClass::two_qubit), 0.18);
  EXPECT_EQ(sc.decode_budget_seconds, 400e-9);
  EXPECT_EQ(sc.class_of("cx"), GateClass::two_qubit);
  EXPECT_EQ(sc.class_of("measure"), GateClass::measure);
  EXPECT_TRUE(sc.cooling_included_in_gate_energy);
}

TEST(Catalog, BuiltinTrappedIon) {
  const ProfileCatalog catalog;
  const auto& ion = catalog.at("trapped_ion");
  EXPECT_EQ(ion.energy_of(GateClass::two_qubit), 15.0);
  EXPECT_EQ(ion.class_of("ms"), GateClass::two_qubit);
}

TEST(Catalog, UnknownKeyIsRejected) {
  const ProfileCatalog catalog;
  EXPECT_THROW(catalog.at("photonic"), ValidationError);
}

TEST(Catalog, AddsUserProfileButProtectsBuiltins) {
  ProfileCatalog catalog;
  const auto lab = parse_profile(read_text_file(fixture("data/sc_lab_profile.json")));
  catalog.add(lab);
  EXPECT_EQ(catalog.at(lab.key), lab);
  EXPECT_THROW(catalog.add(lab), ValidationError);
  auto shadow = lab;
  shadow.key = "superconducting";
  EXPECT_THROW(catalog.add(shadow), ValidationError);
}

TEST(Catalog, ProfileValidation) {
  auto p = builtin_profiles().at("superconducting");
  p.gate_energy[GateClass::single_qubit] = -1.0;
  EXPECT_THROW(p.validate(), ValidationError);
  p = builtin_profiles().at("superconducting");
  p.cycle_time_seconds = 0.0;
  EXPECT_THROW(p.validate(), ValidationError);
}

TEST(CatalogProperty, ProfileRenderParseIdentity) {
  for (const auto& [key, profile] : builtin_profiles()) {
    SCOPED_TRACE(key);
    EXPECT_EQ(parse_profile(render_profile(profile)), profile);
  }
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> energy(0.0, 50.0);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = builtin_profiles().at("superconducting");
    p.key = "random_" + std::to_string(trial);
    for (auto& [cls, e] : p.gate_energy) e = energy(rng);
    p.maintenance_power_watts = energy(rng) * 1e4;
    p.cooling_included_in_gate_energy = trial % 2 == 0;
    ASSERT_EQ(parse_profile(render_profile(p)), p);
  }
}

TEST(DecoderTable, PublishedValuesRoundTripExactly) {
  const auto table = builtin_decoder_table();
  for (const auto& row : kPublished) {
    const auto b = decoder_lookup(table, DecoderKind::bposd, row.d);
    const auto m = decoder_lookup(table, DecoderKind::mwpm, row.d);
    EXPECT_EQ(b.area_mm2, row.area_b);
    EXPECT_EQ(m.area_mm2, row.area_m);
    EXPECT_EQ(b.power_watts, row.power_b);
    EXPECT_EQ(m.power_watts, row.power_m);
    EXPECT_EQ(b.latency_ns, row.latency_b);
    EXPECT_EQ(m.latency_ns, row.latency_m);
  }
}

TEST(DecoderTable, Lookups) {
  const auto table = builtin_decoder_table();
  const auto b11 = decoder_lookup(table, DecoderKind::bposd, 11);
  EXPECT_EQ(b11.area_mm2, 1.62);
  EXPECT_EQ(b11.power_watts, 0.28);
  EXPECT_EQ(b11.latency_ns, 26.6);
  const auto m32 = decoder_lookup(table, DecoderKind::mwpm, 32);
  EXPECT_EQ(m32.area_mm2, 59.09);
  EXPECT_EQ(m32.power_watts, 30.33);
  EXPECT_EQ(m32.latency_ns, 300.5);
  const auto m7 = decoder_lookup(table, DecoderKind::mwpm, 7);
  EXPECT_EQ(m7.area_mm2, 0.38);
  EXPECT_EQ(m7.power_watts, 0.19);
  EXPECT_EQ(m7.latency_ns, 14.4);
  const auto b13 = decoder_lookup(table, DecoderKind::bposd, 13);
  EXPECT_EQ(b13.power_watts, 0.36);
  EXPECT_EQ(b13.latency_ns, 32.8);
}

TEST(DecoderTable, InterpolatesMidpoint) {
  const auto b9 = decoder_lookup(builtin_decoder_table(), DecoderKind::bposd, 9);
  EXPECT_NEAR(b9.area_mm2, (0.90 + 1.62) / 2, 1e-12);
  EXPECT_NEAR(b9.power_watts, (0.27 + 0.28) / 2, 1e-12);
  EXPECT_NEAR(b9.latency_ns, (19.6 + 26.6) / 2, 1e-12);
  EXPECT_EQ(b9.distance, 9u);
}

TEST(DecoderTable, RefusesExtrapolation) {
  const auto table = builtin_decoder_table();
  try {
    decoder_lookup(table, DecoderKind::mwpm, 33);
    FAIL();
  } catch (const InfeasibleError& e) {
    EXPECT_NE(std::string(e.what()).find("extrapolation refused"), std::string::npos);
  }
  EXPECT_THROW(decoder_lookup(table, DecoderKind::bposd, 5), InfeasibleError);
  auto exact = table;
  exact.interpolation = Interpolation::exact_only;
  EXPECT_THROW(decoder_lookup(exact, DecoderKind::bposd, 9), InfeasibleError);
}

TEST(DecoderTable, PowerRatioAtLargestDistance) {
  const auto table = builtin_decoder_table();
  const double ratio = decoder_lookup(table, DecoderKind::mwpm, 32).power_watts /
                       decoder_lookup(table, DecoderKind::bposd, 32).power_watts;
  EXPECT_NEAR(ratio, 12.18, 0.05);
}

TEST(DecoderTable, FileMatchesBuiltin) {
  const auto parsed = parse_decoder_table(read_text_file(fixture("data/table2_decoders.csv")));
  EXPECT_EQ(parsed, builtin_decoder_table());
  EXPECT_EQ(parse_decoder_table(render_decoder_table(parsed)), parsed);
}

TEST(DecoderTable, RejectsMalformedTables) {
  EXPECT_THROW(parse_decoder_table("BPOSD,7,0.9,0.27\n"), ParseError);
  EXPECT_THROW(parse_decoder_table("QUANTUM,7,0.9,0.27,19.6\n"), ParseError);
  EXPECT_THROW(parse_decoder_table("BPOSD,7,0.9,-0.27,19.6\n"), Error);
  EXPECT_THROW(parse_decoder_table("BPOSD,7,0.9,0.27,19.6\nBPOSD,7,0.9,0.27,19.6\n"), Error);
}

TEST(DecoderTableProperty, InterpolationStaysBetweenNeighbours) {
  const auto table = builtin_decoder_table();
  for (auto kind : {DecoderKind::bposd, DecoderKind::mwpm}) {
    for (unsigned d = 7; d <= 32; ++d) {
      const auto e = decoder_lookup(table, kind, d);
      const PublishedRow* lo = &kPublished[0];
      const PublishedRow* hi = &kPublished[3];
      for (const auto& row : kPublished) {
        if (row.d <= d) lo = &row;
        if (row.d >= d && row.d < hi->d) hi = &row;
      }
      const double p_lo = kind == DecoderKind::bposd ? lo->power_b : lo->power_m;
      const double p_hi = kind == DecoderKind::bposd ? hi->power_b : hi->power_m;
      ASSERT_GE(e.power_watts, std::min(p_lo, p_hi) - 1e-12);
      ASSERT_LE(e.power_watts, std::max(p_lo, p_hi) + 1e-12);
    }
  }
}

}  // namespace
}  // namespace qenergy
