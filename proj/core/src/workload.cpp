#include "qenergy/workload.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "codec.hpp"
#include "qenergy/error.hpp"

namespace qenergy {

using json_util::Json;
using json_util::Node;

std::string_view to_string(Regime regime) { return regime == Regime::nisq ? "nisq" : "ftqc"; }

std::optional<Regime> regime_from_string(std::string_view text) {
  if (text == "nisq") return Regime::nisq;
  if (text == "ftqc") return Regime::ftqc;
  return std::nullopt;
}

void WorkloadSpec::validate() const {
  if (name.empty()) throw ValidationError("workload name must not be empty");
  if (technology.empty()) throw ValidationError("technology key must not be empty");
  if (qpu_seconds && (!(*qpu_seconds > 0) || !std::isfinite(*qpu_seconds)))
    throw ValidationError("qpu_seconds must be a positive number");
  const bool want_nisq = regime == Regime::nisq;
  if (nisq.has_value() != want_nisq || ftqc.has_value() == want_nisq)
    throw ValidationError("regime/payload mismatch: regime '" + std::string(to_string(regime)) +
                          "' requires exactly the '" + std::string(to_string(regime)) +
                          "' payload");
  if (nisq) {
    if (const auto* job = std::get_if<NisqCircuitJob>(&*nisq)) {
      job->gate_counts.validate();
      job->qem.validate();
      const auto total = job->gate_counts.total();
      if (total == 0) throw ValidationError("nisq.gate_counts: circuit has no gates");
      if (job->qem.fold_mode == FoldMode::partial && *job->qem.folded_gate_count > total)
        throw ValidationError("nisq.qem.folded_gate_count exceeds the base gate total");
    } else {
      const auto& vqe = std::get<NisqVqeJob>(*nisq);
      vqe.vqe.validate();
      if (vqe.qem) vqe.qem->validate();
    }
  }
  if (ftqc) ftqc->validate();
  if (classical) classical->validate();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return ss.str();
}

namespace {

GateCounts gate_counts_from_json(const Node& n) {
  n.only_keys({"counts", "qubit_count", "depth"});
  GateCounts g;
  n.at("counts").for_each_member(
      [&](const std::string& name, const Node& v) { g.counts[name] = v.as_uint(); });
  g.qubit_count = n.at("qubit_count").as_uint();
  if (const auto d = n.find("depth")) g.depth = d->as_uint();
  return g;
}

Json gate_counts_to_json(const GateCounts& g) {
  Json j;
  j["counts"] = Json::object();
  for (const auto& [name, count] : g.counts) j["counts"][name] = count;
  j["qubit_count"] = g.qubit_count;
  j["depth"] = g.depth;
  return j;
}

std::uint32_t parse_fold_key(const std::string& key, const Node& where) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size() || v > 0xffffffffUL)
    where.fail("fold key '" + key + "' is not a non-negative integer");
  return static_cast<std::uint32_t>(v);
}

QemStack qem_from_json(const Node& n) {
  n.only_keys({"zne_folds", "pt_copies", "shots", "fold_mode", "folded_gate_count",
               "measured_fold_counts", "m3_cal_shots", "m3_amortize_over"});
  QemStack q;
  q.zne_folds.clear();
  n.at("zne_folds").for_each_element([&](const Node& v) { q.zne_folds.push_back(v.as_uint32()); });
  q.pt_copies = n.at("pt_copies").as_uint32();
  q.shots = n.at("shots").as_uint();
  if (const auto m = n.find("fold_mode")) {
    const auto mode = fold_mode_from_string(m->as_string());
    if (!mode) m->fail("fold_mode must be global, partial or measured");
    q.fold_mode = *mode;
  }
  if (const auto f = n.find("folded_gate_count")) q.folded_gate_count = f->as_uint();
  if (const auto m = n.find("measured_fold_counts")) {
    std::map<std::uint32_t, std::uint64_t> counts;
    m->for_each_member([&](const std::string& key, const Node& v) {
      counts[parse_fold_key(key, *m)] = v.as_uint();
    });
    q.measured_fold_counts = std::move(counts);
  }
  if (const auto c = n.find("m3_cal_shots")) q.m3_cal_shots = c->as_uint();
  if (const auto a = n.find("m3_amortize_over")) q.m3_amortize_over = a->as_uint();
  return q;
}

Json qem_to_json(const QemStack& q) {
  Json j;
  j["zne_folds"] = q.zne_folds;
  j["pt_copies"] = q.pt_copies;
  j["shots"] = q.shots;
  j["fold_mode"] = std::string(to_string(q.fold_mode));
  if (q.folded_gate_count) j["folded_gate_count"] = *q.folded_gate_count;
  if (q.measured_fold_counts) {
    j["measured_fold_counts"] = Json::object();
    for (const auto& [alpha, count] : *q.measured_fold_counts)
      j["measured_fold_counts"][std::to_string(alpha)] = count;
  }
  j["m3_cal_shots"] = q.m3_cal_shots;
  j["m3_amortize_over"] = q.m3_amortize_over;
  return j;
}

VqeSpec vqe_from_json(const Node& n) {
  n.only_keys({"ansatz_two_qubit_gates", "pauli_groups", "shots_per_circuit", "iterations"});
  VqeSpec v;
  v.ansatz_two_qubit_gates = n.at("ansatz_two_qubit_gates").as_uint();
  v.pauli_groups = n.at("pauli_groups").as_uint();
  v.shots_per_circuit = n.at("shots_per_circuit").as_uint();
  v.iterations = n.at("iterations").as_uint();
  return v;
}

Json vqe_to_json(const VqeSpec& v) {
  Json j;
  j["ansatz_two_qubit_gates"] = v.ansatz_two_qubit_gates;
  j["pauli_groups"] = v.pauli_groups;
  j["shots_per_circuit"] = v.shots_per_circuit;
  j["iterations"] = v.iterations;
  return j;
}

NisqPayload nisq_from_json(const Node& n, const std::filesystem::path& base_dir) {
  n.only_keys({"gate_counts", "circuit_file", "unknown_gates", "vqe", "qem"});
  const int sources = n.has("gate_counts") + n.has("circuit_file") + n.has("vqe");
  if (sources != 1) n.fail("exactly one of gate_counts, circuit_file or vqe is required");

  if (const auto v = n.find("vqe")) {
    NisqVqeJob job{vqe_from_json(*v), std::nullopt};
    if (const auto q = n.find("qem")) job.qem = qem_from_json(*q);
    return job;
  }
  NisqCircuitJob job;
  job.qem = qem_from_json(n.at("qem"));
  if (const auto g = n.find("gate_counts")) {
    job.gate_counts = gate_counts_from_json(*g);
    return job;
  }
  auto policy = UnknownGatePolicy::error;
  if (const auto u = n.find("unknown_gates")) {
    const auto s = u->as_string();
    if (s == "count_as_other") policy = UnknownGatePolicy::count_as_other;
    else if (s != "error") u->fail("unknown_gates must be error or count_as_other");
  }
  const auto file = base_dir / n.at("circuit_file").as_string();
  try {
    job.gate_counts = count_gates_circuit_text(read_text_file(file), policy);
  } catch (const ParseError& e) {
    throw ParseError(file.string() + ": " + e.what());
  }
  return job;
}

Json nisq_to_json(const NisqPayload& payload) {
  Json j;
  if (const auto* job = std::get_if<NisqCircuitJob>(&payload)) {
    j["gate_counts"] = gate_counts_to_json(job->gate_counts);
    j["qem"] = qem_to_json(job->qem);
  } else {
    const auto& vqe = std::get<NisqVqeJob>(payload);
    j["vqe"] = vqe_to_json(vqe.vqe);
    if (vqe.qem) j["qem"] = qem_to_json(*vqe.qem);
  }
  return j;
}

FtqcConfig ftqc_from_json(const Node& n) {
  n.only_keys({"logical", "code", "factory", "decoder", "rho", "cycle_energy_override"});
  FtqcConfig c;

  const auto lg = n.at("logical");
  lg.only_keys({"logical_qubits", "t_count", "clifford_count", "logical_depth", "spacetime_volume"});
  c.logical.logical_qubits = lg.at("logical_qubits").as_uint();
  c.logical.t_count = lg.at("t_count").as_uint();
  c.logical.clifford_count = lg.at("clifford_count").as_uint();
  c.logical.logical_depth = lg.at("logical_depth").as_uint();
  if (const auto v = lg.find("spacetime_volume")) c.logical.spacetime_volume_override = v->as_number();

  const auto code = n.at("code");
  code.only_keys({"p", "p_th", "target_pl", "prefactor_a", "d", "margin_steps"});
  c.code.p = code.at("p").as_number();
  c.code.p_th = code.at("p_th").as_number();
  c.code.target_pl = code.at("target_pl").as_number();
  if (const auto v = code.find("prefactor_a")) c.code.prefactor_a = v->as_number();
  if (const auto v = code.find("d")) c.code.d = v->as_uint32();
  if (const auto v = code.find("margin_steps")) c.code.margin_steps = v->as_uint32();

  const auto fac = n.at("factory");
  fac.only_keys({"protocol", "d_f", "cost_mode", "patch_cycles_per_t", "ratio_to_cycle",
                 "output_error"});
  const auto protocol_node = fac.at("protocol");
  const auto protocol = factory_protocol_from_string(protocol_node.as_string());
  if (!protocol) protocol_node.fail("protocol must be distillation or cultivation");
  c.factory = FactorySpec::defaults_for(*protocol);
  if (const auto v = fac.find("d_f")) c.factory.d_f = v->as_uint32();
  if (const auto v = fac.find("cost_mode")) {
    const auto mode = magic_cost_mode_from_string(v->as_string());
    if (!mode) v->fail("cost_mode must be ratio or patch_cycles");
    c.factory.cost_mode = *mode;
  }
  if (const auto v = fac.find("patch_cycles_per_t")) c.factory.patch_cycles_per_t = v->as_number();
  if (const auto v = fac.find("ratio_to_cycle")) c.factory.ratio_to_cycle = v->as_number();
  if (const auto v = fac.find("output_error")) c.factory.output_error = v->as_number();

  const auto dec = n.at("decoder");
  const auto kind = decoder_kind_from_string(dec.as_string());
  if (!kind) dec.fail("decoder must be BPOSD or MWPM");
  c.decoder = *kind;
  if (const auto v = n.find("rho")) c.rho = v->as_number();
  if (const auto v = n.find("cycle_energy_override")) c.cycle_energy_override = v->as_number();
  return c;
}

Json ftqc_to_json(const FtqcConfig& c) {
  Json j;
  Json& lg = j["logical"];
  lg["logical_qubits"] = c.logical.logical_qubits;
  lg["t_count"] = c.logical.t_count;
  lg["clifford_count"] = c.logical.clifford_count;
  lg["logical_depth"] = c.logical.logical_depth;
  if (c.logical.spacetime_volume_override)
    lg["spacetime_volume"] = *c.logical.spacetime_volume_override;

  Json& code = j["code"];
  code["p"] = c.code.p;
  code["p_th"] = c.code.p_th;
  code["target_pl"] = c.code.target_pl;
  code["prefactor_a"] = c.code.prefactor_a;
  if (c.code.d) code["d"] = *c.code.d;
  code["margin_steps"] = c.code.margin_steps;

  Json& fac = j["factory"];
  fac["protocol"] = std::string(to_string(c.factory.protocol));
  fac["d_f"] = c.factory.d_f;
  fac["cost_mode"] = std::string(to_string(c.factory.cost_mode));
  fac["patch_cycles_per_t"] = c.factory.patch_cycles_per_t;
  fac["ratio_to_cycle"] = c.factory.ratio_to_cycle;
  fac["output_error"] = c.factory.output_error;

  j["decoder"] = std::string(to_string(c.decoder));
  j["rho"] = c.rho;
  if (c.cycle_energy_override) j["cycle_energy_override"] = *c.cycle_energy_override;
  return j;
}

ClassicalOverheadSpec classical_from_json(const Node& n, const std::filesystem::path& base_dir) {
  n.only_keys({"it_series", "counter_file", "pue", "shared_joules", "net_wan_joules",
               "storage_joules"});
  ClassicalOverheadSpec c;
  if (const auto series = n.find("it_series")) {
    series->for_each_element([&](const Node& s) {
      s.only_keys({"label", "samples"});
      PowerSeries ps;
      ps.label = s.at("label").as_string();
      s.at("samples").for_each_element([&](const Node& sample) {
        sample.expect_array();
        if (sample.size() != 2) sample.fail("expected [t_seconds, power_watts]");
        ps.samples.push_back({sample.element(0).as_number(), sample.element(1).as_number()});
      });
      c.it_series.push_back(std::move(ps));
    });
  }
  if (const auto file = n.find("counter_file")) {
    const auto path = base_dir / file->as_string();
    try {
      for (auto& s : parse_power_counters(read_text_file(path))) c.it_series.push_back(std::move(s));
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ": " + e.what());
    }
  }
  if (const auto pue = n.find("pue")) {
    c.pue.intervals.clear();
    pue->for_each_element([&](const Node& iv) {
      iv.expect_array();
      if (iv.size() != 2) iv.fail("expected [t_start_seconds, pue]");
      c.pue.intervals.push_back({iv.element(0).as_number(), iv.element(1).as_number()});
    });
  }
  if (const auto v = n.find("shared_joules")) c.shared_joules = v->as_number();
  if (const auto v = n.find("net_wan_joules")) c.net_wan_joules = v->as_number();
  if (const auto v = n.find("storage_joules")) c.storage_joules = v->as_number();
  return c;
}

Json classical_to_json(const ClassicalOverheadSpec& c) {
  Json j;
  j["it_series"] = Json::array();
  for (const auto& s : c.it_series) {
    Json series;
    series["label"] = s.label;
    series["samples"] = Json::array();
    for (const auto& sample : s.samples)
      series["samples"].push_back(Json::array({sample.t_seconds, sample.power_watts}));
    j["it_series"].push_back(std::move(series));
  }
  j["pue"] = Json::array();
  for (const auto& iv : c.pue.intervals)
    j["pue"].push_back(Json::array({iv.t_start_seconds, iv.pue}));
  j["shared_joules"] = c.shared_joules;
  j["net_wan_joules"] = c.net_wan_joules;
  j["storage_joules"] = c.storage_joules;
  return j;
}

}  // namespace

WorkloadSpec workload_from_json(const Node& root, const std::filesystem::path& base_dir) {
  root.only_keys({"name", "regime", "technology", "qpu_seconds", "nisq", "ftqc", "classical"});
  WorkloadSpec spec;
  spec.name = root.at("name").as_string();
  const auto regime_node = root.at("regime");
  const auto regime = regime_from_string(regime_node.as_string());
  if (!regime) regime_node.fail("regime must be nisq or ftqc");
  spec.regime = *regime;
  if (root.has("technology")) spec.technology = root.at("technology").as_string();
  if (const auto v = root.find("qpu_seconds")) spec.qpu_seconds = v->as_number();
  if (const auto v = root.find("nisq")) spec.nisq = nisq_from_json(*v, base_dir);
  if (const auto v = root.find("ftqc")) spec.ftqc = ftqc_from_json(*v);
  if (const auto v = root.find("classical")) spec.classical = classical_from_json(*v, base_dir);
  spec.validate();
  return spec;
}

Json workload_to_json(const WorkloadSpec& spec) {
  Json j;
  j["name"] = spec.name;
  j["regime"] = std::string(to_string(spec.regime));
  j["technology"] = spec.technology;
  if (spec.qpu_seconds) j["qpu_seconds"] = *spec.qpu_seconds;
  if (spec.nisq) j["nisq"] = nisq_to_json(*spec.nisq);
  if (spec.ftqc) j["ftqc"] = ftqc_to_json(*spec.ftqc);
  if (spec.classical) j["classical"] = classical_to_json(*spec.classical);
  return j;
}

WorkloadSpec parse_workload(std::string_view text, const std::filesystem::path& base_dir) {
  const auto doc = json_util::parse_document(text, "workload");
  return workload_from_json(Node(doc, ""), base_dir);
}

std::string render_workload(const WorkloadSpec& spec) {
  return workload_to_json(spec).dump(2) + "\n";
}

WorkloadSpec load_workload(const std::filesystem::path& path) {
  return parse_workload(read_text_file(path), path.parent_path());
}

}  // namespace qenergy
