#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "qenergy/circuit.hpp"
#include "qenergy/error.hpp"
#include "util.hpp"

namespace qenergy {

namespace {

// qelib1.inc plus a few native gates that transpilers emit directly.
const std::unordered_map<std::string_view, unsigned>& gate_arity() {
  static const std::unordered_map<std::string_view, unsigned> table = {
      {"U", 1},     {"u", 1},      {"u0", 1},    {"u1", 1},     {"u2", 1},      {"u3", 1},
      {"p", 1},     {"id", 1},     {"x", 1},     {"y", 1},      {"z", 1},       {"h", 1},
      {"s", 1},     {"sdg", 1},    {"t", 1},     {"tdg", 1},    {"rx", 1},      {"ry", 1},
      {"rz", 1},    {"sx", 1},     {"sxdg", 1},  {"CX", 2},     {"cx", 2},      {"cy", 2},
      {"cz", 2},    {"ch", 2},     {"crx", 2},   {"cry", 2},    {"crz", 2},     {"cu1", 2},
      {"cp", 2},    {"cu3", 2},    {"cu", 2},    {"csx", 2},    {"swap", 2},    {"rxx", 2},
      {"rzz", 2},   {"ecr", 2},    {"iswap", 2}, {"ms", 2},     {"ccx", 3},     {"cswap", 3},
      {"rccx", 3},  {"rc3x", 4},   {"c3x", 4},   {"c3sqrtx", 4}, {"c4x", 5},
  };
  return table;
}

struct Register {
  std::uint64_t offset = 0;  // first global qubit index (quantum registers)
  std::uint64_t size = 0;
};

// A parsed operand: either one element or the whole register.
struct Operand {
  const Register* reg = nullptr;
  std::optional<std::uint64_t> index;
};

class CircuitCounter {
 public:
  explicit CircuitCounter(UnknownGatePolicy policy) : policy_(policy) {}

  void statement(std::string_view stmt, std::size_t line) {
    line_ = line;
    if (!saw_header_) {
      if (!stmt.starts_with("OPENQASM"))
        fail("expected 'OPENQASM 2.0' header before any statement");
      saw_header_ = true;
      return;
    }
    const auto [keyword, rest] = head_word(stmt);
    if (keyword == "OPENQASM") fail("duplicate OPENQASM header");
    if (keyword == "include") return;
    if (keyword == "qreg" || keyword == "creg") return declare(keyword == "qreg", rest);
    if (keyword == "gate" || keyword == "opaque") fail("custom gate definitions are not supported");
    if (keyword == "if") fail("classically controlled operations are not supported");
    if (keyword == "measure") return measure(rest);
    if (keyword == "barrier") return barrier(rest);
    if (keyword == "reset") return apply("reset", rest, 1);
    gate(stmt);
  }

  GateCounts finish() {
    if (!saw_header_) fail("missing 'OPENQASM 2.0' header");
    GateCounts out;
    out.counts = std::move(counts_);
    out.qubit_count = next_qubit_;
    out.depth = levels_.empty() ? 0 : *std::max_element(levels_.begin(), levels_.end());
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("line " + std::to_string(line_) + ": " + message);
  }

  static std::pair<std::string_view, std::string_view> head_word(std::string_view s) {
    std::size_t n = 0;
    while (n < s.size() && (std::isalnum(static_cast<unsigned char>(s[n])) || s[n] == '_')) ++n;
    return {s.substr(0, n), trim(s.substr(n))};
  }

  static bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

  std::uint64_t parse_index(std::string_view text) const {
    text = trim(text);
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      fail("malformed index '" + std::string(text) + "'");
    try {
      return std::stoull(std::string(text));
    } catch (const std::exception&) {
      fail("index out of range '" + std::string(text) + "'");
    }
  }

  // name[size]
  void declare(bool quantum, std::string_view rest) {
    const auto open = rest.find('[');
    const auto close = rest.find(']');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
        !trim(rest.substr(close + 1)).empty())
      fail("malformed register declaration");
    const std::string name(trim(rest.substr(0, open)));
    if (!is_identifier(name)) fail("malformed register name '" + name + "'");
    const auto size = parse_index(rest.substr(open + 1, close - open - 1));
    if (size == 0) fail("register '" + name + "' has size 0");
    if (qregs_.contains(name) || cregs_.contains(name)) fail("register '" + name + "' redeclared");
    if (quantum) {
      qregs_[name] = Register{next_qubit_, size};
      next_qubit_ = checked_add(next_qubit_, size);
      levels_.resize(next_qubit_, 0);
    } else {
      cregs_[name] = Register{0, size};
    }
  }

  Operand operand(std::string_view text, bool quantum) const {
    text = trim(text);
    const auto& regs = quantum ? qregs_ : cregs_;
    std::string name(text);
    std::optional<std::uint64_t> index;
    if (const auto open = text.find('['); open != std::string_view::npos) {
      const auto close = text.find(']');
      if (close == std::string_view::npos || close < open || close + 1 != text.size())
        fail("malformed operand '" + std::string(text) + "'");
      name = std::string(trim(text.substr(0, open)));
      index = parse_index(text.substr(open + 1, close - open - 1));
    }
    if (!is_identifier(name)) fail("malformed operand '" + std::string(text) + "'");
    const auto it = regs.find(name);
    if (it == regs.end())
      fail(std::string("undeclared ") + (quantum ? "quantum" : "classical") + " register '" +
           name + "'");
    if (index && *index >= it->second.size)
      fail("index " + std::to_string(*index) + " out of range for register '" + name + "'");
    return Operand{&it->second, index};
  }

  std::vector<Operand> operand_list(std::string_view text) const {
    std::vector<Operand> out;
    if (trim(text).empty()) fail("missing operands");
    for (auto part : split(text, ',')) out.push_back(operand(part, true));
    return out;
  }

  // Number of broadcast repetitions; whole-register operands must agree.
  std::uint64_t broadcast_width(const std::vector<Operand>& ops) const {
    std::uint64_t width = 1;
    bool seen = false;
    for (const auto& op : ops) {
      if (op.index) continue;
      if (seen && op.reg->size != width) fail("register operands of different sizes");
      width = op.reg->size;
      seen = true;
    }
    return width;
  }

  static std::uint64_t qubit_of(const Operand& op, std::uint64_t rep) {
    return op.reg->offset + (op.index ? *op.index : rep);
  }

  void apply(const std::string& name, std::string_view args, unsigned arity) {
    const auto ops = operand_list(args);
    if (ops.size() != arity)
      fail("gate '" + name + "' expects " + std::to_string(arity) + " operand(s), got " +
           std::to_string(ops.size()));
    const auto width = broadcast_width(ops);
    for (std::uint64_t rep = 0; rep < width; ++rep) {
      std::vector<std::uint64_t> qubits;
      for (const auto& op : ops) qubits.push_back(qubit_of(op, rep));
      std::sort(qubits.begin(), qubits.end());
      if (std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end())
        fail("gate '" + name + "' repeats a qubit operand");
      std::uint64_t level = 0;
      for (auto q : qubits) level = std::max(level, levels_[q]);
      for (auto q : qubits) levels_[q] = level + 1;
      counts_[name] = checked_add(counts_[name], 1);
    }
  }

  void measure(std::string_view rest) {
    const auto arrow = rest.find("->");
    if (arrow == std::string_view::npos) fail("measure requires '->'");
    const auto q = operand(rest.substr(0, arrow), true);
    const auto c = operand(rest.substr(arrow + 2), false);
    const auto q_width = q.index ? 1 : q.reg->size;
    const auto c_width = c.index ? 1 : c.reg->size;
    if (q_width != c_width) fail("measure operands have different sizes");
    for (std::uint64_t rep = 0; rep < q_width; ++rep) {
      auto& level = levels_[qubit_of(q, rep)];
      level += 1;
      counts_["measure"] = checked_add(counts_["measure"], 1);
    }
  }

  void barrier(std::string_view rest) {
    std::vector<std::uint64_t> qubits;
    for (const auto& op : operand_list(rest)) {
      if (op.index) {
        qubits.push_back(qubit_of(op, 0));
      } else {
        for (std::uint64_t i = 0; i < op.reg->size; ++i) qubits.push_back(op.reg->offset + i);
      }
    }
    std::uint64_t level = 0;
    for (auto q : qubits) level = std::max(level, levels_[q]);
    for (auto q : qubits) levels_[q] = level;
  }

  void gate(std::string_view stmt) {
    const auto [name, after_name] = head_word(stmt);
    if (name.empty() || !is_identifier(name)) fail("malformed statement '" + std::string(stmt) + "'");
    std::string_view args = after_name;
    if (!args.empty() && args.front() == '(') {
      int depth = 0;
      std::size_t i = 0;
      for (; i < args.size(); ++i) {
        if (args[i] == '(') ++depth;
        if (args[i] == ')' && --depth == 0) break;
      }
      if (depth != 0) fail("unbalanced parentheses in '" + std::string(stmt) + "'");
      args = trim(args.substr(i + 1));
    }
    const auto& arity = gate_arity();
    if (const auto it = arity.find(name); it != arity.end()) {
      apply(std::string(name), args, it->second);
      return;
    }
    if (policy_ == UnknownGatePolicy::error) fail("unknown gate '" + std::string(name) + "'");
    // Arity of an unknown gate is whatever it was applied to.
    const auto n_ops = static_cast<unsigned>(operand_list(args).size());
    apply("other", args, n_ops);
  }

  UnknownGatePolicy policy_;
  std::size_t line_ = 0;
  bool saw_header_ = false;
  std::map<std::string, Register, std::less<>> qregs_;
  std::map<std::string, Register, std::less<>> cregs_;
  std::uint64_t next_qubit_ = 0;
  std::vector<std::uint64_t> levels_;
  std::map<std::string, std::uint64_t> counts_;
};

}  // namespace

GateCounts count_gates_circuit_text(std::string_view text, UnknownGatePolicy policy) {
  CircuitCounter counter(policy);
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (const auto comment = line.find("//"); comment != std::string_view::npos)
      line = line.substr(0, comment);
    for (auto stmt : split(line, ';')) {
      stmt = trim(stmt);
      if (!stmt.empty()) counter.statement(stmt, line_no);
    }
  }
  return counter.finish();
}

}  // namespace qenergy
