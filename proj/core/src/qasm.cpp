#include "qroute/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <unordered_map>

namespace qroute {
namespace {

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  [[nodiscard]] bool eof() const { return pos >= text.size(); }
  [[nodiscard]] char peek() const { return text[pos]; }

  char advance() {
    const char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (!eof()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
        while (!eof() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  [[noreturn]] void fail(const std::string& what) const { throw QasmParseError(what, line, col); }

  void expect(char c) {
    skip_space_and_comments();
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  [[nodiscard]] bool try_consume(char c) {
    skip_space_and_comments();
    if (!eof() && peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  std::string identifier() {
    skip_space_and_comments();
    if (eof() || (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')) {
      fail("expected identifier");
    }
    std::string out;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      out.push_back(advance());
    }
    return out;
  }

  long integer() {
    skip_space_and_comments();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long value = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (advance() - '0');
    }
    return value;
  }

  double number() {
    skip_space_and_comments();
    const char* begin = text.data() + pos;
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) fail("expected number");
    for (const char* p = begin; p != end; ++p) advance();
    return value;
  }

  /// Angle grammar: ['-'] (num ['*' pi] | pi) ['/' num]
  double angle() {
    skip_space_and_comments();
    double sign = 1.0;
    if (try_consume('-')) sign = -1.0;
    skip_space_and_comments();
    double value = 0.0;
    if (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
      value = number();
      if (try_consume('*')) {
        const std::string id = identifier();
        if (id != "pi") fail("expected 'pi'");
        value *= std::numbers::pi;
      }
    } else {
      const std::string id = identifier();
      if (id != "pi") fail("expected number or 'pi'");
      value = std::numbers::pi;
    }
    if (try_consume('/')) value /= number();
    return sign * value;
  }
};

const std::unordered_map<std::string, GateKind>& name_to_kind() {
  static const std::unordered_map<std::string, GateKind> map = {
      {"h", GateKind::H},       {"x", GateKind::X},     {"t", GateKind::T},
      {"tdg", GateKind::Tdg},   {"s", GateKind::S},     {"sdg", GateKind::Sdg},
      {"cx", GateKind::CX},     {"cp", GateKind::CP},   {"cz", GateKind::CZ},
      {"swap", GateKind::Swap}, {"g1", GateKind::Generic1Q}, {"g2", GateKind::Generic2Q},
  };
  return map;
}

}  // namespace

Circuit parse_qasm(std::string_view text, std::vector<std::string>* warnings) {
  Scanner sc{text};

  sc.skip_space_and_comments();
  if (sc.identifier() != "OPENQASM") sc.fail("expected 'OPENQASM 2.0;' header");
  if (sc.number() != 2.0) sc.fail("unsupported OPENQASM version");
  sc.expect(';');

  std::string qreg_name;
  long qreg_size = 0;
  std::optional<Circuit> circuit;

  const auto warn = [&](const std::string& message) {
    if (warnings != nullptr) warnings->push_back(message);
  };

  while (true) {
    sc.skip_space_and_comments();
    if (sc.eof()) break;

    const int stmt_line = sc.line;
    const int stmt_col = sc.col;
    const std::string word = sc.identifier();

    if (word == "include") {
      sc.skip_space_and_comments();
      sc.expect('"');
      while (!sc.eof() && sc.peek() != '"') sc.advance();
      sc.expect('"');
      sc.expect(';');
      continue;
    }
    if (word == "qreg") {
      if (circuit.has_value()) throw QasmParseError("multiple quantum registers", stmt_line, stmt_col);
      qreg_name = sc.identifier();
      sc.expect('[');
      qreg_size = sc.integer();
      sc.expect(']');
      sc.expect(';');
      circuit.emplace(static_cast<int>(qreg_size));
      continue;
    }
    if (word == "creg") {
      sc.identifier();
      sc.expect('[');
      sc.integer();
      sc.expect(']');
      sc.expect(';');
      continue;
    }
    if (word == "measure") {
      while (!sc.eof() && sc.peek() != ';') sc.advance();
      sc.expect(';');
      warn("measurement ignored at line " + std::to_string(stmt_line));
      continue;
    }
    if (word == "barrier") {
      while (!sc.eof() && sc.peek() != ';') sc.advance();
      sc.expect(';');
      warn("barrier ignored at line " + std::to_string(stmt_line));
      continue;
    }
    if (word == "if") {
      throw QasmParseError("classical control unsupported", stmt_line, stmt_col);
    }

    // Gate statement.
    if (!circuit.has_value()) throw QasmParseError("gate before qreg declaration", stmt_line, stmt_col);

    if (word == "ccx" || word == "cswap") {
      throw QasmParseError("3-qubit gate unsupported", stmt_line, stmt_col);
    }
    const auto it = name_to_kind().find(word);
    if (it == name_to_kind().end()) {
      throw QasmParseError("unsupported gate name '" + word + "'", stmt_line, stmt_col);
    }
    const GateKind kind = it->second;

    double theta = 0.0;
    if (sc.try_consume('(')) {
      if (!is_parameterized(kind)) throw QasmParseError("gate '" + word + "' takes no parameter", stmt_line, stmt_col);
      theta = sc.angle();
      sc.expect(')');
    } else if (is_parameterized(kind)) {
      throw QasmParseError("gate '" + word + "' requires a parameter", stmt_line, stmt_col);
    }

    std::vector<QubitIndex> operands;
    do {
      const std::string reg = sc.identifier();
      if (reg != qreg_name) sc.fail("unknown register '" + reg + "'");
      sc.expect('[');
      const long index = sc.integer();
      sc.expect(']');
      if (index < 0 || index >= qreg_size) sc.fail("qubit index out of range");
      operands.push_back(static_cast<QubitIndex>(index));
    } while (sc.try_consume(','));
    sc.expect(';');

    if (operands.size() > 2) throw QasmParseError("3-qubit gate unsupported", stmt_line, stmt_col);
    const std::size_t arity = is_two_qubit(kind) ? 2 : 1;
    if (operands.size() != arity) {
      throw QasmParseError("gate '" + word + "' expects " + std::to_string(arity) + " operand(s)",
                           stmt_line, stmt_col);
    }

    try {
      if (arity == 1) {
        circuit->append(Gate::one_q(kind, operands[0]));
      } else if (kind == GateKind::CP) {
        circuit->append(Gate::cp(operands[0], operands[1], theta));
      } else {
        circuit->append(Gate::two_q(kind, operands[0], operands[1]));
      }
    } catch (const std::invalid_argument& e) {
      throw QasmParseError(e.what(), stmt_line, stmt_col);
    }
  }

  if (!circuit.has_value()) throw QasmParseError("missing qreg declaration", sc.line, sc.col);
  return *std::move(circuit);
}

std::string serialize_qasm(const Circuit& circuit) {
  std::string out;
  out.reserve(64 + circuit.size() * 16);
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(circuit.num_qubits()) + "];\n";

  char buffer[64];
  for (const Gate& g : circuit.gates()) {
    out += gate_name(g.kind);
    if (is_parameterized(g.kind)) {
      std::snprintf(buffer, sizeof(buffer), "(%.17g)", g.param);
      out += buffer;
    }
    out += " q[" + std::to_string(g.q0) + "]";
    if (g.two_qubit()) out += ",q[" + std::to_string(g.q1) + "]";
    out += ";\n";
  }
  return out;
}

}  // namespace qroute
