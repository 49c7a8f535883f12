#pragma once

#include "qroute/circuit.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qroute {

class QasmParseError : public std::runtime_error {
 public:
  QasmParseError(const std::string& what, int line, int col)
      : std::runtime_error("qasm:" + std::to_string(line) + ":" + std::to_string(col) +
                           ": " + what),
        line_(line),
        col_(col) {}

  [[nodiscard]] int line() const { return line_; }
  [[nodiscard]] int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// Parses the supported OpenQASM-2.0 subset: one quantum register, the gate
/// set of GateKind, `//` comments. Measurements and barriers are skipped and
/// reported through `warnings` when given. Classical control, multiple qregs
/// and gates on 3+ qubits are rejected.
[[nodiscard]] Circuit parse_qasm(std::string_view text,
                                 std::vector<std::string>* warnings = nullptr);

/// Byte-deterministic inverse of parse_qasm: parse_qasm(serialize_qasm(c)) == c.
[[nodiscard]] std::string serialize_qasm(const Circuit& circuit);

}  // namespace qroute
