#include "qroute/circuit.hpp"

#include <stdexcept>
#include <string>

namespace qroute {

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::CX: return "cx";
    case GateKind::CP: return "cp";
    case GateKind::CZ: return "cz";
    case GateKind::Swap: return "swap";
    case GateKind::Generic1Q: return "g1";
    case GateKind::Generic2Q: return "g2";
  }
  return "?";
}

Gate Gate::one_q(GateKind kind, QubitIndex q) {
  if (is_two_qubit(kind)) throw std::invalid_argument("one_q: two-qubit kind");
  return Gate{kind, q, -1, 0.0};
}

Gate Gate::two_q(GateKind kind, QubitIndex a, QubitIndex b) {
  if (!is_two_qubit(kind)) throw std::invalid_argument("two_q: single-qubit kind");
  if (is_parameterized(kind)) throw std::invalid_argument("two_q: kind requires an angle");
  if (a == b) throw std::invalid_argument("two_q: operands must be distinct");
  return Gate{kind, a, b, 0.0};
}

Gate Gate::cp(QubitIndex a, QubitIndex b, double theta) {
  if (a == b) throw std::invalid_argument("cp: operands must be distinct");
  return Gate{GateKind::CP, a, b, theta};
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0) throw std::invalid_argument("Circuit: negative qubit count");
}

void Circuit::append(const Gate& gate) {
  const auto check = [&](QubitIndex q) {
    if (q < 0 || q >= num_qubits_) {
      throw std::invalid_argument("Circuit::append: qubit " + std::to_string(q) +
                                  " out of range [0, " + std::to_string(num_qubits_) + ")");
    }
  };
  check(gate.q0);
  if (gate.two_qubit()) {
    check(gate.q1);
    if (gate.q0 == gate.q1) throw std::invalid_argument("Circuit::append: identical operands");
  } else if (gate.q1 != -1) {
    throw std::invalid_argument("Circuit::append: single-qubit gate with second operand");
  }
  if (!is_parameterized(gate.kind) && gate.param != 0.0) {
    throw std::invalid_argument("Circuit::append: parameter on non-parameterized kind");
  }
  gates_.push_back(gate);
}

}  // namespace qroute
