#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qroute {

using QubitIndex = std::int32_t;
using GateId = std::int32_t;

enum class GateKind : std::uint8_t {
  H,
  X,
  T,
  Tdg,
  S,
  Sdg,
  CX,
  CP,
  CZ,
  Swap,
  Generic1Q,
  Generic2Q,
};

[[nodiscard]] constexpr bool is_two_qubit(GateKind kind) {
  switch (kind) {
    case GateKind::CX:
    case GateKind::CP:
    case GateKind::CZ:
    case GateKind::Swap:
    case GateKind::Generic2Q:
      return true;
    default:
      return false;
  }
}

/// Operand order is irrelevant to the gate's action (CZ, SWAP).
[[nodiscard]] constexpr bool is_symmetric(GateKind kind) {
  return kind == GateKind::CZ || kind == GateKind::Swap;
}

[[nodiscard]] constexpr bool is_parameterized(GateKind kind) {
  return kind == GateKind::CP;
}

[[nodiscard]] const char* gate_name(GateKind kind);

/// One gate of the circuit. Kept flat (no heap) so circuits with tens of
/// millions of gates stay cheap; the only parameterized kind (CP) carries
/// exactly one angle, stored inline. q1 is -1 for single-qubit gates.
/// A gate's id is its position in the owning circuit.
struct Gate {
  GateKind kind = GateKind::H;
  QubitIndex q0 = 0;
  QubitIndex q1 = -1;
  double param = 0.0;

  [[nodiscard]] static Gate one_q(GateKind kind, QubitIndex q);
  [[nodiscard]] static Gate two_q(GateKind kind, QubitIndex a, QubitIndex b);
  [[nodiscard]] static Gate cp(QubitIndex a, QubitIndex b, double theta);

  [[nodiscard]] bool two_qubit() const { return is_two_qubit(kind); }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered list of 1q/2q gates over virtual qubits [0, num_qubits).
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int num_qubits);

  /// Validates operand arity and range; throws std::invalid_argument.
  void append(const Gate& gate);

  [[nodiscard]] int num_qubits() const { return num_qubits_; }
  [[nodiscard]] std::size_t size() const { return gates_.size(); }
  [[nodiscard]] bool empty() const { return gates_.empty(); }
  [[nodiscard]] const Gate& gate(GateId id) const { return gates_[static_cast<std::size_t>(id)]; }
  [[nodiscard]] const std::vector<Gate>& gates() const { return gates_; }

  void reserve(std::size_t n) { gates_.reserve(n); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int num_qubits_ = 0;
  std::vector<Gate> gates_;
};

}  // namespace qroute
