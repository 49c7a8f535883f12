#include "qroute/generators.hpp"

#include "qroute/rng.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qroute {
namespace {

constexpr std::array<GateKind, 6> kOneQubitPool = {
    GateKind::H, GateKind::X, GateKind::T, GateKind::Tdg, GateKind::S, GateKind::Sdg,
};

void check_positive(int value, const char* what) {
  if (value < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

}  // namespace

Circuit gen_random(int num_qubits, int depth, double two_q_fraction, std::uint64_t seed) {
  if (num_qubits < 2) throw std::invalid_argument("gen_random: need at least 2 qubits");
  check_positive(depth, "depth");
  if (two_q_fraction < 0.0 || two_q_fraction > 1.0) {
    throw std::invalid_argument("gen_random: two_q_fraction outside [0, 1]");
  }

  Rng rng(seed);
  Circuit circuit(num_qubits);
  circuit.reserve(static_cast<std::size_t>(depth) * ((num_qubits + 1) / 2));

  std::vector<QubitIndex> order(static_cast<std::size_t>(num_qubits));
  std::iota(order.begin(), order.end(), 0);

  for (int layer = 0; layer < depth; ++layer) {
    rng.shuffle(order);
    int i = 0;
    for (; i + 1 < num_qubits; i += 2) {
      if (rng.chance(two_q_fraction)) {
        circuit.append(Gate::two_q(GateKind::CX, order[i], order[i + 1]));
      } else {
        circuit.append(Gate::one_q(kOneQubitPool[rng.below(kOneQubitPool.size())], order[i]));
      }
    }
    if (i < num_qubits) {
      circuit.append(Gate::one_q(kOneQubitPool[rng.below(kOneQubitPool.size())], order[i]));
    }
  }
  return circuit;
}

Circuit gen_qft(int num_qubits) {
  check_positive(num_qubits, "num_qubits");
  Circuit circuit(num_qubits);
  circuit.reserve(static_cast<std::size_t>(num_qubits) * (num_qubits + 1) / 2);
  for (int i = 0; i < num_qubits; ++i) {
    circuit.append(Gate::one_q(GateKind::H, i));
    for (int j = i + 1; j < num_qubits; ++j) {
      circuit.append(Gate::cp(i, j, std::numbers::pi * std::exp2(static_cast<double>(i - j))));
    }
  }
  return circuit;
}

Circuit gen_quantum_volume(int num_qubits, int depth, std::uint64_t seed) {
  if (num_qubits < 2) throw std::invalid_argument("gen_quantum_volume: need at least 2 qubits");
  check_positive(depth, "depth");

  Rng rng(seed);
  Circuit circuit(num_qubits);
  circuit.reserve(static_cast<std::size_t>(depth) * (num_qubits / 2));

  std::vector<QubitIndex> perm(static_cast<std::size_t>(num_qubits));
  std::iota(perm.begin(), perm.end(), 0);

  for (int layer = 0; layer < depth; ++layer) {
    rng.shuffle(perm);
    for (int i = 0; i + 1 < num_qubits; i += 2) {
      circuit.append(Gate::two_q(GateKind::Generic2Q, perm[i], perm[i + 1]));
    }
  }
  return circuit;
}

namespace {

// qelib1.inc ccx network: 2 H, 6 CX, 7 T/Tdg.
void append_toffoli(Circuit& c, QubitIndex c1, QubitIndex c2, QubitIndex t) {
  c.append(Gate::one_q(GateKind::H, t));
  c.append(Gate::two_q(GateKind::CX, c2, t));
  c.append(Gate::one_q(GateKind::Tdg, t));
  c.append(Gate::two_q(GateKind::CX, c1, t));
  c.append(Gate::one_q(GateKind::T, t));
  c.append(Gate::two_q(GateKind::CX, c2, t));
  c.append(Gate::one_q(GateKind::Tdg, t));
  c.append(Gate::two_q(GateKind::CX, c1, t));
  c.append(Gate::one_q(GateKind::T, c2));
  c.append(Gate::one_q(GateKind::T, t));
  c.append(Gate::one_q(GateKind::H, t));
  c.append(Gate::two_q(GateKind::CX, c1, c2));
  c.append(Gate::one_q(GateKind::T, c1));
  c.append(Gate::one_q(GateKind::Tdg, c2));
  c.append(Gate::two_q(GateKind::CX, c1, c2));
}

void append_maj(Circuit& c, QubitIndex carry, QubitIndex b, QubitIndex a) {
  c.append(Gate::two_q(GateKind::CX, a, b));
  c.append(Gate::two_q(GateKind::CX, a, carry));
  append_toffoli(c, carry, b, a);
}

void append_uma(Circuit& c, QubitIndex carry, QubitIndex b, QubitIndex a) {
  append_toffoli(c, carry, b, a);
  c.append(Gate::two_q(GateKind::CX, a, carry));
  c.append(Gate::two_q(GateKind::CX, carry, b));
}

}  // namespace

Circuit gen_cuccaro_adder(int bits) {
  check_positive(bits, "bits");
  Circuit circuit(2 * bits + 2);

  for (int i = 0; i < bits; ++i) {
    const QubitIndex carry = (i == 0) ? adder_carry_in() : adder_a(i - 1);
    append_maj(circuit, carry, adder_b(i), adder_a(i));
  }
  circuit.append(Gate::two_q(GateKind::CX, adder_a(bits - 1), adder_carry_out(bits)));
  for (int i = bits - 1; i >= 0; --i) {
    const QubitIndex carry = (i == 0) ? adder_carry_in() : adder_a(i - 1);
    append_uma(circuit, carry, adder_b(i), adder_a(i));
  }
  return circuit;
}

}  // namespace qroute
