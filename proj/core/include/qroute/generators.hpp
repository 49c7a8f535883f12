#pragma once

#include "qroute/circuit.hpp"

#include <cstdint>

namespace qroute {

/// Layered random circuit: each layer shuffles the qubits into pair slots;
/// a slot becomes a CX on its pair with probability two_q_fraction, otherwise
/// a random single-qubit gate on the slot's first qubit. An odd qubit out
/// gets a single-qubit gate. Deterministic per seed.
[[nodiscard]] Circuit gen_random(int num_qubits, int depth, double two_q_fraction,
                                 std::uint64_t seed);

/// Textbook quantum Fourier transform without the terminal reversal swaps:
/// per qubit i one H followed by CP(pi/2^(j-i)) against every j > i.
/// Gate count is n(n+1)/2.
[[nodiscard]] Circuit gen_qft(int num_qubits);

/// Quantum-volume style circuit: each layer permutes the qubits and applies
/// an opaque two-qubit block to every adjacent pair of the permutation
/// (floor(n/2) per layer). Only the interaction structure is modeled.
[[nodiscard]] Circuit gen_quantum_volume(int num_qubits, int depth, std::uint64_t seed);

/// Ripple-carry adder on 2*bits + 2 qubits built from MAJ/UMA blocks, with
/// every Toffoli expanded into the standard 2H + 6CX + 7T/Tdg network so the
/// output contains only 1q/2q gates. Computes b <- a + b with carry-in at
/// qubit 0 and carry-out at qubit 2*bits + 1.
[[nodiscard]] Circuit gen_cuccaro_adder(int bits);

/// Register layout of gen_cuccaro_adder.
[[nodiscard]] constexpr QubitIndex adder_carry_in() { return 0; }
[[nodiscard]] constexpr QubitIndex adder_a(int i) { return static_cast<QubitIndex>(2 * i + 1); }
[[nodiscard]] constexpr QubitIndex adder_b(int i) { return static_cast<QubitIndex>(2 * i + 2); }
[[nodiscard]] constexpr QubitIndex adder_carry_out(int bits) {
  return static_cast<QubitIndex>(2 * bits + 1);
}

}  // namespace qroute
