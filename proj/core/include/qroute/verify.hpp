#pragma once

#include "qroute/circuit.hpp"
#include "qroute/router.hpp"
#include "qroute/topology.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qroute {

struct VerificationReport {
  bool legal = true;
  bool equivalent = true;
  /// (index into rc.gates, reason) of the first failed check.
  std::optional<std::pair<std::int64_t, std::string>> first_violation;
  std::optional<double> fidelity_overlap;

  [[nodiscard]] bool ok() const { return legal && equivalent; }
};

/// Every two-qubit output gate must address an edge of the topology.
[[nodiscard]] VerificationReport check_legality(const RoutedCircuit& rc, const Topology& t);

/// Replays the routed circuit from its declared initial placement: SWAPs
/// permute the tracking tables, every original-tagged gate must map back to
/// exactly its virtual operands (orderless for CZ/SWAP) and appear in an
/// order compatible with the original dependency DAG, each id exactly once.
[[nodiscard]] VerificationReport check_permutation_equivalence(const Circuit& original,
                                                               const RoutedCircuit& rc);

/// Incremental form of the permutation-replay check, for consuming step-mode
/// output without retaining it. feed() returns false once a violation is
/// recorded; finish() adds the everything-emitted-once check.
class ReplayChecker {
 public:
  ReplayChecker(const Circuit& original, Placement initial);

  bool feed(const RoutedGate& gate);
  [[nodiscard]] VerificationReport finish() const;
  [[nodiscard]] const Placement& placement() const { return placement_; }

 private:
  void violation(const std::string& reason);

  const Circuit& original_;
  Placement placement_;
  std::vector<std::pair<GateId, GateId>> preds_;  // immediate predecessor per operand
  std::vector<char> executed_;
  std::int64_t fed_ = 0;
  std::size_t emitted_ = 0;
  VerificationReport report_;
};

/// Dense statevector simulation of a plain circuit from |0...0>, little
/// endian (qubit q is bit q). Rejects opaque generic gates and circuits
/// beyond max_qubits.
[[nodiscard]] std::vector<std::complex<double>> simulate(const Circuit& c, int max_qubits = 20);

/// Simulates the original on virtual qubits and the routed circuit on
/// physical qubits, un-permutes the routed state by the final placement and
/// reports the squared overlap; equivalent iff it reaches 1 - 1e-9. Both
/// qubit counts must stay within max_qubits.
[[nodiscard]] VerificationReport statevector_oracle(const Circuit& original,
                                                    const RoutedCircuit& rc, int max_qubits = 10);

}  // namespace qroute
