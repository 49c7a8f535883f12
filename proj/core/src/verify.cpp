#include "qroute/verify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qroute {
namespace {

using Amplitude = std::complex<double>;

struct StateVector {
  explicit StateVector(int num_qubits) : n(num_qubits), amps(std::size_t{1} << num_qubits) {
    amps[0] = 1.0;
  }

  int n;
  std::vector<Amplitude> amps;

  void apply_unitary_1q(int q, Amplitude u00, Amplitude u01, Amplitude u10, Amplitude u11) {
    const std::size_t mask = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if ((i & mask) != 0) continue;
      const Amplitude a0 = amps[i];
      const Amplitude a1 = amps[i | mask];
      amps[i] = u00 * a0 + u01 * a1;
      amps[i | mask] = u10 * a0 + u11 * a1;
    }
  }

  void apply_phase_1q(int q, Amplitude phase) {
    const std::size_t mask = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if ((i & mask) != 0) amps[i] *= phase;
    }
  }

  void apply_x(int q) {
    const std::size_t mask = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if ((i & mask) == 0) std::swap(amps[i], amps[i | mask]);
    }
  }

  void apply_cx(int control, int target) {
    const std::size_t cm = std::size_t{1} << control;
    const std::size_t tm = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if ((i & cm) != 0 && (i & tm) == 0) std::swap(amps[i], amps[i | tm]);
    }
  }

  void apply_phase_11(int a, int b, Amplitude phase) {
    const std::size_t am = std::size_t{1} << a;
    const std::size_t bm = std::size_t{1} << b;
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if ((i & am) != 0 && (i & bm) != 0) amps[i] *= phase;
    }
  }

  void apply_swap(int a, int b) {
    const std::size_t am = std::size_t{1} << a;
    const std::size_t bm = std::size_t{1} << b;
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if ((i & am) != 0 && (i & bm) == 0) std::swap(amps[i], amps[(i & ~am) | bm]);
    }
  }

  void apply(GateKind kind, double param, int q0, int q1) {
    constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    switch (kind) {
      case GateKind::H:
        apply_unitary_1q(q0, inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2);
        break;
      case GateKind::X:
        apply_x(q0);
        break;
      case GateKind::T:
        apply_phase_1q(q0, std::polar(1.0, std::numbers::pi / 4.0));
        break;
      case GateKind::Tdg:
        apply_phase_1q(q0, std::polar(1.0, -std::numbers::pi / 4.0));
        break;
      case GateKind::S:
        apply_phase_1q(q0, Amplitude(0.0, 1.0));
        break;
      case GateKind::Sdg:
        apply_phase_1q(q0, Amplitude(0.0, -1.0));
        break;
      case GateKind::CX:
        apply_cx(q0, q1);
        break;
      case GateKind::CZ:
        apply_phase_11(q0, q1, -1.0);
        break;
      case GateKind::CP:
        apply_phase_11(q0, q1, std::polar(1.0, param));
        break;
      case GateKind::Swap:
        apply_swap(q0, q1);
        break;
      case GateKind::Generic1Q:
      case GateKind::Generic2Q:
        throw std::invalid_argument("simulate: opaque generic gate has no matrix");
    }
  }
};

std::vector<std::pair<GateId, GateId>> immediate_predecessors(const Circuit& c) {
  std::vector<std::pair<GateId, GateId>> preds(c.size(), {-1, -1});
  std::vector<GateId> last(static_cast<std::size_t>(c.num_qubits()), -1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gate(static_cast<GateId>(i));
    preds[i].first = last[static_cast<std::size_t>(g.q0)];
    last[static_cast<std::size_t>(g.q0)] = static_cast<GateId>(i);
    if (g.two_qubit()) {
      preds[i].second = last[static_cast<std::size_t>(g.q1)];
      last[static_cast<std::size_t>(g.q1)] = static_cast<GateId>(i);
    }
  }
  return preds;
}

}  // namespace

VerificationReport check_legality(const RoutedCircuit& rc, const Topology& t) {
  VerificationReport report;
  for (std::size_t i = 0; i < rc.gates.size(); ++i) {
    const RoutedGate& g = rc.gates[i];
    const bool in_range = g.p0 >= 0 && g.p0 < t.num_qubits() &&
                          (g.p1 < 0 || (g.p1 < t.num_qubits() && g.p1 != g.p0));
    if (!in_range) {
      report.legal = false;
      report.first_violation = {static_cast<std::int64_t>(i), "operand out of range"};
      return report;
    }
    if (g.p1 >= 0 && !t.connected(g.p0, g.p1)) {
      report.legal = false;
      report.first_violation = {static_cast<std::int64_t>(i),
                                "two-qubit gate on non-adjacent physical qubits"};
      return report;
    }
  }
  return report;
}

ReplayChecker::ReplayChecker(const Circuit& original, Placement initial)
    : original_(original),
      placement_(std::move(initial)),
      preds_(immediate_predecessors(original)),
      executed_(original.size(), 0) {}

void ReplayChecker::violation(const std::string& reason) {
  if (report_.equivalent) {
    report_.equivalent = false;
    report_.first_violation = {fed_, reason};
  }
}

bool ReplayChecker::feed(const RoutedGate& gate) {
  if (!report_.equivalent) return false;

  if (gate.is_swap()) {
    placement_.apply_swap(gate.p0, gate.p1);
    ++fed_;
    return true;
  }

  if (gate.original_id < 0 || static_cast<std::size_t>(gate.original_id) >= original_.size()) {
    throw std::invalid_argument("ReplayChecker: unknown gate id");
  }
  const auto id = static_cast<std::size_t>(gate.original_id);
  if (executed_[id]) {
    violation("gate id emitted twice");
    return false;
  }

  const auto [pred0, pred1] = preds_[id];
  if ((pred0 >= 0 && !executed_[static_cast<std::size_t>(pred0)]) ||
      (pred1 >= 0 && !executed_[static_cast<std::size_t>(pred1)])) {
    violation("gate emitted before a dependency");
    return false;
  }

  const Gate& g = original_.gate(gate.original_id);
  const QubitIndex v0 = placement_.virt_at(gate.p0);
  if (!g.two_qubit()) {
    if (gate.p1 >= 0 || v0 != g.q0) {
      violation("single-qubit gate on the wrong physical qubit");
      return false;
    }
  } else {
    const QubitIndex v1 = gate.p1 >= 0 ? placement_.virt_at(gate.p1) : Placement::kFree;
    const bool ordered_match = v0 == g.q0 && v1 == g.q1;
    const bool swapped_match = is_symmetric(g.kind) && v0 == g.q1 && v1 == g.q0;
    if (!ordered_match && !swapped_match) {
      violation("two-qubit gate operands map to the wrong virtual qubits");
      return false;
    }
  }

  executed_[id] = 1;
  ++emitted_;
  ++fed_;
  return true;
}

VerificationReport ReplayChecker::finish() const {
  VerificationReport report = report_;
  if (report.equivalent && emitted_ != original_.size()) {
    report.equivalent = false;
    report.first_violation = {fed_, "not every original gate was emitted"};
  }
  return report;
}

VerificationReport check_permutation_equivalence(const Circuit& original,
                                                 const RoutedCircuit& rc) {
  ReplayChecker checker(original, rc.initial_placement);
  for (const RoutedGate& g : rc.gates) {
    if (!checker.feed(g)) break;
  }
  return checker.finish();
}

std::vector<std::complex<double>> simulate(const Circuit& c, int max_qubits) {
  if (c.num_qubits() > max_qubits) throw std::invalid_argument("simulate: too many qubits");
  StateVector state(c.num_qubits());
  for (const Gate& g : c.gates()) state.apply(g.kind, g.param, g.q0, g.q1);
  return std::move(state.amps);
}

VerificationReport statevector_oracle(const Circuit& original, const RoutedCircuit& rc,
                                      int max_qubits) {
  if (original.num_qubits() > max_qubits || rc.num_physical > max_qubits) {
    throw std::invalid_argument("statevector_oracle: too many qubits");
  }

  StateVector virt(original.num_qubits());
  for (const Gate& g : original.gates()) virt.apply(g.kind, g.param, g.q0, g.q1);

  StateVector phys(rc.num_physical);
  for (const RoutedGate& g : rc.gates) {
    if (g.is_swap()) {
      phys.apply(GateKind::Swap, 0.0, g.p0, g.p1);
    } else {
      const Gate& src = original.gate(g.original_id);
      phys.apply(src.kind, src.param, g.p0, g.p1);
    }
  }

  // Un-permute by the final placement: virtual bit v of the reference state
  // lives at physical bit final(v); all spare physical qubits must be |0>.
  Amplitude overlap = 0.0;
  for (std::size_t x = 0; x < virt.amps.size(); ++x) {
    std::size_t y = 0;
    for (int v = 0; v < original.num_qubits(); ++v) {
      if ((x >> v) & 1U) {
        y |= std::size_t{1} << rc.final_placement.phys_of(v);
      }
    }
    overlap += std::conj(virt.amps[x]) * phys.amps[y];
  }

  VerificationReport report;
  report.fidelity_overlap = std::norm(overlap);
  report.equivalent = *report.fidelity_overlap >= 1.0 - 1e-9;
  if (!report.equivalent) {
    report.first_violation = {static_cast<std::int64_t>(rc.gates.size()),
                              "statevector overlap below threshold"};
  }
  return report;
}

}  // namespace qroute
