#pragma once

#include "qroute/circuit.hpp"
#include "qroute/op_dag.hpp"
#include "qroute/placement.hpp"
#include "qroute/rng.hpp"
#include "qroute/topology.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qroute {

enum class WeightMode : std::uint8_t {
  Halving,   // w(l) = 2^-l
  Diameter,  // w(l) = d^-l, d = topology diameter
};

[[nodiscard]] const char* weight_mode_name(WeightMode mode);

struct RouterConfig {
  int lookahead = 1;                          // k: DAG layers contributing forces
  double penalization = 0.0;                  // p: minimum coefficient a SWAP must reach
  double fidelity_exponent = 0.0;             // r: edge fidelity power in the coefficient
  WeightMode weight_mode = WeightMode::Diameter;
  std::uint64_t seed = 0;                     // drives the selection perturbation
  double perturb_rho = 0.05;                  // adjacent-exchange probability, < 1
  int stall_window = 64;                      // iterations without progress before escalation
  std::int64_t max_iterations = 0;            // hard cap; 0 = derived from circuit size
};

/// One output gate on physical qubits. original_id is the source gate's id,
/// or kSwapId for an inserted SWAP. p1 is -1 for single-qubit gates.
struct RoutedGate {
  static constexpr GateId kSwapId = -1;

  GateId original_id = kSwapId;
  QubitIndex p0 = 0;
  QubitIndex p1 = -1;

  [[nodiscard]] bool is_swap() const { return original_id == kSwapId; }
  friend bool operator==(const RoutedGate&, const RoutedGate&) = default;
};

/// Per-iteration slice of the output sequence: gates[first, first+executed)
/// are emitted originals, the following `swaps` entries the applied SWAPs.
struct IterationTrace {
  std::int64_t first = 0;
  std::int32_t executed = 0;
  std::int32_t swaps = 0;
};

struct RoutedCircuit {
  int num_virtual = 0;
  int num_physical = 0;
  std::vector<RoutedGate> gates;
  Placement initial_placement;
  Placement final_placement;
  std::vector<IterationTrace> iterations;
  std::size_t num_swaps = 0;

  [[nodiscard]] std::span<const RoutedGate> executed_in(const IterationTrace& it) const {
    return {gates.data() + it.first, static_cast<std::size_t>(it.executed)};
  }
  [[nodiscard]] std::span<const RoutedGate> swaps_in(const IterationTrace& it) const {
    return {gates.data() + it.first + it.executed, static_cast<std::size_t>(it.swaps)};
  }
};

/// Per-edge accumulated SWAP coefficients for one iteration. Sparse: only
/// edges that received a contribution are tracked; clear() undoes exactly
/// those.
class ForceField {
 public:
  explicit ForceField(std::size_t num_edges)
      : coefficients_(num_edges, 0.0), touched_flag_(num_edges, 0) {}

  void add(EdgeIndex e, double value) {
    const auto i = static_cast<std::size_t>(e);
    if (!touched_flag_[i]) {
      touched_flag_[i] = 1;
      touched_.push_back(e);
    }
    coefficients_[i] += value;
  }

  [[nodiscard]] double coefficient(EdgeIndex e) const {
    return coefficients_[static_cast<std::size_t>(e)];
  }
  /// Edges with at least one contribution, in first-touch order.
  [[nodiscard]] const std::vector<EdgeIndex>& touched() const { return touched_; }

  void clear() {
    for (const EdgeIndex e : touched_) {
      coefficients_[static_cast<std::size_t>(e)] = 0.0;
      touched_flag_[static_cast<std::size_t>(e)] = 0;
    }
    touched_.clear();
  }

 private:
  std::vector<double> coefficients_;
  std::vector<char> touched_flag_;
  std::vector<EdgeIndex> touched_;
};

/// Attraction force pair of a two-qubit gate under the current placement:
/// each endpoint is pulled straight toward the other, f_qA = -f_qB.
[[nodiscard]] std::pair<Vec2, Vec2> attraction_force(const Placement& pi, const Topology& t,
                                                     const Gate& gate);

/// Lookahead decay: halving 2^-l or diameter d^-l.
[[nodiscard]] double layer_weight(int layer, int diameter, WeightMode mode);

/// Accumulates, for every two-qubit gate in layers l <= k, the dot product of
/// its endpoint forces with every incident edge, weighted by layer_weight and
/// the edge fidelity raised to cfg.fidelity_exponent. Single-qubit gates
/// contribute nothing.
[[nodiscard]] ForceField accumulate_coefficients(const OpDag& dag, const Placement& pi,
                                                 const Topology& t, const RouterConfig& cfg);

/// Greedy conflict-free SWAP selection: candidate edges with coefficient >= p
/// sorted by descending coefficient (ties to the smaller edge index), order
/// perturbed by one left-to-right pass of adjacent exchanges with probability
/// rho, then scanned accepting edges whose endpoints are still untouched.
/// SWAPs between two unoccupied physical qubits are skipped.
[[nodiscard]] std::vector<EdgeIndex> select_swaps(const ForceField& field, const Placement& pi,
                                                  const Topology& t, const RouterConfig& cfg,
                                                  Rng& rng);

/// Thrown when routing exceeds its iteration cap or reaches a provable fixed
/// point with gates still pending. Carries whatever had been routed for
/// inspection.
class RoutingError : public std::runtime_error {
 public:
  RoutingError(const std::string& what, std::int64_t iterations, std::size_t gates_left,
               RoutedCircuit partial)
      : std::runtime_error(what),
        iterations_(iterations),
        gates_left_(gates_left),
        partial_(std::move(partial)) {}

  [[nodiscard]] std::int64_t iterations() const { return iterations_; }
  [[nodiscard]] std::size_t gates_left() const { return gates_left_; }
  [[nodiscard]] const RoutedCircuit& partial() const { return partial_; }

 private:
  std::int64_t iterations_;
  std::size_t gates_left_;
  RoutedCircuit partial_;
};

/// Step-mode routing: one constructed session routes one circuit, yielding
/// after every iteration. In retain mode the full RoutedCircuit is assembled
/// and available from finish(); in streaming mode only the current
/// iteration's gates are kept, so arbitrarily large circuits route in O(n)
/// memory while the caller consumes each StepView.
class RouteSession {
 public:
  struct StepView {
    std::span<const RoutedGate> executed;
    std::span<const RoutedGate> swaps;
  };

  RouteSession(const Circuit& circuit, const Topology& t, Placement initial,
               const RouterConfig& cfg, bool retain = true);

  [[nodiscard]] bool done() const { return dag_.empty(); }
  StepView step();

  [[nodiscard]] const Placement& placement() const { return placement_; }
  [[nodiscard]] std::int64_t iterations_run() const { return iteration_count_; }
  [[nodiscard]] std::size_t swaps_added() const { return swaps_added_; }
  [[nodiscard]] std::size_t gates_emitted() const { return originals_emitted_; }

  /// Retain mode only; requires done().
  RoutedCircuit finish();

 private:
  void drain_executable();
  void unpark_after_swap(QubitIndex p);
  [[nodiscard]] RoutedCircuit snapshot_partial() const;
  [[noreturn]] void fail(const std::string& reason);

  const Circuit& circuit_;
  const Topology& topo_;
  RouterConfig cfg_;
  bool retain_;

  OpDag dag_;
  Placement placement_;
  Placement initial_placement_;
  Rng rng_;
  ForceField field_;
  std::vector<double> fidelity_pow_;  // F_e^r, fixed per run
  std::vector<double> weights_;       // w(l) for l = 0..k

  std::vector<RoutedGate> gates_;
  std::vector<IterationTrace> trace_;
  std::vector<GateId> pending_;               // ready gates to (re)examine
  std::vector<GateId> parked_;                // per virtual qubit: blocked ready gate
  std::vector<std::vector<GateId>> fronts_;   // reused layer buffers

  std::int64_t iteration_count_ = 0;
  std::int64_t max_iterations_ = 0;
  std::size_t originals_emitted_ = 0;
  std::size_t swaps_added_ = 0;
  int stall_ = 0;
  double rho_active_ = 0.0;
  std::int32_t executed_this_step_ = 0;
};

/// Runs the full routing pass: drain executable gates, accumulate forces over
/// layers l <= k, greedily apply a conflict-free SWAP set, repeat until the
/// DAG empties. Deterministic for identical inputs and seed.
[[nodiscard]] RoutedCircuit route(const Circuit& circuit, const Topology& t, Placement initial,
                                  const RouterConfig& cfg);

}  // namespace qroute
