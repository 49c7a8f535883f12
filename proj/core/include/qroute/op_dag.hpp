#pragma once

#include "qroute/circuit.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qroute {

/// Gate-dependency DAG over a circuit: consecutive gates sharing a qubit are
/// chained by an immediate-predecessor edge. Nodes with in-degree 0 form the
/// ready set; the layer index of a remaining gate is 0 if it is ready and
/// otherwise 1 + the maximum layer among its predecessors, always relative to
/// the residual DAG.
///
/// Mutable single-owner structure: one routing run drives one OpDag.
class OpDag {
 public:
  explicit OpDag(const Circuit& circuit);

  [[nodiscard]] std::size_t total_gates() const { return nodes_.size(); }
  [[nodiscard]] std::size_t remaining() const { return remaining_; }
  [[nodiscard]] bool empty() const { return remaining_ == 0; }

  /// Current ready set. Order is deterministic (a function of the removal
  /// history), not sorted.
  [[nodiscard]] const std::vector<GateId>& ready() const { return ready_; }
  [[nodiscard]] bool is_ready(GateId g) const { return ready_pos_[static_cast<std::size_t>(g)] >= 0; }
  [[nodiscard]] bool is_removed(GateId g) const {
    return ready_pos_[static_cast<std::size_t>(g)] == kRemoved;
  }

  /// Gate operands, mirrored from the source circuit so layer walks do not
  /// touch it. q1 is -1 for single-qubit gates.
  [[nodiscard]] QubitIndex q0(GateId g) const { return nodes_[static_cast<std::size_t>(g)].q0; }
  [[nodiscard]] QubitIndex q1(GateId g) const { return nodes_[static_cast<std::size_t>(g)].q1; }
  [[nodiscard]] bool two_qubit(GateId g) const { return nodes_[static_cast<std::size_t>(g)].q1 >= 0; }

  /// Removes a ready gate. Newly ready successors are appended to
  /// `newly_ready` when given. Throws std::logic_error if g is not ready.
  void remove(GateId g, std::vector<GateId>* newly_ready = nullptr);

  /// Gates grouped by current layer index, layers 0..k (k+1 sets, trailing
  /// sets may be empty). Cost is proportional to the gates of those layers,
  /// not the whole DAG.
  [[nodiscard]] std::vector<std::vector<GateId>> front_layers(int k) const;
  void front_layers_into(int k, std::vector<std::vector<GateId>>& out) const;

  /// Layer index of every gate (-1 for removed gates). Full recompute; meant
  /// for inspection and as the correctness oracle for front_layers.
  [[nodiscard]] std::vector<std::int32_t> layers() const;

  /// Graphviz DOT rendering of the remaining DAG.
  [[nodiscard]] std::string to_dot(const Circuit& circuit) const;

 private:
  static constexpr std::int32_t kRemoved = -2;
  static constexpr std::int32_t kWaiting = -1;

  struct Node {
    GateId succ0 = -1;  // next gate on q0's chain
    GateId succ1 = -1;  // next gate on q1's chain (-1, or equal to succ0)
    QubitIndex q0 = 0;
    QubitIndex q1 = -1;
    std::int8_t preds = 0;
  };

  template <typename Fn>
  void for_each_successor(GateId g, Fn&& fn) const {
    const Node& node = nodes_[static_cast<std::size_t>(g)];
    if (node.succ0 >= 0) fn(node.succ0);
    if (node.succ1 >= 0 && node.succ1 != node.succ0) fn(node.succ1);
  }

  std::vector<Node> nodes_;
  std::vector<GateId> ready_;
  std::vector<std::int32_t> ready_pos_;  // position in ready_, kWaiting or kRemoved
  std::size_t remaining_ = 0;

  // Scratch for front_layers; epoch stamps avoid clearing between calls.
  mutable std::vector<std::uint32_t> epoch_;
  mutable std::vector<std::int8_t> resolved_;
  mutable std::uint32_t current_epoch_ = 0;
};

/// Builds the dependency DAG of a circuit.
[[nodiscard]] inline OpDag build_dag(const Circuit& circuit) { return OpDag(circuit); }

}  // namespace qroute
