#pragma once

#include "qroute/circuit.hpp"
#include "qroute/router.hpp"
#include "qroute/topology.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qroute {

/// How a SWAP enters the success-probability product: one edge-fidelity
/// factor, or cubed for the 3-CX hardware decomposition.
enum class SwapCostMode : std::uint8_t { SingleFactor, ThreeCx };

[[nodiscard]] const char* swap_cost_mode_name(SwapCostMode mode);

struct MetricsReport {
  std::size_t swaps_added = 0;
  std::int64_t depth = 0;
  double esp = 1.0;
  std::optional<std::int64_t> inter_core_uses;  // only for core-labelled topologies
  double compile_time_s = 0.0;
  int num_virtual = 0;
  int num_physical = 0;
};

/// Single-pass metric accumulation over an output gate stream; lets huge
/// routed circuits be measured without retaining them. ESP is accumulated in
/// log space so million-gate products do not underflow prematurely.
class StreamingMetrics {
 public:
  StreamingMetrics(const Topology& t, SwapCostMode mode = SwapCostMode::SingleFactor);

  void feed(const RoutedGate& gate);

  [[nodiscard]] std::int64_t depth() const { return depth_; }
  [[nodiscard]] double esp() const;
  [[nodiscard]] double log_esp() const { return log_esp_; }
  [[nodiscard]] std::int64_t swaps() const { return swaps_; }
  [[nodiscard]] std::int64_t inter_core_uses() const { return inter_core_; }
  [[nodiscard]] std::int64_t total_gates() const { return total_; }

 private:
  const Topology& topo_;
  SwapCostMode mode_;
  std::vector<std::int64_t> qubit_layer_;
  std::int64_t depth_ = 0;
  std::int64_t swaps_ = 0;
  std::int64_t inter_core_ = 0;
  std::int64_t total_ = 0;
  double log_esp_ = 0.0;
};

/// ASAP depth of the routed gate sequence: unit gate weight, each gate one
/// layer after the latest predecessor on its physical operands.
[[nodiscard]] std::int64_t depth(const RoutedCircuit& rc);

/// ASAP depth of a plain circuit over its virtual qubits.
[[nodiscard]] std::int64_t circuit_depth(const Circuit& c);

/// Estimated success probability: product over output gates of the used
/// edge's fidelity (1q gates count 1.0).
[[nodiscard]] double esp(const RoutedCircuit& rc, const Topology& t,
                         SwapCostMode mode = SwapCostMode::SingleFactor);

/// Output gates (originals and SWAPs) whose endpoints lie in different
/// cores. Throws std::invalid_argument when the topology has no core labels.
[[nodiscard]] std::int64_t inter_core_uses(const RoutedCircuit& rc, const Topology& t);

/// One design-space configuration with raw and normalized metrics. Each
/// normalized metric lies in [1, 2]; fom = 1 / (time' * depth' * swaps').
struct FomRow {
  int k = 0;
  double p = 0.0;
  double time_s = 0.0;
  double depth = 0.0;
  double swaps = 0.0;
  double norm_time = 1.0;
  double norm_depth = 1.0;
  double norm_swaps = 1.0;
  double fom = 1.0;
};

struct FomTable {
  std::vector<FomRow> rows;
  std::size_t best_index = 0;  // argmax fom, first on ties
};

struct FomInput {
  int k = 0;
  double p = 0.0;
  double time_s = 0.0;
  double depth = 0.0;
  double swaps = 0.0;
};

/// Min-max normalizes each metric across rows to [1, 2] (a constant column
/// normalizes to 1) and combines them into the figure of merit. All raw
/// values must be positive.
[[nodiscard]] FomTable figure_of_merit(const std::vector<FomInput>& rows);

/// Min-max normalization to [0, 1]; a constant series maps to all 0.5.
[[nodiscard]] std::vector<double> normalize_series(const std::vector<double>& values);

}  // namespace qroute
