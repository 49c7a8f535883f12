#include "qroute/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qroute {

const char* swap_cost_mode_name(SwapCostMode mode) {
  return mode == SwapCostMode::SingleFactor ? "single-factor" : "three-cx";
}

StreamingMetrics::StreamingMetrics(const Topology& t, SwapCostMode mode)
    : topo_(t), mode_(mode), qubit_layer_(static_cast<std::size_t>(t.num_qubits()), 0) {}

void StreamingMetrics::feed(const RoutedGate& gate) {
  ++total_;
  auto& l0 = qubit_layer_[static_cast<std::size_t>(gate.p0)];
  if (gate.p1 < 0) {
    l0 += 1;
    depth_ = std::max(depth_, l0);
    return;
  }
  auto& l1 = qubit_layer_[static_cast<std::size_t>(gate.p1)];
  const std::int64_t layer = std::max(l0, l1) + 1;
  l0 = layer;
  l1 = layer;
  depth_ = std::max(depth_, layer);

  const auto e = topo_.edge_between(gate.p0, gate.p1);
  if (e.has_value()) {
    const double f = topo_.edge(*e).fidelity;
    if (gate.is_swap()) {
      ++swaps_;
      log_esp_ += (mode_ == SwapCostMode::ThreeCx ? 3.0 : 1.0) * std::log(f);
    } else {
      log_esp_ += std::log(f);
    }
    if (topo_.inter_core_edge(*e)) ++inter_core_;
  } else if (gate.is_swap()) {
    ++swaps_;  // illegal placement; legality is check_legality's job
  }
}

double StreamingMetrics::esp() const { return std::exp(log_esp_); }

std::int64_t depth(const RoutedCircuit& rc) {
  std::vector<std::int64_t> layer(static_cast<std::size_t>(rc.num_physical), 0);
  std::int64_t depth = 0;
  for (const RoutedGate& g : rc.gates) {
    auto& l0 = layer[static_cast<std::size_t>(g.p0)];
    if (g.p1 < 0) {
      l0 += 1;
      depth = std::max(depth, l0);
    } else {
      auto& l1 = layer[static_cast<std::size_t>(g.p1)];
      const std::int64_t next = std::max(l0, l1) + 1;
      l0 = next;
      l1 = next;
      depth = std::max(depth, next);
    }
  }
  return depth;
}

std::int64_t circuit_depth(const Circuit& c) {
  std::vector<std::int64_t> layer(static_cast<std::size_t>(c.num_qubits()), 0);
  std::int64_t depth = 0;
  for (const Gate& g : c.gates()) {
    auto& l0 = layer[static_cast<std::size_t>(g.q0)];
    if (!g.two_qubit()) {
      l0 += 1;
      depth = std::max(depth, l0);
    } else {
      auto& l1 = layer[static_cast<std::size_t>(g.q1)];
      const std::int64_t next = std::max(l0, l1) + 1;
      l0 = next;
      l1 = next;
      depth = std::max(depth, next);
    }
  }
  return depth;
}

double esp(const RoutedCircuit& rc, const Topology& t, SwapCostMode mode) {
  StreamingMetrics acc(t, mode);
  for (const RoutedGate& g : rc.gates) acc.feed(g);
  return acc.esp();
}

std::int64_t inter_core_uses(const RoutedCircuit& rc, const Topology& t) {
  if (!t.has_cores()) throw std::invalid_argument("inter_core_uses: topology has no cores");
  StreamingMetrics acc(t);
  for (const RoutedGate& g : rc.gates) acc.feed(g);
  return acc.inter_core_uses();
}

namespace {

/// Maps raw values to [1, 2]; a degenerate column maps to 1.
void normalize_column(std::vector<FomRow>& rows, double FomRow::* raw, double FomRow::* norm) {
  double lo = rows.front().*raw;
  double hi = lo;
  for (const FomRow& r : rows) {
    lo = std::min(lo, r.*raw);
    hi = std::max(hi, r.*raw);
  }
  for (FomRow& r : rows) {
    r.*norm = (hi > lo) ? 1.0 + (r.*raw - lo) / (hi - lo) : 1.0;
  }
}

}  // namespace

FomTable figure_of_merit(const std::vector<FomInput>& inputs) {
  if (inputs.empty()) throw std::invalid_argument("figure_of_merit: no rows");
  FomTable table;
  table.rows.reserve(inputs.size());
  for (const FomInput& in : inputs) {
    if (!(in.time_s > 0.0) || !(in.depth > 0.0) || !(in.swaps > 0.0)) {
      throw std::invalid_argument("figure_of_merit: raw metrics must be positive");
    }
    FomRow row;
    row.k = in.k;
    row.p = in.p;
    row.time_s = in.time_s;
    row.depth = in.depth;
    row.swaps = in.swaps;
    table.rows.push_back(row);
  }

  normalize_column(table.rows, &FomRow::time_s, &FomRow::norm_time);
  normalize_column(table.rows, &FomRow::depth, &FomRow::norm_depth);
  normalize_column(table.rows, &FomRow::swaps, &FomRow::norm_swaps);

  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    FomRow& r = table.rows[i];
    r.fom = 1.0 / (r.norm_time * r.norm_depth * r.norm_swaps);
    if (r.fom > table.rows[table.best_index].fom) table.best_index = i;
  }
  return table;
}

std::vector<double> normalize_series(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("normalize_series: no values");
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  std::vector<double> out(values.size(), 0.5);
  if (hi > lo) {
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - lo) / (hi - lo);
  }
  return out;
}

}  // namespace qroute
