#include "qroute/router.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qroute {
namespace {

constexpr double kEscalationFloor = 0.0125;  // seed value when escalating from rho = 0
constexpr double kEscalationCap = 0.5;

void accumulate_into(ForceField& field, const std::vector<std::vector<GateId>>& fronts,
                     const OpDag& dag, const Placement& pi, const Topology& t,
                     const std::vector<double>& weights, const std::vector<double>& fidelity_pow) {
  for (std::size_t l = 0; l < fronts.size(); ++l) {
    const double w = weights[l];
    for (const GateId id : fronts[l]) {
      if (!dag.two_qubit(id)) continue;  // 1q gates exert no pull

      const QubitIndex pa = pi.phys_of(dag.q0(id));
      const QubitIndex pb = pi.phys_of(dag.q1(id));
      const Vec2 ca = t.coord(pa);
      const Vec2 cb = t.coord(pb);
      const Vec2 force = cb - ca;

      for (const auto& [nbr, e] : t.adjacent(pa)) {
        const double along = static_cast<double>(dot(force, t.coord(nbr) - ca));
        field.add(e, along * w * fidelity_pow[static_cast<std::size_t>(e)]);
      }
      for (const auto& [nbr, e] : t.adjacent(pb)) {
        const double along = static_cast<double>(dot(-force, t.coord(nbr) - cb));
        field.add(e, along * w * fidelity_pow[static_cast<std::size_t>(e)]);
      }
    }
  }
}

std::vector<double> make_fidelity_pow(const Topology& t, double r) {
  std::vector<double> out(t.num_edges());
  for (std::size_t e = 0; e < t.num_edges(); ++e) {
    out[e] = std::pow(t.edge(static_cast<EdgeIndex>(e)).fidelity, r);
  }
  return out;
}

std::vector<double> make_weights(int k, int diameter, WeightMode mode) {
  std::vector<double> out(static_cast<std::size_t>(k) + 1);
  for (int l = 0; l <= k; ++l) out[static_cast<std::size_t>(l)] = layer_weight(l, diameter, mode);
  return out;
}

}  // namespace

const char* weight_mode_name(WeightMode mode) {
  return mode == WeightMode::Halving ? "halving" : "diameter";
}

std::pair<Vec2, Vec2> attraction_force(const Placement& pi, const Topology& t, const Gate& gate) {
  const Vec2 ca = t.coord(pi.phys_of(gate.q0));
  const Vec2 cb = t.coord(pi.phys_of(gate.q1));
  const Vec2 f = cb - ca;
  return {f, -f};
}

double layer_weight(int layer, int diameter, WeightMode mode) {
  if (mode == WeightMode::Halving) return std::exp2(static_cast<double>(-layer));
  return std::pow(static_cast<double>(diameter), static_cast<double>(-layer));
}

ForceField accumulate_coefficients(const OpDag& dag, const Placement& pi, const Topology& t,
                                   const RouterConfig& cfg) {
  ForceField field(t.num_edges());
  const auto fronts = dag.front_layers(cfg.lookahead);
  const auto weights = make_weights(cfg.lookahead, t.diameter(), cfg.weight_mode);
  const auto fidelity_pow = make_fidelity_pow(t, cfg.fidelity_exponent);
  accumulate_into(field, fronts, dag, pi, t, weights, fidelity_pow);
  return field;
}

std::vector<EdgeIndex> select_swaps(const ForceField& field, const Placement& pi,
                                    const Topology& t, const RouterConfig& cfg, Rng& rng) {
  std::vector<std::pair<double, EdgeIndex>> candidates;
  candidates.reserve(field.touched().size());
  for (const EdgeIndex e : field.touched()) {
    const double c = field.coefficient(e);
    if (c >= cfg.penalization) candidates.emplace_back(c, e);
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  });

  // Convergence randomization: one left-to-right pass of adjacent exchanges.
  for (std::size_t i = 0; i + 1 < candidates.size(); ++i) {
    if (rng.chance(cfg.perturb_rho)) std::swap(candidates[i], candidates[i + 1]);
  }

  std::vector<char> qubit_used(static_cast<std::size_t>(t.num_qubits()), 0);
  std::vector<EdgeIndex> accepted;
  for (const auto& [coef, e] : candidates) {
    const TopoEdge& edge = t.edge(e);
    if (qubit_used[static_cast<std::size_t>(edge.a)] || qubit_used[static_cast<std::size_t>(edge.b)]) {
      continue;
    }
    if (pi.virt_at(edge.a) == Placement::kFree && pi.virt_at(edge.b) == Placement::kFree) {
      continue;  // moving nothing onto nothing
    }
    qubit_used[static_cast<std::size_t>(edge.a)] = 1;
    qubit_used[static_cast<std::size_t>(edge.b)] = 1;
    accepted.push_back(e);
  }
  return accepted;
}

RouteSession::RouteSession(const Circuit& circuit, const Topology& t, Placement initial,
                           const RouterConfig& cfg, bool retain)
    : circuit_(circuit),
      topo_(t),
      cfg_(cfg),
      retain_(retain),
      dag_(circuit),
      placement_(std::move(initial)),
      rng_(cfg.seed),
      field_(t.num_edges()) {
  if (circuit_.num_qubits() > topo_.num_qubits()) {
    throw std::invalid_argument("route: circuit has more qubits than the topology");
  }
  if (placement_.num_virtual() != circuit_.num_qubits() ||
      placement_.num_physical() != topo_.num_qubits() || !placement_.consistent()) {
    throw std::invalid_argument("route: invalid initial placement");
  }
  if (cfg_.lookahead < 0) throw std::invalid_argument("route: lookahead must be >= 0");
  if (cfg_.perturb_rho < 0.0 || cfg_.perturb_rho >= 1.0) {
    throw std::invalid_argument("route: perturb_rho must lie in [0, 1)");
  }
  if (cfg_.stall_window < 1) throw std::invalid_argument("route: stall_window must be >= 1");

  initial_placement_ = placement_;
  rho_active_ = cfg_.perturb_rho;
  fidelity_pow_ = make_fidelity_pow(topo_, cfg_.fidelity_exponent);
  weights_ = make_weights(cfg_.lookahead, topo_.diameter(), cfg_.weight_mode);
  parked_.assign(static_cast<std::size_t>(circuit_.num_qubits()), -1);
  pending_.assign(dag_.ready().begin(), dag_.ready().end());
  max_iterations_ = cfg_.max_iterations > 0
                        ? cfg_.max_iterations
                        : 1000 + 200 * static_cast<std::int64_t>(circuit_.size());
}

void RouteSession::drain_executable() {
  std::size_t head = 0;
  while (head < pending_.size()) {
    const GateId id = pending_[head++];
    if (!dag_.two_qubit(id)) {
      gates_.push_back({id, placement_.phys_of(dag_.q0(id)), -1});
      ++originals_emitted_;
      ++executed_this_step_;
      dag_.remove(id, &pending_);
      continue;
    }
    const QubitIndex p0 = placement_.phys_of(dag_.q0(id));
    const QubitIndex p1 = placement_.phys_of(dag_.q1(id));
    if (topo_.connected(p0, p1)) {
      gates_.push_back({id, p0, p1});
      ++originals_emitted_;
      ++executed_this_step_;
      dag_.remove(id, &pending_);
    } else {
      parked_[static_cast<std::size_t>(dag_.q0(id))] = id;
      parked_[static_cast<std::size_t>(dag_.q1(id))] = id;
    }
  }
  pending_.clear();
}

void RouteSession::unpark_after_swap(QubitIndex p) {
  const QubitIndex v = placement_.virt_at(p);
  if (v == Placement::kFree) return;
  const GateId g = parked_[static_cast<std::size_t>(v)];
  if (g < 0) return;
  parked_[static_cast<std::size_t>(dag_.q0(g))] = -1;
  parked_[static_cast<std::size_t>(dag_.q1(g))] = -1;
  pending_.push_back(g);
}

RouteSession::StepView RouteSession::step() {
  if (done()) throw std::logic_error("RouteSession::step: routing already finished");
  if (!retain_) {
    gates_.clear();
  }
  const std::int64_t first = static_cast<std::int64_t>(gates_.size());
  executed_this_step_ = 0;

  drain_executable();

  std::int32_t applied = 0;
  if (!dag_.empty()) {
    dag_.front_layers_into(cfg_.lookahead, fronts_);
    field_.clear();
    accumulate_into(field_, fronts_, dag_, placement_, topo_, weights_, fidelity_pow_);

    RouterConfig select_cfg = cfg_;
    select_cfg.perturb_rho = rho_active_;
    const std::vector<EdgeIndex> swaps = select_swaps(field_, placement_, topo_, select_cfg, rng_);
    for (const EdgeIndex e : swaps) {
      const TopoEdge& edge = topo_.edge(e);
      gates_.push_back({RoutedGate::kSwapId, edge.a, edge.b});
      placement_.apply_swap(edge.a, edge.b);
      unpark_after_swap(edge.a);
      unpark_after_swap(edge.b);
      ++applied;
      ++swaps_added_;
    }
  }

  if (retain_) {
    trace_.push_back({first, executed_this_step_, applied});
  } else {
    trace_.clear();
    trace_.push_back({0, executed_this_step_, applied});
  }

  // Stall handling: without emitted gates for a full window, escalate the
  // perturbation; any progress restores the configured value.
  if (executed_this_step_ > 0) {
    stall_ = 0;
    rho_active_ = cfg_.perturb_rho;
  } else if (++stall_ >= cfg_.stall_window) {
    rho_active_ = std::min(kEscalationCap, std::max(rho_active_ * 2.0, kEscalationFloor));
    stall_ = 0;
  }

  if (!dag_.empty() && executed_this_step_ == 0 && applied == 0) {
    // Nothing moved and no randomness was consumed: the state can never
    // change again. Typically the penalization threshold starved all
    // candidate edges.
    fail("routing reached a fixed point with gates pending (threshold too high?)");
  }
  ++iteration_count_;
  if (iteration_count_ > max_iterations_ && !dag_.empty()) {
    fail("routing exceeded max_iterations");
  }

  const IterationTrace& it = trace_.back();
  const RoutedGate* base = gates_.data() + (retain_ ? it.first : 0);
  return {{base, static_cast<std::size_t>(it.executed)},
          {base + it.executed, static_cast<std::size_t>(it.swaps)}};
}

RoutedCircuit RouteSession::snapshot_partial() const {
  RoutedCircuit rc;
  rc.num_virtual = circuit_.num_qubits();
  rc.num_physical = topo_.num_qubits();
  rc.initial_placement = initial_placement_;
  rc.final_placement = placement_;
  rc.num_swaps = swaps_added_;
  if (retain_) {
    rc.gates = gates_;
    rc.iterations = trace_;
  }
  return rc;
}

void RouteSession::fail(const std::string& reason) {
  throw RoutingError(reason, iteration_count_, dag_.remaining(), snapshot_partial());
}

RoutedCircuit RouteSession::finish() {
  if (!retain_) throw std::logic_error("RouteSession::finish: streaming session retains no gates");
  if (!done()) throw std::logic_error("RouteSession::finish: gates still pending");
  RoutedCircuit rc;
  rc.num_virtual = circuit_.num_qubits();
  rc.num_physical = topo_.num_qubits();
  rc.gates = std::move(gates_);
  rc.initial_placement = std::move(initial_placement_);
  rc.final_placement = placement_;
  rc.iterations = std::move(trace_);
  rc.num_swaps = swaps_added_;
  return rc;
}

RoutedCircuit route(const Circuit& circuit, const Topology& t, Placement initial,
                    const RouterConfig& cfg) {
  RouteSession session(circuit, t, std::move(initial), cfg);
  while (!session.done()) session.step();
  return session.finish();
}

}  // namespace qroute
