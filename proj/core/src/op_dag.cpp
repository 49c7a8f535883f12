#include "qroute/op_dag.hpp"

#include <algorithm>
#include <stdexcept>

namespace qroute {

OpDag::OpDag(const Circuit& circuit) {
  const std::size_t n_gates = circuit.size();
  nodes_.resize(n_gates);
  ready_pos_.assign(n_gates, kWaiting);
  epoch_.assign(n_gates, 0);
  resolved_.assign(n_gates, 0);
  remaining_ = n_gates;

  std::vector<GateId> last_on_qubit(static_cast<std::size_t>(circuit.num_qubits()), -1);
  for (std::size_t i = 0; i < n_gates; ++i) {
    const Gate& gate = circuit.gate(static_cast<GateId>(i));
    const GateId id = static_cast<GateId>(i);
    nodes_[i].q0 = gate.q0;
    nodes_[i].q1 = gate.two_qubit() ? gate.q1 : -1;

    const GateId prev0 = last_on_qubit[static_cast<std::size_t>(gate.q0)];
    last_on_qubit[static_cast<std::size_t>(gate.q0)] = id;
    GateId prev1 = -1;
    if (gate.two_qubit()) {
      prev1 = last_on_qubit[static_cast<std::size_t>(gate.q1)];
      last_on_qubit[static_cast<std::size_t>(gate.q1)] = id;
    }

    std::int8_t preds = 0;
    if (prev0 >= 0) {
      // Store the link in the predecessor's slot for the shared qubit.
      Node& p = nodes_[static_cast<std::size_t>(prev0)];
      if (p.q0 == gate.q0) {
        p.succ0 = id;
      } else {
        p.succ1 = id;
      }
      ++preds;
    }
    if (prev1 >= 0) {
      Node& p = nodes_[static_cast<std::size_t>(prev1)];
      if (p.q0 == gate.q1) {
        p.succ0 = id;
      } else {
        p.succ1 = id;
      }
      if (prev1 != prev0) ++preds;  // one logical edge per predecessor gate
    }
    nodes_[i].preds = preds;
    if (preds == 0) {
      ready_pos_[i] = static_cast<std::int32_t>(ready_.size());
      ready_.push_back(id);
    }
  }
}

void OpDag::remove(GateId g, std::vector<GateId>* newly_ready) {
  const std::int32_t pos = ready_pos_[static_cast<std::size_t>(g)];
  if (pos < 0) {
    throw std::logic_error(pos == kRemoved ? "OpDag::remove: gate already removed"
                                           : "OpDag::remove: gate has pending predecessors");
  }
  const GateId moved = ready_.back();
  ready_[static_cast<std::size_t>(pos)] = moved;
  ready_pos_[static_cast<std::size_t>(moved)] = pos;
  ready_.pop_back();
  ready_pos_[static_cast<std::size_t>(g)] = kRemoved;
  --remaining_;

  for_each_successor(g, [&](GateId s) {
    Node& node = nodes_[static_cast<std::size_t>(s)];
    if (--node.preds == 0) {
      ready_pos_[static_cast<std::size_t>(s)] = static_cast<std::int32_t>(ready_.size());
      ready_.push_back(s);
      if (newly_ready != nullptr) newly_ready->push_back(s);
    }
  });
}

void OpDag::front_layers_into(int k, std::vector<std::vector<GateId>>& out) const {
  if (k < 0) throw std::invalid_argument("front_layers: k must be >= 0");
  out.resize(static_cast<std::size_t>(k) + 1);
  for (auto& layer : out) layer.clear();
  out[0].assign(ready_.begin(), ready_.end());

  if (k == 0) return;
  ++current_epoch_;
  if (current_epoch_ == 0) {  // stamp wrap-around
    std::fill(epoch_.begin(), epoch_.end(), 0);
    current_epoch_ = 1;
  }

  // Bounded Kahn relaxation: a gate joins layer l+1 the moment its last
  // predecessor resolves while layer l is being expanded. Gates with a
  // predecessor deeper than layer k never resolve and are correctly left out.
  for (int l = 0; l < k; ++l) {
    for (const GateId g : out[static_cast<std::size_t>(l)]) {
      for_each_successor(g, [&](GateId s) {
        const auto si = static_cast<std::size_t>(s);
        if (epoch_[si] != current_epoch_) {
          epoch_[si] = current_epoch_;
          resolved_[si] = 0;
        }
        if (++resolved_[si] == nodes_[si].preds) {
          out[static_cast<std::size_t>(l) + 1].push_back(s);
        }
      });
    }
  }
}

std::vector<std::vector<GateId>> OpDag::front_layers(int k) const {
  std::vector<std::vector<GateId>> out;
  front_layers_into(k, out);
  return out;
}

std::vector<std::int32_t> OpDag::layers() const {
  std::vector<std::int32_t> layer(nodes_.size(), -1);
  std::vector<std::int8_t> unresolved(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) unresolved[i] = nodes_[i].preds;

  std::vector<GateId> queue(ready_.begin(), ready_.end());
  for (const GateId g : queue) layer[static_cast<std::size_t>(g)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const GateId g = queue[head];
    for_each_successor(g, [&](GateId s) {
      const auto si = static_cast<std::size_t>(s);
      layer[si] = std::max(layer[si], layer[static_cast<std::size_t>(g)] + 1);
      if (--unresolved[si] == 0) queue.push_back(s);
    });
  }
  return layer;
}

std::string OpDag::to_dot(const Circuit& circuit) const {
  std::string out = "digraph opdag {\n";
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (is_removed(static_cast<GateId>(i))) continue;
    const Gate& gate = circuit.gate(static_cast<GateId>(i));
    out += "  g" + std::to_string(i) + " [label=\"" + std::to_string(i) + ": " +
           gate_name(gate.kind) + "(" + std::to_string(gate.q0);
    if (gate.two_qubit()) out += "," + std::to_string(gate.q1);
    out += ")\"];\n";
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (is_removed(static_cast<GateId>(i))) continue;
    for_each_successor(static_cast<GateId>(i), [&](GateId s) {
      out += "  g" + std::to_string(i) + " -> g" + std::to_string(s) + ";\n";
    });
  }
  out += "}\n";
  return out;
}

}  // namespace qroute
