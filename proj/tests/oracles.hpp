#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is deliberately brute force and shares no code with the
// implementations it validates.

#include "qroute/circuit.hpp"
#include "qroute/topology.hpp"

#include <algorithm>
#include <queue>
#include <vector>

namespace oracles {

/// All-sources BFS diameter over an adjacency list built from scratch.
inline int bfs_diameter(const qroute::Topology& t) {
  const int m = t.num_qubits();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
  for (const qroute::TopoEdge& e : t.edges()) {
    adj[static_cast<std::size_t>(e.a)].push_back(e.b);
    adj[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  int diameter = 0;
  for (int s = 0; s < m; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(m), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const int v : adj[static_cast<std::size_t>(u)]) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          diameter = std::max(diameter, dist[static_cast<std::size_t>(v)]);
          q.push(v);
        }
      }
    }
  }
  return diameter;
}

/// Residual circuit of `c` after dropping `removed` gates, with the mapping
/// from new position to original gate id.
inline std::pair<qroute::Circuit, std::vector<qroute::GateId>> residual_circuit(
    const qroute::Circuit& c, const std::vector<bool>& removed) {
  qroute::Circuit rest(c.num_qubits());
  std::vector<qroute::GateId> new_to_old;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!removed[i]) {
      rest.append(c.gate(static_cast<qroute::GateId>(i)));
      new_to_old.push_back(static_cast<qroute::GateId>(i));
    }
  }
  return {rest, new_to_old};
}

}  // namespace oracles
