#pragma once

#include "qroute/circuit.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qroute {

/// Integer 2D vector used for qubit coordinates, attraction forces and edge
/// directions alike.
struct Vec2 {
  int x = 0;
  int y = 0;

  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

[[nodiscard]] constexpr long long dot(Vec2 a, Vec2 b) {
  return static_cast<long long>(a.x) * b.x + static_cast<long long>(a.y) * b.y;
}

using EdgeIndex = std::int32_t;

struct TopoEdge {
  QubitIndex a = 0;  // a < b
  QubitIndex b = 0;
  double fidelity = 1.0;
};

/// Incident-edge view returned by Topology::neighbors.
struct Neighbor {
  QubitIndex qubit;
  double fidelity;
  Vec2 direction;  // neighbor coords minus the queried qubit's coords
};

/// Connected coupling graph with per-qubit grid coordinates, per-edge
/// fidelities, optional core labels and a cached diameter.
///
/// Construction validates connectivity, coordinate uniqueness and fidelity
/// range. Builders that know the diameter in closed form pass it in;
/// otherwise it is computed by all-sources BFS. Immutable afterwards.
class Topology {
 public:
  Topology(std::vector<Vec2> coords, std::vector<TopoEdge> edges,
           std::vector<std::int32_t> cores = {},
           std::optional<int> known_diameter = std::nullopt);

  [[nodiscard]] int num_qubits() const { return static_cast<int>(coords_.size()); }
  [[nodiscard]] Vec2 coord(QubitIndex q) const { return coords_[static_cast<std::size_t>(q)]; }
  [[nodiscard]] const std::vector<Vec2>& coords() const { return coords_; }

  [[nodiscard]] std::size_t num_edges() const { return edges_.size(); }
  [[nodiscard]] const TopoEdge& edge(EdgeIndex e) const { return edges_[static_cast<std::size_t>(e)]; }
  [[nodiscard]] const std::vector<TopoEdge>& edges() const { return edges_; }

  /// (neighbor qubit, incident edge index) pairs, sorted by neighbor.
  [[nodiscard]] std::span<const std::pair<QubitIndex, EdgeIndex>> adjacent(QubitIndex q) const {
    const auto begin = adj_offsets_[static_cast<std::size_t>(q)];
    const auto end = adj_offsets_[static_cast<std::size_t>(q) + 1];
    return {adj_entries_.data() + begin, adj_entries_.data() + end};
  }

  [[nodiscard]] std::optional<EdgeIndex> edge_between(QubitIndex a, QubitIndex b) const;
  [[nodiscard]] bool connected(QubitIndex a, QubitIndex b) const {
    return edge_between(a, b).has_value();
  }

  /// Incident edges of q as (neighbor, fidelity, edge vector).
  [[nodiscard]] std::vector<Neighbor> neighbors(QubitIndex q) const;

  /// Longest shortest path, in hops.
  [[nodiscard]] int diameter() const { return diameter_; }

  [[nodiscard]] bool has_cores() const { return !cores_.empty(); }
  [[nodiscard]] std::int32_t core_of(QubitIndex q) const { return cores_[static_cast<std::size_t>(q)]; }
  [[nodiscard]] const std::vector<std::int32_t>& cores() const { return cores_; }
  [[nodiscard]] bool inter_core_edge(EdgeIndex e) const;

 private:
  std::vector<Vec2> coords_;
  std::vector<TopoEdge> edges_;
  std::vector<std::int32_t> cores_;
  std::vector<std::int32_t> adj_offsets_;
  std::vector<std::pair<QubitIndex, EdgeIndex>> adj_entries_;
  int diameter_ = 0;
};

/// rows x cols grid; qubit (r, c) has index r*cols + c and coords (x=c, y=r).
/// Diameter is (rows-1) + (cols-1).
[[nodiscard]] Topology build_grid(int rows, int cols, double fidelity = 1.0);

/// cores_y x cores_x tiling of core_rows x core_cols grid cores on one global
/// grid. Every grid-neighbor edge exists; edges whose endpoints carry
/// different core labels get inter_fidelity, all others intra_fidelity.
/// Coordinates are global, so all edge vectors have unit length.
[[nodiscard]] Topology build_multicore(int core_rows, int core_cols, int cores_x, int cores_y,
                                       double intra_fidelity, double inter_fidelity);

/// Copy of `t` with every edge fidelity redrawn i.i.d. uniform [lo, hi].
[[nodiscard]] Topology assign_random_fidelities(const Topology& t, double lo, double hi,
                                                std::uint64_t seed);

/// JSON interchange: {"m": int, "coords": [[x,y]...], "edges": [[a,b,F]...],
/// "cores": [label...]} ("cores" optional).
[[nodiscard]] Topology topology_from_json(std::string_view text);
[[nodiscard]] std::string topology_to_json(const Topology& t);

}  // namespace qroute
