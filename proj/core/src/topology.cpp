#include "qroute/topology.hpp"

#include "qroute/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

namespace qroute {
namespace {

/// Single-source BFS returning the eccentricity of `source`.
int bfs_eccentricity(const Topology& t, QubitIndex source, std::vector<int>& dist) {
  dist.assign(static_cast<std::size_t>(t.num_qubits()), -1);
  std::queue<QubitIndex> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  int ecc = 0;
  while (!queue.empty()) {
    const QubitIndex u = queue.front();
    queue.pop();
    for (const auto& [v, e] : t.adjacent(u)) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        ecc = std::max(ecc, dist[static_cast<std::size_t>(v)]);
        queue.push(v);
      }
    }
  }
  return ecc;
}

}  // namespace

Topology::Topology(std::vector<Vec2> coords, std::vector<TopoEdge> edges,
                   std::vector<std::int32_t> cores, std::optional<int> known_diameter)
    : coords_(std::move(coords)), edges_(std::move(edges)), cores_(std::move(cores)) {
  const auto m = coords_.size();
  if (m == 0) throw std::invalid_argument("Topology: no qubits");
  if (!cores_.empty() && cores_.size() != m) {
    throw std::invalid_argument("Topology: core label count mismatch");
  }

  {
    std::set<std::pair<int, int>> seen;
    for (const Vec2& c : coords_) {
      if (!seen.insert({c.x, c.y}).second) {
        throw std::invalid_argument("Topology: duplicate coordinates");
      }
    }
  }

  std::vector<std::int32_t> degree(m, 0);
  for (TopoEdge& e : edges_) {
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.a < 0 || e.b >= static_cast<QubitIndex>(m) || e.a == e.b) {
      throw std::invalid_argument("Topology: bad edge endpoints");
    }
    if (!(e.fidelity > 0.0) || e.fidelity > 1.0) {
      throw std::invalid_argument("Topology: edge fidelity outside (0, 1]");
    }
    ++degree[static_cast<std::size_t>(e.a)];
    ++degree[static_cast<std::size_t>(e.b)];
  }

  adj_offsets_.assign(m + 1, 0);
  for (std::size_t q = 0; q < m; ++q) adj_offsets_[q + 1] = adj_offsets_[q] + degree[q];
  adj_entries_.resize(adj_offsets_[m]);
  {
    std::vector<std::int32_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const TopoEdge& e = edges_[i];
      adj_entries_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.a)]++)] = {
          e.b, static_cast<EdgeIndex>(i)};
      adj_entries_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.b)]++)] = {
          e.a, static_cast<EdgeIndex>(i)};
    }
  }
  for (std::size_t q = 0; q < m; ++q) {
    auto begin = adj_entries_.begin() + adj_offsets_[q];
    auto end = adj_entries_.begin() + adj_offsets_[q + 1];
    std::sort(begin, end);
    if (std::adjacent_find(begin, end,
                           [](const auto& x, const auto& y) { return x.first == y.first; }) != end) {
      throw std::invalid_argument("Topology: duplicate edge");
    }
  }

  if (m > 1) {
    std::vector<int> dist;
    bfs_eccentricity(*this, 0, dist);
    if (std::find(dist.begin(), dist.end(), -1) != dist.end()) {
      throw std::invalid_argument("Topology: graph is disconnected");
    }
  }

  if (known_diameter.has_value()) {
    diameter_ = *known_diameter;
  } else if (m > 1) {
    std::vector<int> dist;
    for (QubitIndex q = 0; q < static_cast<QubitIndex>(m); ++q) {
      diameter_ = std::max(diameter_, bfs_eccentricity(*this, q, dist));
    }
  }
}

std::optional<EdgeIndex> Topology::edge_between(QubitIndex a, QubitIndex b) const {
  const auto entries = adjacent(a);
  const auto it = std::lower_bound(entries.begin(), entries.end(), b,
                                   [](const auto& entry, QubitIndex q) { return entry.first < q; });
  if (it != entries.end() && it->first == b) return it->second;
  return std::nullopt;
}

std::vector<Neighbor> Topology::neighbors(QubitIndex q) const {
  std::vector<Neighbor> out;
  const auto entries = adjacent(q);
  out.reserve(entries.size());
  for (const auto& [v, e] : entries) {
    out.push_back({v, edges_[static_cast<std::size_t>(e)].fidelity, coord(v) - coord(q)});
  }
  return out;
}

bool Topology::inter_core_edge(EdgeIndex e) const {
  if (!has_cores()) return false;
  const TopoEdge& edge = edges_[static_cast<std::size_t>(e)];
  return cores_[static_cast<std::size_t>(edge.a)] != cores_[static_cast<std::size_t>(edge.b)];
}

Topology build_grid(int rows, int cols, double fidelity) {
  if (rows < 1 || cols < 1 || rows * cols < 2) {
    throw std::invalid_argument("build_grid: need at least 2 qubits");
  }
  std::vector<Vec2> coords;
  coords.reserve(static_cast<std::size_t>(rows) * cols);
  std::vector<TopoEdge> edges;
  edges.reserve(static_cast<std::size_t>(rows) * cols * 2);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      coords.push_back({c, r});
      const QubitIndex q = static_cast<QubitIndex>(r * cols + c);
      if (c + 1 < cols) edges.push_back({q, q + 1, fidelity});
      if (r + 1 < rows) edges.push_back({q, q + static_cast<QubitIndex>(cols), fidelity});
    }
  }
  return Topology(std::move(coords), std::move(edges), {}, (rows - 1) + (cols - 1));
}

Topology build_multicore(int core_rows, int core_cols, int cores_x, int cores_y,
                         double intra_fidelity, double inter_fidelity) {
  if (core_rows < 1 || core_cols < 1 || cores_x < 1 || cores_y < 1) {
    throw std::invalid_argument("build_multicore: all counts must be >= 1");
  }
  const int rows = core_rows * cores_y;
  const int cols = core_cols * cores_x;
  if (rows * cols < 2) throw std::invalid_argument("build_multicore: need at least 2 qubits");

  const auto core_label = [&](int r, int c) {
    return static_cast<std::int32_t>((r / core_rows) * cores_x + (c / core_cols));
  };

  std::vector<Vec2> coords;
  std::vector<std::int32_t> cores;
  std::vector<TopoEdge> edges;
  coords.reserve(static_cast<std::size_t>(rows) * cols);
  cores.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      coords.push_back({c, r});
      cores.push_back(core_label(r, c));
      const QubitIndex q = static_cast<QubitIndex>(r * cols + c);
      if (c + 1 < cols) {
        const double f = core_label(r, c) == core_label(r, c + 1) ? intra_fidelity : inter_fidelity;
        edges.push_back({q, q + 1, f});
      }
      if (r + 1 < rows) {
        const double f = core_label(r, c) == core_label(r + 1, c) ? intra_fidelity : inter_fidelity;
        edges.push_back({q, q + static_cast<QubitIndex>(cols), f});
      }
    }
  }
  return Topology(std::move(coords), std::move(edges), std::move(cores),
                  (rows - 1) + (cols - 1));
}

Topology assign_random_fidelities(const Topology& t, double lo, double hi, std::uint64_t seed) {
  if (!(lo > 0.0) || lo > hi || hi > 1.0) {
    throw std::invalid_argument("assign_random_fidelities: need 0 < lo <= hi <= 1");
  }
  Rng rng(seed);
  std::vector<TopoEdge> edges = t.edges();
  for (TopoEdge& e : edges) e.fidelity = rng.uniform(lo, hi);
  return Topology(t.coords(), std::move(edges), t.cores(), t.diameter());
}

Topology topology_from_json(std::string_view text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const auto m = j.at("m").get<std::size_t>();

  std::vector<Vec2> coords;
  coords.reserve(m);
  for (const auto& c : j.at("coords")) {
    coords.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
  }
  if (coords.size() != m) throw std::invalid_argument("topology json: m != |coords|");

  std::vector<TopoEdge> edges;
  for (const auto& e : j.at("edges")) {
    edges.push_back({e.at(0).get<QubitIndex>(), e.at(1).get<QubitIndex>(),
                     e.size() > 2 ? e.at(2).get<double>() : 1.0});
  }

  std::vector<std::int32_t> cores;
  if (j.contains("cores") && !j.at("cores").is_null()) {
    cores = j.at("cores").get<std::vector<std::int32_t>>();
  }
  return Topology(std::move(coords), std::move(edges), std::move(cores));
}

std::string topology_to_json(const Topology& t) {
  nlohmann::json j;
  j["m"] = t.num_qubits();
  auto coords = nlohmann::json::array();
  for (const Vec2& c : t.coords()) coords.push_back({c.x, c.y});
  j["coords"] = std::move(coords);
  auto edges = nlohmann::json::array();
  for (const TopoEdge& e : t.edges()) edges.push_back({e.a, e.b, e.fidelity});
  j["edges"] = std::move(edges);
  if (t.has_cores()) j["cores"] = t.cores();
  return j.dump();
}

}  // namespace qroute
