#include "qroute/topology.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace qroute;

TEST_SUITE_BEGIN("topology");

TEST_CASE("grid construction") {
  SUBCASE("4x4") {
    const Topology t = build_grid(4, 4);
    CHECK(t.num_qubits() == 16);
    CHECK(t.num_edges() == 24);
    CHECK(t.diameter() == 6);
  }
  SUBCASE("16x16") {
    const Topology t = build_grid(16, 16);
    CHECK(t.num_qubits() == 256);
    CHECK(t.diameter() == 30);
  }
  SUBCASE("1x2 is a single edge") {
    const Topology t = build_grid(1, 2);
    CHECK(t.num_edges() == 1);
    CHECK(t.diameter() == 1);
  }
  SUBCASE("indexing is row-major with x = column") {
    const Topology t = build_grid(3, 5);
    CHECK(t.coord(0) == Vec2{0, 0});
    CHECK(t.coord(7) == Vec2{2, 1});
  }
}

TEST_CASE("grid diameter matches the BFS oracle") {
  for (const auto [rows, cols] : {std::pair{1, 7}, {2, 2}, {3, 8}, {5, 5}, {8, 8}, {4, 9}}) {
    const Topology t = build_grid(rows, cols);
    CHECK(t.diameter() == (rows - 1) + (cols - 1));
    CHECK(t.diameter() == oracles::bfs_diameter(t));
  }
}

TEST_CASE("generic topologies get a BFS diameter at construction") {
  // Path of 5 nodes.
  std::vector<Vec2> coords{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}};
  std::vector<TopoEdge> edges{{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}};
  CHECK(Topology(coords, edges).diameter() == 4);

  // Complete graph on 4 nodes.
  std::vector<Vec2> k4{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  std::vector<TopoEdge> k4e;
  for (QubitIndex a = 0; a < 4; ++a) {
    for (QubitIndex b = a + 1; b < 4; ++b) k4e.push_back({a, b, 1.0});
  }
  CHECK(Topology(k4, k4e).diameter() == 1);
}

TEST_CASE("construction validates its invariants") {
  std::vector<Vec2> coords{{0, 0}, {1, 0}, {2, 0}};
  CHECK_THROWS_AS(Topology(coords, {{0, 1, 1.0}}), std::invalid_argument);  // disconnected
  CHECK_THROWS_AS(Topology(coords, {{0, 1, 1.0}, {1, 2, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Topology(coords, {{0, 1, 1.0}, {1, 2, 1.1}}), std::invalid_argument);
  CHECK_THROWS_AS(Topology({{0, 0}, {0, 0}}, {{0, 1, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Topology(coords, {{0, 1, 1.0}, {1, 2, 1.0}, {1, 2, 0.9}}),
                  std::invalid_argument);  // duplicate edge
}

TEST_CASE("multicore tiling") {
  SUBCASE("16 cores of 4x4") {
    const Topology t = build_multicore(4, 4, 4, 4, 1.0, 0.98);
    CHECK(t.num_qubits() == 256);
    REQUIRE(t.has_cores());
    std::set<std::int32_t> labels(t.cores().begin(), t.cores().end());
    CHECK(labels.size() == 16);

    std::size_t inter = 0;
    for (std::size_t e = 0; e < t.num_edges(); ++e) {
      if (t.inter_core_edge(static_cast<EdgeIndex>(e))) {
        ++inter;
        CHECK(t.edge(static_cast<EdgeIndex>(e)).fidelity == 0.98);
      } else {
        CHECK(t.edge(static_cast<EdgeIndex>(e)).fidelity == 1.0);
      }
    }
    // Boundary count: cores_y*(cores_x-1)*core_rows + cores_x*(cores_y-1)*core_cols.
    CHECK(inter == 4 * 3 * 4 + 4 * 3 * 4);
  }
  SUBCASE("1x1 core grid degenerates to a plain grid") {
    const Topology mc = build_multicore(3, 4, 1, 1, 0.97, 0.5);
    const Topology g = build_grid(3, 4, 0.97);
    CHECK(mc.num_qubits() == g.num_qubits());
    CHECK(mc.num_edges() == g.num_edges());
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      CHECK(mc.edge(static_cast<EdgeIndex>(e)).fidelity == 0.97);
    }
  }
  SUBCASE("two 1x2 cores side by side share exactly one edge") {
    const Topology t = build_multicore(1, 2, 2, 1, 1.0, 0.9);
    std::size_t inter = 0;
    for (std::size_t e = 0; e < t.num_edges(); ++e) {
      inter += t.inter_core_edge(static_cast<EdgeIndex>(e)) ? 1 : 0;
    }
    CHECK(inter == 1);
  }
  SUBCASE("boundary counts match the analytic formula") {
    for (const auto [cr, cc, cx, cy] : {std::tuple{2, 3, 3, 2}, {4, 4, 2, 3}, {1, 5, 4, 1}}) {
      const Topology t = build_multicore(cr, cc, cx, cy, 1.0, 0.9);
      std::size_t inter = 0;
      for (std::size_t e = 0; e < t.num_edges(); ++e) {
        inter += t.inter_core_edge(static_cast<EdgeIndex>(e)) ? 1 : 0;
      }
      CHECK(inter == static_cast<std::size_t>(cy * (cx - 1) * cr + cx * (cy - 1) * cc));
    }
  }
  SUBCASE("contiguous tilings keep unit edge vectors") {
    const Topology t = build_multicore(3, 3, 2, 2, 1.0, 0.95);
    for (const TopoEdge& e : t.edges()) {
      const Vec2 v = t.coord(e.b) - t.coord(e.a);
      CHECK(v.x * v.x + v.y * v.y == 1);
    }
  }
}

TEST_CASE("random fidelities") {
  const Topology base = build_grid(8, 8);
  SUBCASE("degenerate interval pins every edge") {
    const Topology t = assign_random_fidelities(base, 0.99, 0.99, 5);
    for (const TopoEdge& e : t.edges()) CHECK(e.fidelity == 0.99);
  }
  SUBCASE("deterministic per seed") {
    const Topology a = assign_random_fidelities(base, 0.999, 0.9999, 42);
    const Topology b = assign_random_fidelities(base, 0.999, 0.9999, 42);
    const Topology c = assign_random_fidelities(base, 0.999, 0.9999, 43);
    bool all_equal = true;
    bool any_diff = false;
    for (std::size_t e = 0; e < a.num_edges(); ++e) {
      all_equal &= a.edge(static_cast<EdgeIndex>(e)).fidelity ==
                   b.edge(static_cast<EdgeIndex>(e)).fidelity;
      any_diff |= a.edge(static_cast<EdgeIndex>(e)).fidelity !=
                  c.edge(static_cast<EdgeIndex>(e)).fidelity;
    }
    CHECK(all_equal);
    CHECK(any_diff);
  }
  SUBCASE("empirical mean concentrates") {
    const Topology big = build_grid(24, 24);  // > 1000 edges
    const Topology t = assign_random_fidelities(big, 0.999, 0.9999, 7);
    double sum = 0.0;
    for (const TopoEdge& e : t.edges()) sum += e.fidelity;
    const double mean = sum / static_cast<double>(t.num_edges());
    CHECK(mean > 0.9992);
    CHECK(mean < 0.9997);
  }
  SUBCASE("range validation") {
    CHECK_THROWS_AS((void)assign_random_fidelities(base, 0.0, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)assign_random_fidelities(base, 0.9, 0.8, 1), std::invalid_argument);
  }
}

TEST_CASE("neighbors carry fidelity and unit direction") {
  const Topology t = build_grid(4, 4, 0.75);
  SUBCASE("interior qubit has all four directions") {
    const auto nbrs = t.neighbors(5);  // (1,1)
    REQUIRE(nbrs.size() == 4);
    std::set<std::pair<int, int>> dirs;
    for (const Neighbor& n : nbrs) {
      dirs.insert({n.direction.x, n.direction.y});
      CHECK(n.fidelity == 0.75);
    }
    CHECK(dirs == std::set<std::pair<int, int>>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  }
  SUBCASE("corner has two") { CHECK(t.neighbors(0).size() == 2); }
  SUBCASE("multicore boundary qubit sees the inter-core fidelity") {
    const Topology mc = build_multicore(1, 2, 2, 1, 1.0, 0.9);
    const auto nbrs = mc.neighbors(1);  // right edge of core 0
    bool has_inter = false;
    for (const Neighbor& n : nbrs) has_inter |= n.fidelity == 0.9;
    CHECK(has_inter);
  }
}

TEST_CASE("json round-trip") {
  const Topology t = assign_random_fidelities(build_multicore(2, 2, 2, 1, 1.0, 0.9), 0.95, 1.0, 3);
  const Topology back = topology_from_json(topology_to_json(t));
  CHECK(back.num_qubits() == t.num_qubits());
  CHECK(back.diameter() == t.diameter());
  CHECK(back.cores() == t.cores());
  REQUIRE(back.num_edges() == t.num_edges());
  for (std::size_t e = 0; e < t.num_edges(); ++e) {
    CHECK(back.edge(static_cast<EdgeIndex>(e)).fidelity ==
          t.edge(static_cast<EdgeIndex>(e)).fidelity);
  }

  const Topology parsed = topology_from_json(
      R"({"m":2,"coords":[[0,0],[1,0]],"edges":[[0,1,0.5]]})");
  CHECK(parsed.num_edges() == 1);
  CHECK(parsed.edge(0).fidelity == 0.5);
}

TEST_SUITE_END();
