#include <random>
#include <sstream>

#include "dcolor/graph.hpp"
#include "doctest.h"

using namespace dcolor;

namespace {

void check_invariants(const Graph& g) {
  for (VertexId v : g.vertices()) {
    REQUIRE(g.degree(v) <= g.delta_bound());
    VertexId prev = -1;
    for (VertexId u : g.neighbors(v)) {
      REQUIRE(u != v);
      REQUIRE(u > prev);  // sorted, no duplicates
      REQUIRE(g.has_vertex(u));
      REQUIRE(g.has_edge(u, v));  // symmetry
      prev = u;
    }
  }
}

}  // namespace

TEST_CASE("cycle n=3 is the triangle") {
  Graph g = build_graph(GraphKind::kCycle, 3, 2, 0);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(0, 2));
  check_invariants(g);
}

TEST_CASE("path n=2 is a single edge") {
  Graph g = build_graph(GraphKind::kPath, 2, 1, 0);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 1));
}

TEST_CASE("random-capped honors the cap and is reproducible") {
  Graph a = build_graph(GraphKind::kRandomCapped, 50, 8, 7);
  Graph b = build_graph(GraphKind::kRandomCapped, 50, 8, 7);
  CHECK(a == b);
  check_invariants(a);
  int maxdeg = 0;
  for (VertexId v : a.vertices()) maxdeg = std::max(maxdeg, a.degree(v));
  CHECK(maxdeg <= 8);
  CHECK(maxdeg == 8);  // at n=50 the cap binds
  // golden fixture: frozen after validating invariants on first generation
  CHECK(a.edge_count() == 200);
  CHECK(a.neighbors(0).size() == 8);
  Graph c = build_graph(GraphKind::kRandomCapped, 50, 8, 8);
  CHECK(a.edges() != c.edges());
}

TEST_CASE("complete graph rejects an impossible cap") {
  CHECK_THROWS_AS(build_graph(GraphKind::kComplete, 5, 3, 0), ScriptError);
  CHECK_NOTHROW(build_graph(GraphKind::kComplete, 5, 4, 0));
}

TEST_CASE("topology events") {
  Graph g = build_graph(GraphKind::kCycle, 3, 2, 0);
  apply_topology_event(g, {0, TopologyKind::kRemoveEdge, 0, 1});
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(1, 2));

  Graph p = build_graph(GraphKind::kPath, 2, 1, 0);
  Graph p3(3, 1);
  p3.add_vertex(0);
  p3.add_vertex(1);
  p3.add_edge(0, 1);
  apply_topology_event(p3, {0, TopologyKind::kAddVertex, 2, kNoVertex});
  CHECK(p3.has_vertex(2));
  CHECK(p3.degree(2) == 0);
  // degree cap enforcement
  CHECK_THROWS_AS(apply_topology_event(p3, {0, TopologyKind::kAddEdge, 0, 2}),
                  ScriptError);
}

TEST_CASE("removed ids can be reused") {
  Graph g = build_graph(GraphKind::kPath, 3, 2, 0);
  g.remove_vertex(1);
  CHECK_FALSE(g.has_vertex(1));
  CHECK(g.edge_count() == 0);
  g.add_vertex(1);
  CHECK(g.has_vertex(1));
  CHECK(g.degree(1) == 0);
}

TEST_CASE("invariants hold after random event scripts") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 30; ++rep) {
    Graph g = build_graph(GraphKind::kRandomCapped, 20, 4, rep);
    for (int step = 0; step < 120; ++step) {
      TopologyEvent ev;
      ev.kind = static_cast<TopologyKind>(rng() % 4);
      ev.u = static_cast<VertexId>(rng() % 20);
      ev.v = static_cast<VertexId>(rng() % 20);
      try {
        apply_topology_event(g, ev);
      } catch (const ScriptError&) {
        // invalid events are rejected, never partially applied
      }
      check_invariants(g);
    }
  }
}

TEST_CASE("fixture round trip") {
  Graph g = build_graph(GraphKind::kRandomCapped, 12, 3, 5);
  std::stringstream ss;
  write_fixture(ss, g);
  Graph h = read_fixture(ss);
  CHECK(g == h);
}
