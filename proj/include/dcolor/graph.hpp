#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dcolor/types.hpp"

namespace dcolor {

/// Simple undirected graph under fixed ROM bounds: at most `n_bound` live
/// vertices with ids in [0, n_bound), every degree at most `delta_bound`.
/// Adjacency lists are kept sorted so port numbering is deterministic.
class Graph {
 public:
  Graph(int n_bound, int delta_bound);

  int n_bound() const { return n_bound_; }
  int delta_bound() const { return delta_bound_; }

  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;
  int degree(VertexId v) const;
  int vertex_count() const { return live_count_; }
  int edge_count() const;

  /// Sorted list of live vertex ids.
  std::vector<VertexId> vertices() const;
  /// Sorted neighbor list (the port order of `v`).
  std::span<const VertexId> neighbors(VertexId v) const;
  /// All edges as (u, v) pairs with u < v, lexicographically sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  // Mutations reject anything that would break an invariant (ScriptError).
  void add_vertex(VertexId v);
  void remove_vertex(VertexId v);
  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);

  bool operator==(const Graph&) const = default;

 private:
  void check_id(VertexId v) const;

  int n_bound_ = 0;
  int delta_bound_ = 0;
  int live_count_ = 0;
  std::vector<std::uint8_t> live_;
  std::vector<std::vector<VertexId>> adj_;
};

enum class GraphKind { kPath, kCycle, kComplete, kRandomCapped };

GraphKind graph_kind_from_string(const std::string& s);

/// Deterministic generators; identical parameters give identical graphs.
Graph build_graph(GraphKind kind, int n, int delta_cap, std::uint64_t seed);

enum class TopologyKind { kAddVertex, kRemoveVertex, kAddEdge, kRemoveEdge };

struct TopologyEvent {
  int round = 0;
  TopologyKind kind = TopologyKind::kAddEdge;
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;  // unused for vertex events
};

/// Applies one event; throws ScriptError when the event would violate the
/// bounds or the graph invariants (the script is invalid, not the network).
void apply_topology_event(Graph& g, const TopologyEvent& ev);

/// Fixture format: header line "n delta", then one "u v" pair per line.
void write_fixture(std::ostream& out, const Graph& g);
Graph read_fixture(std::istream& in);
Graph read_fixture_file(const std::string& path);

}  // namespace dcolor
