#pragma once

#include <map>
#include <set>
#include <span>
#include <utility>

#include "dcolor/graph.hpp"
#include "dcolor/types.hpp"

namespace dcolor {

// Straight-line definition checks. These share no code with the algorithms
// they validate; everything is brute force over edges and vertices.

using Coloring = std::map<VertexId, ColorWord>;
using EdgeKey = std::pair<VertexId, VertexId>;  // normalized u < v
using EdgeColoring = std::map<EdgeKey, ColorWord>;

EdgeKey edge_key(VertexId u, VertexId v);

bool is_proper_coloring(const Graph& g, const Coloring& colors);
bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& colors);
bool is_mis(const Graph& g, const std::set<VertexId>& in_set);
bool is_mm(const Graph& g, const std::set<EdgeKey>& matched);

/// Maximum number of same-colored neighbors over all vertices.
int defect(const Graph& g, const Coloring& colors);

/// Maximum same-color out-degree under `points_to` (edge -> the endpoint the
/// edge is oriented towards); an edge oriented towards u is an out-edge of
/// the other endpoint.
int arbdefect_witness(const Graph& g, const Coloring& colors,
                      const std::map<EdgeKey, VertexId>& points_to);

/// Smallest s >= 0 such that ok_per_round[r] holds for every round
/// r >= last_fault_round + s (through the end of the trace); -1 when the
/// predicate never settles. A fault-free trace uses last_fault_round = 0.
int stabilization_time(std::span<const bool> ok_per_round, int last_fault_round);

/// Max BFS distance (in `g`) from the fault sites to any changed vertex;
/// 0 when nothing changed, INT_MAX when a changed vertex is unreachable.
int adjustment_radius(const Graph& g, std::span<const VertexId> fault_sites,
                      std::span<const VertexId> changed);

}  // namespace dcolor
