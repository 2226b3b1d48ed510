#include "dcolor/verify.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <stdexcept>
#include <vector>

namespace dcolor {

EdgeKey edge_key(VertexId u, VertexId v) {
  return u < v ? EdgeKey{u, v} : EdgeKey{v, u};
}

namespace {

ColorWord color_of(const Coloring& colors, VertexId v) {
  auto it = colors.find(v);
  if (it == colors.end())
    throw std::invalid_argument("oracle: partial coloring, vertex " +
                                std::to_string(v) + " unassigned");
  return it->second;
}

ColorWord color_of(const EdgeColoring& colors, VertexId u, VertexId v) {
  auto it = colors.find(edge_key(u, v));
  if (it == colors.end())
    throw std::invalid_argument("oracle: partial edge coloring");
  return it->second;
}

}  // namespace

bool is_proper_coloring(const Graph& g, const Coloring& colors) {
  for (auto [u, v] : g.edges())
    if (color_of(colors, u) == color_of(colors, v)) return false;
  return true;
}

bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& colors) {
  for (VertexId v : g.vertices()) {
    const auto nbs = g.neighbors(v);
    for (std::size_t i = 0; i < nbs.size(); ++i)
      for (std::size_t j = i + 1; j < nbs.size(); ++j)
        if (color_of(colors, v, nbs[i]) == color_of(colors, v, nbs[j])) return false;
  }
  return true;
}

bool is_mis(const Graph& g, const std::set<VertexId>& in_set) {
  for (VertexId v : in_set)
    if (!g.has_vertex(v)) return false;
  for (auto [u, v] : g.edges())
    if (in_set.count(u) && in_set.count(v)) return false;  // independence
  for (VertexId v : g.vertices()) {
    if (in_set.count(v)) continue;
    bool dominated = false;
    for (VertexId u : g.neighbors(v))
      if (in_set.count(u)) { dominated = true; break; }
    if (!dominated) return false;  // maximality
  }
  return true;
}

bool is_mm(const Graph& g, const std::set<EdgeKey>& matched) {
  std::set<VertexId> used;
  for (auto [u, v] : matched) {
    if (!g.has_edge(u, v)) return false;
    if (used.count(u) || used.count(v)) return false;  // no two incident
    used.insert(u);
    used.insert(v);
  }
  for (auto [u, v] : g.edges())
    if (!used.count(u) && !used.count(v)) return false;  // maximality
  return true;
}

int defect(const Graph& g, const Coloring& colors) {
  int worst = 0;
  for (VertexId v : g.vertices()) {
    int same = 0;
    for (VertexId u : g.neighbors(v))
      if (color_of(colors, u) == color_of(colors, v)) ++same;
    worst = std::max(worst, same);
  }
  return worst;
}

int arbdefect_witness(const Graph& g, const Coloring& colors,
                      const std::map<EdgeKey, VertexId>& points_to) {
  int worst = 0;
  for (VertexId v : g.vertices()) {
    int out_same = 0;
    for (VertexId u : g.neighbors(v)) {
      auto it = points_to.find(edge_key(u, v));
      if (it == points_to.end())
        throw std::invalid_argument("oracle: orientation misses an edge");
      if (it->second == u && color_of(colors, u) == color_of(colors, v)) ++out_same;
    }
    worst = std::max(worst, out_same);
  }
  return worst;
}

int stabilization_time(std::span<const bool> ok_per_round, int last_fault_round) {
  const int n = static_cast<int>(ok_per_round.size());
  if (last_fault_round < 0) last_fault_round = 0;
  if (last_fault_round >= n) return -1;
  int from = n;  // first index such that everything from it on is ok
  for (int r = n - 1; r >= last_fault_round; --r) {
    if (!ok_per_round[static_cast<std::size_t>(r)]) break;
    from = r;
  }
  if (from == n) return -1;
  return std::max(0, from - last_fault_round);
}

int adjustment_radius(const Graph& g, std::span<const VertexId> fault_sites,
                      std::span<const VertexId> changed) {
  if (changed.empty()) return 0;
  std::vector<int> dist(static_cast<std::size_t>(g.n_bound()), -1);
  std::deque<VertexId> queue;
  for (VertexId s : fault_sites) {
    if (!g.has_vertex(s)) continue;
    dist[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId u : g.neighbors(v))
      if (dist[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(u);
      }
  }
  int radius = 0;
  for (VertexId v : changed) {
    const int d = g.has_vertex(v) ? dist[static_cast<std::size_t>(v)] : -1;
    radius = std::max(radius, d < 0 ? INT_MAX : d);
  }
  return radius;
}

}  // namespace dcolor
