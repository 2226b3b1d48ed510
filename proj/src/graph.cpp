#include "dcolor/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace dcolor {

Graph::Graph(int n_bound, int delta_bound)
    : n_bound_(n_bound), delta_bound_(delta_bound) {
  if (n_bound < 1) throw ScriptError("graph: n_bound must be >= 1");
  if (delta_bound < 0) throw ScriptError("graph: delta_bound must be >= 0");
  live_.assign(static_cast<std::size_t>(n_bound), 0);
  adj_.resize(static_cast<std::size_t>(n_bound));
}

void Graph::check_id(VertexId v) const {
  if (v < 0 || v >= n_bound_)
    throw ScriptError("graph: vertex id " + std::to_string(v) +
                      " outside [0, " + std::to_string(n_bound_) + ")");
}

bool Graph::has_vertex(VertexId v) const {
  return v >= 0 && v < n_bound_ && live_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::degree(VertexId v) const {
  check_id(v);
  return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(live_count_));
  for (VertexId v = 0; v < n_bound_; ++v)
    if (live_[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_id(v);
  return adj_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < n_bound_; ++u)
    for (VertexId v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::edge_count() const {
  int total = 0;
  for (const auto& a : adj_) total += static_cast<int>(a.size());
  return total / 2;
}

void Graph::add_vertex(VertexId v) {
  check_id(v);
  if (has_vertex(v)) throw ScriptError("graph: vertex already present");
  live_[static_cast<std::size_t>(v)] = 1;
  ++live_count_;
}

void Graph::remove_vertex(VertexId v) {
  check_id(v);
  if (!has_vertex(v)) throw ScriptError("graph: removing absent vertex");
  for (VertexId u : adj_[static_cast<std::size_t>(v)]) {
    auto& a = adj_[static_cast<std::size_t>(u)];
    a.erase(std::lower_bound(a.begin(), a.end(), v));
  }
  adj_[static_cast<std::size_t>(v)].clear();
  live_[static_cast<std::size_t>(v)] = 0;
  --live_count_;
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (!has_vertex(u) || !has_vertex(v))
    throw ScriptError("graph: edge endpoint not present");
  if (u == v) throw ScriptError("graph: self-loops forbidden");
  if (has_edge(u, v)) throw ScriptError("graph: parallel edge forbidden");
  if (degree(u) >= delta_bound_ || degree(v) >= delta_bound_)
    throw ScriptError("graph: edge (" + std::to_string(u) + "," +
                      std::to_string(v) + ") would exceed degree bound " +
                      std::to_string(delta_bound_));
  auto& au = adj_[static_cast<std::size_t>(u)];
  auto& av = adj_[static_cast<std::size_t>(v)];
  au.insert(std::lower_bound(au.begin(), au.end(), v), v);
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
}

void Graph::remove_edge(VertexId u, VertexId v) {
  if (!has_edge(u, v)) throw ScriptError("graph: removing absent edge");
  auto& au = adj_[static_cast<std::size_t>(u)];
  auto& av = adj_[static_cast<std::size_t>(v)];
  au.erase(std::lower_bound(au.begin(), au.end(), v));
  av.erase(std::lower_bound(av.begin(), av.end(), u));
}

GraphKind graph_kind_from_string(const std::string& s) {
  if (s == "path") return GraphKind::kPath;
  if (s == "cycle") return GraphKind::kCycle;
  if (s == "complete") return GraphKind::kComplete;
  if (s == "random-capped") return GraphKind::kRandomCapped;
  throw ScriptError("unknown graph kind: " + s);
}

Graph build_graph(GraphKind kind, int n, int delta_cap, std::uint64_t seed) {
  if (n < 1) throw ScriptError("build_graph: n must be >= 1");
  Graph g(n, delta_cap);
  for (VertexId v = 0; v < n; ++v) g.add_vertex(v);
  switch (kind) {
    case GraphKind::kPath:
      for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
      break;
    case GraphKind::kCycle:
      if (n < 3) throw ScriptError("build_graph: cycle needs n >= 3");
      for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
      g.add_edge(n - 1, 0);
      break;
    case GraphKind::kComplete:
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
      break;
    case GraphKind::kRandomCapped: {
      if (delta_cap < 1) throw ScriptError("build_graph: delta cap must be >= 1");
      std::vector<std::pair<VertexId, VertexId>> candidates;
      candidates.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) candidates.emplace_back(u, v);
      std::mt19937_64 rng(seed);
      std::shuffle(candidates.begin(), candidates.end(), rng);
      for (auto [u, v] : candidates)
        if (g.degree(u) < delta_cap && g.degree(v) < delta_cap) g.add_edge(u, v);
      break;
    }
  }
  return g;
}

void apply_topology_event(Graph& g, const TopologyEvent& ev) {
  switch (ev.kind) {
    case TopologyKind::kAddVertex: g.add_vertex(ev.u); break;
    case TopologyKind::kRemoveVertex: g.remove_vertex(ev.u); break;
    case TopologyKind::kAddEdge: g.add_edge(ev.u, ev.v); break;
    case TopologyKind::kRemoveEdge: g.remove_edge(ev.u, ev.v); break;
  }
}

void write_fixture(std::ostream& out, const Graph& g) {
  out << g.n_bound() << ' ' << g.delta_bound() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_fixture(std::istream& in) {
  int n = 0, delta = 0;
  if (!(in >> n >> delta)) throw ScriptError("fixture: bad header line");
  Graph g(n, delta);
  for (VertexId v = 0; v < n; ++v) g.add_vertex(v);
  VertexId u, v;
  while (in >> u >> v) g.add_edge(u, v);
  return g;
}

Graph read_fixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScriptError("fixture: cannot open " + path);
  return read_fixture(in);
}

}  // namespace dcolor
