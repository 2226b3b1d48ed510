#include "dcolor/engine.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace dcolor {

std::string RoundModel::to_string() const {
  switch (kind) {
    case ModelKind::kLocal: return "local";
    case ModelKind::kCongest: return "congest:" + std::to_string(word_bits);
    case ModelKind::kBitRound: return "bit";
    case ModelKind::kSetLocal: return "set-local";
  }
  return "?";
}

RoundModel RoundModel::parse(const std::string& s) {
  if (s == "local") return local();
  if (s == "bit" || s == "bit-round") return bit_round();
  if (s == "set-local") return set_local();
  if (s.rfind("congest", 0) == 0) {
    int word = 32;
    if (auto pos = s.find(':'); pos != std::string::npos)
      word = std::stoi(s.substr(pos + 1));
    if (word < 1) throw ScriptError("model: congest word must be >= 1");
    return congest(word);
  }
  throw ScriptError("model: unknown model '" + s + "'");
}

int serialize_rounds(int payload_bits, const RoundModel& model) {
  if (payload_bits <= 0) return 1;
  switch (model.kind) {
    case ModelKind::kLocal:
    case ModelKind::kSetLocal:
      return 1;
    case ModelKind::kCongest:
      return (payload_bits + model.word_bits - 1) / model.word_bits;
    case ModelKind::kBitRound:
      return payload_bits;
  }
  return 1;
}

Message Algorithm::make_message(VertexId, const VertexRam&, int) const {
  throw std::logic_error("algorithm without a broadcast encoder");
}
int Algorithm::message_bits(VertexId, const VertexRam&, int) const {
  throw std::logic_error("algorithm without a broadcast encoder");
}
Message Algorithm::make_port_message(VertexId, const VertexRam&, int, int, VertexId) const {
  throw std::logic_error("algorithm without a per-port encoder");
}
int Algorithm::port_message_bits(VertexId, const VertexRam&, int, int, VertexId) const {
  throw std::logic_error("algorithm without a per-port encoder");
}
bool Algorithm::finished(const Graph&, const std::vector<VertexRam>&) const {
  return false;
}

void BitLedger::add(VertexId from, VertexId to, int b) {
  if (b <= 0) return;
  bits[{from, to}] += static_cast<std::uint64_t>(b);
  total += static_cast<std::uint64_t>(b);
}

std::uint64_t BitLedger::direction(VertexId from, VertexId to) const {
  auto it = bits.find({from, to});
  return it == bits.end() ? 0 : it->second;
}

std::uint64_t BitLedger::edge_total(VertexId u, VertexId v) const {
  return direction(u, v) + direction(v, u);
}

std::uint64_t BitLedger::max_edge_total() const {
  std::uint64_t best = 0;
  for (const auto& [key, b] : bits) best = std::max(best, edge_total(key.first, key.second));
  return best;
}

std::uint64_t BitLedger::max_direction() const {
  std::uint64_t best = 0;
  for (const auto& [key, b] : bits) best = std::max(best, b);
  return best;
}

namespace {

void apply_fault(Graph& g, std::vector<VertexRam>& rams, const Algorithm& alg,
                 const FaultEvent& ev) {
  if (ev.kind == FaultEvent::Kind::kTopology) {
    apply_topology_event(g, ev.topo);
    if (ev.topo.kind == TopologyKind::kAddVertex)
      rams[static_cast<std::size_t>(ev.topo.u)] = alg.init(ev.topo.u);
    return;
  }
  if (!g.has_vertex(ev.target))
    throw ScriptError("fault script: corrupting absent vertex " +
                      std::to_string(ev.target));
  VertexRam& ram = rams[static_cast<std::size_t>(ev.target)];
  switch (ev.kind) {
    case FaultEvent::Kind::kColor: ram.color = ev.value; break;
    case FaultEvent::Kind::kMu: ram.mu = static_cast<std::uint8_t>(ev.value & 1); break;
    case FaultEvent::Kind::kStatus:
      ram.status = static_cast<MisStatus>(ev.value % 3);
      break;
    case FaultEvent::Kind::kSlotColor:
    case FaultEvent::Kind::kSlotStatus: {
      if (ev.port < 0 || ev.port >= static_cast<int>(ram.slots.size()))
        throw ScriptError("fault script: slot index out of range");
      EdgeSlot& slot = ram.slots[static_cast<std::size_t>(ev.port)];
      if (ev.kind == FaultEvent::Kind::kSlotColor)
        slot.color = ev.value;
      else
        slot.status = static_cast<MisStatus>(ev.value % 3);
      break;
    }
    case FaultEvent::Kind::kTopology: break;  // handled above
  }
}

void check_payload_fits(const Message& m, int declared, VertexId from, int round) {
  int need = 0;
  for (std::uint64_t w : m.words)
    need += w == 0 ? 0 : std::bit_width(w);
  if (need > declared)
    throw EngineError("vertex " + std::to_string(from) + " round " +
                      std::to_string(round) + ": payload needs " +
                      std::to_string(need) + " bits, declared " +
                      std::to_string(declared));
}

}  // namespace

RunTrace run(const Graph& g0, const Algorithm& alg, const RoundModel& model,
             const FaultScript& faults, int max_rounds, const RoundObserver& observer) {
  if (max_rounds < 1) throw ScriptError("run: max_rounds must be >= 1");
  if (model.kind == ModelKind::kSetLocal && alg.per_port())
    throw EngineError("SET-LOCAL forbids per-port messages (no sender identity)");

  RunTrace trace;
  trace.algorithm = alg.name();
  trace.model = model;
  trace.initial_graph = g0;

  Graph g = g0;
  std::vector<VertexRam> rams(static_cast<std::size_t>(g.n_bound()));
  for (VertexId v : g.vertices()) rams[static_cast<std::size_t>(v)] = alg.init(v);

  FaultScript script = faults;
  std::stable_sort(script.begin(), script.end(),
                   [](const FaultEvent& a, const FaultEvent& b) { return a.round < b.round; });
  std::size_t next_fault = 0;

  int total = max_rounds;
  if (alg.scheduled_rounds() >= 0) total = std::min(total, alg.scheduled_rounds());

  int engine_rounds = 0;
  for (int round = 0; round < total; ++round) {
    RoundRecord rec;
    rec.algo_round = round;

    while (next_fault < script.size() && script[next_fault].round <= round) {
      const FaultEvent& ev = script[next_fault];
      if (ev.round < round)
        throw ScriptError("fault script: event for a past round");
      apply_fault(g, rams, alg, ev);
      rec.faults.push_back(ev);
      trace.last_fault_round = round;
      if (ev.kind == FaultEvent::Kind::kTopology) {
        trace.fault_sites.push_back(ev.topo.u);
        if (ev.topo.v != kNoVertex) trace.fault_sites.push_back(ev.topo.v);
      } else {
        trace.fault_sites.push_back(ev.target);
      }
      ++next_fault;
    }

    const std::vector<VertexId> live = g.vertices();

    // Collect messages and meter declared sizes.
    std::vector<Message> broadcast(static_cast<std::size_t>(g.n_bound()));
    std::vector<int> broadcast_bits(static_cast<std::size_t>(g.n_bound()), 0);
    if (!alg.per_port()) {
      for (VertexId v : live) {
        broadcast[static_cast<std::size_t>(v)] =
            alg.make_message(v, rams[static_cast<std::size_t>(v)], round);
        broadcast[static_cast<std::size_t>(v)].sender = v;
        broadcast_bits[static_cast<std::size_t>(v)] =
            alg.message_bits(v, rams[static_cast<std::size_t>(v)], round);
      }
    }

    int round_engine_rounds = 1;
    std::vector<std::vector<Message>> inbox(static_cast<std::size_t>(g.n_bound()));
    for (VertexId v : live) {
      const auto ports = g.neighbors(v);
      auto& in = inbox[static_cast<std::size_t>(v)];
      in.reserve(ports.size());
      for (std::size_t k = 0; k < ports.size(); ++k) {
        const VertexId u = ports[k];
        Message m;
        int bits_declared;
        if (alg.per_port()) {
          const auto u_ports = g.neighbors(u);
          const int port_of_v =
              static_cast<int>(std::lower_bound(u_ports.begin(), u_ports.end(), v) -
                               u_ports.begin());
          m = alg.make_port_message(u, rams[static_cast<std::size_t>(u)], round,
                                    port_of_v, v);
          m.sender = u;
          bits_declared = alg.port_message_bits(u, rams[static_cast<std::size_t>(u)],
                                                round, port_of_v, v);
          check_payload_fits(m, bits_declared, u, round);
        } else {
          m = broadcast[static_cast<std::size_t>(u)];
          bits_declared = broadcast_bits[static_cast<std::size_t>(u)];
        }
        trace.ledger.add(u, v, bits_declared);
        rec.max_bits_direction = std::max(rec.max_bits_direction, bits_declared);
        round_engine_rounds =
            std::max(round_engine_rounds, serialize_rounds(bits_declared, model));
        in.push_back(std::move(m));
      }
      if (model.kind == ModelKind::kSetLocal) {
        for (Message& m : in) m.sender = kNoVertex;
        std::sort(in.begin(), in.end());
        in.erase(std::unique(in.begin(), in.end()), in.end());
      }
    }

    engine_rounds += round_engine_rounds;

    std::vector<VertexRam> next = rams;
    for (VertexId v : live) {
      StepContext ctx;
      ctx.self = v;
      ctx.algo_round = round;
      ctx.inbox = inbox[static_cast<std::size_t>(v)];
      ctx.ports = g.neighbors(v);
      ctx.model = model;
      next[static_cast<std::size_t>(v)] = alg.step(ctx, rams[static_cast<std::size_t>(v)]);
    }
    rams.swap(next);

    rec.engine_rounds_total = engine_rounds;
    rec.ram.reserve(live.size());
    for (VertexId v : live) rec.ram.emplace_back(v, rams[static_cast<std::size_t>(v)]);
    if (observer) observer(g, rec);
    trace.rounds.push_back(std::move(rec));

    if (alg.scheduled_rounds() < 0 && alg.finished(g, rams)) break;
  }

  trace.final_graph = g;
  trace.algo_rounds = static_cast<int>(trace.rounds.size());
  trace.engine_rounds = engine_rounds;
  std::sort(trace.fault_sites.begin(), trace.fault_sites.end());
  trace.fault_sites.erase(
      std::unique(trace.fault_sites.begin(), trace.fault_sites.end()),
      trace.fault_sites.end());
  return trace;
}

}  // namespace dcolor
