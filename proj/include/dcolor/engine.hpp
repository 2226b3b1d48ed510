#pragma once

#include <compare>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dcolor/graph.hpp"
#include "dcolor/types.hpp"

namespace dcolor {

enum class ModelKind { kLocal, kCongest, kBitRound, kSetLocal };

struct RoundModel {
  ModelKind kind = ModelKind::kLocal;
  int word_bits = 32;  // CONGEST word size

  static RoundModel local() { return {ModelKind::kLocal, 0}; }
  static RoundModel congest(int word) { return {ModelKind::kCongest, word}; }
  static RoundModel bit_round() { return {ModelKind::kBitRound, 0}; }
  static RoundModel set_local() { return {ModelKind::kSetLocal, 0}; }

  std::string to_string() const;
  static RoundModel parse(const std::string& s);
  bool operator==(const RoundModel&) const = default;
};

/// Engine rounds one payload of `payload_bits` occupies under the model:
/// LOCAL/SET-LOCAL one round, CONGEST ceil(L/word), Bit-Round L rounds.
int serialize_rounds(int payload_bits, const RoundModel& model);

struct EdgeSlot {
  VertexId peer = kNoVertex;
  ColorWord color = 0;
  MisStatus status = MisStatus::kUndecided;
  std::uint64_t aux = 0;

  auto operator<=>(const EdgeSlot&) const = default;
};

/// The corruptible per-vertex state. Self-stabilizing steps may read nothing
/// else across rounds. `aux` and `slots` serve the static and edge pipelines.
struct VertexRam {
  ColorWord color = 0;
  std::uint8_t mu = 0;
  MisStatus status = MisStatus::kUndecided;
  std::uint64_t aux = 0;
  std::vector<EdgeSlot> slots;

  bool operator==(const VertexRam&) const = default;
};

/// What a neighbor delivered this round. Under SET-LOCAL the sender is
/// stripped and duplicate payloads collapse to one entry.
struct Message {
  VertexId sender = kNoVertex;
  ColorWord color = 0;
  std::uint8_t mu = 0;
  MisStatus status = MisStatus::kUndecided;
  std::uint64_t aux = 0;
  std::vector<EdgeSlot> slots;
  std::vector<std::uint64_t> words;  // per-port payload values

  auto operator<=>(const Message&) const = default;
};

struct FaultEvent {
  enum class Kind { kColor, kMu, kStatus, kSlotColor, kSlotStatus, kTopology };
  int round = 0;
  Kind kind = Kind::kColor;
  VertexId target = kNoVertex;
  ColorWord value = 0;
  int port = 0;
  TopologyEvent topo;
};
using FaultScript = std::vector<FaultEvent>;

struct StepContext {
  VertexId self = kNoVertex;
  int algo_round = 0;
  std::span<const Message> inbox;      // port order, or a deduplicated set
  std::span<const VertexId> ports;     // current sorted neighbor list
  RoundModel model;
};

/// A distributed algorithm: per-vertex init, a message encoder with declared
/// bit sizes (the bandwidth contract the engine meters), and a step function
/// computing next RAM from own RAM plus received messages only.
class Algorithm {
 public:
  enum class OutputKind { kVertexColoring, kEdgeColoring, kMis, kMm };

  virtual ~Algorithm() = default;
  virtual std::string name() const = 0;
  virtual OutputKind output_kind() const { return OutputKind::kVertexColoring; }
  virtual bool per_port() const { return false; }
  virtual bool self_stabilizing() const { return false; }
  /// Rounds the schedule needs, or -1 for run-until-max_rounds.
  virtual int scheduled_rounds() const { return -1; }
  /// First round from which the output is expected proper (for verdicts).
  virtual int proper_from_round() const { return 0; }

  virtual VertexRam init(VertexId v) const = 0;

  virtual Message make_message(VertexId v, const VertexRam& ram, int algo_round) const;
  virtual int message_bits(VertexId v, const VertexRam& ram, int algo_round) const;

  virtual Message make_port_message(VertexId v, const VertexRam& ram, int algo_round,
                                    int port, VertexId peer) const;
  virtual int port_message_bits(VertexId v, const VertexRam& ram, int algo_round,
                                int port, VertexId peer) const;

  virtual VertexRam step(const StepContext& ctx, const VertexRam& ram) const = 0;

  /// Global early-stop predicate, checked after each round.
  virtual bool finished(const Graph& g, const std::vector<VertexRam>& rams) const;
};

struct Verdicts {
  bool checked = false;
  bool proper = true;
  bool consistent = true;  // edge replicas agree at both endpoints
  bool mis_ok = false;
  bool mm_ok = false;
  int palette = 0;
  int defect = 0;
};

struct RoundRecord {
  int algo_round = 0;
  int engine_rounds_total = 0;  // cumulative engine rounds incl. this round
  std::vector<FaultEvent> faults;
  std::vector<std::pair<VertexId, VertexRam>> ram;  // live vertices, sorted
  Verdicts verdicts;
  int max_bits_direction = 0;  // this round, over directed edges
};

struct BitLedger {
  std::map<std::pair<VertexId, VertexId>, std::uint64_t> bits;  // directed
  std::uint64_t total = 0;

  void add(VertexId from, VertexId to, int b);
  std::uint64_t direction(VertexId from, VertexId to) const;
  std::uint64_t edge_total(VertexId u, VertexId v) const;
  std::uint64_t max_edge_total() const;
  std::uint64_t max_direction() const;
};

struct RunTrace {
  std::string algorithm;
  RoundModel model;
  Graph initial_graph{1, 0};
  Graph final_graph{1, 0};
  std::vector<RoundRecord> rounds;
  BitLedger ledger;
  int algo_rounds = 0;
  int engine_rounds = 0;
  int last_fault_round = -1;
  std::vector<VertexId> fault_sites;
};

/// Called after each round with the current graph so the caller can fill
/// verdicts; the engine itself never inspects colors.
using RoundObserver = std::function<void(const Graph&, RoundRecord&)>;

RunTrace run(const Graph& g0, const Algorithm& alg, const RoundModel& model,
             const FaultScript& faults, int max_rounds,
             const RoundObserver& observer = {});

}  // namespace dcolor
