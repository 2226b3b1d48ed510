#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dcolor {

using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

/// Color values are plain nonnegative integers; 64 bits covers every palette
/// the interval tables produce at the configured bounds.
using ColorWord = std::uint64_t;

enum class MisStatus : std::uint8_t {
  kUndecided = 0,
  kIn = 1,   // in the independent set / matching
  kOut = 2,  // definitely not in
};

inline const char* to_string(MisStatus s) {
  switch (s) {
    case MisStatus::kUndecided: return "undecided";
    case MisStatus::kIn: return "in";
    case MisStatus::kOut: return "out";
  }
  return "?";
}

/// Thrown when a scenario or fault script asks for something the model
/// forbids (degree cap, duplicate ids, malformed events).
struct ScriptError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an algorithm violates the communication contract it declared
/// (payload does not fit the declared bit size, per-port send in SET-LOCAL).
struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dcolor
