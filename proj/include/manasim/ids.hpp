#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace manasim {

using RankId = std::uint32_t;  // global rank index within the world
using EventId = std::uint64_t;
using Vid = std::uint64_t;  // virtual handle id, stable across restart
using Tag = std::uint32_t;
using Seq = std::uint64_t;

// vid 0 is the world communicator; it is bound implicitly at init and never
// appears in the replay log.
inline constexpr Vid kWorldVid = 0;

// Wildcard for recv source/tag matching.
inline constexpr std::uint32_t kAny = 0xffffffffu;

enum class EngineKind : std::uint8_t { Linear = 0, Binomial = 1 };

struct EngineId {
  EngineKind kind = EngineKind::Linear;
  std::uint32_t version = 1;

  friend auto operator<=>(const EngineId&, const EngineId&) = default;
};

inline const char* engine_name(EngineKind k) {
  return k == EngineKind::Linear ? "linear" : "binomial";
}

// A communicator reference that knows whether it points into the virtual
// (upper half) or real (lower half) id space. Checkpoint serialization
// rejects any real-space reference it encounters.
struct CommRef {
  enum class Space : std::uint8_t { Virtual = 0, Real = 1 };
  Space space = Space::Virtual;
  std::uint64_t value = 0;

  static CommRef virt(Vid v) { return CommRef{Space::Virtual, v}; }
  static CommRef real(std::uint64_t r) { return CommRef{Space::Real, r}; }
  bool is_virtual() const { return space == Space::Virtual; }

  friend auto operator<=>(const CommRef&, const CommRef&) = default;
};

// Actor naming: ranks are 0..world_size-1, the coordinator is world_size.
inline std::string actor_name(std::uint32_t actor, std::uint32_t world_size) {
  if (actor == world_size) return "coord";
  return "rank-" + std::to_string(actor);
}

}  // namespace manasim
