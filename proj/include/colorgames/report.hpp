#pragma once

#include <colorgames/arena.hpp>
#include <colorgames/game_solver.hpp>
#include <colorgames/graph_goals.hpp>
#include <colorgames/path_synth.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace colorgames {

inline constexpr int report_schema = 1;

// goal is "balanced", "bounded" or "freq"; freq is only read for "freq" and
// must have one entry per arena color. Throws std::invalid_argument.
Goal parse_goal(std::string_view goal, std::string_view freq, int colors);

// 64-bit FNV-1a, lowercase hex.
std::string digest(std::string_view bytes);

nlohmann::json edge_json(const ColoredArena& arena, EdgeId e);
nlohmann::json path_json(const ColoredArena& arena, std::span<const EdgeId> path);
nlohmann::json witness_json(const ColoredArena& arena, const GraphDecision& d);
nlohmann::json strategy_json(const ColoredArena& arena, const MemorylessStrategy& s);

// Payloads: {"result": ..., "witness": ...}.
nlohmann::json analyze_payload(const ColoredArena& arena, const Goal& goal);
nlohmann::json game_payload(const ColoredArena& arena, const Goal& goal,
                            const SolverOptions& options);

struct Synthesis {
  nlohmann::json payload;
  FinitePath prefix;
  bool exists = false;
};

// Streams a witness path from the initial node: access path to the
// schedule's start, then the rounds (frequency goals) or the zero-diff walk
// repeated (bounded goal).
Synthesis synthesize(const ColoredArena& arena, const Goal& goal,
                     std::uint64_t prefix_length);

struct Verification {
  nlohmann::json payload;
  bool pass = true;
};

// Statistics over every prefix of a walk from the initial node. The bound is
// checked at prefixes that end on non-synthetic nodes.
Verification verify_prefix(const ColoredArena& arena, const FinitePath& path,
                           const Goal& goal, std::optional<std::int64_t> bound);

}  // namespace colorgames
