#pragma once

#include <colorgames/arena.hpp>
#include <colorgames/graph_goals.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace colorgames {

// Round i (i >= 1) emits
//   loop_0^(i c_0) conn_0 loop_1^(i c_1) conn_1 ... loop_{h-1}^(i c_{h-1}) conn_{h-1}
// where conn_j leads from loop_j's node to loop_{j+1 mod h}'s node. Every
// round is a closed walk from `start` and has connector_length() +
// i * loop_weight() edges.
struct PathSchedule {
  NodeId start = 0;
  std::vector<FinitePath> loops;
  std::vector<std::int64_t> coeffs;
  std::vector<FinitePath> connectors;

  std::int64_t loop_weight() const;       // sum c_j |loop_j|
  std::int64_t connector_length() const;  // sum |conn_j|
  std::int64_t round_length(std::int64_t round) const;
  // Total length of rounds 1..round.
  std::int64_t boundary(std::int64_t round) const;
};

// Connectors are BFS shortest paths over `edges` (normally the loop set's
// strongly connected component). Throws std::logic_error when a connector
// does not exist.
PathSchedule build_schedule(const ColoredArena& arena, const LoopSet& loops,
                            std::span<const EdgeId> edges);

// Single-consumer cursor over the infinite path `prefix` then round 1, 2, ...
// of the schedule. Holds no per-step state beyond a few counters.
class PathStream {
 public:
  PathStream(const ColoredArena& arena, PathSchedule schedule,
             FinitePath prefix = {});

  EdgeId next();
  std::uint64_t emitted() const { return emitted_; }
  // Round currently being emitted (1-based); 0 while inside the prefix.
  std::int64_t round() const { return in_prefix() ? 0 : round_; }
  // True when every emitted edge so far completes a whole number of rounds.
  bool at_round_boundary() const;

  const PathSchedule& schedule() const { return schedule_; }
  const ColoredArena& arena() const { return *arena_; }

 private:
  bool in_prefix() const { return prefix_pos_ < prefix_.size(); }
  void skip_empty();

  const ColoredArena* arena_;
  PathSchedule schedule_;
  FinitePath prefix_;
  std::size_t prefix_pos_ = 0;
  std::int64_t round_ = 1;
  std::size_t segment_ = 0;   // 2j: loop j, 2j+1: connector j
  std::int64_t repeat_ = 0;   // completed repetitions of the current loop
  std::size_t offset_ = 0;    // position inside the current loop/connector
  std::uint64_t emitted_ = 0;
};

PathStream stream(const ColoredArena& arena, const PathSchedule& schedule);

// Pulls the first n edges from a fresh stream and returns the exact
// deviation max_{a,b} |diff_ab(prefix) / n - l_ab|.
Rational measure_convergence(PathStream& path, std::uint64_t n,
                             const ColorLimitMatrix& limit);

// Running color counts with exact deviation queries.
class PrefixStats {
 public:
  explicit PrefixStats(int k) : counts_(static_cast<std::size_t>(k), 0) {}

  void push(Color c) {
    ++counts_[static_cast<std::size_t>(c - 1)];
    ++length_;
  }
  std::uint64_t length() const { return length_; }
  const ColorCounts& counts() const { return counts_; }
  std::int64_t max_abs_diff() const;
  Rational deviation(const ColorLimitMatrix& limit) const;

 private:
  ColorCounts counts_;
  std::uint64_t length_ = 0;
};

struct BoundedStream {
  PathStream path;
  // Every prefix of `path` has |diff_ab| <= bound.
  std::int64_t bound = 0;
};

// Access path, then the zero-diff closed walk repeated forever. The bound is
// the access path's excursion plus the walk's own excursion. Throws
// std::logic_error if the walk is not closed, not zero-diff, or not joined to
// the access path.
BoundedStream bounded_witness_stream(const ColoredArena& arena,
                                     const FinitePath& walk,
                                     const FinitePath& access);

std::string schedule_to_json(const ColoredArena& arena,
                             const PathSchedule& schedule);

// "src color dst" per line.
std::string format_prefix(const ColoredArena& arena,
                          std::span<const EdgeId> path);

// Inverse of format_prefix: resolves each triple to an edge leaving the
// current node. Throws ParseError on malformed lines or a broken walk.
FinitePath parse_prefix(const ColoredArena& arena, std::string_view text);

}  // namespace colorgames
