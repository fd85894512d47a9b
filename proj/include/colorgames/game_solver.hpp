#pragma once

#include <colorgames/arena.hpp>
#include <colorgames/graph_goals.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace colorgames {

// One outgoing edge per player-1 node, keyed by node in ascending order.
class MemorylessStrategy {
 public:
  MemorylessStrategy() = default;
  // Throws std::invalid_argument unless `choices` is total on player-1 nodes
  // and each edge leaves its key.
  MemorylessStrategy(const ColoredArena& arena,
                     std::vector<std::pair<NodeId, EdgeId>> choices);

  EdgeId choice(NodeId v) const;
  const std::vector<std::pair<NodeId, EdgeId>>& choices() const { return choices_; }

  bool operator==(const MemorylessStrategy&) const = default;

 private:
  std::vector<std::pair<NodeId, EdgeId>> choices_;
};

class StrategyLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Product of player-1 out-degrees, or nullopt once it passes `limit`.
std::optional<std::uint64_t> strategy_count(const ColoredArena& arena,
                                            std::uint64_t limit);

// Lexicographic in (node index, edge index): the last player-1 node varies
// fastest. Strategy ids are positions in this order.
class StrategyEnumerator {
 public:
  explicit StrategyEnumerator(const ColoredArena& arena);

  bool done() const { return done_; }
  const MemorylessStrategy& current() const { return current_; }
  std::uint64_t id() const { return id_; }
  void advance();

  // Decodes an id directly.
  MemorylessStrategy at(std::uint64_t id) const;

 private:
  MemorylessStrategy build() const;

  const ColoredArena* arena_;
  std::vector<NodeId> player1_;
  std::vector<std::size_t> digits_;
  MemorylessStrategy current_;
  std::uint64_t id_ = 0;
  bool done_ = false;
};

std::vector<MemorylessStrategy> enumerate_strategies(const ColoredArena& arena,
                                                     std::uint64_t limit);

// Player-1 nodes keep only the strategy's edge; then everything unreachable
// from the initial node is dropped.
GraphView prune(const ColoredArena& arena, const MemorylessStrategy& strategy);

struct StrategyOutcome {
  std::uint64_t id = 0;
  bool goal_path_exists = false;
};

struct GameResult {
  Player winner = Player::zero;
  std::optional<MemorylessStrategy> witness;  // player 1 only
  std::uint64_t strategy_count = 0;
  // Complete for player-0 answers; for player-1 answers it stops at the
  // witness.
  std::vector<StrategyOutcome> log;
};

struct SolverOptions {
  std::uint64_t max_strategies = std::uint64_t{1} << 20;
  // Worker threads; the witness is the smallest winning id regardless.
  unsigned threads = 1;
};

// Player 1 wins iff some memoryless strategy leaves no goal path in the
// pruned graph. Throws StrategyLimitExceeded past options.max_strategies.
GameResult decide_winner(const ColoredArena& arena, const Goal& goal,
                         const SolverOptions& options = {});

}  // namespace colorgames
