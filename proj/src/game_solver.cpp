#include <colorgames/game_solver.hpp>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace colorgames {

MemorylessStrategy::MemorylessStrategy(
    const ColoredArena& arena, std::vector<std::pair<NodeId, EdgeId>> choices)
    : choices_(std::move(choices)) {
  std::sort(choices_.begin(), choices_.end());
  const auto player1 = arena.nodes_of(Player::one);
  if (choices_.size() != player1.size())
    throw std::invalid_argument("strategy must choose at every player-1 node");
  for (std::size_t i = 0; i < player1.size(); ++i) {
    auto [v, e] = choices_[i];
    if (v != player1[i])
      throw std::invalid_argument("strategy keys must be the player-1 nodes");
    if (e >= arena.edge_count() || arena.edge(e).src != v)
      throw std::invalid_argument("strategy edge does not leave node '" +
                                  arena.node(v).id + "'");
  }
}

EdgeId MemorylessStrategy::choice(NodeId v) const {
  auto it = std::lower_bound(choices_.begin(), choices_.end(),
                             std::pair<NodeId, EdgeId>{v, 0});
  if (it == choices_.end() || it->first != v)
    throw std::out_of_range("node is not a player-1 node");
  return it->second;
}

std::optional<std::uint64_t> strategy_count(const ColoredArena& arena,
                                            std::uint64_t limit) {
  std::uint64_t total = 1;
  for (NodeId v : arena.nodes_of(Player::one)) {
    const std::uint64_t d = arena.out_edges(v).size();
    if (total > limit / d) return std::nullopt;
    total *= d;
  }
  if (total > limit) return std::nullopt;
  return total;
}

StrategyEnumerator::StrategyEnumerator(const ColoredArena& arena)
    : arena_(&arena), player1_(arena.nodes_of(Player::one)),
      digits_(player1_.size(), 0) {
  current_ = build();
}

MemorylessStrategy StrategyEnumerator::build() const {
  std::vector<std::pair<NodeId, EdgeId>> choices;
  choices.reserve(player1_.size());
  for (std::size_t i = 0; i < player1_.size(); ++i)
    choices.emplace_back(player1_[i], arena_->out_edges(player1_[i])[digits_[i]]);
  return MemorylessStrategy(*arena_, std::move(choices));
}

void StrategyEnumerator::advance() {
  if (done_) return;
  for (std::size_t i = player1_.size(); i-- > 0;) {
    if (++digits_[i] < arena_->out_edges(player1_[i]).size()) {
      ++id_;
      current_ = build();
      return;
    }
    digits_[i] = 0;
  }
  done_ = true;
}

MemorylessStrategy StrategyEnumerator::at(std::uint64_t id) const {
  std::vector<std::pair<NodeId, EdgeId>> choices(player1_.size());
  for (std::size_t i = player1_.size(); i-- > 0;) {
    auto out = arena_->out_edges(player1_[i]);
    choices[i] = {player1_[i], out[id % out.size()]};
    id /= out.size();
  }
  if (id != 0) throw std::out_of_range("strategy id out of range");
  return MemorylessStrategy(*arena_, std::move(choices));
}

std::vector<MemorylessStrategy> enumerate_strategies(const ColoredArena& arena,
                                                     std::uint64_t limit) {
  if (!strategy_count(arena, limit))
    throw StrategyLimitExceeded("more than " + std::to_string(limit) +
                                " memoryless strategies");
  std::vector<MemorylessStrategy> all;
  for (StrategyEnumerator it(arena); !it.done(); it.advance())
    all.push_back(it.current());
  return all;
}

GraphView prune(const ColoredArena& arena, const MemorylessStrategy& strategy) {
  std::vector<bool> keep(arena.edge_count(), true);
  for (auto [v, chosen] : strategy.choices())
    for (EdgeId e : arena.out_edges(v)) keep[e] = e == chosen;

  std::vector<bool> seen(arena.node_count(), false);
  std::vector<NodeId> stack{arena.initial()};
  seen[arena.initial()] = true;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (EdgeId e : arena.out_edges(v)) {
      if (!keep[e]) continue;
      NodeId w = arena.edge(e).dst;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }

  GraphView view;
  view.arena = &arena;
  view.start = arena.initial();
  for (EdgeId e = 0; e < arena.edge_count(); ++e)
    if (keep[e] && seen[arena.edge(e).src]) view.edges.push_back(e);
  return view;
}

GameResult decide_winner(const ColoredArena& arena, const Goal& goal,
                         const SolverOptions& options) {
  const auto count = strategy_count(arena, options.max_strategies);
  if (!count)
    throw StrategyLimitExceeded("more than " +
                                std::to_string(options.max_strategies) +
                                " memoryless strategies");

  GameResult result;
  result.strategy_count = *count;
  auto player1_wins = [&](const MemorylessStrategy& s) {
    return !decide_goal(prune(arena, s), goal).exists;
  };

  if (options.threads <= 1) {
    for (StrategyEnumerator it(arena); !it.done(); it.advance()) {
      const bool wins = player1_wins(it.current());
      result.log.push_back({it.id(), !wins});
      if (wins) {
        result.winner = Player::one;
        result.witness = it.current();
        return result;
      }
    }
    result.winner = Player::zero;
    return result;
  }

  // Workers claim ids in order and skip anything above the best winner seen.
  const StrategyEnumerator decoder(arena);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{*count};
  std::mutex log_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (;;) {
        const std::uint64_t id = next.fetch_add(1);
        if (id >= *count || id > best.load()) return;
        const bool wins = player1_wins(decoder.at(id));
        {
          std::lock_guard lock(log_mutex);
          result.log.push_back({id, !wins});
        }
        if (wins) {
          std::uint64_t seen = best.load();
          while (id < seen && !best.compare_exchange_weak(seen, id)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(log_mutex);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < options.threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(result.log.begin(), result.log.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  if (best.load() < *count) {
    const std::uint64_t winner_id = best.load();
    std::erase_if(result.log, [&](const auto& o) { return o.id > winner_id; });
    result.winner = Player::one;
    result.witness = decoder.at(winner_id);
  } else {
    result.winner = Player::zero;
  }
  return result;
}

}  // namespace colorgames
