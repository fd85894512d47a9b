#include <colorgames/report.hpp>

#include <cstdio>

namespace colorgames {

using nlohmann::json;

Goal parse_goal(std::string_view goal, std::string_view freq, int colors) {
  if (goal == "balanced") return Goal::balanced();
  if (goal == "bounded") return Goal::bounded();
  if (goal == "freq") {
    if (freq.empty()) throw std::invalid_argument("--goal freq needs --freq");
    auto f = FrequencyVector::parse(freq);
    if (f.colors() != colors)
      throw std::invalid_argument("frequency vector has " +
                                  std::to_string(f.colors()) +
                                  " entries, arena has " + std::to_string(colors) +
                                  " colors");
    return Goal::with_frequency(std::move(f));
  }
  throw std::invalid_argument("unknown goal '" + std::string(goal) + "'");
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json edge_json(const ColoredArena& arena, EdgeId e) {
  const Edge& edge = arena.edge(e);
  return json::array({arena.node(edge.src).id, edge.color, arena.node(edge.dst).id});
}

json path_json(const ColoredArena& arena, std::span<const EdgeId> path) {
  json list = json::array();
  for (EdgeId e : path) list.push_back(edge_json(arena, e));
  return list;
}

json witness_json(const ColoredArena& arena, const GraphDecision& d) {
  if (const auto* loops = std::get_if<LoopSet>(&d.witness)) {
    json list = json::array();
    for (const auto& l : loops->loops)
      list.push_back({{"edges", path_json(arena, l.edges)},
                      {"coefficient", l.coefficient}});
    return {{"kind", "loop_set"},
            {"scc", loops->scc},
            {"weight", loops->weight(arena)},
            {"loops", std::move(list)}};
  }
  if (const auto* walk = std::get_if<ClosedWalk>(&d.witness))
    return {{"kind", "closed_walk"},
            {"walk", path_json(arena, walk->walk)},
            {"access", path_json(arena, walk->access)}};
  return nullptr;
}

json strategy_json(const ColoredArena& arena, const MemorylessStrategy& s) {
  json choices = json::object();
  for (auto [v, e] : s.choices()) choices[arena.node(v).id] = e;
  return {{"kind", "strategy"}, {"choices", std::move(choices)}};
}

namespace {

json goal_json(const Goal& goal) {
  json j = {{"goal", goal.name()}};
  if (goal.frequency) {
    json f = json::array();
    for (const auto& v : goal.frequency->values()) f.push_back(to_string(v));
    j["freq"] = std::move(f);
  }
  return j;
}

json rational_json(const Rational& r) {
  return {{"exact", to_string(r)}, {"approx", r.get_d()}};
}

ColorLimitMatrix target_limit(const ColoredArena& arena, const Goal& goal) {
  switch (goal.kind) {
    case Goal::Kind::bounded: return ColorLimitMatrix::zero(arena.colors());
    case Goal::Kind::balanced:
      return frequency_to_limit(FrequencyVector::uniform(arena.colors()));
    case Goal::Kind::frequency: return frequency_to_limit(*goal.frequency);
  }
  throw std::invalid_argument("unknown goal");
}

}  // namespace

json analyze_payload(const ColoredArena& arena, const Goal& goal) {
  const auto decision = decide_goal(GraphView::whole(arena), goal);
  json result = goal_json(goal);
  result["decision"] = decision.exists ? "exists" : "not_exists";
  if (!decision.pruning_trace.empty()) {
    json trace = json::array();
    for (auto [in, out] : decision.pruning_trace) trace.push_back({in, out});
    result["pruning_trace"] = std::move(trace);
  }
  return {{"result", std::move(result)}, {"witness", witness_json(arena, decision)}};
}

json game_payload(const ColoredArena& arena, const Goal& goal,
                  const SolverOptions& options) {
  const auto game = decide_winner(arena, goal, options);
  json result = goal_json(goal);
  result["winner"] = game.winner == Player::zero ? 0 : 1;
  result["strategy_count"] = game.strategy_count;
  result["strategies_checked"] = game.log.size();
  json log = json::array();
  for (const auto& o : game.log)
    log.push_back({{"id", o.id}, {"goal_path", o.goal_path_exists}});
  result["log"] = std::move(log);
  return {{"result", std::move(result)},
          {"witness", game.witness ? strategy_json(arena, *game.witness) : json(nullptr)}};
}

Synthesis synthesize(const ColoredArena& arena, const Goal& goal,
                     std::uint64_t prefix_length) {
  const GraphView whole = GraphView::whole(arena);
  const auto decision = decide_goal(whole, goal);
  Synthesis out;
  json result = goal_json(goal);
  result["decision"] = decision.exists ? "exists" : "not_exists";
  if (!decision.exists) {
    out.payload = {{"result", std::move(result)}, {"witness", nullptr}};
    return out;
  }
  out.exists = true;

  const auto limit = target_limit(arena, goal);
  std::optional<PathStream> path;
  if (const auto* loops = std::get_if<LoopSet>(&decision.witness)) {
    const auto sccs = strongly_connected_components(whole);
    auto schedule = build_schedule(arena, *loops, sccs.internal_edges[loops->scc]);
    auto access = shortest_path(arena, whole.edges, arena.initial(), schedule.start);
    if (!access) throw std::logic_error("schedule start is unreachable");
    result["schedule"] = json::parse(schedule_to_json(arena, schedule));
    result["access"] = path_json(arena, *access);
    path.emplace(arena, std::move(schedule), std::move(*access));
  } else {
    const auto& walk = std::get<ClosedWalk>(decision.witness);
    auto bounded = bounded_witness_stream(arena, walk.walk, walk.access);
    result["bound"] = bounded.bound;
    result["schedule"] = json::parse(schedule_to_json(arena, bounded.path.schedule()));
    result["access"] = path_json(arena, walk.access);
    path.emplace(std::move(bounded.path));
  }

  PrefixStats stats(arena.colors());
  std::int64_t max_diff = 0;
  std::optional<Rational> boundary_deviation;
  out.prefix.reserve(prefix_length);
  for (std::uint64_t i = 0; i < prefix_length; ++i) {
    const EdgeId e = path->next();
    out.prefix.push_back(e);
    stats.push(arena.edge(e).color);
    max_diff = std::max(max_diff, stats.max_abs_diff());
    if (path->at_round_boundary()) boundary_deviation = stats.deviation(limit);
  }
  result["prefix_length"] = prefix_length;
  result["max_abs_diff"] = max_diff;
  if (prefix_length > 0) result["deviation"] = rational_json(stats.deviation(limit));
  if (boundary_deviation)
    result["last_boundary_deviation"] = rational_json(*boundary_deviation);
  result["prefix"] = path_json(arena, out.prefix);
  out.payload = {{"result", std::move(result)}, {"witness", witness_json(arena, decision)}};
  return out;
}

Verification verify_prefix(const ColoredArena& arena, const FinitePath& path,
                           const Goal& goal, std::optional<std::int64_t> bound) {
  if (!is_walk(arena, path) ||
      (!path.empty() && arena.edge(path.front()).src != arena.initial()))
    throw std::invalid_argument("prefix is not a walk from the initial node");

  PrefixStats stats(arena.colors());
  std::int64_t max_any = 0, max_at_nodes = 0;
  for (EdgeId e : path) {
    stats.push(arena.edge(e).color);
    max_any = std::max(max_any, stats.max_abs_diff());
    if (!arena.node(arena.edge(e).dst).synthetic)
      max_at_nodes = std::max(max_at_nodes, stats.max_abs_diff());
  }

  json result = goal_json(goal);
  result["length"] = path.size();
  result["max_abs_diff"] = max_any;
  result["max_abs_diff_at_nodes"] = max_at_nodes;
  const auto diff = ColorDiffMatrix::from_counts(stats.counts());
  json rows = json::array();
  for (Color a = 1; a <= arena.colors(); ++a) {
    json row = json::array();
    for (Color b = 1; b <= arena.colors(); ++b) row.push_back(diff.at(a, b));
    rows.push_back(std::move(row));
  }
  result["final_diff"] = std::move(rows);

  if (!path.empty()) {
    json freqs = json::array();
    const Rational n(static_cast<long>(path.size()));
    for (auto c : stats.counts()) freqs.push_back(to_string(Rational(static_cast<long>(c)) / n));
    result["final_frequencies"] = std::move(freqs);
    if (goal.kind != Goal::Kind::bounded) {
      const auto f = goal.frequency ? *goal.frequency
                                    : FrequencyVector::uniform(arena.colors());
      Rational worst = 0;
      for (Color a = 1; a <= arena.colors(); ++a) {
        Rational dev = Rational(static_cast<long>(stats.counts()[static_cast<std::size_t>(a - 1)])) / n - f[a];
        if (abs(dev) > worst) worst = abs(dev);
      }
      result["frequency_deviation"] = rational_json(worst);
    }
  }

  Verification out;
  if (bound) {
    result["bound"] = *bound;
    out.pass = max_at_nodes <= *bound;
  }
  result["pass"] = out.pass;
  out.payload = {{"result", std::move(result)}, {"witness", nullptr}};
  return out;
}

}  // namespace colorgames
