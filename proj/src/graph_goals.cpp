#include <colorgames/graph_goals.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace colorgames {

GraphView GraphView::whole(const ColoredArena& arena) {
  GraphView view;
  view.arena = &arena;
  view.edges.resize(arena.edge_count());
  std::iota(view.edges.begin(), view.edges.end(), EdgeId{0});
  view.start = arena.initial();
  return view;
}

namespace {

std::vector<std::vector<EdgeId>> out_lists(const ColoredArena& arena,
                                           std::span<const EdgeId> edges) {
  std::vector<std::vector<EdgeId>> out(arena.node_count());
  for (EdgeId e : edges) out[arena.edge(e).src].push_back(e);
  return out;
}

std::vector<bool> reachable_nodes(const ColoredArena& arena,
                                  std::span<const EdgeId> edges, NodeId start) {
  auto out = out_lists(arena, edges);
  std::vector<bool> seen(arena.node_count(), false);
  std::vector<NodeId> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (EdgeId e : out[v]) {
      NodeId w = arena.edge(e).dst;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

SccDecomposition strongly_connected_components(const GraphView& graph) {
  const ColoredArena& arena = *graph.arena;
  const std::size_t n = arena.node_count();
  auto out = out_lists(arena, graph.edges);

  // Iterative Tarjan.
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeId> stack;
  std::vector<std::vector<NodeId>> components;
  std::size_t counter = 0;

  struct Frame {
    NodeId v;
    std::size_t next;
  };
  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < out[f.v].size()) {
        NodeId w = arena.edge(out[f.v][f.next++]).dst;
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const NodeId v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<NodeId> comp;
        NodeId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  SccDecomposition result;
  result.components = std::move(components);
  result.component_of.assign(n, 0);
  for (std::size_t c = 0; c < result.components.size(); ++c)
    for (NodeId v : result.components[c]) result.component_of[v] = c;

  auto seen = reachable_nodes(arena, graph.edges, graph.start);
  result.reachable.assign(result.components.size(), false);
  for (std::size_t c = 0; c < result.components.size(); ++c)
    result.reachable[c] = seen[result.components[c].front()];

  result.internal_edges.assign(result.components.size(), {});
  for (EdgeId e : graph.edges) {
    const Edge& edge = arena.edge(e);
    if (result.component_of[edge.src] == result.component_of[edge.dst])
      result.internal_edges[result.component_of[edge.src]].push_back(e);
  }
  return result;
}

ColorLimitMatrix::ColorLimitMatrix(int k)
    : k_(k), entries_(static_cast<std::size_t>(k * k)) {}

const Rational& ColorLimitMatrix::at(Color a, Color b) const {
  if (a < 1 || a > k_ || b < 1 || b > k_) throw std::out_of_range("color");
  return entries_[static_cast<std::size_t>((a - 1) * k_ + (b - 1))];
}

Rational& ColorLimitMatrix::at(Color a, Color b) {
  if (a < 1 || a > k_ || b < 1 || b > k_) throw std::out_of_range("color");
  return entries_[static_cast<std::size_t>((a - 1) * k_ + (b - 1))];
}

bool ColorLimitMatrix::consistent() const {
  for (Color a = 1; a <= k_; ++a) {
    if (at(a, a) != 0) return false;
    for (Color b = 1; b <= k_; ++b) {
      if (at(a, b) != -at(b, a)) return false;
      for (Color c = 1; c <= k_; ++c)
        if (at(a, b) + at(b, c) != at(a, c)) return false;
    }
  }
  return true;
}

ColorLimitMatrix frequency_to_limit(const FrequencyVector& f) {
  ColorLimitMatrix limit(f.colors());
  for (Color a = 1; a <= f.colors(); ++a)
    for (Color b = 1; b <= f.colors(); ++b) limit.at(a, b) = f[a] - f[b];
  return limit;
}

namespace {

std::vector<std::pair<Color, Color>> balance_pairs(int k, ColorPairs pairs) {
  std::vector<std::pair<Color, Color>> result;
  if (pairs == ColorPairs::all_ordered) {
    for (Color a = 1; a <= k; ++a)
      for (Color b = 1; b <= k; ++b)
        if (a != b) result.emplace_back(a, b);
  } else {
    for (Color a = 1; a < k; ++a) result.emplace_back(a, k);
  }
  return result;
}

}  // namespace

LinearSystem build_color_limit_system(const ColoredArena& arena,
                                      std::span<const EdgeId> edges,
                                      const ColorLimitMatrix& limit,
                                      ColorPairs pairs) {
  if (limit.colors() != arena.colors())
    throw std::invalid_argument("color limit matrix has the wrong size");
  const std::size_t m = edges.size();
  LinearSystem system(m);

  std::vector<NodeId> touched;
  for (EdgeId e : edges) {
    touched.push_back(arena.edge(e).src);
    touched.push_back(arena.edge(e).dst);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  const auto balance = balance_pairs(arena.colors(), pairs);
  system.reserve(touched.size() + balance.size() + m + 1);

  for (NodeId v : touched) {
    std::vector<Rational> row(m);
    for (std::size_t j = 0; j < m; ++j) {
      const Edge& edge = arena.edge(edges[j]);
      if (edge.dst == v) row[j] += 1;
      if (edge.src == v) row[j] -= 1;
    }
    system.add(std::move(row), Relation::eq, 0);
  }

  // sum_{E(a)} x - sum_{E(b)} x - l_ab * sum_E x = 0
  for (auto [a, b] : balance) {
    std::vector<Rational> row(m);
    for (std::size_t j = 0; j < m; ++j) {
      const Color c = arena.edge(edges[j]).color;
      row[j] = Rational((c == a ? 1 : 0) - (c == b ? 1 : 0)) - limit.at(a, b);
    }
    system.add(std::move(row), Relation::eq, 0);
  }

  system.add_nonnegativity();
  system.add(std::vector<Rational>(m, Rational(1)), Relation::eq, 1);
  return system;
}

bool is_circulation(const ColoredArena& arena, const Circulation& c) {
  std::vector<std::int64_t> balance(arena.node_count(), 0);
  bool positive = false;
  for (auto [e, x] : c.load) {
    if (e >= arena.edge_count() || x < 0) return false;
    positive = positive || x > 0;
    balance[arena.edge(e).src] -= x;
    balance[arena.edge(e).dst] += x;
  }
  return positive && std::all_of(balance.begin(), balance.end(),
                                  [](std::int64_t b) { return b == 0; });
}

std::int64_t LoopSet::weight(const ColoredArena&) const {
  std::int64_t w = 0;
  for (const auto& l : loops)
    w += l.coefficient * static_cast<std::int64_t>(l.edges.size());
  return w;
}

ColorCounts LoopSet::weighted_counts(const ColoredArena& arena) const {
  ColorCounts total(static_cast<std::size_t>(arena.colors()), 0);
  for (const auto& l : loops) {
    auto counts = color_counts(arena, l.edges);
    for (std::size_t a = 0; a < total.size(); ++a)
      total[a] += l.coefficient * counts[a];
  }
  return total;
}

bool has_ratio(const ColoredArena& arena, const LoopSet& loops,
               const ColorLimitMatrix& limit) {
  if (loops.loops.empty()) return false;
  for (const auto& l : loops.loops)
    if (l.coefficient <= 0 || l.edges.empty() || !is_walk(arena, l.edges) ||
        arena.edge(l.edges.back()).dst != arena.edge(l.edges.front()).src)
      return false;
  const auto counts = loops.weighted_counts(arena);
  const Rational weight(static_cast<long>(loops.weight(arena)));
  for (Color a = 1; a <= arena.colors(); ++a)
    for (Color b = 1; b <= arena.colors(); ++b) {
      const Rational diff(static_cast<long>(counts[static_cast<std::size_t>(a - 1)] -
                                            counts[static_cast<std::size_t>(b - 1)]));
      if (diff != limit.at(a, b) * weight) return false;
    }
  return true;
}

namespace {

// A maximal path whose interior nodes have in- and out-degree one inside the
// edge subset. Flow conservation forces equal loads along it, so the linear
// system needs a single variable per chain.
struct Chain {
  std::vector<std::size_t> positions;  // indices into the edge subset
  NodeId src = 0;
  NodeId dst = 0;
  ColorCounts counts;
};

std::vector<Chain> contract_chains(const ColoredArena& arena,
                                   std::span<const EdgeId> edges) {
  const std::size_t n = arena.node_count();
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<int> in_degree(n, 0);
  std::vector<bool> touched(n, false);
  for (std::size_t p = 0; p < edges.size(); ++p) {
    const Edge& e = arena.edge(edges[p]);
    out[e.src].push_back(p);
    ++in_degree[e.dst];
    touched[e.src] = touched[e.dst] = true;
  }
  std::vector<bool> anchor(n, false);
  for (NodeId v = 0; v < n; ++v)
    anchor[v] = touched[v] && !(in_degree[v] == 1 && out[v].size() == 1);

  std::vector<Chain> chains;
  std::vector<bool> covered(edges.size(), false);
  auto trace = [&](std::size_t first) {
    Chain chain;
    chain.counts.assign(static_cast<std::size_t>(arena.colors()), 0);
    chain.src = arena.edge(edges[first]).src;
    std::size_t p = first;
    for (;;) {
      covered[p] = true;
      chain.positions.push_back(p);
      const Edge& e = arena.edge(edges[p]);
      ++chain.counts[static_cast<std::size_t>(e.color - 1)];
      if (anchor[e.dst]) {
        chain.dst = e.dst;
        break;
      }
      p = out[e.dst].front();
    }
    chains.push_back(std::move(chain));
  };

  for (NodeId v = 0; v < n; ++v)
    if (anchor[v])
      for (std::size_t p : out[v]) trace(p);
  // Whatever is left forms disjoint simple cycles with no anchor.
  for (std::size_t p = 0; p < edges.size(); ++p)
    if (!covered[p]) {
      anchor[arena.edge(edges[p]).src] = true;
      trace(p);
    }
  return chains;
}

// Nonnegative edge loads over `edges` satisfying conservation and the color
// balance for `limit`, normalised by sum(x) = 1 or, when `forced` is given,
// with x_forced >= 1. Returned in the order of `edges`.
std::optional<std::vector<Rational>> find_circulation(
    const ColoredArena& arena, std::span<const EdgeId> edges,
    const ColorLimitMatrix& limit, std::optional<std::size_t> forced = {}) {
  if (edges.empty()) return std::nullopt;
  const auto chains = contract_chains(arena, edges);
  const std::size_t m = chains.size();
  LinearSystem system(m);

  std::vector<NodeId> anchors;
  for (const auto& c : chains) {
    anchors.push_back(c.src);
    anchors.push_back(c.dst);
  }
  std::sort(anchors.begin(), anchors.end());
  anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
  const int k = arena.colors();
  system.reserve(anchors.size() + static_cast<std::size_t>(k) + m);
  for (NodeId v : anchors) {
    std::vector<Rational> row(m);
    for (std::size_t j = 0; j < m; ++j) {
      if (chains[j].dst == v) row[j] += 1;
      if (chains[j].src == v) row[j] -= 1;
    }
    system.add(std::move(row), Relation::eq, 0);
  }

  for (auto [a, b] : balance_pairs(k, ColorPairs::against_last)) {
    std::vector<Rational> row(m);
    for (std::size_t j = 0; j < m; ++j) {
      const auto& counts = chains[j].counts;
      const long len = static_cast<long>(chains[j].positions.size());
      row[j] = Rational(static_cast<long>(counts[static_cast<std::size_t>(a - 1)] -
                                          counts[static_cast<std::size_t>(b - 1)])) -
               limit.at(a, b) * len;
    }
    system.add(std::move(row), Relation::eq, 0);
  }
  system.add_nonnegativity();

  std::vector<Rational> norm(m);
  if (forced) {
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t p : chains[j].positions)
        if (p == *forced) norm[j] = 1;
    system.add(std::move(norm), Relation::ge, 1);
  } else {
    for (std::size_t j = 0; j < m; ++j)
      norm[j] = static_cast<long>(chains[j].positions.size());
    system.add(std::move(norm), Relation::eq, 1);
  }

  auto result = solve_feasibility(system);
  if (!result.feasible()) return std::nullopt;
  std::vector<Rational> loads(edges.size());
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t p : chains[j].positions) loads[p] = (*result.assignment)[j];
  return loads;
}

Circulation to_circulation(std::span<const EdgeId> edges,
                           std::span<const Integer> loads) {
  Circulation c;
  for (std::size_t p = 0; p < edges.size(); ++p) {
    if (sgn(loads[p]) == 0) continue;
    if (!loads[p].fits_slong_p())
      throw std::overflow_error("circulation load exceeds 64 bits");
    c.load[edges[p]] = loads[p].get_si();
  }
  return c;
}

}  // namespace

GraphDecision decide_frequency_path(const GraphView& graph,
                                    const FrequencyVector& f) {
  const ColoredArena& arena = *graph.arena;
  if (f.colors() != arena.colors())
    throw std::invalid_argument("frequency vector has " +
                                std::to_string(f.colors()) +
                                " entries, arena has " +
                                std::to_string(arena.colors()) + " colors");
  const auto limit = frequency_to_limit(f);
  const auto sccs = strongly_connected_components(graph);

  for (std::size_t c = 0; c < sccs.components.size(); ++c) {
    if (!sccs.reachable[c]) continue;
    const auto& internal = sccs.internal_edges[c];
    auto loads = find_circulation(arena, internal, limit);
    if (!loads) continue;

    const auto system = build_color_limit_system(arena, internal, limit);
    const auto scaled = integer_scale(*loads, system);
    LoopSet loops = decompose_circulation(arena, to_circulation(internal, scaled));
    loops.scc = c;
    if (!has_ratio(arena, loops, limit))
      throw std::logic_error("frequency witness fails the ratio identity");

    GraphDecision decision;
    decision.exists = true;
    decision.witness = std::move(loops);
    return decision;
  }
  return {};
}

GraphDecision decide_balanced_path(const GraphView& graph) {
  return decide_frequency_path(graph,
                               FrequencyVector::uniform(graph.arena->colors()));
}

GraphDecision decide_bounded_path(const GraphView& graph) {
  const ColoredArena& arena = *graph.arena;
  const auto zero = ColorLimitMatrix::zero(arena.colors());
  GraphDecision decision;

  std::deque<std::vector<EdgeId>> work;
  {
    const auto sccs = strongly_connected_components(graph);
    for (std::size_t c = 0; c < sccs.components.size(); ++c)
      if (sccs.reachable[c] && !sccs.internal_edges[c].empty())
        work.push_back(sccs.internal_edges[c]);
  }

  while (!work.empty()) {
    const std::vector<EdgeId> candidate = std::move(work.front());
    work.pop_front();

    // An edge survives iff some zero-diff circulation on the candidate set
    // uses it. Each feasible solve certifies its whole support, and the
    // integer-scaled certificates are summed into one circulation.
    std::vector<bool> certified(candidate.size(), false);
    std::vector<Integer> total(candidate.size(), 0);
    auto absorb = [&](const std::vector<Rational>& loads) {
      const auto scaled = clear_denominators(loads);
      for (std::size_t p = 0; p < candidate.size(); ++p)
        if (sgn(scaled[p]) > 0) {
          certified[p] = true;
          total[p] += scaled[p];
        }
    };
    if (auto loads = find_circulation(arena, candidate, zero)) {
      absorb(*loads);
      for (std::size_t p = 0; p < candidate.size(); ++p)
        if (!certified[p])
          if (auto forced = find_circulation(arena, candidate, zero, p))
            absorb(*forced);
    }

    std::vector<EdgeId> survivors;
    for (std::size_t p = 0; p < candidate.size(); ++p)
      if (certified[p]) survivors.push_back(candidate[p]);
    decision.pruning_trace.emplace_back(candidate.size(), survivors.size());

    if (survivors.size() == candidate.size()) {
      // Fixpoint: the support is a whole strongly connected edge set.
      FinitePath walk = eulerian_circuit(arena, to_circulation(candidate, total));
      if (!is_walk(arena, walk) ||
          arena.edge(walk.back()).dst != arena.edge(walk.front()).src ||
          !diff_matrix(arena, walk).is_zero())
        throw std::logic_error("bounded witness is not a zero-diff closed walk");
      auto access = shortest_path(arena, graph.edges, graph.start,
                                  arena.edge(walk.front()).src);
      if (!access) throw std::logic_error("bounded witness is unreachable");
      decision.exists = true;
      decision.witness = ClosedWalk{std::move(walk), std::move(*access)};
      return decision;
    }
    if (survivors.empty()) continue;

    GraphView sub{&arena, survivors, graph.start};
    const auto sccs = strongly_connected_components(sub);
    for (std::size_t c = 0; c < sccs.components.size(); ++c)
      if (!sccs.internal_edges[c].empty()) work.push_back(sccs.internal_edges[c]);
  }
  return decision;
}

GraphDecision decide_goal(const GraphView& graph, const Goal& goal) {
  switch (goal.kind) {
    case Goal::Kind::balanced: return decide_balanced_path(graph);
    case Goal::Kind::bounded: return decide_bounded_path(graph);
    case Goal::Kind::frequency:
      if (!goal.frequency) throw std::invalid_argument("frequency goal without f");
      return decide_frequency_path(graph, *goal.frequency);
  }
  throw std::invalid_argument("unknown goal");
}

LoopSet decompose_circulation(const ColoredArena& arena, const Circulation& c) {
  if (!is_circulation(arena, c))
    throw std::logic_error("decompose_circulation needs a circulation");
  std::vector<std::int64_t> load(arena.edge_count(), 0);
  for (auto [e, x] : c.load) load[e] = x;

  LoopSet result;
  std::map<FinitePath, std::size_t> seen;
  std::vector<std::size_t> position(arena.node_count(), static_cast<std::size_t>(-1));
  for (;;) {
    EdgeId first = arena.edge_count();
    for (auto [e, x] : c.load)
      if (load[e] > 0) {
        first = e;
        break;
      }
    if (first == arena.edge_count()) break;

    FinitePath path;
    std::vector<NodeId> visited;
    NodeId at = arena.edge(first).src;
    position[at] = 0;
    visited.push_back(at);
    FinitePath cycle;
    for (;;) {
      EdgeId next = arena.edge_count();
      for (EdgeId e : arena.out_edges(at))
        if (load[e] > 0) {
          next = e;
          break;
        }
      if (next == arena.edge_count())
        throw std::logic_error("circulation has a dead end");
      path.push_back(next);
      at = arena.edge(next).dst;
      if (position[at] != static_cast<std::size_t>(-1)) {
        cycle.assign(path.begin() + static_cast<std::ptrdiff_t>(position[at]),
                     path.end());
        break;
      }
      position[at] = path.size();
      visited.push_back(at);
    }
    for (NodeId v : visited) position[v] = static_cast<std::size_t>(-1);

    std::int64_t amount = load[cycle.front()];
    for (EdgeId e : cycle) amount = std::min(amount, load[e]);
    for (EdgeId e : cycle) load[e] -= amount;

    if (auto it = seen.find(cycle); it != seen.end()) {
      result.loops[it->second].coefficient += amount;
    } else {
      seen.emplace(cycle, result.loops.size());
      result.loops.push_back(Loop{std::move(cycle), amount});
    }
  }
  return result;
}

FinitePath eulerian_circuit(const ColoredArena& arena, const Circulation& c) {
  if (!is_circulation(arena, c))
    throw std::logic_error("eulerian_circuit needs balanced positive loads");

  // Weak connectivity of the support.
  std::vector<NodeId> parent(arena.node_count());
  std::iota(parent.begin(), parent.end(), NodeId{0});
  auto root = [&](NodeId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::int64_t length = 0;
  for (auto [e, x] : c.load) {
    if (x == 0) continue;
    parent[root(arena.edge(e).src)] = root(arena.edge(e).dst);
    length += x;
  }
  std::optional<NodeId> component;
  for (auto [e, x] : c.load) {
    if (x == 0) continue;
    NodeId r = root(arena.edge(e).src);
    if (component && *component != r)
      throw std::logic_error("eulerian_circuit support is disconnected");
    component = r;
  }

  std::vector<std::int64_t> remaining(arena.edge_count(), 0);
  for (auto [e, x] : c.load) remaining[e] = x;
  std::vector<std::size_t> cursor(arena.node_count(), 0);

  NodeId start = arena.edge_count();
  for (auto [e, x] : c.load)
    if (x > 0) {
      start = arena.edge(e).src;
      break;
    }

  constexpr EdgeId none = static_cast<EdgeId>(-1);
  std::vector<std::pair<NodeId, EdgeId>> stack{{start, none}};
  FinitePath circuit;
  circuit.reserve(static_cast<std::size_t>(length));
  while (!stack.empty()) {
    const NodeId v = stack.back().first;
    auto out = arena.out_edges(v);
    while (cursor[v] < out.size() && remaining[out[cursor[v]]] == 0) ++cursor[v];
    if (cursor[v] < out.size()) {
      const EdgeId e = out[cursor[v]];
      --remaining[e];
      stack.emplace_back(arena.edge(e).dst, e);
    } else {
      if (stack.back().second != none) circuit.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (static_cast<std::int64_t>(circuit.size()) != length)
    throw std::logic_error("eulerian_circuit did not use every edge");
  return circuit;
}

std::optional<FinitePath> shortest_path(const ColoredArena& arena,
                                        std::span<const EdgeId> edges,
                                        NodeId from, NodeId to) {
  if (from == to) return FinitePath{};
  auto out = out_lists(arena, edges);
  for (auto& list : out)
    std::sort(list.begin(), list.end(), [&](EdgeId a, EdgeId b) {
      return std::pair(arena.edge(a).dst, a) < std::pair(arena.edge(b).dst, b);
    });

  constexpr EdgeId none = static_cast<EdgeId>(-1);
  std::vector<EdgeId> via(arena.node_count(), none);
  std::vector<bool> seen(arena.node_count(), false);
  std::deque<NodeId> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    for (EdgeId e : out[v]) {
      NodeId w = arena.edge(e).dst;
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = e;
      if (w == to) {
        FinitePath path;
        for (NodeId at = to; at != from; at = arena.edge(via[at]).src)
          path.push_back(via[at]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

}  // namespace colorgames
