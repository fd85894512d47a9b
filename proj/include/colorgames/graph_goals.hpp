#pragma once

#include <colorgames/arena.hpp>
#include <colorgames/lp.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace colorgames {

// A subgraph of an arena: a subset of its edges plus a start node. Graph
// decisions only look at `edges`; the arena supplies colors and endpoints.
struct GraphView {
  const ColoredArena* arena = nullptr;
  std::vector<EdgeId> edges;  // ascending
  NodeId start = 0;

  static GraphView whole(const ColoredArena& arena);
};

struct SccDecomposition {
  std::vector<std::vector<NodeId>> components;  // each sorted ascending
  std::vector<std::size_t> component_of;        // per arena node
  std::vector<bool> reachable;                  // per component, from start
  std::vector<std::vector<EdgeId>> internal_edges;  // per component
};

SccDecomposition strongly_connected_components(const GraphView& graph);

// l_{a,b}; antisymmetric with zero diagonal.
class ColorLimitMatrix {
 public:
  explicit ColorLimitMatrix(int k);
  static ColorLimitMatrix zero(int k) { return ColorLimitMatrix(k); }

  int colors() const { return k_; }
  const Rational& at(Color a, Color b) const;
  Rational& at(Color a, Color b);

  // Antisymmetry, zero diagonal and l_ab + l_bc = l_ac.
  bool consistent() const;

 private:
  int k_;
  std::vector<Rational> entries_;
};

ColorLimitMatrix frequency_to_limit(const FrequencyVector& f);

enum class ColorPairs {
  all_ordered,    // one balance row per ordered pair (a, b), a != b
  against_last,   // rows (a, k) for a < k; equivalent when L is consistent
};

// Variables are the given edges, in order. Rows: flow conservation per node
// touched by the edges, color balance per pair, x >= 0, and sum(x) = 1 in
// place of the strict sum(x) > 0.
LinearSystem build_color_limit_system(const ColoredArena& arena,
                                      std::span<const EdgeId> edges,
                                      const ColorLimitMatrix& limit,
                                      ColorPairs pairs = ColorPairs::all_ordered);

// Edge loads with flow conservation.
struct Circulation {
  std::map<EdgeId, std::int64_t> load;
};

bool is_circulation(const ColoredArena& arena, const Circulation& c);

struct Loop {
  FinitePath edges;
  std::int64_t coefficient = 1;
};

struct LoopSet {
  std::vector<Loop> loops;
  std::size_t scc = 0;

  std::int64_t weight(const ColoredArena& arena) const;   // sum c_i |loop_i|
  ColorCounts weighted_counts(const ColoredArena& arena) const;
};

// Is the natural linear combination's ratio exactly L? Compares
// sum c_i diff(loop_i) against L * sum c_i |loop_i| entrywise.
bool has_ratio(const ColoredArena& arena, const LoopSet& loops,
               const ColorLimitMatrix& limit);

struct ClosedWalk {
  FinitePath walk;
  FinitePath access;  // from the view's start node to walk.front().src
};

struct GraphDecision {
  bool exists = false;
  std::variant<std::monostate, LoopSet, ClosedWalk> witness;
  // Bounded decisions only: (edges in, edges surviving) per pruning round.
  std::vector<std::pair<std::size_t, std::size_t>> pruning_trace;
};

GraphDecision decide_frequency_path(const GraphView& graph,
                                    const FrequencyVector& f);
GraphDecision decide_balanced_path(const GraphView& graph);
GraphDecision decide_bounded_path(const GraphView& graph);
GraphDecision decide_goal(const GraphView& graph, const Goal& goal);

// Repeatedly walks from the smallest positive edge along the smallest
// positive outgoing edge until a node repeats, then peels off that simple
// loop with its minimum load. Throws std::logic_error on a non-circulation.
LoopSet decompose_circulation(const ColoredArena& arena, const Circulation& c);

// Hierholzer. Traverses every edge exactly load times. Throws
// std::logic_error on degree imbalance or a disconnected support.
FinitePath eulerian_circuit(const ColoredArena& arena, const Circulation& c);

// Shortest path by BFS over `edges`, ties by smallest node index.
std::optional<FinitePath> shortest_path(const ColoredArena& arena,
                                        std::span<const EdgeId> edges,
                                        NodeId from, NodeId to);

}  // namespace colorgames
