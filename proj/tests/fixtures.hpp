#pragma once

#include <colorgames/arena.hpp>

#include <string>

namespace fixtures {

// One node with a self-loop per listed color.
inline colorgames::ColoredArena loops_on_one_node(int k, std::initializer_list<int> colors) {
  std::vector<colorgames::Edge> edges;
  for (int c : colors) edges.push_back({0, c, 0});
  return colorgames::ColoredArena(k, {{"u", colorgames::Player::zero, false}}, 0,
                                  std::move(edges));
}

inline colorgames::ColoredArena two_loops() { return loops_on_one_node(2, {1, 2}); }

// u -(1)-> v -(2)-> u
inline colorgames::ColoredArena two_cycle() {
  return colorgames::load_arena(R"({"k": 2,
    "nodes": [{"id": "u", "owner": 0}, {"id": "v", "owner": 0}],
    "initial": "u",
    "edges": [{"src": "u", "color": 1, "dst": "v"},
              {"src": "v", "color": 2, "dst": "u"}]})");
}

// Self-loop 1 at u, self-loop 2 at v, one-way edge u -> v.
inline colorgames::ColoredArena one_way() {
  return colorgames::load_arena(R"({"k": 2,
    "nodes": [{"id": "u", "owner": 0}, {"id": "v", "owner": 0}],
    "initial": "u",
    "edges": [{"src": "u", "color": 1, "dst": "u"},
              {"src": "u", "color": 1, "dst": "v"},
              {"src": "v", "color": 2, "dst": "v"}]})");
}

// Two cycles through u: u -(1)-> a -(1)-> u and u -(2)-> b -(2)-> u.
inline colorgames::ColoredArena figure_eight() {
  return colorgames::load_arena(R"({"k": 2,
    "nodes": [{"id": "u", "owner": 0}, {"id": "a", "owner": 0}, {"id": "b", "owner": 0}],
    "initial": "u",
    "edges": [{"src": "u", "color": 1, "dst": "a"},
              {"src": "a", "color": 1, "dst": "u"},
              {"src": "u", "color": 2, "dst": "b"},
              {"src": "b", "color": 2, "dst": "u"}]})");
}

// Loops 1.2, 1.3.2.3 and 3 sharing node u.
inline colorgames::ColoredArena three_color_loops() {
  return colorgames::load_arena(R"({"k": 3,
    "nodes": [{"id": "u", "owner": 0}, {"id": "p", "owner": 0},
              {"id": "q", "owner": 0}, {"id": "r", "owner": 0}, {"id": "s", "owner": 0}],
    "initial": "u",
    "edges": [{"src": "u", "color": 1, "dst": "p"},
              {"src": "p", "color": 2, "dst": "u"},
              {"src": "u", "color": 1, "dst": "q"},
              {"src": "q", "color": 3, "dst": "r"},
              {"src": "r", "color": 2, "dst": "s"},
              {"src": "s", "color": 3, "dst": "u"},
              {"src": "u", "color": 3, "dst": "u"}]})");
}

}  // namespace fixtures
