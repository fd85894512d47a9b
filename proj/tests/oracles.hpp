// Independent reference implementations used by the tests. Nothing in here
// calls into the decision procedures under test; only the arena container
// and the LinearSystem/CnfFormula data types are shared.
#pragma once

#include <colorgames/arena.hpp>
#include <colorgames/lp.hpp>
#include <colorgames/reductions.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

namespace oracle {

using colorgames::Color;
using colorgames::ColoredArena;
using colorgames::EdgeId;
using colorgames::NodeId;
using colorgames::Rational;

// ---------------------------------------------------------------------------
// Fourier-Motzkin feasibility.

struct Row {
  std::vector<Rational> a;  // a . x <= b
  Rational b;
  bool operator<(const Row& o) const {
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
};

inline Row normalized(Row r) {
  Rational scale = 0;
  for (const auto& v : r.a)
    if (v != 0) {
      scale = abs(v);
      break;
    }
  if (scale != 0) {
    for (auto& v : r.a) v /= scale;
    r.b /= scale;
  }
  return r;
}

inline bool fourier_motzkin_feasible(const colorgames::LinearSystem& system) {
  const std::size_t n = system.variables();
  std::vector<Row> eqs, rows;
  for (const auto& c : system.constraints()) {
    Row r{c.coeffs, c.rhs};
    if (c.relation == colorgames::Relation::eq) {
      eqs.push_back(r);
    } else if (c.relation == colorgames::Relation::le) {
      rows.push_back(r);
    } else {
      for (auto& v : r.a) v = -v;
      r.b = -r.b;
      rows.push_back(r);
    }
  }

  // Substitute equalities away.
  while (!eqs.empty()) {
    Row e = eqs.back();
    eqs.pop_back();
    std::size_t pivot = n;
    for (std::size_t j = 0; j < n; ++j)
      if (e.a[j] != 0) {
        pivot = j;
        break;
      }
    if (pivot == n) {
      if (e.b != 0) return false;
      continue;
    }
    auto eliminate = [&](Row& r) {
      if (r.a[pivot] == 0) return;
      const Rational f = r.a[pivot] / e.a[pivot];
      for (std::size_t j = 0; j < n; ++j) r.a[j] -= f * e.a[j];
      r.b -= f * e.b;
    };
    for (auto& r : eqs) eliminate(r);
    for (auto& r : rows) eliminate(r);
  }

  for (std::size_t var = 0; var < n; ++var) {
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      if (r.a[var] > 0) pos.push_back(r);
      else if (r.a[var] < 0) neg.push_back(r);
      else next.push_back(r);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Row r;
        r.a.resize(n);
        const Rational fp = -q.a[var], fq = p.a[var];
        for (std::size_t j = 0; j < n; ++j) r.a[j] = fp * p.a[j] + fq * q.a[j];
        r.b = fp * p.b + fq * q.b;
        r.a[var] = 0;
        next.push_back(r);
      }
    std::set<Row> unique;
    for (auto& r : next) unique.insert(normalized(std::move(r)));
    rows.assign(unique.begin(), unique.end());
  }
  for (const auto& r : rows)
    if (r.b < 0) return false;
  return true;
}

inline bool satisfies(const colorgames::LinearSystem& system,
                      const std::vector<Rational>& x) {
  for (const auto& c : system.constraints()) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += c.coeffs[j] * x[j];
    switch (c.relation) {
      case colorgames::Relation::eq: if (lhs != c.rhs) return false; break;
      case colorgames::Relation::ge: if (lhs < c.rhs) return false; break;
      case colorgames::Relation::le: if (lhs > c.rhs) return false; break;
    }
  }
  return true;
}

inline colorgames::LinearSystem random_system(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> vars(1, 4), rows(1, 8), coeff(-5, 5), rel(0, 2);
  const std::size_t n = static_cast<std::size_t>(vars(rng));
  colorgames::LinearSystem system(n);
  const int m = rows(rng);
  for (int i = 0; i < m; ++i) {
    std::vector<Rational> a(n);
    for (auto& v : a) v = coeff(rng);
    system.add(std::move(a), static_cast<colorgames::Relation>(rel(rng)), coeff(rng));
  }
  return system;
}

// ---------------------------------------------------------------------------
// Small random graphs: every node reachable from node 0, out-degree >= 1.

inline ColoredArena random_graph(std::mt19937_64& rng, int k) {
  std::uniform_int_distribution<int> nodes_d(1, 5);
  const int n = nodes_d(rng);
  auto pick = [&](int hi) { return std::uniform_int_distribution<int>(0, hi - 1)(rng); };
  auto color = [&] { return std::uniform_int_distribution<int>(1, k)(rng); };

  std::vector<colorgames::Node> nodes;
  for (int v = 0; v < n; ++v) nodes.push_back({"n" + std::to_string(v), colorgames::Player::zero, false});
  std::vector<colorgames::Edge> edges;
  std::vector<int> out(n, 0);
  for (int v = 1; v < n; ++v) {
    const int parent = pick(v);
    edges.push_back({static_cast<NodeId>(parent), color(), static_cast<NodeId>(v)});
    ++out[parent];
  }
  for (int v = 0; v < n; ++v)
    if (out[v] == 0) {
      edges.push_back({static_cast<NodeId>(v), color(), static_cast<NodeId>(pick(n))});
      ++out[v];
    }
  const int target = std::uniform_int_distribution<int>(static_cast<int>(edges.size()), 8)(rng);
  while (static_cast<int>(edges.size()) < target)
    edges.push_back({static_cast<NodeId>(pick(n)), color(), static_cast<NodeId>(pick(n))});
  std::shuffle(edges.begin(), edges.end(), rng);
  return ColoredArena(k, std::move(nodes), 0, std::move(edges));
}

// ---------------------------------------------------------------------------
// Simple cycles, per component reachable from the initial node.

inline std::vector<bool> reachable(const ColoredArena& g, NodeId from) {
  std::vector<bool> seen(g.node_count(), false);
  std::vector<NodeId> todo{from};
  seen[from] = true;
  while (!todo.empty()) {
    NodeId v = todo.back();
    todo.pop_back();
    for (const auto& e : g.edges())
      if (e.src == v && !seen[e.dst]) {
        seen[e.dst] = true;
        todo.push_back(e.dst);
      }
  }
  return seen;
}

// Each cycle is listed once, starting at its smallest node.
inline std::vector<std::vector<EdgeId>> simple_cycles(const ColoredArena& g) {
  std::vector<std::vector<EdgeId>> cycles;
  std::vector<EdgeId> path;
  std::vector<bool> on_path(g.node_count(), false);
  auto dfs = [&](auto&& self, NodeId start, NodeId v) -> void {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edge(e);
      if (edge.src != v || edge.dst < start) continue;
      if (edge.dst == start) {
        path.push_back(e);
        cycles.push_back(path);
        path.pop_back();
      } else if (!on_path[edge.dst]) {
        on_path[edge.dst] = true;
        path.push_back(e);
        self(self, start, edge.dst);
        path.pop_back();
        on_path[edge.dst] = false;
      }
    }
  };
  for (NodeId s = 0; s < g.node_count(); ++s) {
    on_path[s] = true;
    dfs(dfs, s, s);
    on_path[s] = false;
  }
  return cycles;
}

// Is there a nonzero integer vector c with entries <= max_coeff such that
// sum_i c_i (|loop_i|_a - f_a |loop_i|) = 0 for every color a, using loops
// that share one strongly connected component reachable from the start?
inline bool loop_combination_exists(const ColoredArena& g,
                                    const std::vector<Rational>& f,
                                    int max_coeff) {
  const int k = g.colors();
  colorgames::Integer lcm = 1;
  for (const auto& v : f) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  const long scale = lcm.get_si();

  auto cycles = simple_cycles(g);
  auto seen = reachable(g, g.initial());

  // Two nodes share a component iff each reaches the other.
  std::vector<std::vector<bool>> reach;
  for (NodeId v = 0; v < g.node_count(); ++v) reach.push_back(reachable(g, v));
  std::map<NodeId, std::vector<std::vector<long>>> groups;  // component rep -> vectors
  for (const auto& cyc : cycles) {
    const NodeId u = g.edge(cyc.front()).src;
    if (!seen[u]) continue;
    NodeId rep = u;
    for (NodeId w = 0; w < g.node_count(); ++w)
      if (reach[u][w] && reach[w][u]) {
        rep = w;
        break;
      }
    std::vector<long> vec(static_cast<std::size_t>(k), 0);
    for (EdgeId e : cyc) vec[static_cast<std::size_t>(g.edge(e).color - 1)] += scale;
    for (int a = 0; a < k; ++a) {
      Rational share = f[static_cast<std::size_t>(a)] * scale * static_cast<long>(cyc.size());
      vec[static_cast<std::size_t>(a)] -= share.get_num().get_si();
    }
    groups[rep].push_back(vec);
  }

  for (const auto& [rep, vecs] : groups) {
    // Sets of partial sums; `used` tracks sums with some positive coefficient.
    std::set<std::vector<long>> plain{std::vector<long>(static_cast<std::size_t>(k), 0)};
    std::set<std::vector<long>> used;
    for (const auto& v : vecs) {
      std::set<std::vector<long>> next_plain = plain, next_used = used;
      for (int c = 1; c <= max_coeff; ++c) {
        auto shift = [&](const std::vector<long>& s) {
          auto r = s;
          for (int a = 0; a < k; ++a) r[static_cast<std::size_t>(a)] += c * v[static_cast<std::size_t>(a)];
          return r;
        };
        for (const auto& s : plain) next_used.insert(shift(s));
        for (const auto& s : used) next_used.insert(shift(s));
      }
      plain = std::move(next_plain);
      used = std::move(next_used);
      if (used.count(std::vector<long>(static_cast<std::size_t>(k), 0))) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Closed walks of bounded length with zero color difference, from any node
// reachable from the initial node.

inline bool zero_diff_walk_within(const ColoredArena& g, int max_length) {
  const int k = g.colors();
  auto seen = reachable(g, g.initial());
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (!seen[s]) continue;
    // State: node plus counts of colors 1..k-1 minus counts of color k.
    using State = std::pair<NodeId, std::vector<int>>;
    std::set<State> layer{{s, std::vector<int>(static_cast<std::size_t>(k - 1), 0)}};
    for (int len = 1; len <= max_length; ++len) {
      std::set<State> next;
      for (const auto& [v, d] : layer)
        for (const auto& e : g.edges()) {
          if (e.src != v) continue;
          auto nd = d;
          if (e.color == k) {
            for (auto& x : nd) --x;
          } else {
            ++nd[static_cast<std::size_t>(e.color - 1)];
          }
          if (e.dst == s && std::all_of(nd.begin(), nd.end(), [](int x) { return x == 0; }))
            return true;
          next.insert({e.dst, std::move(nd)});
        }
      layer = std::move(next);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Words and walks.

inline std::vector<std::int64_t> counts_of(const ColoredArena& g, const std::vector<EdgeId>& path) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(g.colors()), 0);
  for (EdgeId e : path) ++c[static_cast<std::size_t>(g.edge(e).color - 1)];
  return c;
}

inline bool is_closed_walk(const ColoredArena& g, const std::vector<EdgeId>& walk) {
  if (walk.empty()) return false;
  for (std::size_t i = 0; i < walk.size(); ++i)
    if (g.edge(walk[i]).dst != g.edge(walk[(i + 1) % walk.size()]).src) return false;
  return true;
}

// sigma_i = (1 2)^i 1 3 (1 3 2 3)^i 1 3 3
inline std::vector<Color> sigma_block(int i) {
  std::vector<Color> w;
  for (int j = 0; j < i; ++j) w.insert(w.end(), {1, 2});
  w.insert(w.end(), {1, 3});
  for (int j = 0; j < i; ++j) w.insert(w.end(), {1, 3, 2, 3});
  w.insert(w.end(), {1, 3, 3});
  return w;
}

// ---------------------------------------------------------------------------
// CNF formulas: every set of n distinct nonempty clauses over m variables.

inline std::vector<colorgames::Clause> all_clauses(int m) {
  std::vector<colorgames::Clause> clauses;
  const int literals = 2 * m;
  for (int mask = 1; mask < (1 << literals); ++mask) {
    colorgames::Clause c;
    for (int l = 0; l < literals; ++l)
      if (mask & (1 << l)) c.push_back({l / 2 + 1, l % 2 == 0});
    std::sort(c.begin(), c.end());
    clauses.push_back(c);
  }
  return clauses;
}

template <class F>
void for_each_formula(int m, int n, F&& visit) {
  auto clauses = all_clauses(m);
  std::vector<std::size_t> pick(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
    if (depth == pick.size()) {
      std::vector<colorgames::Clause> cs;
      for (auto i : pick) cs.push_back(clauses[i]);
      visit(colorgames::make_formula(m, std::move(cs)));
      return;
    }
    for (std::size_t i = from; i < clauses.size(); ++i) {
      pick[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
}

inline colorgames::CnfFormula random_formula(std::mt19937_64& rng, int max_m, int max_n) {
  const int m = std::uniform_int_distribution<int>(1, max_m)(rng);
  const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  std::vector<colorgames::Clause> cs;
  for (int i = 0; i < n; ++i) {
    colorgames::Clause c;
    const int len = std::uniform_int_distribution<int>(1, 2 * m)(rng);
    for (int j = 0; j < len; ++j)
      c.push_back({std::uniform_int_distribution<int>(1, m)(rng),
                   std::uniform_int_distribution<int>(0, 1)(rng) == 1});
    cs.push_back(c);
  }
  return colorgames::make_formula(m, std::move(cs));
}

inline bool evaluate(const colorgames::CnfFormula& f, const std::vector<bool>& value) {
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (const auto& l : clause) sat = sat || value[static_cast<std::size_t>(l.variable - 1)] == l.positive;
    if (!sat) return false;
  }
  return true;
}

}  // namespace oracle
