#include <colorgames/reductions.hpp>

#include <algorithm>
#include <random>
#include <sstream>

namespace colorgames {

CnfFormula make_formula(int variables, std::vector<Clause> clauses) {
  if (variables < 0) throw std::invalid_argument("negative variable count");
  for (auto& clause : clauses) {
    if (clause.empty()) throw std::invalid_argument("empty clause");
    for (const auto& lit : clause)
      if (lit.variable < 1 || lit.variable > variables)
        throw std::invalid_argument("variable " + std::to_string(lit.variable) +
                                    " outside [1, " + std::to_string(variables) +
                                    "]");
    std::sort(clause.begin(), clause.end());
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  }
  return CnfFormula{variables, std::move(clauses)};
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int variables = -1;
  int declared = -1;
  std::vector<Clause> clauses;
  Clause current;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "c" || first == "%") continue;
    if (first == "p") {
      std::string fmt;
      if (variables >= 0) throw ParseError("duplicate DIMACS header");
      if (!(tokens >> fmt >> variables >> declared) || fmt != "cnf" ||
          variables < 0 || declared < 0)
        throw ParseError("bad DIMACS header: " + line);
      continue;
    }
    if (variables < 0) throw ParseError("clause before 'p cnf' header");
    std::istringstream lits(line);
    long lit = 0;
    std::string token;
    while (lits >> token) {
      try {
        std::size_t used = 0;
        lit = std::stol(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ParseError("bad literal '" + token + "'");
      }
      if (lit == 0) {
        if (current.empty()) throw ParseError("empty clause");
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const long var = lit < 0 ? -lit : lit;
      if (var > variables)
        throw ParseError("literal " + token + " exceeds declared variables");
      current.push_back(Literal{static_cast<int>(var), lit > 0});
    }
  }
  if (variables < 0) throw ParseError("missing 'p cnf' header");
  if (!current.empty()) throw ParseError("last clause is not terminated by 0");
  if (static_cast<int>(clauses.size()) != declared)
    throw ParseError("header declares " + std::to_string(declared) +
                     " clauses, found " + std::to_string(clauses.size()));
  return make_formula(variables, std::move(clauses));
}

std::string to_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.variables << ' ' << formula.clauses.size() << '\n';
  for (const auto& clause : formula.clauses) {
    for (const auto& lit : clause)
      out << (lit.positive ? lit.variable : -lit.variable) << ' ';
    out << "0\n";
  }
  return out.str();
}

bool tautology_bruteforce(const CnfFormula& formula, int max_variables) {
  if (formula.variables > max_variables)
    throw TautologyCapExceeded(std::to_string(formula.variables) +
                               " variables exceed the cap of " +
                               std::to_string(max_variables));
  const std::uint64_t total = std::uint64_t{1} << formula.variables;
  for (std::uint64_t assignment = 0; assignment < total; ++assignment) {
    for (const auto& clause : formula.clauses) {
      const bool satisfied = std::any_of(clause.begin(), clause.end(), [&](const Literal& l) {
        const bool value = (assignment >> (l.variable - 1)) & 1;
        return value == l.positive;
      });
      if (!satisfied) return false;
    }
  }
  return true;
}

ArenaSpec cnf_to_arena_spec(const CnfFormula& formula) {
  const int m = formula.variables;
  const int n = static_cast<int>(formula.clauses.size());
  if (m < 1) throw std::invalid_argument("formula needs at least one variable");

  auto choice = [](int j) { return "v" + std::to_string(j); };
  auto end = [](int j) { return "v" + std::to_string(j) + "'"; };
  // Step i of the upper (lower) branch; step n+1 is the gadget's end node.
  auto step = [&](int j, int i, bool upper) {
    if (i == n + 1) return end(j);
    return std::string(upper ? "" : "~") + "v" + std::to_string(j) + "_" +
           std::to_string(i);
  };
  auto contains = [](const Clause& clause, int var, bool positive) {
    return std::find(clause.begin(), clause.end(), Literal{var, positive}) !=
           clause.end();
  };

  ArenaSpec spec;
  spec.k = n + 1;
  spec.initial = choice(1);
  for (int j = 1; j <= m; ++j) {
    spec.nodes.push_back(Node{choice(j), Player::one, false});
    for (bool upper : {true, false})
      for (int i = 1; i <= n; ++i)
        spec.nodes.push_back(Node{step(j, i, upper), Player::zero, false});
    spec.nodes.push_back(Node{end(j), Player::zero, false});
  }
  for (int j = 1; j <= m; ++j) {
    for (bool upper : {true, false})
      spec.edges.push_back({choice(j), std::nullopt, step(j, 1, upper)});
    for (bool upper : {true, false})
      for (int i = 1; i <= n; ++i) {
        spec.edges.push_back({step(j, i, upper), std::nullopt, step(j, i + 1, upper)});
        if (contains(formula.clauses[static_cast<std::size_t>(i - 1)], j, upper))
          spec.edges.push_back({step(j, i, upper), i, step(j, i + 1, upper)});
      }
    if (j < m)
      spec.edges.push_back({end(j), std::nullopt, choice(j + 1)});
    else
      spec.edges.push_back({end(j), n + 1, choice(1)});
  }
  return spec;
}

ColoredArena cnf_to_arena(const CnfFormula& formula) {
  return desugar_uncolored(cnf_to_arena_spec(formula));
}

ArenaSpec scheduler_arena_spec() {
  ArenaSpec spec;
  spec.k = 2;
  spec.initial = "0,0";
  spec.nodes.push_back(Node{"0,0", Player::zero, false});
  for (const char* id : {"1,0", "2,0", "3,0", "4,0", "5,0",
                         "0,1", "0,2", "0,3", "0,4", "0,5"})
    spec.nodes.push_back(Node{id, Player::one, false});

  using E = ArenaSpec::RawEdge;
  spec.edges = {
      E{"0,0", std::nullopt, "1,0"}, E{"0,0", std::nullopt, "0,1"},
      // job 0: lines 1-5, action edges colored 1
      E{"1,0", std::nullopt, "2,0"}, E{"1,0", std::nullopt, "3,0"},
      E{"2,0", 1, "5,0"}, E{"3,0", 1, "4,0"}, E{"4,0", 1, "5,0"},
      E{"5,0", std::nullopt, "0,0"},
      // job 1, action edges colored 2
      E{"0,1", std::nullopt, "0,2"}, E{"0,1", std::nullopt, "0,3"},
      E{"0,2", 2, "0,5"}, E{"0,3", 2, "0,4"}, E{"0,4", 2, "0,5"},
      E{"0,5", std::nullopt, "0,0"},
  };
  return spec;
}

ColoredArena scheduler_arena() { return desugar_uncolored(scheduler_arena_spec()); }

SchedulerRun simulate_scheduler_policy(const ColoredArena& arena,
                                       const Adversary& adversary,
                                       std::uint64_t steps) {
  const auto hub = arena.find("0,0");
  const auto job0 = arena.find("1,0");
  const auto job1 = arena.find("0,1");
  if (!hub || !job0 || !job1 || arena.colors() != 2)
    throw std::invalid_argument("simulate_scheduler_policy needs the scheduler arena");

  // First non-synthetic node reached along out-degree-one synthetic nodes.
  auto lands_on = [&](EdgeId e) {
    NodeId at = arena.edge(e).dst;
    while (arena.node(at).synthetic) at = arena.edge(arena.out_edges(at).front()).dst;
    return at;
  };
  EdgeId to_job0 = arena.edge_count(), to_job1 = arena.edge_count();
  for (EdgeId e : arena.out_edges(*hub)) {
    if (lands_on(e) == *job0) to_job0 = e;
    if (lands_on(e) == *job1) to_job1 = e;
  }
  if (to_job0 == arena.edge_count() || to_job1 == arena.edge_count())
    throw std::invalid_argument("scheduler arena is missing a lock edge");

  std::mt19937_64 rng(std::holds_alternative<std::uint64_t>(adversary)
                          ? std::get<std::uint64_t>(adversary)
                          : 0);
  const auto* strategy = std::get_if<MemorylessStrategy>(&adversary);

  SchedulerRun run;
  run.play.reserve(steps);
  std::int64_t diff = 0;  // count(color 1) - count(color 2)
  NodeId at = arena.initial();
  for (std::uint64_t step = 0; step < steps; ++step) {
    EdgeId e;
    auto out = arena.out_edges(at);
    if (at == *hub) {
      e = diff <= 0 ? to_job0 : to_job1;
    } else if (out.size() == 1) {
      e = out.front();
    } else if (arena.node(at).owner == Player::one) {
      if (strategy) {
        e = strategy->choice(at);
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1);
        e = out[pick(rng)];
      }
    } else {
      throw std::invalid_argument("unexpected player-0 choice at '" +
                                  arena.node(at).id + "'");
    }
    run.play.push_back(e);
    diff += arena.edge(e).color == 1 ? 1 : -1;
    at = arena.edge(e).dst;
    const std::int64_t magnitude = diff < 0 ? -diff : diff;
    run.max_edge_diff = std::max(run.max_edge_diff, magnitude);
    if (!arena.node(at).synthetic)
      run.max_action_diff = std::max(run.max_action_diff, magnitude);
  }
  return run;
}

}  // namespace colorgames
