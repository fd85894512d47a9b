#pragma once

#include <colorgames/arena.hpp>
#include <colorgames/game_solver.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace colorgames {

struct Literal {
  int variable = 1;  // 1-based
  bool positive = true;

  auto operator<=>(const Literal&) const = default;
};

using Clause = std::vector<Literal>;  // sorted, no duplicates

struct CnfFormula {
  int variables = 0;
  std::vector<Clause> clauses;
};

// Throws std::invalid_argument on empty clauses or out-of-range variables.
// Literals inside each clause are sorted and deduplicated.
CnfFormula make_formula(int variables, std::vector<Clause> clauses);

// "p cnf <variables> <clauses>" then clause lines terminated by 0; "c" lines
// are comments. Throws ParseError.
CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula& formula);

class TautologyCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Truth table over all 2^m assignments.
bool tautology_bruteforce(const CnfFormula& formula, int max_variables = 20);

// The (n+1)-colored arena in which player 0 can win the balanced (and the
// bounded) game iff the formula is a tautology. Node ids: "v<j>" for the
// player-1 choice node of variable j, "v<j>_<i>" / "~v<j>_<i>" for the upper
// and lower branch, "v<j>'" for the end of the gadget.
ArenaSpec cnf_to_arena_spec(const CnfFormula& formula);
ColoredArena cnf_to_arena(const CnfFormula& formula);

// Two non-preemptive jobs sharing a lock. Node "i,j" is the joint program
// counter; job 0's action edges use color 1 and job 1's use color 2.
ArenaSpec scheduler_arena_spec();
ColoredArena scheduler_arena();

struct SchedulerRun {
  FinitePath play;
  // max |count_1 - count_2| over prefixes ending at non-synthetic nodes,
  // i.e. the difference in action calls between the two jobs.
  std::int64_t max_action_diff = 0;
  // Same, over every prefix of the desugared play.
  std::int64_t max_edge_diff = 0;
};

// Player 0 hands the lock at "0,0" to the job with fewer actions so far
// (job 0 on ties). Player 1 follows the memoryless strategy, or picks
// uniformly at random from the seed.
using Adversary = std::variant<MemorylessStrategy, std::uint64_t>;

SchedulerRun simulate_scheduler_policy(const ColoredArena& arena,
                                       const Adversary& adversary,
                                       std::uint64_t steps);

}  // namespace colorgames
