// colorgames: decide and witness balanced, bounded and frequency-f paths and
// games on colored arenas.
//
// Exit codes: 0 = exists / player 0 wins / verification passed,
//             1 = not exists / player 1 wins / verification failed,
//             2 = error.
#include <colorgames/reductions.hpp>
#include <colorgames/report.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace colorgames;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

struct Invocation {
  std::string command;
  std::string input;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
};

int emit(const Invocation& inv, json payload, int code) {
  json report;
  report["schema"] = report_schema;
  report["command"] = inv.command;
  report["input_digest"] = digest(inv.input);
  report["result"] = std::move(payload["result"]);
  report["witness"] = std::move(payload["witness"]);
  report["timing_ms"] = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - inv.started)
                            .count();
  std::cout << report.dump(2) << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored arena games with balance, bounded-difference and frequency goals"};
  app.require_subcommand(1);

  std::string arena_path, goal_name = "balanced", freq, prefix_path, prefix_out,
                          dimacs_path, adversary;
  std::uint64_t max_strategies = std::uint64_t{1} << 20;
  std::uint64_t emit_prefix = 100;
  std::uint64_t steps = 10000;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> bound;
  unsigned threads = 1;

  auto add_goal = [&](CLI::App* cmd) {
    cmd->add_option("--arena", arena_path, "Arena JSON file")->required();
    cmd->add_option("--goal", goal_name, "balanced | bounded | freq")
        ->check(CLI::IsMember({"balanced", "bounded", "freq"}));
    cmd->add_option("--freq", freq, "Exact frequencies, e.g. \"2/3,1/3\"");
  };

  auto* analyze = app.add_subcommand("analyze", "Decide whether the graph has a goal path");
  add_goal(analyze);

  auto* solve = app.add_subcommand("solve", "Decide the two-player game");
  add_goal(solve);
  solve->add_option("--max-strategies", max_strategies, "Strategy budget");
  solve->add_option("--threads", threads, "Worker threads");

  auto* synth = app.add_subcommand("synth", "Synthesize a witness path");
  add_goal(synth);
  synth->add_option("--emit-prefix", emit_prefix, "Prefix length to emit");
  synth->add_option("--prefix-out", prefix_out, "Also write the prefix as 'src color dst' lines");

  auto* verify = app.add_subcommand("verify", "Check a finite prefix");
  add_goal(verify);
  verify->add_option("--prefix", prefix_path, "File of 'src color dst' lines")->required();
  verify->add_option("--bound", bound, "Bound on |diff| at original nodes");

  auto* gen = app.add_subcommand("gen", "Generate fixture arenas");
  gen->require_subcommand(1);
  auto* gen_cnf = gen->add_subcommand("cnf", "Arena of a CNF formula");
  gen_cnf->add_option("--dimacs", dimacs_path, "DIMACS CNF file")->required();
  gen->add_subcommand("scheduler", "Two-job scheduler arena");

  auto* simulate = app.add_subcommand("simulate", "Run the counting scheduler policy");
  simulate->add_option("--steps", steps, "Number of edges");
  simulate->add_option("--adversary", adversary,
                       "Job branches as two letters, S(hort) or L(ong), e.g. SL")
      ->check(CLI::IsMember({"SS", "SL", "LS", "LL"}));
  simulate->add_option("--seed", seed, "Random adversary seed");
  simulate->add_option("--prefix-out", prefix_out, "Write the play as 'src color dst' lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    Invocation inv;
    if (*gen) {
      if (*gen_cnf) {
        inv.input = read_file(dimacs_path);
        std::cout << serialize_arena_spec(cnf_to_arena_spec(parse_dimacs(inv.input)))
                  << '\n';
      } else {
        std::cout << serialize_arena_spec(scheduler_arena_spec()) << '\n';
      }
      return 0;
    }

    if (*simulate) {
      inv.command = "simulate";
      const auto arena = scheduler_arena();
      Adversary adv = seed.value_or(0);
      if (!adversary.empty()) {
        std::vector<std::pair<NodeId, EdgeId>> choices;
        for (auto [job, letter] : {std::pair{"1,0", adversary[0]}, std::pair{"0,1", adversary[1]}}) {
          const NodeId v = *arena.find(job);
          // Out-edges in file order: short branch first, long branch second.
          choices.emplace_back(v, arena.out_edges(v)[letter == 'S' ? 0 : 1]);
        }
        for (NodeId v : arena.nodes_of(Player::one))
          if (arena.out_edges(v).size() == 1) choices.emplace_back(v, arena.out_edges(v).front());
        adv = MemorylessStrategy(arena, std::move(choices));
      }
      const auto run = simulate_scheduler_policy(arena, adv, steps);
      if (!prefix_out.empty()) write_file(prefix_out, format_prefix(arena, run.play));
      json result = {{"steps", steps},
                     {"adversary", adversary.empty() ? "random" : adversary},
                     {"max_action_diff", run.max_action_diff},
                     {"max_edge_diff", run.max_edge_diff}};
      if (adversary.empty()) result["seed"] = seed.value_or(0);
      return emit(inv, {{"result", result}, {"witness", nullptr}}, 0);
    }

    inv.input = read_file(arena_path);
    const auto arena = load_arena(inv.input);
    const Goal goal = parse_goal(goal_name, freq, arena.colors());

    if (*analyze) {
      inv.command = "analyze";
      auto payload = analyze_payload(arena, goal);
      const bool exists = payload["result"]["decision"] == "exists";
      return emit(inv, std::move(payload), exists ? 0 : 1);
    }
    if (*solve) {
      inv.command = "solve";
      auto payload = game_payload(arena, goal, SolverOptions{max_strategies, threads});
      const bool player0 = payload["result"]["winner"] == 0;
      return emit(inv, std::move(payload), player0 ? 0 : 1);
    }
    if (*synth) {
      inv.command = "synth";
      auto out = synthesize(arena, goal, emit_prefix);
      if (!out.exists) return emit(inv, std::move(out.payload), 1);
      if (!prefix_out.empty()) write_file(prefix_out, format_prefix(arena, out.prefix));
      return emit(inv, std::move(out.payload), 0);
    }
    if (*verify) {
      inv.command = "verify";
      const auto prefix_text = read_file(prefix_path);
      inv.input += prefix_text;
      const auto path = parse_prefix(arena, prefix_text);
      auto out = verify_prefix(arena, path, goal, bound);
      return emit(inv, std::move(out.payload), out.pass ? 0 : 1);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
