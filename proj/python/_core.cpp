#include <colorgames/reductions.hpp>
#include <colorgames/report.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace colorgames;

namespace {

// JSON crosses the boundary as text; the Python side parses it.
py::tuple synth(const std::string& arena_text, const std::string& goal, const std::string& freq,
                std::uint64_t length) {
  const auto arena = load_arena(arena_text);
  Synthesis s;
  {
    py::gil_scoped_release release;
    s = synthesize(arena, parse_goal(goal, freq, arena.colors()), length);
  }
  return py::make_tuple(s.payload.dump(), format_prefix(arena, s.prefix), s.exists);
}

py::tuple verify(const std::string& arena_text, const std::string& prefix, const std::string& goal,
                 const std::string& freq, std::optional<std::int64_t> bound) {
  const auto arena = load_arena(arena_text);
  auto v = verify_prefix(arena, parse_prefix(arena, prefix), parse_goal(goal, freq, arena.colors()),
                         bound);
  return py::make_tuple(v.payload.dump(), v.pass);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Colored arena games: decisions, witnesses and fixtures";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<StrategyLimitExceeded>(m, "StrategyLimitExceeded", PyExc_RuntimeError);
  py::register_exception<TautologyCapExceeded>(m, "TautologyCapExceeded", PyExc_RuntimeError);

  m.def("analyze", [](const std::string& arena_text, const std::string& goal, const std::string& freq) {
    const auto arena = load_arena(arena_text);
    const auto g = parse_goal(goal, freq, arena.colors());
    py::gil_scoped_release release;
    return analyze_payload(arena, g).dump();
  }, py::arg("arena"), py::arg("goal") = "balanced", py::arg("freq") = "");

  m.def("solve", [](const std::string& arena_text, const std::string& goal, const std::string& freq,
                    std::uint64_t max_strategies, unsigned threads) {
    const auto arena = load_arena(arena_text);
    const auto g = parse_goal(goal, freq, arena.colors());
    py::gil_scoped_release release;
    return game_payload(arena, g, SolverOptions{max_strategies, threads}).dump();
  }, py::arg("arena"), py::arg("goal") = "balanced", py::arg("freq") = "",
     py::arg("max_strategies") = std::uint64_t{1} << 20, py::arg("threads") = 1u);

  m.def("synth", &synth, py::arg("arena"), py::arg("goal") = "balanced", py::arg("freq") = "",
        py::arg("length") = 100);
  m.def("verify", &verify, py::arg("arena"), py::arg("prefix"), py::arg("goal") = "balanced",
        py::arg("freq") = "", py::arg("bound") = py::none());

  m.def("gen_cnf", [](const std::string& dimacs) {
    return serialize_arena_spec(cnf_to_arena_spec(parse_dimacs(dimacs)));
  }, py::arg("dimacs"));
  m.def("gen_scheduler", [] { return serialize_arena_spec(scheduler_arena_spec()); });
  m.def("is_tautology", [](const std::string& dimacs) {
    return tautology_bruteforce(parse_dimacs(dimacs));
  }, py::arg("dimacs"));

  m.def("diff_matrix", [](int k, const std::vector<Color>& word) {
    const auto d = diff_matrix(k, word);
    std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(k));
    for (Color a = 1; a <= k; ++a)
      for (Color b = 1; b <= k; ++b) rows[static_cast<std::size_t>(a - 1)].push_back(d.at(a, b));
    return rows;
  }, py::arg("k"), py::arg("word"));

  m.attr("report_schema") = report_schema;
}
