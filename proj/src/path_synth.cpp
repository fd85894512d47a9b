#include <colorgames/path_synth.hpp>

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace colorgames {

std::int64_t PathSchedule::loop_weight() const {
  std::int64_t n = 0;
  for (std::size_t j = 0; j < loops.size(); ++j)
    n += coeffs[j] * static_cast<std::int64_t>(loops[j].size());
  return n;
}

std::int64_t PathSchedule::connector_length() const {
  std::int64_t m = 0;
  for (const auto& c : connectors) m += static_cast<std::int64_t>(c.size());
  return m;
}

std::int64_t PathSchedule::round_length(std::int64_t round) const {
  return connector_length() + round * loop_weight();
}

std::int64_t PathSchedule::boundary(std::int64_t round) const {
  return round * connector_length() + loop_weight() * round * (round + 1) / 2;
}

namespace {

bool closed_walk(const ColoredArena& arena, const FinitePath& walk) {
  return !walk.empty() && is_walk(arena, walk) &&
         arena.edge(walk.back()).dst == arena.edge(walk.front()).src;
}

}  // namespace

PathSchedule build_schedule(const ColoredArena& arena, const LoopSet& loops,
                            std::span<const EdgeId> edges) {
  if (loops.loops.empty()) throw std::logic_error("empty loop set");
  PathSchedule schedule;
  for (const auto& loop : loops.loops) {
    if (!closed_walk(arena, loop.edges) || loop.coefficient < 1)
      throw std::logic_error("loop set contains an invalid loop");
    schedule.loops.push_back(loop.edges);
    schedule.coeffs.push_back(loop.coefficient);
  }
  schedule.start = arena.edge(schedule.loops.front().front()).src;

  const std::size_t h = schedule.loops.size();
  for (std::size_t j = 0; j < h; ++j) {
    const NodeId from = arena.edge(schedule.loops[j].front()).src;
    const NodeId to = arena.edge(schedule.loops[(j + 1) % h].front()).src;
    auto path = shortest_path(arena, edges, from, to);
    if (!path)
      throw std::logic_error("loops are not mutually reachable: no path from '" +
                             arena.node(from).id + "' to '" + arena.node(to).id +
                             "'");
    schedule.connectors.push_back(std::move(*path));
  }
  return schedule;
}

PathStream::PathStream(const ColoredArena& arena, PathSchedule schedule,
                       FinitePath prefix)
    : arena_(&arena), schedule_(std::move(schedule)), prefix_(std::move(prefix)) {
  if (schedule_.loops.empty() || schedule_.coeffs.size() != schedule_.loops.size() ||
      schedule_.connectors.size() != schedule_.loops.size())
    throw std::logic_error("malformed schedule");
  for (std::size_t j = 0; j < schedule_.loops.size(); ++j)
    if (schedule_.loops[j].empty() || schedule_.coeffs[j] < 1)
      throw std::logic_error("schedule loops must be nonempty with c >= 1");
  if (!is_walk(arena, prefix_) ||
      (!prefix_.empty() && arena.edge(prefix_.back()).dst != schedule_.start))
    throw std::logic_error("prefix does not lead to the schedule's start");
  skip_empty();
}

void PathStream::skip_empty() {
  const std::size_t segments = 2 * schedule_.loops.size();
  while (segment_ % 2 == 1 && schedule_.connectors[segment_ / 2].empty()) {
    if (++segment_ == segments) {
      segment_ = 0;
      ++round_;
    }
  }
}

EdgeId PathStream::next() {
  ++emitted_;
  if (in_prefix()) return prefix_[prefix_pos_++];

  const std::size_t j = segment_ / 2;
  EdgeId e;
  bool segment_done = false;
  if (segment_ % 2 == 0) {
    const auto& loop = schedule_.loops[j];
    e = loop[offset_++];
    if (offset_ == loop.size()) {
      offset_ = 0;
      if (++repeat_ == round_ * schedule_.coeffs[j]) {
        repeat_ = 0;
        segment_done = true;
      }
    }
  } else {
    const auto& conn = schedule_.connectors[j];
    e = conn[offset_++];
    if (offset_ == conn.size()) {
      offset_ = 0;
      segment_done = true;
    }
  }
  if (segment_done) {
    if (++segment_ == 2 * schedule_.loops.size()) {
      segment_ = 0;
      ++round_;
    }
    skip_empty();
  }
  return e;
}

bool PathStream::at_round_boundary() const {
  return !in_prefix() && segment_ == 0 && repeat_ == 0 && offset_ == 0;
}

PathStream stream(const ColoredArena& arena, const PathSchedule& schedule) {
  return PathStream(arena, schedule);
}

std::int64_t PrefixStats::max_abs_diff() const {
  if (counts_.empty()) return 0;
  auto [lo, hi] = std::minmax_element(counts_.begin(), counts_.end());
  return *hi - *lo;
}

Rational PrefixStats::deviation(const ColorLimitMatrix& limit) const {
  if (length_ == 0) throw std::invalid_argument("deviation of an empty prefix");
  const int k = static_cast<int>(counts_.size());
  const Rational n(Integer(std::to_string(length_)));
  Rational worst = 0;
  Rational dev;
  for (Color a = 1; a <= k; ++a)
    for (Color b = 1; b <= k; ++b) {
      dev = Rational(static_cast<long>(counts_[static_cast<std::size_t>(a - 1)] -
                                       counts_[static_cast<std::size_t>(b - 1)])) /
                n -
            limit.at(a, b);
      if (abs(dev) > worst) worst = abs(dev);
    }
  return worst;
}

Rational measure_convergence(PathStream& path, std::uint64_t n,
                             const ColorLimitMatrix& limit) {
  if (n == 0) throw std::invalid_argument("prefix length must be positive");
  if (path.emitted() != 0)
    throw std::invalid_argument("measure_convergence needs a fresh stream");
  PrefixStats stats(path.arena().colors());
  for (std::uint64_t i = 0; i < n; ++i)
    stats.push(path.arena().edge(path.next()).color);
  return stats.deviation(limit);
}

BoundedStream bounded_witness_stream(const ColoredArena& arena,
                                     const FinitePath& walk,
                                     const FinitePath& access) {
  if (!closed_walk(arena, walk))
    throw std::logic_error("bounded witness must be a closed walk");
  if (!diff_matrix(arena, walk).is_zero())
    throw std::logic_error("bounded witness walk has a nonzero diff matrix");
  if (!is_walk(arena, access) ||
      (!access.empty() &&
       arena.edge(access.back()).dst != arena.edge(walk.front()).src))
    throw std::logic_error("access path does not reach the witness walk");

  auto excursion = [&](const FinitePath& path) {
    PrefixStats stats(arena.colors());
    std::int64_t worst = 0;
    for (EdgeId e : path) {
      stats.push(arena.edge(e).color);
      worst = std::max(worst, stats.max_abs_diff());
    }
    return worst;
  };
  const std::int64_t bound = excursion(access) + excursion(walk);

  PathSchedule schedule;
  schedule.start = arena.edge(walk.front()).src;
  schedule.loops = {walk};
  schedule.coeffs = {1};
  schedule.connectors = {FinitePath{}};
  return BoundedStream{PathStream(arena, std::move(schedule), access), bound};
}

namespace {

nlohmann::json triples(const ColoredArena& arena, const FinitePath& path) {
  auto list = nlohmann::json::array();
  for (EdgeId e : path) {
    const Edge& edge = arena.edge(e);
    list.push_back({arena.node(edge.src).id, edge.color, arena.node(edge.dst).id});
  }
  return list;
}

}  // namespace

std::string schedule_to_json(const ColoredArena& arena,
                             const PathSchedule& schedule) {
  nlohmann::json doc;
  doc["start"] = arena.node(schedule.start).id;
  doc["coeffs"] = schedule.coeffs;
  doc["loops"] = nlohmann::json::array();
  for (const auto& l : schedule.loops) doc["loops"].push_back(triples(arena, l));
  doc["connectors"] = nlohmann::json::array();
  for (const auto& c : schedule.connectors)
    doc["connectors"].push_back(triples(arena, c));
  return doc.dump();
}

std::string format_prefix(const ColoredArena& arena,
                          std::span<const EdgeId> path) {
  std::ostringstream out;
  for (EdgeId e : path) {
    const Edge& edge = arena.edge(e);
    out << arena.node(edge.src).id << ' ' << edge.color << ' '
        << arena.node(edge.dst).id << '\n';
  }
  return out.str();
}

FinitePath parse_prefix(const ColoredArena& arena, std::string_view text) {
  FinitePath path;
  NodeId at = arena.initial();
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string src, dst, extra;
    int color = 0;
    if (!(fields >> src)) continue;
    if (!(fields >> color >> dst) || (fields >> extra))
      throw ParseError("prefix line " + std::to_string(line_no) +
                       ": expected 'src color dst'");
    if (arena.node(at).id != src)
      throw ParseError("prefix line " + std::to_string(line_no) + ": walk is at '" +
                       arena.node(at).id + "', not '" + src + "'");
    auto target = arena.find(dst);
    EdgeId found = arena.edge_count();
    if (target)
      for (EdgeId e : arena.out_edges(at))
        if (arena.edge(e).color == color && arena.edge(e).dst == *target) {
          found = e;
          break;
        }
    if (found == arena.edge_count())
      throw ParseError("prefix line " + std::to_string(line_no) + ": no edge " +
                       src + " " + std::to_string(color) + " " + dst);
    path.push_back(found);
    at = arena.edge(found).dst;
  }
  return path;
}

}  // namespace colorgames
