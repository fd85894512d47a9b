#pragma once

#include <colorgames/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace colorgames {

using NodeId = std::size_t;
using EdgeId = std::size_t;

// Colors are 1-based: an arena with k colors uses 1..k.
using Color = int;

enum class Player : std::uint8_t { zero = 0, one = 1 };

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Node {
  std::string id;
  Player owner = Player::zero;
  // Intermediate node introduced when an uncolored edge is desugared.
  bool synthetic = false;

  bool operator==(const Node&) const = default;
};

struct Edge {
  NodeId src = 0;
  Color color = 1;
  NodeId dst = 0;

  bool operator==(const Edge&) const = default;
};

// An arena as written in a file: string node ids, and edges that may be
// uncolored. Turned into a ColoredArena by desugar_uncolored().
struct ArenaSpec {
  struct RawEdge {
    std::string src;
    std::optional<Color> color;
    std::string dst;
  };

  int k = 0;
  std::vector<Node> nodes;
  std::string initial;
  std::vector<RawEdge> edges;
};

// Validated k-colored two-player arena. Immutable once constructed; the
// constructor rejects anything that breaks the arena invariants (unique ids,
// known endpoints, colors in [1, k], out-degree >= 1 everywhere).
class ColoredArena {
 public:
  ColoredArena(int k, std::vector<Node> nodes, NodeId initial,
               std::vector<Edge> edges);

  int colors() const { return k_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  NodeId initial() const { return initial_; }

  const Node& node(NodeId v) const { return nodes_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Node> nodes() const { return nodes_; }
  std::span<const Edge> edges() const { return edges_; }

  // Ascending edge ids.
  std::span<const EdgeId> out_edges(NodeId v) const { return out_.at(v); }
  std::span<const EdgeId> in_edges(NodeId v) const { return in_.at(v); }

  std::optional<NodeId> find(std::string_view id) const;
  std::vector<NodeId> nodes_of(Player p) const;

  bool operator==(const ColoredArena& other) const;

 private:
  int k_;
  std::vector<Node> nodes_;
  NodeId initial_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::unordered_map<std::string, NodeId> index_;
};

// A finite path is a sequence of edge ids; see is_walk() for adjacency.
using FinitePath = std::vector<EdgeId>;

bool is_walk(const ColoredArena& arena, std::span<const EdgeId> path);

// Per-color occurrence counts, index 0 holds color 1.
using ColorCounts = std::vector<std::int64_t>;

ColorCounts color_counts(int k, std::span<const Color> word);
ColorCounts color_counts(const ColoredArena& arena,
                         std::span<const EdgeId> path);

// k x k matrix with entry (a, b) = |x|_a - |x|_b.
class ColorDiffMatrix {
 public:
  explicit ColorDiffMatrix(int k);
  static ColorDiffMatrix from_counts(const ColorCounts& counts);

  int colors() const { return k_; }
  // 1-based colors.
  std::int64_t at(Color a, Color b) const;
  bool is_zero() const;
  std::int64_t max_abs() const;

  ColorDiffMatrix operator+(const ColorDiffMatrix& other) const;
  bool operator==(const ColorDiffMatrix&) const = default;

 private:
  int k_;
  std::vector<std::int64_t> entries_;
};

ColorDiffMatrix diff_matrix(int k, std::span<const Color> word);
ColorDiffMatrix diff_matrix(const ColoredArena& arena,
                            std::span<const EdgeId> path);

// |prefix|_a / n for every color; throws std::invalid_argument on an empty
// prefix.
std::vector<Rational> prefix_frequencies(int k, std::span<const Color> word);

// Target asymptotic frequency per color. Entries are nonnegative and sum to
// exactly one.
class FrequencyVector {
 public:
  explicit FrequencyVector(std::vector<Rational> values);
  static FrequencyVector uniform(int k);
  // Comma separated rationals, e.g. "2/3,1/3".
  static FrequencyVector parse(std::string_view text);

  int colors() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](Color a) const { return values_.at(a - 1); }
  std::span<const Rational> values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

struct Goal {
  enum class Kind { balanced, bounded, frequency };

  Kind kind = Kind::balanced;
  std::optional<FrequencyVector> frequency;

  static Goal balanced() { return {Kind::balanced, std::nullopt}; }
  static Goal bounded() { return {Kind::bounded, std::nullopt}; }
  static Goal with_frequency(FrequencyVector f) {
    return {Kind::frequency, std::move(f)};
  }

  std::string name() const;
};

// Replaces every uncolored edge u -> v by a chain of k edges colored 1..k in
// ascending order through k-1 fresh player-0 nodes, then validates.
ColoredArena desugar_uncolored(const ArenaSpec& spec);

ArenaSpec parse_arena_spec(std::string_view json_text);
ColoredArena load_arena(std::string_view json_text);

std::string serialize_arena(const ColoredArena& arena);
std::string serialize_arena_spec(const ArenaSpec& spec);

}  // namespace colorgames
