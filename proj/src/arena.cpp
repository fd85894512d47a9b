#include <colorgames/arena.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

namespace colorgames {

using nlohmann::json;

ColoredArena::ColoredArena(int k, std::vector<Node> nodes, NodeId initial,
                           std::vector<Edge> edges)
    : k_(k),
      nodes_(std::move(nodes)),
      initial_(initial),
      edges_(std::move(edges)),
      out_(nodes_.size()),
      in_(nodes_.size()) {
  if (k_ < 1) throw ValidationError("arena needs at least one color");
  if (nodes_.empty()) throw ValidationError("arena has no nodes");
  if (initial_ >= nodes_.size())
    throw ValidationError("initial node out of range");

  for (NodeId v = 0; v < nodes_.size(); ++v) {
    auto [it, fresh] = index_.emplace(nodes_[v].id, v);
    if (!fresh) throw ValidationError("duplicate node id '" + nodes_[v].id + "'");
  }
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.src >= nodes_.size() || edge.dst >= nodes_.size())
      throw ValidationError("edge " + std::to_string(e) +
                            " references a missing node");
    if (edge.color < 1 || edge.color > k_)
      throw ValidationError("edge " + std::to_string(e) + " has color " +
                            std::to_string(edge.color) + " outside [1, " +
                            std::to_string(k_) + "]");
    out_[edge.src].push_back(e);
    in_[edge.dst].push_back(e);
  }
  for (NodeId v = 0; v < nodes_.size(); ++v)
    if (out_[v].empty())
      throw ValidationError("node '" + nodes_[v].id + "' has no outgoing edge");
}

std::optional<NodeId> ColoredArena::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<NodeId> ColoredArena::nodes_of(Player p) const {
  std::vector<NodeId> result;
  for (NodeId v = 0; v < nodes_.size(); ++v)
    if (nodes_[v].owner == p) result.push_back(v);
  return result;
}

bool ColoredArena::operator==(const ColoredArena& other) const {
  return k_ == other.k_ && initial_ == other.initial_ &&
         nodes_ == other.nodes_ && edges_ == other.edges_;
}

bool is_walk(const ColoredArena& arena, std::span<const EdgeId> path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= arena.edge_count()) return false;
    if (i > 0 && arena.edge(path[i - 1]).dst != arena.edge(path[i]).src)
      return false;
  }
  return true;
}

ColorCounts color_counts(int k, std::span<const Color> word) {
  ColorCounts counts(static_cast<std::size_t>(k), 0);
  for (Color c : word) {
    if (c < 1 || c > k)
      throw std::invalid_argument("color " + std::to_string(c) +
                                  " outside [1, k]");
    ++counts[static_cast<std::size_t>(c - 1)];
  }
  return counts;
}

ColorCounts color_counts(const ColoredArena& arena,
                         std::span<const EdgeId> path) {
  ColorCounts counts(static_cast<std::size_t>(arena.colors()), 0);
  for (EdgeId e : path) ++counts[static_cast<std::size_t>(arena.edge(e).color - 1)];
  return counts;
}

ColorDiffMatrix::ColorDiffMatrix(int k)
    : k_(k), entries_(static_cast<std::size_t>(k * k), 0) {}

ColorDiffMatrix ColorDiffMatrix::from_counts(const ColorCounts& counts) {
  ColorDiffMatrix m(static_cast<int>(counts.size()));
  for (int a = 0; a < m.k_; ++a)
    for (int b = 0; b < m.k_; ++b)
      m.entries_[static_cast<std::size_t>(a * m.k_ + b)] =
          counts[static_cast<std::size_t>(a)] - counts[static_cast<std::size_t>(b)];
  return m;
}

std::int64_t ColorDiffMatrix::at(Color a, Color b) const {
  if (a < 1 || a > k_ || b < 1 || b > k_)
    throw std::out_of_range("color outside [1, k]");
  return entries_[static_cast<std::size_t>((a - 1) * k_ + (b - 1))];
}

bool ColorDiffMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](std::int64_t x) { return x == 0; });
}

std::int64_t ColorDiffMatrix::max_abs() const {
  std::int64_t best = 0;
  for (auto x : entries_) best = std::max(best, x < 0 ? -x : x);
  return best;
}

ColorDiffMatrix ColorDiffMatrix::operator+(const ColorDiffMatrix& other) const {
  if (k_ != other.k_) throw std::invalid_argument("color count mismatch");
  ColorDiffMatrix sum(k_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    sum.entries_[i] = entries_[i] + other.entries_[i];
  return sum;
}

ColorDiffMatrix diff_matrix(int k, std::span<const Color> word) {
  return ColorDiffMatrix::from_counts(color_counts(k, word));
}

ColorDiffMatrix diff_matrix(const ColoredArena& arena,
                            std::span<const EdgeId> path) {
  return ColorDiffMatrix::from_counts(color_counts(arena, path));
}

std::vector<Rational> prefix_frequencies(int k, std::span<const Color> word) {
  if (word.empty())
    throw std::invalid_argument("frequencies of an empty prefix are undefined");
  auto counts = color_counts(k, word);
  std::vector<Rational> freq;
  freq.reserve(counts.size());
  const auto n = static_cast<long>(word.size());
  for (auto c : counts) {
    Rational r(static_cast<long>(c), n);
    r.canonicalize();
    freq.push_back(r);
  }
  return freq;
}

FrequencyVector::FrequencyVector(std::vector<Rational> values)
    : values_(std::move(values)) {
  if (values_.empty())
    throw std::invalid_argument("frequency vector needs at least one entry");
  Rational sum = 0;
  for (const auto& v : values_) {
    if (v < 0) throw std::invalid_argument("negative frequency " + to_string(v));
    sum += v;
  }
  if (sum != 1)
    throw std::invalid_argument("frequencies sum to " + to_string(sum) +
                                ", expected 1");
}

FrequencyVector FrequencyVector::uniform(int k) {
  if (k < 1) throw std::invalid_argument("need at least one color");
  return FrequencyVector(std::vector<Rational>(static_cast<std::size_t>(k),
                                               Rational(1, k)));
}

FrequencyVector FrequencyVector::parse(std::string_view text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    values.push_back(parse_rational(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return FrequencyVector(std::move(values));
}

std::string Goal::name() const {
  switch (kind) {
    case Kind::balanced: return "balanced";
    case Kind::bounded: return "bounded";
    case Kind::frequency: return "freq";
  }
  return "unknown";
}

ColoredArena desugar_uncolored(const ArenaSpec& spec) {
  if (spec.k < 1) throw ValidationError("arena needs at least one color");

  std::vector<Node> nodes = spec.nodes;
  std::unordered_map<std::string, NodeId> index;
  for (NodeId v = 0; v < nodes.size(); ++v)
    if (!index.emplace(nodes[v].id, v).second)
      throw ValidationError("duplicate node id '" + nodes[v].id + "'");

  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end())
      throw ValidationError("unknown node '" + id + "'");
    return it->second;
  };
  std::unordered_set<std::string> taken;
  for (const auto& n : nodes) taken.insert(n.id);
  auto fresh_node = [&](std::string id) {
    while (taken.count(id)) id += '\'';
    taken.insert(id);
    nodes.push_back(Node{id, Player::zero, true});
    return nodes.size() - 1;
  };

  const NodeId initial = lookup(spec.initial);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < spec.edges.size(); ++i) {
    const auto& raw = spec.edges[i];
    const NodeId src = lookup(raw.src);
    const NodeId dst = lookup(raw.dst);
    if (raw.color) {
      edges.push_back(Edge{src, *raw.color, dst});
      continue;
    }
    NodeId at = src;
    for (Color c = 1; c < spec.k; ++c) {
      NodeId mid = fresh_node(raw.src + "~" + raw.dst + "#" + std::to_string(i) +
                              "." + std::to_string(c));
      edges.push_back(Edge{at, c, mid});
      at = mid;
    }
    edges.push_back(Edge{at, spec.k, dst});
  }
  return ColoredArena(spec.k, std::move(nodes), initial, std::move(edges));
}

namespace {

template <class T>
T field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name))
    throw ParseError(std::string("missing field '") + name + "'");
  try {
    return obj.at(name).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("field '") + name + "' has the wrong type");
  }
}

}  // namespace

ArenaSpec parse_arena_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("malformed JSON: ") + err.what());
  }
  if (!doc.is_object()) throw ParseError("arena file must be a JSON object");

  ArenaSpec spec;
  spec.k = field<int>(doc, "k");
  spec.initial = field<std::string>(doc, "initial");

  const json nodes = field<json>(doc, "nodes");
  if (!nodes.is_array()) throw ParseError("'nodes' must be an array");
  for (const auto& n : nodes) {
    Node node;
    node.id = field<std::string>(n, "id");
    const int owner = field<int>(n, "owner");
    if (owner != 0 && owner != 1)
      throw ParseError("owner of '" + node.id + "' must be 0 or 1");
    node.owner = owner == 0 ? Player::zero : Player::one;
    if (n.contains("synthetic")) node.synthetic = field<bool>(n, "synthetic");
    spec.nodes.push_back(std::move(node));
  }

  const json edges = field<json>(doc, "edges");
  if (!edges.is_array()) throw ParseError("'edges' must be an array");
  for (const auto& e : edges) {
    ArenaSpec::RawEdge raw;
    raw.src = field<std::string>(e, "src");
    raw.dst = field<std::string>(e, "dst");
    if (!e.contains("color")) throw ParseError("missing field 'color'");
    if (!e.at("color").is_null()) raw.color = field<int>(e, "color");
    spec.edges.push_back(std::move(raw));
  }
  return spec;
}

ColoredArena load_arena(std::string_view json_text) {
  return desugar_uncolored(parse_arena_spec(json_text));
}

namespace {

json node_json(const Node& n) {
  json j = {{"id", n.id}, {"owner", n.owner == Player::zero ? 0 : 1}};
  if (n.synthetic) j["synthetic"] = true;
  return j;
}

}  // namespace

std::string serialize_arena(const ColoredArena& arena) {
  json doc;
  doc["k"] = arena.colors();
  doc["initial"] = arena.node(arena.initial()).id;
  doc["nodes"] = json::array();
  for (const auto& n : arena.nodes()) doc["nodes"].push_back(node_json(n));
  doc["edges"] = json::array();
  for (const auto& e : arena.edges())
    doc["edges"].push_back({{"src", arena.node(e.src).id},
                            {"color", e.color},
                            {"dst", arena.node(e.dst).id}});
  return doc.dump(2);
}

std::string serialize_arena_spec(const ArenaSpec& spec) {
  json doc;
  doc["k"] = spec.k;
  doc["initial"] = spec.initial;
  doc["nodes"] = json::array();
  for (const auto& n : spec.nodes) doc["nodes"].push_back(node_json(n));
  doc["edges"] = json::array();
  for (const auto& e : spec.edges) {
    json je = {{"src", e.src}, {"dst", e.dst}};
    je["color"] = e.color ? json(*e.color) : json(nullptr);
    doc["edges"].push_back(std::move(je));
  }
  return doc.dump(2);
}

}  // namespace colorgames
