#include "fixtures.hpp"

#include <colorgames/arena.hpp>

#include <doctest.h>

#include <random>

using namespace colorgames;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational(" -3 ") == -3);
  CHECK(parse_rational("+7/21") == Rational(1, 3));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("minimal arena loads") {
  auto arena = load_arena(R"({"k": 2, "nodes": [{"id": "u", "owner": 0}], "initial": "u",
    "edges": [{"src": "u", "color": 1, "dst": "u"}, {"src": "u", "color": 2, "dst": "u"}]})");
  CHECK(arena.node_count() == 1);
  CHECK(arena.edge_count() == 2);
  CHECK(arena.colors() == 2);
  CHECK(arena.out_edges(0).size() == 2);
  CHECK(arena.in_edges(0).size() == 2);
}

TEST_CASE("validation errors") {
  SUBCASE("dead end") {
    CHECK_THROWS_AS(load_arena(R"({"k": 1, "nodes": [{"id": "u", "owner": 0}, {"id": "v", "owner": 0}],
      "initial": "u", "edges": [{"src": "u", "color": 1, "dst": "v"}]})"),
                    ValidationError);
  }
  SUBCASE("color out of range") {
    CHECK_THROWS_AS(load_arena(R"({"k": 1, "nodes": [{"id": "u", "owner": 0}], "initial": "u",
      "edges": [{"src": "u", "color": 2, "dst": "u"}]})"),
                    ValidationError);
    CHECK_THROWS_AS(load_arena(R"({"k": 1, "nodes": [{"id": "u", "owner": 0}], "initial": "u",
      "edges": [{"src": "u", "color": 0, "dst": "u"}]})"),
                    ValidationError);
  }
  SUBCASE("unknown endpoint") {
    CHECK_THROWS_AS(load_arena(R"({"k": 1, "nodes": [{"id": "u", "owner": 0}], "initial": "u",
      "edges": [{"src": "u", "color": 1, "dst": "w"}]})"),
                    ValidationError);
  }
  SUBCASE("duplicate id") {
    CHECK_THROWS_AS(load_arena(R"({"k": 1, "nodes": [{"id": "u", "owner": 0}, {"id": "u", "owner": 1}],
      "initial": "u", "edges": [{"src": "u", "color": 1, "dst": "u"}]})"),
                    ValidationError);
  }
  SUBCASE("unknown initial") {
    CHECK_THROWS_AS(load_arena(R"({"k": 1, "nodes": [{"id": "u", "owner": 0}], "initial": "x",
      "edges": [{"src": "u", "color": 1, "dst": "u"}]})"),
                    ValidationError);
  }
  SUBCASE("malformed json") {
    CHECK_THROWS_AS(load_arena("{"), ParseError);
    CHECK_THROWS_AS(load_arena(R"({"k": 1})"), ParseError);
    CHECK_THROWS_AS(load_arena(R"({"k": "two", "nodes": [], "initial": "u", "edges": []})"),
                    ParseError);
  }
}

TEST_CASE("desugaring a single uncolored edge") {
  auto arena = load_arena(R"({"k": 2,
    "nodes": [{"id": "u", "owner": 1}, {"id": "v", "owner": 0}], "initial": "u",
    "edges": [{"src": "u", "color": null, "dst": "v"}, {"src": "v", "color": 1, "dst": "u"}]})");
  REQUIRE(arena.node_count() == 3);
  REQUIRE(arena.edge_count() == 3);
  const NodeId u = *arena.find("u"), v = *arena.find("v");
  const Edge first = arena.edge(arena.out_edges(u).front());
  CHECK(first.color == 1);
  const Node& w = arena.node(first.dst);
  CHECK(w.owner == Player::zero);
  CHECK(w.synthetic);
  CHECK(arena.out_edges(first.dst).size() == 1);
  const Edge second = arena.edge(arena.out_edges(first.dst).front());
  CHECK(second.color == 2);
  CHECK(second.dst == v);
}

TEST_CASE("desugaring an uncolored self-loop with three colors") {
  auto arena = load_arena(R"({"k": 3, "nodes": [{"id": "u", "owner": 0}], "initial": "u",
    "edges": [{"src": "u", "color": null, "dst": "u"}]})");
  CHECK(arena.node_count() == 3);
  REQUIRE(arena.edge_count() == 3);
  FinitePath chain;
  NodeId at = 0;
  for (int i = 0; i < 3; ++i) {
    chain.push_back(arena.out_edges(at).front());
    at = arena.edge(chain.back()).dst;
  }
  CHECK(at == 0);
  CHECK(arena.edge(chain[0]).color == 1);
  CHECK(arena.edge(chain[1]).color == 2);
  CHECK(arena.edge(chain[2]).color == 3);
  CHECK(diff_matrix(arena, chain).is_zero());
}

TEST_CASE("desugaring adds k-1 nodes and edges per uncolored edge") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    ArenaSpec spec;
    spec.k = k;
    for (int v = 0; v < n; ++v) spec.nodes.push_back({"n" + std::to_string(v), Player::zero, false});
    spec.initial = "n0";
    int uncolored = 0;
    for (int v = 0; v < n; ++v) {
      const int extra = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int j = 0; j < extra; ++j) {
        ArenaSpec::RawEdge e{"n" + std::to_string(v), std::nullopt,
                             "n" + std::to_string(std::uniform_int_distribution<int>(0, n - 1)(rng))};
        if (std::uniform_int_distribution<int>(0, 1)(rng) == 0)
          e.color = std::uniform_int_distribution<int>(1, k)(rng);
        else
          ++uncolored;
        spec.edges.push_back(e);
      }
    }
    auto arena = desugar_uncolored(spec);
    CHECK(arena.node_count() == spec.nodes.size() + static_cast<std::size_t>(uncolored * (k - 1)));
    CHECK(arena.edge_count() == spec.edges.size() + static_cast<std::size_t>(uncolored * (k - 1)));

    // Walk every chain from its source through the synthetic nodes.
    for (EdgeId e = 0; e < arena.edge_count(); ++e) {
      if (arena.node(arena.edge(e).src).synthetic || !arena.node(arena.edge(e).dst).synthetic) continue;
      FinitePath chain{e};
      while (arena.node(arena.edge(chain.back()).dst).synthetic)
        chain.push_back(arena.out_edges(arena.edge(chain.back()).dst).front());
      CHECK(chain.size() == static_cast<std::size_t>(k));
      auto counts = color_counts(arena, chain);
      for (auto c : counts) CHECK(c == 1);
    }
  }
}

TEST_CASE("fresh node ids avoid collisions") {
  ArenaSpec spec;
  spec.k = 2;
  spec.nodes = {{"u", Player::zero, false}, {"u~u#0.1", Player::zero, false}};
  spec.initial = "u";
  spec.edges = {{"u", std::nullopt, "u"}, {"u~u#0.1", 1, "u"}};
  auto arena = desugar_uncolored(spec);
  CHECK(arena.node_count() == 3);
  CHECK(arena.find("u~u#0.1'").has_value());
}

TEST_CASE("serialization round-trips") {
  auto check = [](const ColoredArena& a) {
    auto text = serialize_arena(a);
    CHECK(load_arena(text) == a);
    CHECK(serialize_arena(load_arena(text)) == text);
  };
  check(fixtures::two_loops());
  check(fixtures::three_color_loops());
  check(load_arena(R"({"k": 3, "nodes": [{"id": "u", "owner": 1}, {"id": "v", "owner": 0}],
    "initial": "v", "edges": [{"src": "u", "color": null, "dst": "v"},
                              {"src": "v", "color": 2, "dst": "u"}]})"));
  auto spec_text = serialize_arena_spec(parse_arena_spec(R"({"k": 2,
    "nodes": [{"id": "u", "owner": 0}], "initial": "u",
    "edges": [{"src": "u", "color": null, "dst": "u"}]})"));
  CHECK(spec_text.find("null") != std::string::npos);
}

TEST_CASE("diff matrix examples") {
  CHECK(diff_matrix(2, std::vector<Color>{}).is_zero());
  std::vector<Color> w{1, 2, 1};
  CHECK(diff_matrix(2, w).at(1, 2) == 1);
  CHECK(diff_matrix(2, w).at(2, 1) == -1);
  std::vector<Color> sigma1{1, 2, 1, 3, 1, 3, 2, 3, 1, 3, 3};
  CHECK(diff_matrix(3, sigma1).at(3, 1) == 1);
  CHECK_THROWS_AS(diff_matrix(2, std::vector<Color>{3}), std::invalid_argument);
}

TEST_CASE("diff matrix properties on random words") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 5)(rng);
    auto word = [&] {
      std::vector<Color> w(std::uniform_int_distribution<std::size_t>(0, 30)(rng));
      for (auto& c : w) c = std::uniform_int_distribution<int>(1, k)(rng);
      return w;
    };
    auto x = word(), y = word();
    auto xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    const auto dx = diff_matrix(k, x), dy = diff_matrix(k, y), dxy = diff_matrix(k, xy);
    CHECK(dxy == dx + dy);
    std::int64_t total = 0;
    for (auto c : color_counts(k, x)) total += c;
    CHECK(total == static_cast<std::int64_t>(x.size()));
    for (Color a = 1; a <= k; ++a) {
      CHECK(dx.at(a, a) == 0);
      for (Color b = 1; b <= k; ++b) {
        CHECK(dx.at(a, b) == -dx.at(b, a));
        for (Color c = 1; c <= k; ++c) CHECK(dx.at(a, b) + dx.at(b, c) == dx.at(a, c));
      }
    }
  }
}

TEST_CASE("prefix frequencies") {
  auto f = prefix_frequencies(2, std::vector<Color>{1, 2});
  CHECK(f == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  f = prefix_frequencies(2, std::vector<Color>{1, 1, 1});
  CHECK(f == std::vector<Rational>{Rational(1), Rational(0)});
  CHECK_THROWS_AS(prefix_frequencies(2, std::vector<Color>{}), std::invalid_argument);
}

TEST_CASE("walks") {
  auto arena = fixtures::two_cycle();
  CHECK(is_walk(arena, FinitePath{0, 1, 0}));
  CHECK_FALSE(is_walk(arena, FinitePath{0, 0}));
  CHECK(is_walk(arena, FinitePath{}));
  CHECK(diff_matrix(arena, FinitePath{0, 1}).is_zero());
}

TEST_CASE("frequency vectors") {
  auto f = FrequencyVector::parse("2/3,1/3");
  CHECK(f.colors() == 2);
  CHECK(f[1] == Rational(2, 3));
  CHECK(FrequencyVector::uniform(3)[2] == Rational(1, 3));
  CHECK_THROWS_AS(FrequencyVector::parse("1/2,1/3"), std::invalid_argument);
  CHECK_THROWS_AS(FrequencyVector::parse("3/2,-1/2"), std::invalid_argument);
  CHECK_THROWS_AS(FrequencyVector::parse("1/2,,1/2"), std::invalid_argument);
  CHECK(Goal::with_frequency(f).name() == "freq");
}
