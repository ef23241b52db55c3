#include <doctest.h>

#include <random>

#include "mf/disjoint_paths.hpp"
#include "mf/generate.hpp"
#include "mf/minor.hpp"
#include "mf/patterns.hpp"
#include "mf/subgraph.hpp"
#include "oracles.hpp"

using namespace mf;

namespace {

Graph complete(int t) { return make_pattern(Family::complete, {t}).graph; }

std::vector<Graph> all_graphs(int n) {
  GraphFilter f;
  f.n = n;
  return generate_graphs(f);
}

void check_path(const Graph& g, const Path& p, int from, int to) {
  REQUIRE_FALSE(p.empty());
  CHECK(p.front() == from);
  CHECK(p.back() == to);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.adjacent(p[i], p[i + 1]));
}

}  // namespace

TEST_CASE("validate_model") {
  const Pattern k5 = parse_pattern("k5");
  Model m{complete(7), k5, {VertexSet{0}, VertexSet{1}, VertexSet{2}, VertexSet{3}, VertexSet{4}}, {}};
  CHECK(validate_model(m));

  Model emptied = m;
  emptied.bags[2] = VertexSet{};
  ModelCheck bad = validate_model(emptied);
  CHECK_FALSE(bad);
  CHECK(bad.defect == ModelDefect::bag_not_connected);

  Model overlap = m;
  overlap.bags[1] = VertexSet{0, 1};
  CHECK(validate_model(overlap).defect == ModelDefect::bags_not_disjoint);

  Model short_model = m;
  short_model.bags.pop_back();
  CHECK(validate_model(short_model).defect == ModelDefect::shape);

  // 0 and 2 are not adjacent in the path 0-1-2, so bag {0,2} is disconnected.
  const Graph p3 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  Model split{p3, parse_pattern("k2"), {VertexSet{0, 2}, VertexSet{3}}, {}};
  CHECK(validate_model(split).defect == ModelDefect::bag_not_connected);

  Model far{p3, parse_pattern("k2"), {VertexSet{0}, VertexSet{3}}, {}};
  CHECK(validate_model(far).defect == ModelDefect::edge_not_realised);

  Model rooted{complete(4), parse_pattern("k4"), {VertexSet{0}, VertexSet{1}, VertexSet{2}, VertexSet{3}},
               {{0, 0}, {1, 1}, {2, 3}, {3, 2}}};
  CHECK(validate_model(rooted).defect == ModelDefect::root_not_in_bag);
  rooted.root_binding = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  CHECK(validate_model(rooted));

  // cycles bind in order
  Model cyc{complete(3), parse_pattern("c3"), {VertexSet{0}, VertexSet{1}, VertexSet{2}}, {{1, 1}, {0, 0}, {2, 2}}};
  CHECK(validate_model(cyc).defect == ModelDefect::root_not_in_bag);
}

TEST_CASE("find_model examples") {
  const Graph k2222 = parse_pattern("k2222").graph;
  CHECK_FALSE(find_model(k2222, parse_pattern("k7v")).has_value());
  auto mm = find_model(k2222, parse_pattern("k7mm"));
  REQUIRE(mm.has_value());
  CHECK(validate_model(*mm));
  CHECK(oracle::has_minor(k2222, parse_pattern("k7mm").graph));

  auto k4 = find_model(k2222, parse_pattern("k4"));
  REQUIRE(k4.has_value());
  CHECK(validate_model(*k4));

  auto in_k8 = find_model(complete(8), parse_pattern("k7v"));
  REQUIRE(in_k8.has_value());
  CHECK(validate_model(*in_k8));

  CHECK_FALSE(find_model(complete(6), parse_pattern("k7v")).has_value());
  CHECK_FALSE(find_model(parse_pattern("c5").graph, parse_pattern("k4")).has_value());

  const Pattern empty = make_explicit_pattern(Graph(0), "g6:?");
  auto none = find_model(parse_pattern("c5").graph, empty);
  REQUIRE(none.has_value());
  CHECK(none->bags.empty());
}

TEST_CASE("find_rooted_model examples") {
  const Pattern k4 = parse_pattern("k4");
  auto whole = find_rooted_model(complete(4), k4, {0, 1, 2, 3});
  REQUIRE(whole.has_value());
  CHECK(validate_model(*whole));
  for (VertexSet b : whole->bags) CHECK(b.size() == 1);

  // octahedron parts {0,1} {2,3} {4,5}; Z = the two non-adjacent pairs {0,1} and {2,3}
  const Graph oct = parse_pattern("k222").graph;
  auto m = find_rooted_model(oct, k4, {0, 1, 2, 3});
  REQUIRE(m.has_value());
  CHECK(validate_model(*m));
  CHECK(oracle::has_rooted_minor(oct, k4.graph, {0, 1, 2, 3}, {0, 1, 2, 3}, true));

  const Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK_FALSE(find_rooted_model(star, k4, {1, 2, 3, 4}).has_value());

  CHECK_THROWS_AS(find_rooted_model(oct, k4, {0, 1, 2}), PreconditionError);
  CHECK_THROWS_AS(find_rooted_model(oct, k4, {0, 1, 2, 2}), PreconditionError);
  CHECK_THROWS_AS(find_rooted_model(oct, k4, {0, 1, 2, 6}), PreconditionError);
  CHECK_THROWS_AS(find_rooted_model(oct, make_explicit_pattern(k4.graph, "g6:C~"), {}), PreconditionError);
}

TEST_CASE("rooted search agrees with brute force on the octahedron and random hosts") {
  const Graph oct = parse_pattern("k222").graph;
  for (const char* name : {"k4", "k4m", "c4"}) {
    const Pattern p = parse_pattern(name);
    const bool any_order = p.roots.mode == RootMode::unordered;
    for (std::uint64_t z = 0; z < 64; ++z) {
      if (std::popcount(z) != 4) continue;
      const std::vector<int> roots = VertexSet(z).to_vector();
      auto m = find_rooted_model(oct, p, roots);
      REQUIRE(m.has_value() == oracle::has_rooted_minor(oct, p.graph, p.roots.indices, roots, any_order));
      if (m) REQUIRE(validate_model(*m));
    }
  }
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 3;
    const Graph g = oracle::random_graph(rng, n, 0.55);
    const Pattern p = parse_pattern(trial % 3 == 0 ? "k4" : trial % 3 == 1 ? "k4m" : "c4");
    std::vector<int> roots = oracle::random_permutation(rng, n);
    roots.resize(4);
    auto m = find_rooted_model(g, p, roots);
    const bool any_order = p.roots.mode == RootMode::unordered;
    REQUIRE(m.has_value() == oracle::has_rooted_minor(g, p.graph, p.roots.indices, roots, any_order));
    if (m) REQUIRE(validate_model(*m));
  }
}

TEST_CASE("find_model agrees with the partition oracle on all graphs up to 5 vertices") {
  std::vector<Pattern> patterns;
  for (const Pattern& p : pattern_roster())
    if (p.graph.order() <= 5) patterns.push_back(p);
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_graphs(n))
      for (const Pattern& p : patterns) {
        auto m = find_model(g, p);
        REQUIRE(m.has_value() == oracle::has_minor(g, p.graph));
        if (m) REQUIRE(validate_model(*m));
      }
}

TEST_CASE("returned models validate and minors are monotone") {
  std::mt19937_64 rng(7);
  const auto roster = pattern_roster();
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + trial % 6;
    const Graph g = oracle::random_graph(rng, n, 0.6);
    const Pattern& p = roster[trial % roster.size()];
    auto m = find_model(g, p);
    if (m) REQUIRE(validate_model(*m));
    if (g.size() < n * (n - 1) / 2) {
      int u = 0, v = 0;
      do {
        u = int(rng() % n);
        v = int(rng() % n);
      } while (u == v || g.adjacent(u, v));
      if (m) REQUIRE(find_model(g.with_edge(u, v), p).has_value());
    }
    if (g.size() > 0) {
      auto e = g.edges()[rng() % g.size()];
      if (find_model(contract_edge(g, e.first, e.second), p)) REQUIRE(m.has_value());
    }
    if (has_subgraph(g, p.graph)) REQUIRE(m.has_value());
  }
}

TEST_CASE("two_disjoint_paths examples") {
  const Graph c4 = make_pattern(Family::cycle, {4}).graph;
  auto ok = two_disjoint_paths(c4, 0, 1, 2, 3);
  REQUIRE(ok.has_value());
  check_path(c4, ok->first, 0, 1);
  check_path(c4, ok->second, 2, 3);
  CHECK_FALSE(two_disjoint_paths(c4, 0, 2, 1, 3).has_value());
  CHECK_THROWS_AS(two_disjoint_paths(c4, 0, 0, 1, 3), PreconditionError);
  CHECK_THROWS_AS(two_disjoint_paths(c4, 0, 4, 1, 3), std::out_of_range);
}

TEST_CASE("two_disjoint_paths agrees with path-pair enumeration and is symmetric") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 4 + trial % 5;
    const Graph g = oracle::random_graph(rng, n, 0.25 + 0.1 * (trial % 5));
    auto t = oracle::random_permutation(rng, n);
    auto got = two_disjoint_paths(g, t[0], t[1], t[2], t[3]);
    REQUIRE(got.has_value() == oracle::two_paths(g, t[0], t[1], t[2], t[3]));
    REQUIRE(got.has_value() == two_disjoint_paths(g, t[2], t[3], t[0], t[1]).has_value());
    if (got) {
      check_path(g, got->first, t[0], t[1]);
      check_path(g, got->second, t[2], t[3]);
      VertexSet a = VertexSet::of(got->first);
      VertexSet b = VertexSet::of(got->second);
      CHECK(int(got->first.size()) == a.size());
      CHECK_FALSE(a.intersects(b));
    }
  }
}

TEST_CASE("has_subgraph examples and oracle agreement") {
  CHECK(has_subgraph(parse_pattern("k7m").graph, parse_pattern("k7v").graph).has_value());
  const Graph spindle = parse_pattern("spindle").graph;
  const Graph c5 = make_pattern(Family::cycle, {5}).graph;
  auto emb = has_subgraph(spindle, c5);
  REQUIRE(emb.has_value());
  for (auto [u, v] : c5.edges()) CHECK(spindle.adjacent((*emb)[u], (*emb)[v]));
  CHECK_FALSE(has_subgraph(make_pattern(Family::cycle, {4}).graph, make_pattern(Family::cycle, {3}).graph));

  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = oracle::random_graph(rng, 3 + trial % 5, 0.5);
    const Graph h = oracle::random_graph(rng, 2 + trial % 4, 0.5);
    auto e = has_subgraph(g, h);
    REQUIRE(e.has_value() == oracle::has_subgraph(g, h));
    if (e) {
      REQUIRE(int(e->size()) == h.order());
      REQUIRE(VertexSet::of(*e).size() == h.order());
      for (auto [u, v] : h.edges()) REQUIRE(g.adjacent((*e)[u], (*e)[v]));
    }
  }
}
