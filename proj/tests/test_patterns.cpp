#include <doctest.h>

#include <set>

#include "mf/canonical.hpp"
#include "mf/patterns.hpp"
#include "mf/subgraph.hpp"
#include "oracles.hpp"

using namespace mf;

TEST_CASE("K7 minus two edges at one end") {
  const Pattern p = make_pattern(Family::complete_vee, {7});
  CHECK(p.name == "k7v");
  CHECK(p.graph.order() == 7);
  CHECK(p.graph.size() == 19);
  CHECK(p.graph.degree_sequence() == std::vector<int>{4, 5, 5, 6, 6, 6, 6});
  CHECK(p.graph.degree(0) == 4);
}

TEST_CASE("K2222 is 6-regular on 8 vertices with 24 edges") {
  const Graph g = parse_pattern("k2222").graph;
  CHECK(g.order() == 8);
  CHECK(g.size() == 24);
  CHECK(g.min_degree() == 6);
  CHECK(g.max_degree() == 6);
}

TEST_CASE("Moser spindle matches the figure's edge list") {
  // u1..u5 = 0..4, u4' = 5, u3' = 6
  const Graph want = Graph::from_edges(
      7, {{0, 3}, {0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {0, 5}, {0, 6}, {2, 6}, {4, 6}, {1, 5}});
  const Pattern p = parse_pattern("spindle");
  CHECK(p.graph == want);
  CHECK(p.graph.size() == 11);
  CHECK(oracle::independence_number(p.graph) == 2);
  CHECK(oracle::clique_number(p.graph) == 3);
}

TEST_CASE("roster") {
  const auto roster = pattern_roster();
  std::set<std::string> names;
  for (const Pattern& p : roster) {
    CHECK(names.insert(p.name).second);
    CHECK_FALSE(pattern_defect(p).has_value());
    // names parse back to the same pattern
    const Pattern q = parse_pattern(p.name);
    CHECK(q.graph == p.graph);
    CHECK(q.roots == p.roots);
  }
  for (const char* want : {"k7v", "k7mm", "k7m", "k7", "k6v", "k2222", "k4", "k4m", "k42", "k42s", "k44",
                           "c3", "c4", "c5", "spindle"})
    CHECK(names.count(want) == 1);
}

TEST_CASE("edge counts of the near-complete families") {
  for (int t = 4; t <= 9; ++t) {
    const int full = t * (t - 1) / 2;
    const Graph vee = make_pattern(Family::complete_vee, {t}).graph;
    const Graph mm = make_pattern(Family::complete_matching, {t}).graph;
    const Graph minus = make_pattern(Family::complete_minus, {t}).graph;
    CHECK(vee.size() == full - 2);
    CHECK(mm.size() == full - 2);
    CHECK(minus.size() == full - 1);
    CHECK_FALSE(isomorphic(vee, mm));
    CHECK(vee.degree_sequence() != mm.degree_sequence());
  }
}

TEST_CASE("K7 minus an edge contains K7 minus two adjacent edges as a spanning subgraph") {
  auto emb = has_subgraph(parse_pattern("k7m").graph, parse_pattern("k7v").graph);
  REQUIRE(emb.has_value());
  CHECK(emb->size() == 7);
}

TEST_CASE("root specifications") {
  CHECK(parse_pattern("c5").roots.mode == RootMode::ordered);
  CHECK(parse_pattern("c5").roots.indices == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(parse_pattern("k4").roots.mode == RootMode::unordered);
  CHECK(parse_pattern("k4").roots.arity() == 4);
  const Pattern star = parse_pattern("k42s");
  CHECK(star.roots.mode == RootMode::unordered);
  CHECK(star.roots.indices == std::vector<int>{0, 1, 2, 3});
  CHECK(star.graph.adjacent(4, 5));
  CHECK_FALSE(parse_pattern("k42").graph.adjacent(4, 5));
  CHECK(star.graph.size() == 9);
  CHECK(parse_pattern("g6:C~").roots.mode == RootMode::none);
  CHECK(parse_pattern("g6:C~").graph.size() == 6);
}

TEST_CASE("invalid pattern parameters") {
  CHECK_THROWS_AS(make_pattern(Family::complete_vee, {3}), PreconditionError);
  CHECK_THROWS_AS(make_pattern(Family::complete_matching, {3}), PreconditionError);
  CHECK_THROWS_AS(make_pattern(Family::cycle, {2}), PreconditionError);
  CHECK_THROWS_AS(make_pattern(Family::complete, {}), PreconditionError);
  CHECK_THROWS_AS(parse_pattern("q7"), PreconditionError);
  CHECK_THROWS_AS(parse_pattern("k7x"), PreconditionError);
  CHECK_THROWS_AS(parse_pattern("g6:"), PreconditionError);
}

TEST_CASE("pattern_defect notices broken patterns") {
  Pattern p = parse_pattern("k7v");
  p.graph = p.graph.with_edge(0, 1);
  CHECK(pattern_defect(p).has_value());
  Pattern q = parse_pattern("c4");
  q.roots.mode = RootMode::unordered;
  CHECK(pattern_defect(q).has_value());
  Pattern r = parse_pattern("k4");
  r.roots.indices = {0, 0, 1, 2};
  CHECK(pattern_defect(r).has_value());
}
