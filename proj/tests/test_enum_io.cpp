#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "mf/canonical.hpp"
#include "mf/certificate.hpp"
#include "mf/connectivity.hpp"
#include "mf/generate.hpp"
#include "mf/graph6.hpp"
#include "mf/minor.hpp"
#include "mf/patterns.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace mf;

namespace {

GraphFilter order(int n) {
  GraphFilter f;
  f.n = n;
  return f;
}

std::vector<std::uint64_t> min_codes(const std::vector<Graph>& gs) {
  std::vector<std::uint64_t> out;
  for (const Graph& g : gs) out.push_back(oracle::min_code(g));
  std::sort(out.begin(), out.end());
  return out;
}

// Full-list canonicity is checked against the oracle separately, so forms suffice here.
std::set<std::string> forms(const std::vector<Graph>& gs) {
  std::set<std::string> out;
  for (const Graph& g : gs) out.insert(canonical_form(g));
  return out;
}

bool passes(const GraphFilter& f, const Graph& g) {
  if (g.size() < f.min_edges || g.size() > f.edge_cap()) return false;
  if (f.max_degree >= 0 && g.order() > 0 && g.max_degree() > f.max_degree) return false;
  return f.min_connectivity == 0 || oracle::k_connected(g, f.min_connectivity);
}

}  // namespace

TEST_CASE("class counts for small orders") {
  const std::vector<std::size_t> want{1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 0; n <= 8; ++n) CHECK(generate_graphs(order(n)).size() == want[n]);
}

TEST_CASE("generation is exhaustive and isomorph-free against the orbit sweep") {
  for (int n = 1; n <= 7; ++n) {
    const std::vector<Graph> gs = generate_graphs(order(n));
    REQUIRE(min_codes(gs) == oracle::class_codes(n));
    REQUIRE(forms(gs).size() == gs.size());
    // ascending canonical-form order, each graph already canonical
    for (std::size_t i = 0; i < gs.size(); ++i) {
      REQUIRE(canonical_graph(gs[i]) == gs[i]);
      if (i > 0) REQUIRE(canonical_form(gs[i - 1]) < canonical_form(gs[i]));
    }
  }
}

TEST_CASE("filtered generation equals filtering the full list") {
  for (int n = 2; n <= 7; ++n) {
    const std::vector<Graph> all = generate_graphs(order(n));
    const int top = n * (n - 1) / 2;
    std::vector<GraphFilter> filters;
    for (int lo : {0, top / 3, top / 2, top - 2, top})
      for (int hi : {-1, top / 2, top - 1})
        for (int conn : {0, 1, 2, 3})
          for (int maxdeg : {-1, 2, n - 2}) {
            GraphFilter f = order(n);
            f.min_edges = lo;
            f.max_edges = hi;
            f.min_connectivity = conn;
            f.max_degree = maxdeg;
            if (lo < 0 || (hi >= 0 && hi < lo)) continue;
            filters.push_back(f);
          }
    for (const GraphFilter& f : filters) {
      std::vector<Graph> want;
      for (const Graph& g : all)
        if (passes(f, g)) want.push_back(g);
      const std::vector<Graph> got = generate_graphs(f);
      INFO("n=" << n << " edges " << f.min_edges << ".." << f.max_edges << " conn " << f.min_connectivity
                << " maxdeg " << f.max_degree);
      REQUIRE(forms(got) == forms(want));
    }
  }
}

TEST_CASE("K2222 is generated exactly once among dense 4-connected 8-vertex graphs") {
  GraphFilter f = order(8);
  f.min_edges = 24;
  f.min_connectivity = 4;
  const std::vector<Graph> gs = generate_graphs(f);
  CHECK(gs.size() == 19);
  const Graph k2222 = parse_pattern("k2222").graph;
  CHECK(std::count_if(gs.begin(), gs.end(), [&](const Graph& g) { return isomorphic(g, k2222); }) == 1);
  for (const Graph& g : gs) CHECK(is_k_connected(g, 4));
}

TEST_CASE("predicates and the compact list") {
  GraphFilter f = order(7);
  f.predicates.push_back({"triangle_free", [](const Graph& g) { return clique_number(g) <= 2; }});
  const GraphList list = generate_graph_list(f);
  CHECK(list.order() == 7);
  std::size_t want = 0;
  for (const Graph& g : generate_graphs(order(7))) want += oracle::clique_number(g) <= 2;
  CHECK(list.size() == want);
  for (std::size_t i = 0; i < list.size(); ++i) CHECK(oracle::clique_number(list[i]) <= 2);
}

TEST_CASE("filter validation") {
  GraphFilter f = order(kMaxGeneratedOrder + 1);
  CHECK_THROWS_AS(f.validate(), PreconditionError);
  f = order(5);
  f.min_edges = 8;
  f.max_edges = 6;
  CHECK_THROWS_AS(f.validate(), PreconditionError);
  f = order(5);
  f.min_edges = -1;
  CHECK_THROWS_AS(f.validate(), PreconditionError);
  f = order(5);
  f.min_connectivity = 5;
  CHECK_NOTHROW(f.validate());
  CHECK(generate_graphs(f).empty());
}

TEST_CASE("graph6 examples") {
  CHECK(emit_graph6(Graph(0)) == "?");
  CHECK(emit_graph6(Graph(1)) == "@");
  CHECK(emit_graph6(make_pattern(Family::complete, {4}).graph) == "C~");
  CHECK(emit_graph6(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})) == "Dhc");
  CHECK(parse_graph6(">>graph6<<C~\n") == make_pattern(Family::complete, {4}).graph);
  CHECK(parse_graph6("C~\r\n").size() == 6);
  // 63 vertices needs the long header
  const std::string big = emit_graph6(Graph(63));
  CHECK(big.substr(0, 4) == "~??~");
  CHECK(parse_graph6(big).order() == 63);
}

TEST_CASE("malformed graph6 is rejected") {
  CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("C"), Graph6Error);        // body too short
  CHECK_THROWS_AS(parse_graph6("C~~"), Graph6Error);      // body too long
  CHECK_THROWS_AS(parse_graph6("C\x7f"), Graph6Error);    // not printable graph6
  CHECK_THROWS_AS(parse_graph6("B`"), Graph6Error);       // padding bit set (1 bit + 5 pad)
  CHECK(parse_graph6("B_").size() == 1);
  CHECK_THROWS_AS(parse_graph6("~?A?"), Graph6Error);     // 128 vertices
}

TEST_CASE("graph6 round trip on representatives and labelled graphs") {
  const props::Outcome o = props::graph6_round_trip();
  CHECK(o.trials > 1000);
  CHECK_MESSAGE(o.failures == 0, o.note);
}

TEST_CASE("graph6 streams") {
  std::istringstream in("# header\nC~\n\n@\nDhc\n");
  const std::vector<Graph> gs = read_graph6_stream(in);
  REQUIRE(gs.size() == 3);
  CHECK(gs[1].order() == 1);
  std::istringstream bad("C~\nC\n");
  try {
    read_graph6_stream(bad);
    FAIL("expected a parse error");
  } catch (const Graph6Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("model certificates round trip and detect tampering") {
  const Graph k8 = make_pattern(Family::complete, {8}).graph;
  auto m = find_model(k8, parse_pattern("k7v"));
  REQUIRE(m.has_value());
  const Certificate cert = model_certificate(*m);
  const std::string text = write_certificate(cert);
  CHECK(text.find('\n') == std::string::npos);
  CHECK(text.rfind("{\"kind\":\"model\",\"graph\":\"G~~~~{\",\"pattern\":\"k7v\",\"bags\":", 0) == 0);
  CHECK(read_certificate(text) == cert);
  CHECK(write_certificate(read_certificate(text)) == text);

  Certificate tampered = cert;
  tampered.bags[0] = tampered.bags[1];
  try {
    revalidate(tampered);
    FAIL("tampered bags accepted");
  } catch (const CertificateError& e) {
    CHECK(std::string(e.what()).find("not pairwise disjoint") != std::string::npos);
  }
  // bag {0, 7} in a host missing edge 0-7 is disconnected
  Certificate split = cert;
  split.graph = k8.without_edge(0, 7);
  split.bags[0] = VertexSet{0, 7};
  for (std::size_t i = 1; i < split.bags.size(); ++i) split.bags[i] = split.bags[i] - VertexSet{7};
  CHECK_THROWS_AS(revalidate(split), CertificateError);
}

TEST_CASE("colouring certificates") {
  const Graph c5 = make_pattern(Family::cycle, {5}).graph;
  auto c = find_coloring(c5, 3);
  REQUIRE(c.has_value());
  const Certificate cert = coloring_certificate(c5, *c);
  CHECK(read_certificate(write_certificate(cert)) == cert);
  Certificate mono = cert;
  mono.colors[1] = mono.colors[0];
  CHECK_THROWS_AS(revalidate(mono), CertificateError);
  Certificate range = cert;
  range.colors[2] = 7;
  CHECK_THROWS_AS(revalidate(range), CertificateError);
}

TEST_CASE("negative certificates rerun the search") {
  const Graph k2222 = parse_pattern("k2222").graph;
  const Certificate exc = exception_certificate(k2222, "k7v", "k2222");
  CHECK_NOTHROW(revalidate(exc));
  CHECK(read_certificate(write_certificate(exc)) == exc);
  CHECK_THROWS_AS(revalidate(exception_certificate(make_pattern(Family::complete, {8}).graph, "k7v", "k2222")),
                  CertificateError);

  const Certificate none = no_model_certificate(make_pattern(Family::cycle, {5}).graph, "k4");
  CHECK_NOTHROW(revalidate(none));
  CHECK_THROWS_AS(revalidate(no_model_certificate(k2222, "k4")), CertificateError);
  const Certificate rooted = no_model_certificate(Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), "k4",
                                                  {1, 2, 3, 4});
  CHECK(read_certificate(write_certificate(rooted)) == rooted);

  CHECK_NOTHROW(revalidate(no_coloring_certificate(make_pattern(Family::complete, {4}).graph, 3)));
  CHECK_THROWS_AS(revalidate(no_coloring_certificate(k2222, 4)), CertificateError);
}

TEST_CASE("certificate schema errors") {
  CHECK_THROWS_AS(read_certificate("not json"), CertificateError);
  CHECK_THROWS_AS(read_certificate("{\"kind\":\"model\"}"), CertificateError);
  CHECK_THROWS_AS(read_certificate("{\"kind\":\"bogus\",\"graph\":\"C~\"}"), CertificateError);
  CHECK_THROWS_AS(read_certificate("{\"kind\":\"coloring\",\"graph\":\"C~\",\"k\":4,\"colors\":[0,1,2,3],\"x\":1}"),
                  CertificateError);
  CHECK_NOTHROW(read_certificate("{\"kind\":\"coloring\",\"graph\":\"C~\",\"k\":4,\"colors\":[0,1,2,3]}"));
  CHECK_THROWS_AS(read_certificate("{\"kind\":\"coloring\",\"graph\":\"C\",\"k\":4,\"colors\":[0,1,2,3]}"),
                  CertificateError);
}
