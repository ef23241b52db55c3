#include <doctest.h>

#include "mf/canonical.hpp"
#include "mf/generate.hpp"
#include "mf/graph6.hpp"
#include "mf/minor.hpp"
#include "mf/patterns.hpp"
#include "mf/verify.hpp"
#include "oracles.hpp"

using namespace mf;

TEST_CASE("extremal claim at 7 and 8 vertices") {
  const Report r7 = verify_extremal(7);
  CHECK(r7.verified());
  CHECK(r7.exceptions.empty());
  CHECK(r7.graphs_examined == 2);

  const Report r8 = verify_extremal(8);
  CHECK(r8.verified());
  CHECK(r8.graphs_examined == 19);
  REQUIRE(r8.exceptions.size() == 1);
  CHECK(r8.exceptions[0].isomorphic_to == "k2222");
  CHECK(isomorphic(r8.exceptions[0].graph, parse_pattern("k2222").graph));
  CHECK_THROWS_AS(verify_extremal(4), PreconditionError);
  CHECK_THROWS_AS(verify_extremal(12), PreconditionError);
}

TEST_CASE("main claim at 7 and 8 vertices") {
  const Report r7 = verify_main(7);
  CHECK(r7.verified());
  CHECK(r7.cases == 1);  // K7 only
  const Report r8 = verify_main(8);
  CHECK(r8.verified());
  CHECK(r8.cases == 8);
}

TEST_CASE("rooted lemmas at small orders") {
  for (int n = 4; n <= 7; ++n) CHECK(verify_lemma_k4(n).verified());
  for (int n = 6; n <= 7; ++n) {
    const Report a = verify_lemma_k4minus(n);
    CHECK(a.verified());
    CHECK(a.cases > 0);
    const Report b = verify_lemma_k42star(n);
    CHECK(b.verified());
    CHECK(b.cases > 0);
  }
  CHECK(verify_lemma_k4(6).cases == 94);
}

TEST_CASE("seven-vertex claims") {
  const Report s = verify_spindle_claim();
  CHECK(s.verified());
  CHECK(s.graphs_examined == 9);
  const Report m = verify_maxdeg2_cases();
  CHECK(m.verified());
  CHECK(m.graphs_examined == 29);
}

TEST_CASE("witnesses are kept on request and revalidate") {
  VerifyOptions opt;
  opt.keep_witnesses = true;
  const Report r = verify_extremal(8, opt);
  CHECK(r.witness_certificates.size() == r.witnesses);
  CHECK(r.witnesses == 18);
  for (const Certificate& c : r.witness_certificates) CHECK_NOTHROW(revalidate(c));
}

TEST_CASE("reports round trip and revalidate") {
  const Report r = verify_extremal(8);
  const std::string text = write_report(r);
  const Report back = read_report(text);
  CHECK(write_report(back) == text);
  CHECK(back.exceptions == r.exceptions);
  CHECK(back.filter == r.filter);

  // a report whose verdict disagrees with its violations is rejected
  std::string forged = text;
  const auto at = forged.find("\"verified\": true");
  REQUIRE(at != std::string::npos);
  forged.replace(at, 16, "\"verified\": false");
  CHECK_THROWS(read_report(forged));
}

TEST_CASE("worker count does not change the report") {
  VerifyOptions one, three;
  three.jobs = 3;
  CHECK(write_report(verify_extremal(8, one)) == write_report(verify_extremal(8, three)));
  CHECK(write_report(verify_lemma_k4(6, one)) == write_report(verify_lemma_k4(6, three)));
}

TEST_CASE("input streams are filtered by the hypothesis and deduplicated in order") {
  VerifyOptions opt;
  std::vector<Graph> input;
  const Graph k2222 = parse_pattern("k2222").graph;
  input.push_back(relabel(k2222, std::vector<int>{7, 6, 5, 4, 3, 2, 1, 0}));
  input.push_back(Graph(8));  // fails the hypothesis
  input.push_back(make_pattern(Family::complete, {8}).graph);
  opt.input = input;
  const Report r = verify_extremal(8, opt);
  CHECK(r.source == "input");
  CHECK(r.graphs_read == 3);
  CHECK(r.graphs_examined == 2);
  CHECK(r.exceptions.size() == 1);
  CHECK(r.verified());
}

TEST_CASE("the matching-over-K4 family") {
  for (int n = 5; n <= 12; ++n) CHECK(matching_over_k4(n).size() == 4 * n + n / 2 - 12);
  const Graph g9 = matching_over_k4(9);
  CHECK_FALSE(find_model(g9, parse_pattern("k7mm")).has_value());
  CHECK(g9.min_degree() >= 4);
}

TEST_CASE("exploration flags K6 at six vertices") {
  const Report r = explore_conjecture("k7mm-extremal", 6);
  CHECK(r.exceptions.size() == 1);
  CHECK(r.exceptions[0].isomorphic_to == "k6");
  CHECK(r.violations.empty());
  CHECK(r.sanity.size() == 1);
  CHECK_THROWS_AS(explore_conjecture("nonsense", 6), PreconditionError);
}

TEST_CASE("claim dispatch") {
  for (const std::string& id : verification_claims()) CHECK_FALSE(id.empty());
  CHECK(run_claim("spindle", 0).claim == verify_spindle_claim().claim);
  CHECK_THROWS_AS(run_claim("nope", 7), PreconditionError);
}
