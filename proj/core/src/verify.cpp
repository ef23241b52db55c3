#include "mf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "certificate_json.hpp"
#include "mf/canonical.hpp"
#include "mf/coloring.hpp"
#include "mf/connectivity.hpp"
#include "mf/graph6.hpp"
#include "mf/minor.hpp"
#include "mf/patterns.hpp"
#include "mf/subgraph.hpp"
#include "parallel.hpp"

namespace mf {

namespace {

struct Outcome {
  std::uint64_t cases = 0;
  std::uint64_t witnesses = 0;
  std::vector<Certificate> violations;
  std::vector<Certificate> exceptions;
  std::vector<Certificate> kept;
};

using Check = std::function<Outcome(const Graph&, bool keep)>;

void require_range(int n, int lo, int hi, std::string_view claim) {
  if (n < lo || n > hi)
    throw PreconditionError(std::string(claim) + ": n must lie in [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "], got " + std::to_string(n));
}

FilterSummary summarize(const GraphFilter& f) {
  FilterSummary s{f.n, f.min_edges, f.edge_cap(), f.min_connectivity, f.max_degree, {}};
  for (const auto& p : f.predicates) s.predicates.push_back(p.name);
  return s;
}

Report sweep(std::string claim, int n, const GraphFilter& filter, const Check& check,
             const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.claim = std::move(claim);
  r.n = n;
  r.filter = summarize(filter);

  std::vector<Graph> listed;
  GraphList generated;
  if (opt.input) {
    r.source = "input";
    r.graphs_read = opt.input->size();
    std::vector<std::pair<std::string, Graph>> keyed;
    for (const Graph& g : *opt.input)
      if (filter.accepts(g)) keyed.emplace_back(canonical_form(g), g);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, g] : keyed) listed.push_back(std::move(g));
    r.graphs_examined = listed.size();
  } else {
    generated = generate_graph_list(filter);
    r.graphs_read = r.graphs_examined = generated.size();
  }

  // Chunked so that per-graph outcomes never all live at once; merged in index order.
  constexpr std::size_t kChunk = 1 << 16;
  for (std::size_t base = 0; base < r.graphs_examined; base += kChunk) {
    const std::size_t count = std::min<std::size_t>(kChunk, r.graphs_examined - base);
    auto outcomes = detail::parallel_map<Outcome>(count, opt.jobs, [&](std::size_t i) {
      return check(opt.input ? listed[base + i] : generated[base + i], opt.keep_witnesses);
    });
    for (Outcome& o : outcomes) {
      r.cases += o.cases;
      r.witnesses += o.witnesses;
      std::move(o.violations.begin(), o.violations.end(), std::back_inserter(r.violations));
      std::move(o.exceptions.begin(), o.exceptions.end(), std::back_inserter(r.exceptions));
      std::move(o.kept.begin(), o.kept.end(), std::back_inserter(r.witness_certificates));
    }
  }
  r.workers = std::max(opt.jobs, 1);
  r.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// Unrooted search for `pattern`; absence is a violation unless g is isomorphic
// to one of the tolerated graphs.
Check minor_check(const std::string& pattern_name,
                  std::vector<std::pair<std::string, Graph>> tolerated = {}) {
  Pattern p = parse_pattern(pattern_name);
  return [p, tolerated = std::move(tolerated)](const Graph& g, bool keep) {
    Outcome o;
    o.cases = 1;
    if (auto m = find_model(g, p)) {
      o.witnesses = 1;
      if (keep) o.kept.push_back(model_certificate(*m));
      return o;
    }
    for (const auto& [tag, t] : tolerated) {
      if (isomorphic(g, t)) {
        o.exceptions.push_back(exception_certificate(g, p.name, tag));
        return o;
      }
    }
    o.violations.push_back(no_model_certificate(g, p.name));
    return o;
  };
}

// Graphs that are not 6-colourable must contain `pattern`.
Check chromatic_check(const std::string& pattern_name) {
  Check inner = minor_check(pattern_name);
  return [inner](const Graph& g, bool keep) {
    if (greedy_coloring(g, 6) || find_coloring(g, 6)) return Outcome{};
    return inner(g, keep);
  };
}

// Every 4-subset Z of V(G), in lexicographic order, with (G, Z) internally
// 4-connected is handed to `rooted`.
Check rooted_check(std::function<void(const Graph&, const std::vector<int>&, bool, Outcome&)> rooted) {
  return [rooted](const Graph& g, bool keep) {
    Outcome o;
    const int n = g.order();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          for (int d = c + 1; d < n; ++d) {
            if (!is_internally_k_connected(g, VertexSet{a, b, c, d}, 4)) continue;
            ++o.cases;
            rooted(g, {a, b, c, d}, keep, o);
          }
    return o;
  };
}

void rooted_search(const Graph& g, const Pattern& p, const std::vector<int>& z, bool keep, Outcome& o) {
  if (auto m = find_rooted_model(g, p, z)) {
    ++o.witnesses;
    if (keep) o.kept.push_back(model_certificate(*m));
  } else {
    o.violations.push_back(no_model_certificate(g, p.name, z));
  }
}

std::optional<Model> subgraph_model(const Graph& host, const Pattern& p) {
  auto emb = has_subgraph(host, p.graph);
  if (!emb) return std::nullopt;
  Model m{host, p, {}, {}};
  for (int x : *emb) m.bags.push_back(VertexSet::single(x));
  return m;
}

GraphFilter seven_vertex_filter() {
  GraphFilter f;
  f.n = 7;
  return f;
}

}  // namespace

Report verify_extremal(int n, const VerifyOptions& opt) {
  require_range(n, 5, kMaxGeneratedOrder, "verify_extremal");
  GraphFilter f;
  f.n = n;
  f.min_edges = std::max(4 * n - 8, 0);
  f.min_connectivity = 4;
  return sweep("extremal", n, f, minor_check("k7v", {{"k2222", parse_pattern("k2222").graph}}), opt);
}

Report verify_main(int n, const VerifyOptions& opt) {
  require_range(n, 7, 9, "verify_main");
  GraphFilter f;
  f.n = n;
  f.min_edges = 21;  // K7 is the smallest 7-chromatic graph
  return sweep("main", n, f, chromatic_check("k7v"), opt);
}

Report verify_lemma_k4(int n, const VerifyOptions& opt) {
  require_range(n, 4, 8, "verify_lemma_k4");
  GraphFilter f;
  f.n = n;
  f.min_edges = 3 * n - 6;
  const Pattern k4 = parse_pattern("k4");
  return sweep("lemma-k4", n, f,
               rooted_check([k4](const Graph& g, const std::vector<int>& z, bool keep, Outcome& o) {
                 rooted_search(g, k4, z, keep, o);
               }),
               opt);
}

Report verify_lemma_k4minus(int n, const VerifyOptions& opt) {
  require_range(n, 6, 8, "verify_lemma_k4minus");
  GraphFilter f;
  f.n = n;
  // G + K(Z) is 4-connected, so it has at least 2n edges, at most 6 of them inside Z.
  f.min_edges = 2 * n - 6;
  const Pattern k4m = parse_pattern("k4m");
  return sweep("lemma-k4minus", n, f,
               rooted_check([k4m](const Graph& g, const std::vector<int>& z, bool keep, Outcome& o) {
                 rooted_search(g, k4m, z, keep, o);
               }),
               opt);
}

Report verify_lemma_k42star(int n, const VerifyOptions& opt) {
  require_range(n, 6, 8, "verify_lemma_k42star");
  GraphFilter f;
  f.n = n;
  f.min_edges = 4 * n - 9;
  const Pattern star = parse_pattern("k42s");
  const Pattern plain = parse_pattern("k42");
  auto check = [star, plain](const Graph& g, const std::vector<int>& z, bool keep, Outcome& o) {
    auto m = find_rooted_model(g, star, z);
    if (!m) {
      o.violations.push_back(no_model_certificate(g, star.name, z));
    } else {
      ++o.witnesses;
      if (keep) o.kept.push_back(model_certificate(*m));
      // Same labels, fewer edges: a K*_{4,2} model must also be a K_{4,2} model.
      Model weaker{g, plain, m->bags, m->root_binding};
      if (!validate_model(weaker)) o.violations.push_back(model_certificate(weaker));
    }
    if (!find_rooted_model(g, plain, z)) o.violations.push_back(no_model_certificate(g, plain.name, z));
  };
  return sweep("lemma-k42star", n, f, rooted_check(check), opt);
}

Report verify_spindle_claim(const VerifyOptions& opt) {
  GraphFilter f = seven_vertex_filter();
  f.predicates.push_back({"independence_number<=2", [](const Graph& g) { return independence_number(g) <= 2; }});
  f.predicates.push_back({"clique_number<=3", [](const Graph& g) { return clique_number(g) <= 3; }});
  const Pattern spindle = parse_pattern("spindle");
  Check check = [spindle](const Graph& g, bool keep) {
    Outcome o;
    o.cases = 1;
    if (auto m = subgraph_model(g, spindle)) {
      o.witnesses = 1;
      if (keep) o.kept.push_back(model_certificate(*m, Relation::subgraph));
    } else {
      o.violations.push_back(no_model_certificate(g, spindle.name, {}, Relation::subgraph));
    }
    return o;
  };
  return sweep("spindle", 7, f, check, opt);
}

Report verify_maxdeg2_cases(const VerifyOptions& opt) {
  GraphFilter f = seven_vertex_filter();
  f.max_degree = 2;
  auto cycle = [](int k) { return make_pattern(Family::cycle, {k}).graph; };
  const std::vector<Graph> hosts = {
      cycle(7),
      disjoint_union(cycle(6), Graph(1)),
      disjoint_union(cycle(5), Graph::from_edges(2, {{0, 1}})),
      disjoint_union(cycle(4), cycle(3)),
      disjoint_union(disjoint_union(cycle(3), cycle(3)), Graph(1)),
  };
  Check check = [hosts](const Graph& g, bool keep) {
    Outcome o;
    o.cases = 1;
    const Pattern p = make_explicit_pattern(g, "g6:" + emit_graph6(g));
    for (const Graph& h : hosts) {
      if (auto m = subgraph_model(h, p)) {
        o.witnesses = 1;
        if (keep) o.kept.push_back(model_certificate(*m, Relation::subgraph));
        return o;
      }
    }
    for (const Graph& h : hosts)
      o.violations.push_back(no_model_certificate(h, p.name, {}, Relation::subgraph));
    return o;
  };
  return sweep("maxdeg2", 7, f, check, opt);
}

Graph matching_over_k4(int n) {
  if (n < 4 || n > Graph::kMaxVertices) throw PreconditionError("matching_over_k4: need 4 <= n <= 64");
  std::vector<Edge> edges;
  for (int a = 0; a < 4; ++a)
    for (int v = a + 1; v < n; ++v) edges.emplace_back(a, v);
  for (int b = 4; b + 1 < n; b += 2) edges.emplace_back(b, b + 1);
  return Graph::from_edges(n, edges);
}

Report explore_conjecture(std::string_view name, int n, const VerifyOptions& opt) {
  require_range(n, 1, 10, "explore_conjecture");
  GraphFilter f;
  f.n = n;
  if (name == "k7mm-extremal") {
    f.min_edges = std::max(4 * n - 9, 0);
    f.min_connectivity = 5;
    Report r = sweep("explore/k7mm-extremal", n, f, minor_check("k7mm", {{"k6", parse_pattern("k6").graph}}), opt);
    if (n >= 4) {
      const Graph family = matching_over_k4(n);
      if (auto m = find_model(family, parse_pattern("k7mm")))
        r.violations.push_back(model_certificate(*m));
      else
        r.sanity.push_back(no_model_certificate(family, "k7mm"));
    }
    return r;
  }
  f.min_edges = 21;
  if (name == "k7mm-color") return sweep("explore/k7mm-color", n, f, chromatic_check("k7mm"), opt);
  if (name == "k7m-color") return sweep("explore/k7m-color", n, f, chromatic_check("k7m"), opt);
  throw PreconditionError("explore_conjecture: unknown conjecture '" + std::string(name) + "'");
}

const std::vector<std::string>& verification_claims() {
  static const std::vector<std::string> ids = {"extremal",      "main",    "lemma-k4", "lemma-k4minus",
                                               "lemma-k42star", "spindle", "maxdeg2"};
  return ids;
}

Report run_claim(std::string_view claim, int n, const VerifyOptions& opt) {
  if (claim == "extremal") return verify_extremal(n, opt);
  if (claim == "main") return verify_main(n, opt);
  if (claim == "lemma-k4") return verify_lemma_k4(n, opt);
  if (claim == "lemma-k4minus") return verify_lemma_k4minus(n, opt);
  if (claim == "lemma-k42star") return verify_lemma_k42star(n, opt);
  if (claim == "spindle") return verify_spindle_claim(opt);
  if (claim == "maxdeg2") return verify_maxdeg2_cases(opt);
  throw PreconditionError("unknown claim '" + std::string(claim) + "'");
}

namespace {

using detail::Json;

Json certificates_json(const std::vector<Certificate>& certs) {
  Json a = Json::array();
  for (const Certificate& c : certs) a.push_back(detail::certificate_to_json(c));
  return a;
}

[[noreturn]] void report_schema(const std::string& what) { throw CertificateError("report schema: " + what); }

const Json& member(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) report_schema(std::string("missing key '") + key + "'");
  return *it;
}

template <class T>
T member_as(const Json& j, const char* key) {
  try {
    return member(j, key).get<T>();
  } catch (const Json::type_error&) {
    report_schema(std::string("key '") + key + "' has the wrong type");
  }
}

std::vector<Certificate> read_certificates(const Json& j, const char* key) {
  const Json& a = member(j, key);
  if (!a.is_array()) report_schema(std::string(key) + " must be an array");
  std::vector<Certificate> out;
  for (const Json& c : a) {
    out.push_back(detail::certificate_from_json(c));
    revalidate(out.back());
  }
  return out;
}

}  // namespace

std::string write_report(const Report& r) {
  Json j;
  j["tool"] = "mf";
  j["version"] = kToolkitVersion;
  j["claim"] = r.claim;
  j["n"] = r.n;
  Json f;
  f["n"] = r.filter.n;
  f["min_edges"] = r.filter.min_edges;
  f["max_edges"] = r.filter.max_edges;
  f["min_connectivity"] = r.filter.min_connectivity;
  f["max_degree"] = r.filter.max_degree;
  f["predicates"] = r.filter.predicates;
  j["filter"] = std::move(f);
  j["source"] = r.source;
  j["graphs_read"] = r.graphs_read;
  j["graphs_examined"] = r.graphs_examined;
  j["cases"] = r.cases;
  j["witnesses"] = r.witnesses;
  j["verified"] = r.verified();
  j["violations"] = certificates_json(r.violations);
  j["exceptions"] = certificates_json(r.exceptions);
  j["sanity"] = certificates_json(r.sanity);
  j["witness_certificates"] = certificates_json(r.witness_certificates);
  return j.dump(2) + "\n";
}

Report read_report(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw CertificateError(std::string("report is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) report_schema("report must be a JSON object");
  Report r;
  r.claim = member_as<std::string>(j, "claim");
  r.n = member_as<int>(j, "n");
  const Json& f = member(j, "filter");
  r.filter.n = member_as<int>(f, "n");
  r.filter.min_edges = member_as<int>(f, "min_edges");
  r.filter.max_edges = member_as<int>(f, "max_edges");
  r.filter.min_connectivity = member_as<int>(f, "min_connectivity");
  r.filter.max_degree = member_as<int>(f, "max_degree");
  r.filter.predicates = member_as<std::vector<std::string>>(f, "predicates");
  r.source = member_as<std::string>(j, "source");
  r.graphs_read = member_as<std::uint64_t>(j, "graphs_read");
  r.graphs_examined = member_as<std::uint64_t>(j, "graphs_examined");
  r.cases = member_as<std::uint64_t>(j, "cases");
  r.witnesses = member_as<std::uint64_t>(j, "witnesses");
  r.violations = read_certificates(j, "violations");
  r.exceptions = read_certificates(j, "exceptions");
  r.sanity = read_certificates(j, "sanity");
  r.witness_certificates = read_certificates(j, "witness_certificates");
  if (member_as<bool>(j, "verified") != r.verified())
    report_schema("'verified' disagrees with the violation list");
  return r;
}

}  // namespace mf
