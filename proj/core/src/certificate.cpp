#include "mf/certificate.hpp"

#include <algorithm>
#include <set>

#include "certificate_json.hpp"
#include "mf/canonical.hpp"
#include "mf/graph6.hpp"
#include "mf/patterns.hpp"
#include "mf/subgraph.hpp"

namespace mf {

const char* to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::model: return "model";
    case CertificateKind::coloring: return "coloring";
    case CertificateKind::exception: return "exception";
    case CertificateKind::none_found: return "none-found";
  }
  return "?";
}

Certificate model_certificate(const Model& m, Relation relation) {
  Certificate c;
  c.kind = CertificateKind::model;
  c.graph = m.host;
  c.pattern = m.pattern.name;
  c.relation = relation;
  c.bags = m.bags;
  c.roots = m.root_binding;
  return c;
}

Certificate coloring_certificate(const Graph& g, const Coloring& col) {
  Certificate c;
  c.kind = CertificateKind::coloring;
  c.graph = g;
  c.k = col.k;
  c.colors = col.colors;
  return c;
}

Certificate exception_certificate(const Graph& g, std::string pattern, std::string isomorphic_to) {
  Certificate c;
  c.kind = CertificateKind::exception;
  c.graph = g;
  c.pattern = std::move(pattern);
  c.isomorphic_to = std::move(isomorphic_to);
  return c;
}

Certificate no_model_certificate(const Graph& g, std::string pattern, std::vector<int> host_roots,
                                 Relation relation) {
  Certificate c;
  c.kind = CertificateKind::none_found;
  c.graph = g;
  c.pattern = std::move(pattern);
  c.host_roots = std::move(host_roots);
  c.relation = relation;
  return c;
}

Certificate no_coloring_certificate(const Graph& g, int k) {
  Certificate c;
  c.kind = CertificateKind::none_found;
  c.graph = g;
  c.k = k;
  return c;
}

namespace {

Pattern pattern_named(const std::string& name) {
  try {
    return parse_pattern(name);
  } catch (const std::exception& e) {
    throw CertificateError("unknown pattern '" + name + "': " + e.what());
  }
}

Pattern pattern_of(const Certificate& c) { return pattern_named(c.pattern); }

void check_model(const Certificate& c) {
  Model m{c.graph, pattern_of(c), c.bags, c.roots};
  ModelCheck check = validate_model(m);
  if (!check)
    throw CertificateError(std::string("model condition violated (") + to_string(check.defect) +
                           "): " + check.detail);
  if (c.relation == Relation::subgraph) {
    for (VertexSet b : c.bags)
      if (b.size() != 1) throw CertificateError("subgraph witness has a bag with more than one vertex");
  }
}

void check_coloring(const Certificate& c) {
  if (c.k < 0) throw CertificateError("coloring: k is negative");
  if (static_cast<int>(c.colors.size()) != c.graph.order())
    throw CertificateError("coloring: expected one colour per vertex");
  for (int col : c.colors)
    if (col < 0 || col >= c.k) throw CertificateError("coloring: colour outside [0, k)");
  for (auto [u, v] : c.graph.edges())
    if (c.colors[u] == c.colors[v])
      throw CertificateError("coloring: edge " + std::to_string(u) + "-" + std::to_string(v) +
                             " is monochromatic");
}

bool search_succeeds(const Certificate& c) {
  if (c.k >= 0) return find_coloring(c.graph, c.k).has_value();
  const Pattern p = pattern_of(c);
  if (c.relation == Relation::subgraph) return has_subgraph(c.graph, p.graph).has_value();
  if (c.host_roots.empty()) return find_model(c.graph, p).has_value();
  try {
    return find_rooted_model(c.graph, p, c.host_roots).has_value();
  } catch (const PreconditionError& e) {
    throw CertificateError(std::string("none-found: invalid roots: ") + e.what());
  }
}

}  // namespace

void revalidate(const Certificate& c) {
  switch (c.kind) {
    case CertificateKind::model:
      check_model(c);
      return;
    case CertificateKind::coloring:
      check_coloring(c);
      return;
    case CertificateKind::exception: {
      const Pattern tag = pattern_named(c.isomorphic_to);
      if (!isomorphic(c.graph, tag.graph))
        throw CertificateError("exception: graph is not isomorphic to " + c.isomorphic_to);
      if (find_model(c.graph, pattern_of(c)))
        throw CertificateError("exception: graph does have a " + c.pattern + " model");
      return;
    }
    case CertificateKind::none_found:
      if (search_succeeds(c)) throw CertificateError("none-found: the search does find a witness");
      return;
  }
}

namespace detail {

namespace {

Json relation_json(Relation r) { return r == Relation::subgraph ? "subgraph" : "minor"; }

[[noreturn]] void schema(const std::string& what) { throw CertificateError("schema: " + what); }

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing key '") + key + "'");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) schema(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) schema(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<int> as_int_list(const Json& j, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const Json& x : j) out.push_back(as_int(x, what));
  return out;
}

void only_keys(const Json& j, std::initializer_list<const char*> keys) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = std::any_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; });
    if (!known) schema("unexpected key '" + it.key() + "'");
  }
}

Relation relation_of(const Json& j) {
  auto it = j.find("relation");
  if (it == j.end()) return Relation::minor;
  std::string r = as_string(*it, "relation");
  if (r == "minor") return Relation::minor;
  if (r == "subgraph") return Relation::subgraph;
  schema("relation must be 'minor' or 'subgraph'");
}

}  // namespace

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["graph"] = emit_graph6(c.graph);
  switch (c.kind) {
    case CertificateKind::model: {
      j["pattern"] = c.pattern;
      if (c.relation != Relation::minor) j["relation"] = relation_json(c.relation);
      Json bags = Json::array();
      for (VertexSet b : c.bags) bags.push_back(b.to_vector());
      j["bags"] = std::move(bags);
      Json roots = Json::object();
      for (auto [pv, hv] : c.roots) roots[std::to_string(pv)] = hv;
      j["roots"] = std::move(roots);
      break;
    }
    case CertificateKind::coloring:
      j["k"] = c.k;
      j["colors"] = c.colors;
      break;
    case CertificateKind::exception:
      j["pattern"] = c.pattern;
      j["isomorphic_to"] = c.isomorphic_to;
      break;
    case CertificateKind::none_found:
      if (c.k >= 0) {
        j["k"] = c.k;
      } else {
        j["pattern"] = c.pattern;
        if (c.relation != Relation::minor) j["relation"] = relation_json(c.relation);
        j["roots"] = c.host_roots;
      }
      break;
  }
  return j;
}

Certificate certificate_from_json(const Json& j) {
  if (!j.is_object()) schema("certificate must be a JSON object");
  Certificate c;
  const std::string kind = as_string(field(j, "kind"), "kind");
  try {
    c.graph = parse_graph6(as_string(field(j, "graph"), "graph"));
  } catch (const Graph6Error& e) {
    schema(std::string("graph: ") + e.what());
  }
  if (kind == "model") {
    only_keys(j, {"kind", "graph", "pattern", "relation", "bags", "roots"});
    c.kind = CertificateKind::model;
    c.pattern = as_string(field(j, "pattern"), "pattern");
    c.relation = relation_of(j);
    const Json& bags = field(j, "bags");
    if (!bags.is_array()) schema("bags must be an array");
    for (const Json& b : bags) {
      VertexSet s;
      for (int v : as_int_list(b, "bag")) {
        if (v < 0 || v >= c.graph.order()) schema("bag vertex out of range");
        if (s.contains(v)) schema("bag lists a vertex twice");
        s.insert(v);
      }
      c.bags.push_back(s);
    }
    const Json& roots = field(j, "roots");
    if (!roots.is_object()) schema("roots must be an object");
    for (auto it = roots.begin(); it != roots.end(); ++it) {
      int pv = 0;
      try {
        std::size_t used = 0;
        pv = std::stoi(it.key(), &used);
        if (used != it.key().size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        schema("roots key '" + it.key() + "' is not a pattern vertex");
      }
      c.roots.emplace_back(pv, as_int(it.value(), "root"));
    }
  } else if (kind == "coloring") {
    only_keys(j, {"kind", "graph", "k", "colors"});
    c.kind = CertificateKind::coloring;
    c.k = as_int(field(j, "k"), "k");
    c.colors = as_int_list(field(j, "colors"), "colors");
  } else if (kind == "exception") {
    only_keys(j, {"kind", "graph", "pattern", "isomorphic_to"});
    c.kind = CertificateKind::exception;
    c.pattern = as_string(field(j, "pattern"), "pattern");
    c.isomorphic_to = as_string(field(j, "isomorphic_to"), "isomorphic_to");
  } else if (kind == "none-found") {
    c.kind = CertificateKind::none_found;
    if (j.contains("k")) {
      only_keys(j, {"kind", "graph", "k"});
      c.k = as_int(j["k"], "k");
      if (c.k < 0) schema("k must be non-negative");
    } else {
      only_keys(j, {"kind", "graph", "pattern", "relation", "roots"});
      c.pattern = as_string(field(j, "pattern"), "pattern");
      c.relation = relation_of(j);
      c.host_roots = as_int_list(field(j, "roots"), "roots");
    }
  } else {
    schema("unknown kind '" + kind + "'");
  }
  return c;
}

}  // namespace detail

std::string write_certificate(const Certificate& c) { return detail::certificate_to_json(c).dump(); }

Certificate read_certificate(std::string_view text) {
  detail::Json j;
  try {
    j = detail::Json::parse(text);
  } catch (const detail::Json::parse_error& e) {
    throw CertificateError(std::string("not valid JSON: ") + e.what());
  }
  Certificate c = detail::certificate_from_json(j);
  revalidate(c);
  return c;
}

}  // namespace mf
