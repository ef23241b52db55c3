#include "mf/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "mf/graph6.hpp"

namespace mf {

namespace {

Graph complete_graph(int t) {
  std::vector<Edge> edges;
  for (int u = 0; u < t; ++u)
    for (int v = u + 1; v < t; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(t, edges);
}

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

std::string digits(const std::vector<int>& parts) {
  std::string s;
  for (int p : parts) s += std::to_string(p);
  return s;
}

Graph multipartite_graph(const std::vector<int>& parts) {
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], int(i));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

RootSpec first_k(RootMode mode, int k) {
  RootSpec r{mode, std::vector<int>(k)};
  std::iota(r.indices.begin(), r.indices.end(), 0);
  return r;
}

}  // namespace

Pattern make_pattern(Family family, const std::vector<int>& params) {
  Pattern p;
  p.family = family;
  auto param = [&](std::size_t i) {
    require(params.size() > i, "make_pattern: missing parameter");
    return params[i];
  };
  switch (family) {
    case Family::complete: {
      int t = param(0);
      require(t >= 1 && t <= Graph::kMaxVertices, "K_t needs 1 <= t <= 64");
      p.graph = complete_graph(t);
      p.name = "k" + std::to_string(t);
      break;
    }
    case Family::complete_vee: {
      int t = param(0);
      require(t >= 4 && t <= Graph::kMaxVertices, "K_t^v needs t >= 4");
      p.graph = complete_graph(t).without_edge(0, 1).without_edge(0, 2);
      p.name = "k" + std::to_string(t) + "v";
      break;
    }
    case Family::complete_matching: {
      int t = param(0);
      require(t >= 4 && t <= Graph::kMaxVertices, "K_t^= needs t >= 4");
      p.graph = complete_graph(t).without_edge(0, 1).without_edge(2, 3);
      p.name = "k" + std::to_string(t) + "mm";
      break;
    }
    case Family::complete_minus: {
      int t = param(0);
      require(t >= 2 && t <= Graph::kMaxVertices, "K_t^- needs t >= 2");
      p.graph = complete_graph(t).without_edge(0, 1);
      p.name = "k" + std::to_string(t) + "m";
      break;
    }
    case Family::multipartite: {
      require(params.size() >= 2, "complete multipartite needs at least two parts");
      require(std::all_of(params.begin(), params.end(), [](int s) { return s >= 1 && s <= 9; }),
              "part sizes must be in 1..9");
      require(std::accumulate(params.begin(), params.end(), 0) <= Graph::kMaxVertices,
              "too many vertices");
      p.graph = multipartite_graph(params);
      p.name = "k" + digits(params);
      break;
    }
    case Family::bipartite:
    case Family::bipartite_clique: {
      int k = param(0);
      int m = param(1);
      require(k >= 1 && k <= 9 && m >= 1 && m <= 9, "K_{k,m} needs 1 <= k, m <= 9");
      Graph g = multipartite_graph({k, m});
      if (family == Family::bipartite_clique) {
        for (int u = k; u < k + m; ++u)
          for (int v = u + 1; v < k + m; ++v) g = g.with_edge(u, v);
      }
      p.graph = g;
      p.roots = first_k(RootMode::unordered, k);
      p.name = "k" + digits({k, m}) + (family == Family::bipartite_clique ? "s" : "");
      break;
    }
    case Family::cycle: {
      int k = param(0);
      require(k >= 3 && k <= Graph::kMaxVertices, "C_k needs 3 <= k <= 64");
      std::vector<Edge> edges;
      for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
      p.graph = Graph::from_edges(k, edges);
      p.roots = first_k(RootMode::ordered, k);
      p.name = "c" + std::to_string(k);
      break;
    }
    case Family::moser_spindle: {
      // u1=0 u2=1 u3=2 u4=3 u5=4 u4'=5 u3'=6
      p.graph = Graph::from_edges(7, {{0, 3}, {0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5},
                                      {0, 5}, {0, 6}, {2, 6}, {4, 6}, {1, 5}});
      p.name = "spindle";
      break;
    }
    case Family::explicit_graph:
      throw PreconditionError("use make_explicit_pattern for explicit graphs");
  }
  // Every other family is rooted at all of its vertices, i.e. an (H, V(H))-model.
  if (p.roots.mode == RootMode::none) p.roots = first_k(RootMode::unordered, p.graph.order());
  return p;
}

Pattern make_explicit_pattern(const Graph& g, std::string name) {
  Pattern p;
  p.family = Family::explicit_graph;
  p.graph = g;
  p.name = std::move(name);
  return p;
}

Pattern parse_pattern(std::string_view name) {
  auto bad = [&]() { return PreconditionError("unknown pattern name: " + std::string(name)); };
  if (name == "spindle") return make_pattern(Family::moser_spindle);
  if (name.substr(0, 3) == "g6:") {
    try {
      return make_explicit_pattern(parse_graph6(name.substr(3)), std::string(name));
    } catch (const Graph6Error& e) {
      throw PreconditionError(std::string("bad explicit pattern: ") + e.what());
    }
  }
  if (name.size() < 2) throw bad();
  std::string_view rest = name.substr(1);
  std::size_t ndig = 0;
  while (ndig < rest.size() && rest[ndig] >= '0' && rest[ndig] <= '9') ++ndig;
  if (ndig == 0) throw bad();
  std::string_view num = rest.substr(0, ndig);
  std::string_view suffix = rest.substr(ndig);

  if (name[0] == 'c') {
    if (!suffix.empty()) throw bad();
    int k = 0;
    std::from_chars(num.data(), num.data() + num.size(), k);
    return make_pattern(Family::cycle, {k});
  }
  if (name[0] != 'k') throw bad();
  if (ndig == 1) {
    int t = num[0] - '0';
    if (suffix.empty()) return make_pattern(Family::complete, {t});
    if (suffix == "v") return make_pattern(Family::complete_vee, {t});
    if (suffix == "mm") return make_pattern(Family::complete_matching, {t});
    if (suffix == "m") return make_pattern(Family::complete_minus, {t});
    throw bad();
  }
  std::vector<int> parts;
  for (char ch : num) parts.push_back(ch - '0');
  if (ndig == 2) {
    if (suffix.empty()) return make_pattern(Family::bipartite, parts);
    if (suffix == "s") return make_pattern(Family::bipartite_clique, parts);
    throw bad();
  }
  if (!suffix.empty()) throw bad();
  return make_pattern(Family::multipartite, parts);
}

std::vector<Pattern> pattern_roster() {
  return {
      make_pattern(Family::complete_vee, {7}),
      make_pattern(Family::complete_matching, {7}),
      make_pattern(Family::complete_minus, {7}),
      make_pattern(Family::complete, {7}),
      make_pattern(Family::complete_vee, {6}),
      make_pattern(Family::multipartite, {2, 2, 2, 2}),
      make_pattern(Family::complete, {4}),
      make_pattern(Family::complete_minus, {4}),
      make_pattern(Family::bipartite, {4, 2}),
      make_pattern(Family::bipartite_clique, {4, 2}),
      make_pattern(Family::bipartite, {4, 4}),
      make_pattern(Family::cycle, {3}),
      make_pattern(Family::cycle, {4}),
      make_pattern(Family::cycle, {5}),
      make_pattern(Family::moser_spindle),
  };
}

std::optional<std::string> pattern_defect(const Pattern& p) {
  const Graph& g = p.graph;
  const int n = g.order();
  const int full = n * (n - 1) / 2;
  auto expect_edges = [&](int m) -> std::optional<std::string> {
    if (g.size() != m)
      return "expected " + std::to_string(m) + " edges, found " + std::to_string(g.size());
    return std::nullopt;
  };
  std::optional<std::string> defect;
  switch (p.family) {
    case Family::complete:
      defect = expect_edges(full);
      break;
    case Family::complete_vee:
      defect = expect_edges(full - 2);
      if (!defect && g.degree(0) != n - 3) defect = "vertex 0 must lose both edges";
      break;
    case Family::complete_matching:
      defect = expect_edges(full - 2);
      if (!defect && g.min_degree() != n - 2) defect = "missing edges must form a matching";
      break;
    case Family::complete_minus:
      defect = expect_edges(full - 1);
      break;
    case Family::bipartite:
    case Family::bipartite_clique: {
      const int k = p.roots.arity();
      const int m = n - k;
      int want = k * m + (p.family == Family::bipartite_clique ? m * (m - 1) / 2 : 0);
      defect = expect_edges(want);
      VertexSet a = VertexSet::range(k);
      for (int v : a)
        if (!defect && g.neighbors(v) != g.vertices() - a) defect = "root side must be independent and complete to the rest";
      break;
    }
    case Family::cycle:
      defect = expect_edges(n);
      if (!defect)
        for (int i = 0; i < n; ++i)
          if (!g.adjacent(i, (i + 1) % n)) defect = "cycle edge missing";
      break;
    case Family::moser_spindle:
      defect = expect_edges(11);
      if (!defect && n != 7) defect = "spindle has 7 vertices";
      break;
    case Family::multipartite:
    case Family::explicit_graph:
      break;
  }
  if (defect) return defect;

  VertexSet seen;
  for (int r : p.roots.indices) {
    if (r < 0 || r >= n) return "root index out of range";
    if (seen.contains(r)) return "repeated root index";
    seen.insert(r);
  }
  bool ordered = p.roots.mode == RootMode::ordered;
  if (ordered != (p.family == Family::cycle)) return "ordered roots are reserved for cycles";
  if (p.roots.mode == RootMode::none && !p.roots.indices.empty()) return "roots listed without a mode";
  return std::nullopt;
}

}  // namespace mf
