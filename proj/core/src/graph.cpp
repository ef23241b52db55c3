#include "mf/graph.hpp"

#include <algorithm>

namespace mf {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw std::out_of_range("graph order must be in [0, 64]");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check(u);
    g.check(v);
    if (u == v) throw PreconditionError("self-loop in edge list");
    if (!g.adj_[u].contains(v)) ++g.m_;
    g.adj_[u].insert(v);
    g.adj_[v].insert(u);
  }
  return g;
}

Graph Graph::from_rows(std::span<const VertexSet> rows) {
  Graph g(static_cast<int>(rows.size()));
  int deg_sum = 0;
  for (int v = 0; v < g.n_; ++v) {
    VertexSet row = rows[v];
    if (!row.subset_of(g.vertices())) throw std::out_of_range("adjacency row outside vertex range");
    if (row.contains(v)) throw PreconditionError("adjacency is not irreflexive");
    g.adj_[v] = row;
    deg_sum += row.size();
  }
  for (int v = 0; v < g.n_; ++v)
    for (int w : g.adj_[v])
      if (!g.adj_[w].contains(v)) throw PreconditionError("adjacency is not symmetric");
  g.m_ = deg_sum / 2;
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = adj_[v].size();
  std::sort(d.begin(), d.end());
  return d;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, adj_[v].size());
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, adj_[v].size());
  return best;
}

Graph Graph::with_edge(int u, int v) const {
  check(u);
  check(v);
  if (u == v) throw PreconditionError("self-loop");
  Graph g = *this;
  if (!g.adj_[u].contains(v)) ++g.m_;
  g.adj_[u].insert(v);
  g.adj_[v].insert(u);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check(u);
  check(v);
  Graph g = *this;
  if (g.adj_[u].contains(v)) --g.m_;
  g.adj_[u].erase(v);
  g.adj_[v].erase(u);
  return g;
}

bool Graph::operator==(const Graph& o) const {
  if (n_ != o.n_ || m_ != o.m_) return false;
  return std::equal(adj_.begin(), adj_.begin() + n_, o.adj_.begin());
}

namespace {

// Drops bit `gone` from a row and shifts higher bits down.
VertexSet squeeze(VertexSet row, int gone) {
  std::uint64_t low = row.bits() & ((std::uint64_t{1} << gone) - 1);
  std::uint64_t high = gone >= 63 ? 0 : (row.bits() >> (gone + 1)) << gone;
  return VertexSet(low | high);
}

}  // namespace

Graph contract_edge(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v)) throw PreconditionError("contract_edge: vertices are not adjacent");
  int keep = std::min(u, v);
  int gone = std::max(u, v);
  VertexSet merged = (g.neighbors(u) | g.neighbors(v)) - VertexSet{u, v};
  std::vector<VertexSet> rows(g.order());
  for (int w = 0; w < g.order(); ++w) {
    VertexSet row = g.neighbors(w) - VertexSet{u, v};
    if (merged.contains(w)) row.insert(keep);
    rows[w] = row;
  }
  rows[keep] = merged;
  std::vector<VertexSet> out;
  out.reserve(g.order() - 1);
  for (int w = 0; w < g.order(); ++w)
    if (w != gone) out.push_back(squeeze(rows[w], gone));
  return Graph::from_rows(out);
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("delete_vertex: vertex out of range");
  return induced_subgraph(g, g.vertices() - VertexSet::single(v));
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v)) throw PreconditionError("delete_edge: not an edge");
  return g.without_edge(u, v);
}

Graph add_edge(const Graph& g, int u, int v) { return g.with_edge(u, v); }

Graph induced_subgraph(const Graph& g, VertexSet x) {
  if (!x.subset_of(g.vertices())) throw std::out_of_range("induced_subgraph: vertex out of range");
  std::array<int, Graph::kMaxVertices> index{};
  int k = 0;
  for (int v : x) index[v] = k++;
  std::vector<VertexSet> rows(k);
  for (int v : x) {
    VertexSet row;
    for (int w : g.neighbors(v) & x) row.insert(index[w]);
    rows[index[v]] = row;
  }
  return Graph::from_rows(rows);
}

Graph add_clique(const Graph& g, VertexSet z) {
  if (!z.subset_of(g.vertices())) throw std::out_of_range("add_clique: vertex out of range");
  std::vector<VertexSet> rows(g.order());
  for (int v = 0; v < g.order(); ++v) {
    rows[v] = g.neighbors(v);
    if (z.contains(v)) rows[v] |= z - VertexSet::single(v);
  }
  return Graph::from_rows(rows);
}

Graph complement(const Graph& g) {
  std::vector<VertexSet> rows(g.order());
  for (int v = 0; v < g.order(); ++v)
    rows[v] = g.vertices() - g.neighbors(v) - VertexSet::single(v);
  return Graph::from_rows(rows);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.order() + h.order() > Graph::kMaxVertices)
    throw std::out_of_range("disjoint_union: more than 64 vertices");
  std::vector<VertexSet> rows;
  rows.reserve(g.order() + h.order());
  for (int v = 0; v < g.order(); ++v) rows.push_back(g.neighbors(v));
  for (int v = 0; v < h.order(); ++v)
    rows.push_back(VertexSet(h.neighbors(v).bits() << g.order()));
  return Graph::from_rows(rows);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw PreconditionError("relabel: permutation has wrong length");
  VertexSet seen;
  for (int p : perm) {
    if (p < 0 || p >= g.order() || seen.contains(p))
      throw PreconditionError("relabel: not a permutation");
    seen.insert(p);
  }
  std::vector<VertexSet> rows(g.order());
  for (int v = 0; v < g.order(); ++v) {
    VertexSet row;
    for (int w : g.neighbors(v)) row.insert(perm[w]);
    rows[perm[v]] = row;
  }
  return Graph::from_rows(rows);
}

VertexSet common_neighbors(const Graph& g, int u, int v) {
  if (u == v) throw PreconditionError("common_neighbors: u == v");
  return g.neighbors(u) & g.neighbors(v);
}

VertexSet reachable(const Graph& g, int from, VertexSet within) {
  VertexSet seen = VertexSet::single(from);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g, VertexSet within) {
  if (within.empty()) return true;
  return reachable(g, within.first(), within) == within;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet c = reachable(g, rest.first(), rest);
    out.push_back(c);
    rest -= c;
  }
  return out;
}

namespace {

// Branch and bound over candidate sets; greedy colouring of the candidates
// bounds how much the current clique can still grow.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  VertexSet run() {
    expand(VertexSet{}, g_.vertices());
    return best_;
  }

 private:
  int colour_bound(VertexSet cand) const {
    int colours = 0;
    VertexSet rest = cand;
    while (!rest.empty()) {
      ++colours;
      VertexSet avail = rest;
      while (!avail.empty()) {
        int v = avail.first();
        rest.erase(v);
        avail -= g_.neighbors(v);
        avail.erase(v);
      }
    }
    return colours;
  }

  void expand(VertexSet clique, VertexSet cand) {
    if (cand.empty()) {
      if (clique.size() > best_.size()) best_ = clique;
      return;
    }
    if (clique.size() + colour_bound(cand) <= best_.size()) return;
    for (int v : cand) {
      if (clique.size() + cand.size() <= best_.size()) return;
      expand(clique | VertexSet::single(v), cand & g_.neighbors(v));
      cand.erase(v);
    }
  }

  const Graph& g_;
  VertexSet best_;
};

}  // namespace

VertexSet maximum_clique(const Graph& g) { return CliqueSearch(g).run(); }

int clique_number(const Graph& g) { return maximum_clique(g).size(); }

int independence_number(const Graph& g) { return clique_number(complement(g)); }

bool Separation::is_separation_of(const Graph& g) const {
  if ((a | b) != g.vertices()) return false;
  VertexSet a_only = a - b;
  VertexSet b_only = b - a;
  for (int v : a_only)
    if (g.neighbors(v).intersects(b_only)) return false;
  return true;
}

}  // namespace mf
