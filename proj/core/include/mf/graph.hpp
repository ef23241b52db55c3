#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mf/vertex_set.hpp"

namespace mf {

using Edge = std::pair<int, int>;

/// Raised when an operation is called with arguments outside its contract
/// (a contracted pair that is not an edge, a malformed pattern, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple graph on vertices 0..n-1, n <= 64, one adjacency word per vertex.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Rows must describe a symmetric, irreflexive relation.
  static Graph from_rows(std::span<const VertexSet> rows);

  int order() const { return n_; }
  int size() const { return m_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return adj_[check(v)]; }
  int degree(int v) const { return adj_[check(v)].size(); }
  bool adjacent(int u, int v) const { return adj_[check(u)].contains(check(v)); }
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;  // ascending
  int min_degree() const;
  int max_degree() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  bool operator==(const Graph& o) const;

 private:
  int check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    return v;
  }

  int n_ = 0;
  int m_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// Merges v into u. The merged vertex occupies slot min(u,v); the other slot is
/// removed and later labels shift down by one.
Graph contract_edge(const Graph& g, int u, int v);
Graph delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);
Graph add_edge(const Graph& g, int u, int v);
/// G[X], relabelled 0..|X|-1 in increasing order of the original labels.
Graph induced_subgraph(const Graph& g, VertexSet x);
/// G plus all missing edges inside Z.
Graph add_clique(const Graph& g, VertexSet z);
Graph complement(const Graph& g);
/// Vertices of h are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
/// Relabel so that vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

VertexSet common_neighbors(const Graph& g, int u, int v);
bool is_connected(const Graph& g);
bool is_connected(const Graph& g, VertexSet within);
/// Vertices reachable from `from` inside `within` (from must be in within).
VertexSet reachable(const Graph& g, int from, VertexSet within);
std::vector<VertexSet> components(const Graph& g, VertexSet within);

int clique_number(const Graph& g);
int independence_number(const Graph& g);
/// A maximum clique, lowest labels preferred on ties.
VertexSet maximum_clique(const Graph& g);

/// (A, B) with A | B = V(G) and no edge between A - B and B - A.
struct Separation {
  VertexSet a;
  VertexSet b;

  int order() const { return (a & b).size(); }
  VertexSet separator() const { return a & b; }
  bool is_separation_of(const Graph& g) const;
  bool nontrivial(const Graph& g) const { return a != g.vertices() && b != g.vertices(); }
  bool operator==(const Separation&) const = default;
};

}  // namespace mf
