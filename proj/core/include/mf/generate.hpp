#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "mf/graph.hpp"

namespace mf {

struct NamedPredicate {
  std::string name;
  std::function<bool(const Graph&)> test;
};

/// Hypothesis side of a sweep. max_edges < 0 means C(n, 2).
struct GraphFilter {
  int n = 0;
  int min_edges = 0;
  int max_edges = -1;
  int min_connectivity = 0;
  int max_degree = -1;  // < 0: unbounded
  std::vector<NamedPredicate> predicates;

  int edge_cap() const { return max_edges < 0 ? n * (n - 1) / 2 : max_edges; }
  /// Throws PreconditionError when bounds are inconsistent or n is unsupported.
  void validate() const;
  bool accepts(const Graph& g) const;
};

constexpr int kMaxGeneratedOrder = 11;

/// Generated classes stored as packed canonical adjacency codes (8 bytes per
/// graph); operator[] rebuilds the canonical graph.
class GraphList {
 public:
  explicit GraphList(int n = 0) : n_(n) {}
  int order() const { return n_; }
  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  Graph operator[](std::size_t i) const;

 private:
  friend GraphList generate_graph_list(const GraphFilter& filter);
  int n_;
  std::vector<std::uint64_t> codes_;
};

/// One canonical representative per isomorphism class passing the filter, in
/// ascending canonical-form order. Vertices are added one at a time and a child
/// is kept only if deleting its canonical last vertex gives back the parent
/// class; edge and degree bounds prune whole subtrees where that is sound.
std::vector<Graph> generate_graphs(const GraphFilter& filter);
/// Same sequence as generate_graphs, held compactly.
GraphList generate_graph_list(const GraphFilter& filter);

/// Newline-delimited graph6; blank lines and lines starting with '#' are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace mf
