#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mf/graph.hpp"
#include "mf/patterns.hpp"

namespace mf {

/// A model of pattern H in host G: one connected bag of host vertices per pattern
/// vertex, pairwise disjoint, with every pattern edge realised between bags.
struct Model {
  Graph host;
  Pattern pattern;
  std::vector<VertexSet> bags;  // indexed by pattern vertex
  /// (pattern root, host root) pairs; empty for an unrooted model. For ordered
  /// roots the pairs follow pattern.roots.indices in order.
  std::vector<std::pair<int, int>> root_binding;
};

/// The four defining conditions of a model, in the order they are checked.
enum class ModelDefect {
  none,
  shape,             // bag count differs from the pattern order
  bags_not_disjoint,
  bag_not_connected, // includes empty bags
  edge_not_realised,
  root_not_in_bag,   // includes bindings that do not respect the root spec
};

struct ModelCheck {
  ModelDefect defect = ModelDefect::none;
  std::string detail;

  explicit operator bool() const { return defect == ModelDefect::none; }
};

const char* to_string(ModelDefect d);

ModelCheck validate_model(const Model& m);

/// Exact unrooted minor test: a model of p.graph in g, or nothing. Roots of p are
/// ignored. Returned bags partition the host components they touch.
std::optional<Model> find_model(const Graph& g, const Pattern& p);

/// As find_model with p's roots bound to host_roots: position by position for
/// ordered roots, in whichever order works for unordered ones.
/// Throws PreconditionError on arity mismatch or repeated/out-of-range roots.
std::optional<Model> find_rooted_model(const Graph& g, const Pattern& p,
                                       const std::vector<int>& host_roots);

}  // namespace mf
