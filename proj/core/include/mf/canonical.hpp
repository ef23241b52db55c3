#pragma once

#include <string>
#include <vector>

#include "mf/graph.hpp"

namespace mf {

struct CanonicalLabeling {
  /// order[i] is the vertex of the input placed at canonical position i.
  std::vector<int> order;
  /// Automorphisms met during the search (as vertex maps); they generate a
  /// subgroup of Aut(G), not necessarily all of it.
  std::vector<std::vector<int>> automorphisms;
};

/// Canonical labeling by equitable refinement plus individualisation, keeping the
/// labeling whose upper-triangle adjacency string (graph6 bit order) is
/// lexicographically smallest. Subtrees related by an automorphism that fixes the
/// individualised prefix are pruned.
CanonicalLabeling canonical_labeling(const Graph& g);

/// The input relabelled by its canonical labeling.
Graph canonical_graph(const Graph& g);

/// graph6 text of canonical_graph(g). Isomorphic graphs have equal forms, and
/// byte order agrees with the lexicographic order of adjacency bits.
std::string canonical_form(const Graph& g);

bool isomorphic(const Graph& g, const Graph& h);

}  // namespace mf
