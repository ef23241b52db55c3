#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mf/graph.hpp"

namespace mf {

using Path = std::vector<int>;

/// Vertex-disjoint paths s1..t1 and s2..t2 (ends included), or nothing if no such
/// pair exists. Exact: backtracks over chordless s1-t1 paths, pruning any prefix
/// that cuts s2 from t2 or the prefix end from t1. Terminals must be distinct.
std::optional<std::pair<Path, Path>> two_disjoint_paths(const Graph& g, int s1, int t1, int s2,
                                                        int t2);

}  // namespace mf
