#pragma once

#include <optional>
#include <vector>

#include "mf/graph.hpp"

namespace mf {

/// Finds an injection f: V(h) -> V(g) with f(u)f(v) in E(g) for every uv in E(h)
/// (not necessarily induced). embedding[u] is the image of pattern vertex u.
std::optional<std::vector<int>> has_subgraph(const Graph& g, const Graph& h);

}  // namespace mf
