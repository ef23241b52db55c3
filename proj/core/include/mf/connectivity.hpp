#pragma once

#include <functional>
#include <vector>

#include "mf/graph.hpp"

namespace mf {

/// Maximum number of internally vertex-disjoint s-t paths, counting at most `limit`.
/// s and t must be distinct and non-adjacent.
int local_connectivity(const Graph& g, int s, int t, int limit);

/// True iff n >= k + 1 and no set of fewer than k vertices disconnects g.
bool is_k_connected(const Graph& g, int k);

/// Largest k for which g is k-connected.
int vertex_connectivity(const Graph& g);

/// True iff (g, z) has no separation (A, B) with z in A, |A & B| < k and B - A nonempty.
bool is_internally_k_connected(const Graph& g, VertexSet z, int k);

/// Calls fn on every separation (A, B) of (g, z) with order <= max_order and
/// B - A nonempty. When z is empty only non-trivial separations are reported.
/// A pair whose reverse also qualifies is reported once, oriented so that
/// A - B holds the lower minimum label.
void for_each_separation(const Graph& g, int max_order, VertexSet z,
                         const std::function<void(const Separation&)>& fn);

std::vector<Separation> enumerate_separations(const Graph& g, int max_order, VertexSet z);

}  // namespace mf
