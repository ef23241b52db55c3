#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mf/graph.hpp"

namespace mf {

enum class RootMode { none, unordered, ordered };

/// Which pattern vertices are roots. Unordered roots may be matched to the host
/// roots in any order; ordered roots (cycles) are matched position by position.
/// Complete-type families and the spindle are rooted at every vertex; explicit
/// graphs carry no roots.
struct RootSpec {
  RootMode mode = RootMode::none;
  std::vector<int> indices;

  int arity() const { return static_cast<int>(indices.size()); }
  bool operator==(const RootSpec&) const = default;
};

enum class Family {
  complete,            // K_t
  complete_vee,        // K_t minus two edges at vertex 0: 01, 02
  complete_matching,   // K_t minus the matching 01, 23
  complete_minus,      // K_t minus 01
  multipartite,        // parts are consecutive label ranges
  bipartite,           // K_{k,m}; roots are the k-side 0..k-1
  bipartite_clique,    // K*_{k,m}; as K_{k,m} with the m-side a clique
  cycle,               // 0-1-...-(k-1)-0, ordered roots 0..k-1
  moser_spindle,       // labels u1 u2 u3 u4 u5 u4' u3' = 0..6
  explicit_graph,
};

struct Pattern {
  Family family = Family::explicit_graph;
  std::string name;  // CLI spelling, e.g. "k7v", "c5", "g6:C~"
  Graph graph;
  RootSpec roots;
};

/// params: t for the K_t families, part sizes for multipartite, {k, m} for the
/// bipartite families, k for cycles, nothing for the spindle.
Pattern make_pattern(Family family, const std::vector<int>& params = {});
Pattern make_explicit_pattern(const Graph& g, std::string name);

/// Parses CLI names: k<t>, k<t>v, k<t>mm, k<t>m, k<a><b> (bipartite), k<a><b>s,
/// k<a><b><c>... (multipartite), c<k>, spindle, g6:<graph6>.
Pattern parse_pattern(std::string_view name);

/// Fixed-order list of every named pattern the harness uses.
std::vector<Pattern> pattern_roster();

/// Description of the first broken invariant, or nothing if the pattern is sound.
std::optional<std::string> pattern_defect(const Pattern& p);

}  // namespace mf
