#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "mf/graph.hpp"
#include "mf/minor.hpp"

namespace mf {

/// colors[v] in [0, k).
struct Coloring {
  std::vector<int> colors;
  int k = 0;

  bool operator==(const Coloring&) const = default;
};

bool is_proper(const Graph& g, const Coloring& c);

/// Colours renumbered in order of first appearance along vertex labels.
Coloring canonicalize(const Coloring& c);

/// DSATUR branch and bound; the result is canonicalized.
std::optional<Coloring> find_coloring(const Graph& g, int k);

/// One greedy DSATUR pass without backtracking; nothing if it needs more than k colours.
std::optional<Coloring> greedy_coloring(const Graph& g, int k);

int chromatic_number(const Graph& g);

struct KempeChain {
  int s1 = 0;  // colour of the anchor
  int s2 = 0;
  VertexSet members;
  int anchor = 0;
};

/// Component of v in the subgraph induced by colours c(v) and s2.
KempeChain kempe_chain(const Graph& g, const Coloring& c, int v, int s2);

/// Exchanges the chain's two colours on its members. Throws PreconditionError if
/// the chain is not a component of c.
Coloring kempe_swap(const Graph& g, const Coloring& c, const KempeChain& chain);

/// Raised when the Kempe-chain hypothesis of cycle_model_from_kempe fails.
class KempeHypothesisError : public PreconditionError {
 public:
  KempeHypothesisError(int index, const std::string& what) : PreconditionError(what), index_(index) {}
  /// First i (0-based) whose pair (v_i, v_{i+1 mod k}) is not joined by a chain;
  /// -1 when the colouring itself is improper or the root colours repeat.
  int index() const { return index_; }

 private:
  int index_;
};

struct KempeSearchStats {
  bool used_fallback = false;
};

/// Given a proper colouring with pairwise distinct colours on roots v_1..v_k and
/// a Kempe chain through each consecutive pair (cyclically), returns a
/// (v_1, ..., v_k)-rooted C_k model whose bags lie inside the roots' colour
/// classes. The search is first confined to the union of those chains, then to
/// the union of the colour classes.
Model cycle_model_from_kempe(const Graph& g, const Coloring& c, const std::vector<int>& roots,
                             KempeSearchStats* stats = nullptr);

}  // namespace mf
