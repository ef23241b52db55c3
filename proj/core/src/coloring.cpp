#include "mf/coloring.hpp"

#include <algorithm>
#include <array>

namespace mf {

bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.order()) return false;
  for (int col : c.colors)
    if (col < 0 || col >= c.k) return false;
  for (auto [u, v] : g.edges())
    if (c.colors[u] == c.colors[v]) return false;
  return true;
}

Coloring canonicalize(const Coloring& c) {
  std::vector<int> remap(std::max(c.k, 0), -1);
  int next = 0;
  Coloring out{std::vector<int>(c.colors.size()), c.k};
  for (std::size_t v = 0; v < c.colors.size(); ++v) {
    int& r = remap[c.colors[v]];
    if (r < 0) r = next++;
    out.colors[v] = r;
  }
  return out;
}

namespace {

class Dsatur {
 public:
  Dsatur(const Graph& g, int k) : g_(g), k_(k) { colour_.fill(-1); }

  std::optional<Coloring> solve(bool backtrack) {
    backtrack_ = backtrack;
    if (g_.order() == 0) return Coloring{{}, k_};
    if (k_ <= 0) return std::nullopt;
    if (!step(0, 0)) return std::nullopt;
    Coloring c{std::vector<int>(colour_.begin(), colour_.begin() + g_.order()), k_};
    return canonicalize(c);
  }

 private:
  int saturation(int v) const {
    int s = 0;
    for (int c = 0; c < k_; ++c)
      if (classes_[c].intersects(g_.neighbors(v))) ++s;
    return s;
  }

  int pick(VertexSet uncoloured) const {
    int best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int v : uncoloured) {
      int sat = saturation(v);
      int deg = (g_.neighbors(v) & uncoloured).size();
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  // `used` colours are 0..used-1; a fresh colour is only ever `used` itself.
  bool step(int done, int used) {
    if (done == g_.order()) return true;
    VertexSet uncoloured = g_.vertices() - coloured_;
    const int v = pick(uncoloured);
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (classes_[c].intersects(g_.neighbors(v))) continue;
      colour_[v] = c;
      classes_[c].insert(v);
      coloured_.insert(v);
      if (step(done + 1, std::max(used, c + 1))) return true;
      classes_[c].erase(v);
      coloured_.erase(v);
      colour_[v] = -1;
      if (!backtrack_) return false;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  bool backtrack_ = true;
  std::array<int, Graph::kMaxVertices> colour_{};
  std::array<VertexSet, Graph::kMaxVertices + 1> classes_{};
  VertexSet coloured_;
};

}  // namespace

std::optional<Coloring> find_coloring(const Graph& g, int k) {
  if (k < 0) throw PreconditionError("find_coloring: k must be non-negative");
  return Dsatur(g, std::min(k, Graph::kMaxVertices)).solve(true);
}

std::optional<Coloring> greedy_coloring(const Graph& g, int k) {
  if (k < 0) throw PreconditionError("greedy_coloring: k must be non-negative");
  return Dsatur(g, std::min(k, Graph::kMaxVertices)).solve(false);
}

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  int upper = g.order();
  for (int k = 1; k <= g.order(); ++k) {
    if (greedy_coloring(g, k)) {
      upper = k;
      break;
    }
  }
  for (int k = clique_number(g); k < upper; ++k)
    if (find_coloring(g, k)) return k;
  return upper;
}

KempeChain kempe_chain(const Graph& g, const Coloring& c, int v, int s2) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("kempe_chain: vertex out of range");
  if (!is_proper(g, c)) throw PreconditionError("kempe_chain: colouring is not proper");
  const int s1 = c.colors[v];
  if (s2 == s1) throw PreconditionError("kempe_chain: s2 equals the anchor colour");
  if (s2 < 0 || s2 >= c.k) throw PreconditionError("kempe_chain: s2 outside the palette");
  VertexSet two;
  for (int w = 0; w < g.order(); ++w)
    if (c.colors[w] == s1 || c.colors[w] == s2) two.insert(w);
  return KempeChain{s1, s2, reachable(g, v, two), v};
}

Coloring kempe_swap(const Graph& g, const Coloring& c, const KempeChain& chain) {
  KempeChain actual = kempe_chain(g, c, chain.anchor, chain.s2);
  if (actual.s1 != chain.s1 || actual.members != chain.members)
    throw PreconditionError("kempe_swap: chain does not match the colouring");
  Coloring out = c;
  for (int v : chain.members) out.colors[v] = (c.colors[v] == chain.s1) ? chain.s2 : chain.s1;
  return out;
}

namespace {

std::optional<Model> search_inside(const Graph& g, const Pattern& cycle, VertexSet region,
                                   const std::vector<int>& roots) {
  std::array<int, Graph::kMaxVertices> index{};
  std::vector<int> back;
  for (int v : region) {
    index[v] = static_cast<int>(back.size());
    back.push_back(v);
  }
  std::vector<int> local_roots;
  for (int r : roots) local_roots.push_back(index[r]);
  auto local = find_rooted_model(induced_subgraph(g, region), cycle, local_roots);
  if (!local) return std::nullopt;
  Model m{g, cycle, {}, {}};
  for (VertexSet bag : local->bags) {
    VertexSet mapped;
    for (int x : bag) mapped.insert(back[x]);
    m.bags.push_back(mapped);
  }
  for (auto [u, x] : local->root_binding) m.root_binding.emplace_back(u, back[x]);
  return m;
}

}  // namespace

Model cycle_model_from_kempe(const Graph& g, const Coloring& c, const std::vector<int>& roots,
                             KempeSearchStats* stats) {
  const int k = static_cast<int>(roots.size());
  if (k < 3) throw KempeHypothesisError(-1, "cycle_model_from_kempe: need at least three roots");
  if (!is_proper(g, c)) throw KempeHypothesisError(-1, "cycle_model_from_kempe: colouring is not proper");
  VertexSet root_set;
  std::vector<bool> colour_seen(c.k, false);
  for (int r : roots) {
    if (r < 0 || r >= g.order() || root_set.contains(r))
      throw KempeHypothesisError(-1, "cycle_model_from_kempe: roots must be distinct vertices");
    root_set.insert(r);
    if (colour_seen[c.colors[r]])
      throw KempeHypothesisError(-1, "cycle_model_from_kempe: root colours must be distinct");
    colour_seen[c.colors[r]] = true;
  }

  VertexSet chains;
  for (int i = 0; i < k; ++i) {
    int a = roots[i];
    int b = roots[(i + 1) % k];
    KempeChain chain = kempe_chain(g, c, a, c.colors[b]);
    if (!chain.members.contains(b))
      throw KempeHypothesisError(i, "cycle_model_from_kempe: no Kempe chain joins roots " +
                                        std::to_string(i) + " and " + std::to_string((i + 1) % k));
    chains |= chain.members;
  }

  const Pattern cycle = make_pattern(Family::cycle, {k});
  if (stats) stats->used_fallback = false;
  if (auto m = search_inside(g, cycle, chains, roots)) return *m;

  VertexSet classes;
  for (int v = 0; v < g.order(); ++v)
    if (colour_seen[c.colors[v]]) classes.insert(v);
  if (stats) stats->used_fallback = true;
  if (auto m = search_inside(g, cycle, classes, roots)) return *m;
  throw std::logic_error("cycle_model_from_kempe: no rooted cycle model inside the colour classes");
}

}  // namespace mf
