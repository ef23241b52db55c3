#include "mf/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "mf/graph6.hpp"

namespace mf {

namespace {

struct Partition {
  std::array<VertexSet, Graph::kMaxVertices> cells{};
  int count = 0;

  bool discrete(int n) const { return count == n; }
};

// Column j of the relabelled upper triangle, first row in the highest bit, so
// comparing columns as integers matches the lexicographic order of the bits.
using Certificate = std::array<std::uint64_t, Graph::kMaxVertices>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
    add_twin_generators();
  }

  CanonicalLabeling run() {
    CanonicalLabeling out;
    if (n_ == 0) return out;
    Partition root;
    root.cells[0] = g_.vertices();
    root.count = 1;
    refine(root);
    std::vector<int> prefix;
    search(root, prefix);
    out.order.assign(best_lab_.begin(), best_lab_.begin() + n_);
    out.automorphisms = std::move(generators_);
    return out;
  }

 private:
  // Transpositions of vertices with identical neighbourhoods (apart from each
  // other) are automorphisms; seeding them prunes complete and empty parts.
  void add_twin_generators() {
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if ((adj_[u] - VertexSet::single(v)) == (adj_[v] - VertexSet::single(u))) {
          std::vector<int> t(n_);
          std::iota(t.begin(), t.end(), 0);
          std::swap(t[u], t[v]);
          generators_.push_back(std::move(t));
          break;  // chains u~v~w cover the whole twin class
        }
      }
    }
  }

  // Split cells by neighbour counts into earlier cells until equitable. Cells are
  // visited by position only, so the result commutes with relabelling.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int wi = 0; wi < p.count && !changed; ++wi) {
        const VertexSet w = p.cells[wi];
        for (int ci = 0; ci < p.count; ++ci) {
          const VertexSet c = p.cells[ci];
          if (c.size() == 1) continue;
          std::array<VertexSet, Graph::kMaxVertices + 1> bucket{};
          int lo = Graph::kMaxVertices;
          int hi = 0;
          for (int v : c) {
            int k = (adj_[v] & w).size();
            bucket[k].insert(v);
            lo = std::min(lo, k);
            hi = std::max(hi, k);
          }
          if (lo == hi) continue;
          std::array<VertexSet, Graph::kMaxVertices> parts{};
          int np = 0;
          for (int k = lo; k <= hi; ++k)
            if (!bucket[k].empty()) parts[np++] = bucket[k];
          for (int i = p.count - 1; i > ci; --i) p.cells[i + np - 1] = p.cells[i];
          for (int i = 0; i < np; ++i) p.cells[ci + i] = parts[i];
          p.count += np - 1;
          changed = true;
          break;
        }
      }
    }
  }

  Certificate certificate(const std::array<int, Graph::kMaxVertices>& lab) const {
    Certificate cert{};
    for (int j = 1; j < n_; ++j) {
      std::uint64_t col = 0;
      const VertexSet row = adj_[lab[j]];
      for (int i = 0; i < j; ++i) col = (col << 1) | (row.contains(lab[i]) ? 1U : 0U);
      cert[j] = col;
    }
    return cert;
  }

  void leaf(const Partition& p) {
    std::array<int, Graph::kMaxVertices> lab{};
    for (int i = 0; i < n_; ++i) lab[i] = p.cells[i].first();
    Certificate cert = certificate(lab);
    if (!have_best_) {
      have_best_ = true;
      best_ = cert;
      best_lab_ = lab;
      return;
    }
    int cmp = compare(cert, best_);
    if (cmp < 0) {
      best_ = cert;
      best_lab_ = lab;
    } else if (cmp == 0) {
      std::vector<int> gamma(n_);
      bool identity = true;
      for (int i = 0; i < n_; ++i) {
        gamma[best_lab_[i]] = lab[i];
        identity = identity && best_lab_[i] == lab[i];
      }
      if (!identity) generators_.push_back(std::move(gamma));
    }
  }

  int compare(const Certificate& a, const Certificate& b) const {
    for (int j = 1; j < n_; ++j) {
      if (a[j] != b[j]) return a[j] < b[j] ? -1 : 1;
    }
    return 0;
  }

  // Orbit representative of v under the generators that fix every prefix vertex.
  std::array<int, Graph::kMaxVertices> orbits(const std::vector<int>& prefix) const {
    std::array<int, Graph::kMaxVertices> parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : generators_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v);
        int b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void search(const Partition& p, std::vector<int>& prefix) {
    if (p.discrete(n_)) {
      leaf(p);
      return;
    }
    int target = 0;
    while (p.cells[target].size() == 1) ++target;
    const VertexSet cell = p.cells[target];
    VertexSet tried;
    std::size_t seen_generators = static_cast<std::size_t>(-1);
    std::array<int, Graph::kMaxVertices> orbit{};
    for (int v : cell) {
      if (seen_generators != generators_.size()) {
        orbit = orbits(prefix);
        seen_generators = generators_.size();
      }
      bool redundant = false;
      for (int u : tried)
        if (orbit[u] == orbit[v]) redundant = true;
      if (redundant) continue;
      tried.insert(v);

      Partition child = p;
      for (int i = child.count - 1; i > target; --i) child.cells[i + 1] = child.cells[i];
      child.cells[target] = VertexSet::single(v);
      child.cells[target + 1] = cell - VertexSet::single(v);
      ++child.count;
      refine(child);
      prefix.push_back(v);
      search(child, prefix);
      prefix.pop_back();
    }
  }

  const Graph& g_;
  int n_;
  std::array<VertexSet, Graph::kMaxVertices> adj_{};
  std::vector<std::vector<int>> generators_;
  bool have_best_ = false;
  Certificate best_{};
  std::array<int, Graph::kMaxVertices> best_lab_{};
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Canonizer(g).run(); }

Graph canonical_graph(const Graph& g) {
  CanonicalLabeling lab = canonical_labeling(g);
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[lab.order[i]] = i;
  return relabel(g, perm);
}

std::string canonical_form(const Graph& g) { return emit_graph6(canonical_graph(g)); }

bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace mf
