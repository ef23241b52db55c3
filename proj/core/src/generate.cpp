#include "mf/generate.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>

#include "mf/canonical.hpp"
#include "mf/connectivity.hpp"
#include "mf/graph6.hpp"

namespace mf {

void GraphFilter::validate() const {
  if (n < 0 || n > kMaxGeneratedOrder)
    throw PreconditionError("graph filter: n must lie in [0, " + std::to_string(kMaxGeneratedOrder) +
                            "], got " + std::to_string(n));
  const int all = n * (n - 1) / 2;
  if (min_edges < 0) throw PreconditionError("graph filter: min_edges is negative");
  if (max_edges > all) throw PreconditionError("graph filter: max_edges exceeds C(n,2)");
  if (max_edges >= 0 && min_edges > max_edges)
    throw PreconditionError("graph filter: min_edges exceeds max_edges");
  if (min_connectivity < 0) throw PreconditionError("graph filter: min_connectivity is negative");
  for (const auto& p : predicates)
    if (!p.test) throw PreconditionError("graph filter: predicate '" + p.name + "' is empty");
}

bool GraphFilter::accepts(const Graph& g) const {
  if (g.order() != n) return false;
  if (g.size() < min_edges || g.size() > edge_cap()) return false;
  if (max_degree >= 0 && g.max_degree() > max_degree) return false;
  if (min_connectivity > 0 && !is_k_connected(g, min_connectivity)) return false;
  return std::all_of(predicates.begin(), predicates.end(), [&](const NamedPredicate& p) { return p.test(g); });
}

namespace {

// Upper triangle in graph6 order packed into an integer, first bit highest, so
// integer order equals canonical-form order for a fixed number of vertices.
using Code = std::uint64_t;
using Rows = std::array<VertexSet, kMaxGeneratedOrder>;

Code encode(const Rows& rows, int n, const std::vector<int>& order) {
  Code code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (rows[order[j]].contains(order[i]) ? 1U : 0U);
  return code;
}

Rows decode(Code code, int n) {
  Rows rows{};
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --bit;
      if ((code >> bit) & 1U) {
        rows[i].insert(j);
        rows[j].insert(i);
      }
    }
  }
  return rows;
}

Graph to_graph(const Rows& rows, int n) {
  return Graph::from_rows(std::span<const VertexSet>(rows.data(), static_cast<std::size_t>(n)));
}

// Bounds on the space actually generated (which is the complement space when the
// filter is dense). All are inherited by induced subgraphs in the sense used below.
struct Bounds {
  int n = 0;
  int min_edges = 0;
  int max_edges = 0;
  int min_degree = 0;
  int max_degree = 0;
};

class Augmenter {
 public:
  explicit Augmenter(const Bounds& b) : b_(b) {}

  // Calls sink once per class on b.n vertices; the last level is never stored.
  template <class Sink>
  void run(Sink&& sink) {
    if (b_.n <= 1) {
      sink(Code{0});
      return;
    }
    std::vector<Code> level{0};  // K1
    std::vector<Code> children;
    for (int k = 1; k < b_.n; ++k) {
      const bool last = k + 1 == b_.n;
      // A class is accepted only from its canonical parent, so duplicates can
      // only come from one parent and are removed right there.
      std::vector<Code> next;
      for (Code parent : level) {
        children.clear();
        extend(parent, k, children);
        std::sort(children.begin(), children.end());
        children.erase(std::unique(children.begin(), children.end()), children.end());
        if (last) {
          for (Code c : children) sink(c);
        } else {
          next.insert(next.end(), children.begin(), children.end());
        }
      }
      level = std::move(next);
      level.shrink_to_fit();
    }
  }

 private:
  // Children on k+1 vertices of a canonical parent on k vertices.
  void extend(Code parent, int k, std::vector<Code>& out) const {
    const Rows prow = decode(parent, k);
    const int nk = k + 1;
    int pedges = 0;
    std::array<int, kMaxGeneratedOrder> pdeg{};
    for (int v = 0; v < k; ++v) {
      pdeg[v] = prow[v].size();
      pedges += pdeg[v];
    }
    pedges /= 2;

    const int remaining = b_.n - nk;
    // Each later vertex adds at most one edge to every vertex present at that point.
    const int addable = (b_.n * (b_.n - 1) - nk * (nk - 1)) / 2;
    const int deg_floor = b_.min_degree - remaining;
    const int pmax = *std::max_element(pdeg.begin(), pdeg.begin() + k);

    VertexSet forced;
    for (int v = 0; v < k; ++v)
      if (pdeg[v] < deg_floor) forced.insert(v);
    const VertexSet all = VertexSet::range(k);
    const VertexSet optional = all - forced;
    const std::vector<int> opt = optional.to_vector();

    for (std::uint64_t t = 0; t < (std::uint64_t{1} << opt.size()); ++t) {
      VertexSet s = forced;
      for (std::size_t i = 0; i < opt.size(); ++i)
        if ((t >> i) & 1U) s.insert(opt[i]);
      const int d = s.size();
      const int edges = pedges + d;
      if (edges > b_.max_edges || edges + addable < b_.min_edges) continue;
      if (d > b_.max_degree || d < deg_floor) continue;
      // The new vertex must reach the maximum degree of the child.
      if (d < pmax) continue;
      bool beaten = false;
      for (int v : s)
        if (pdeg[v] + 1 > d || pdeg[v] + 1 > b_.max_degree) beaten = true;
      if (beaten) continue;
      Rows crow = prow;
      for (int v : s) {
        crow[v].insert(k);
        crow[k].insert(v);
      }
      accept(crow, nk, parent, out);
    }
  }

  // Deletion vertex: among the vertices maximising (degree, neighbour degree
  // sum), the one placed last by the canonical labeling.
  static std::array<int, kMaxGeneratedOrder> invariants(const Rows& rows, int n) {
    std::array<int, kMaxGeneratedOrder> f{};
    for (int v = 0; v < n; ++v) {
      int s = 0;
      for (int w : rows[v]) s += rows[w].size();
      f[v] = rows[v].size() * 1024 + s;
    }
    return f;
  }

  void accept(const Rows& crow, int nk, Code parent, std::vector<Code>& out) const {
    const int fresh = nk - 1;
    const auto f = invariants(crow, nk);
    const int best = *std::max_element(f.begin(), f.begin() + nk);
    if (f[fresh] != best) return;
    int ties = 0;
    for (int v = 0; v < nk; ++v) ties += (f[v] == best);

    const Graph child = to_graph(crow, nk);
    const CanonicalLabeling lab = canonical_labeling(child);
    const Code code = encode(crow, nk, lab.order);
    if (ties == 1) {
      out.push_back(code);
      return;
    }
    int w = -1;
    for (int i = nk - 1; i >= 0; --i) {
      if (f[lab.order[i]] == best) {
        w = lab.order[i];
        break;
      }
    }
    if (w == fresh || same_orbit(lab.automorphisms, w, fresh, nk)) {
      out.push_back(code);
      return;
    }
    // Otherwise the canonical parent is G - w; accept iff that is our parent class.
    const Graph reduced = delete_vertex(child, w);
    Rows rrow{};
    for (int v = 0; v < nk - 1; ++v) rrow[v] = reduced.neighbors(v);
    if (encode(rrow, nk - 1, canonical_labeling(reduced).order) == parent) out.push_back(code);
  }

  static bool same_orbit(const std::vector<std::vector<int>>& gens, int a, int b, int n) {
    std::array<int, kMaxGeneratedOrder> parent{};
    std::iota(parent.begin(), parent.begin() + n, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : gens)
      for (int v = 0; v < n; ++v) parent[find(v)] = find(g[v]);
    return find(a) == find(b);
  }

  Bounds b_;
};

}  // namespace

Graph GraphList::operator[](std::size_t i) const { return to_graph(decode(codes_.at(i), n_), n_); }

GraphList generate_graph_list(const GraphFilter& filter) {
  filter.validate();
  const int n = filter.n;
  GraphList out(n);
  if (filter.min_connectivity >= n && n > 0) return out;  // connectivity never reaches n

  const int all = n * (n - 1) / 2;
  const int max_edges = filter.edge_cap();
  const int max_degree = filter.max_degree < 0 ? std::max(n - 1, 0) : filter.max_degree;
  const int min_degree = filter.min_connectivity;

  // Work in the complement when the lower edge bound is the tighter one, so
  // that the sparse side of the filter bounds the search.
  const bool flip = filter.min_edges > all - max_edges;
  Bounds b{n, filter.min_edges, max_edges, min_degree, max_degree};
  if (flip)
    b = Bounds{n, all - max_edges, all - filter.min_edges, std::max(n - 1 - max_degree, 0),
               n - 1 - min_degree};

  Augmenter(b).run([&](Code code) {
    Graph g = to_graph(decode(code, n), n);
    if (flip) g = complement(g);
    if (!filter.accepts(g)) return;
    if (flip) {
      const CanonicalLabeling lab = canonical_labeling(g);
      Rows rows{};
      for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v);
      code = encode(rows, n, lab.order);
    }
    out.codes_.push_back(code);
  });
  std::sort(out.codes_.begin(), out.codes_.end());
  return out;
}

std::vector<Graph> generate_graphs(const GraphFilter& filter) {
  const GraphList list = generate_graph_list(filter);
  std::vector<Graph> out;
  out.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) out.push_back(list[i]);
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace mf
