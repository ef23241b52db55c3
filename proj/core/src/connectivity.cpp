#include "mf/connectivity.hpp"

#include <algorithm>
#include <array>

namespace mf {

namespace {

// Unit-capacity flow on the vertex-split digraph: vertex v becomes in(v) = 2v
// and out(v) = 2v + 1 joined by an arc of capacity 1; every edge uv becomes
// out(u) -> in(v) and out(v) -> in(u) with unbounded capacity.
class SplitFlow {
 public:
  SplitFlow(const Graph& g, int s, int t) : g_(g), s_(s), t_(t) {}

  int run(int limit) {
    int flow = 0;
    while (flow < limit && augment()) ++flow;
    return flow;
  }

 private:
  static int in(int v) { return 2 * v; }
  static int out(int v) { return 2 * v + 1; }

  // Residual arcs are enumerated on demand from the graph plus the flow state:
  // through[v] = flow on in(v)->out(v); along[u][v] = net flow out(u)->in(v).
  bool augment() {
    std::array<int, 2 * Graph::kMaxVertices> parent;
    parent.fill(-1);
    std::array<int, 2 * Graph::kMaxVertices> queue{};
    int head = 0;
    int tail = 0;
    const int src = out(s_);
    const int dst = in(t_);
    parent[src] = src;
    queue[tail++] = src;
    auto visit = [&](int from, int to) {
      if (parent[to] == -1) {
        parent[to] = from;
        queue[tail++] = to;
      }
    };
    while (head < tail && parent[dst] == -1) {
      int x = queue[head++];
      int v = x / 2;
      if (x % 2 == 0) {
        // in(v): forward through v, or backwards along an arc carrying flow into v.
        if (v != s_ && v != t_ && !through_[v]) visit(x, out(v));
        for (int u : g_.neighbors(v))
          if (along_[u].contains(v)) visit(x, out(u));
      } else {
        // out(v): forward to any neighbour, or backwards through v itself.
        for (int w : g_.neighbors(v)) visit(x, in(w));
        if (v != s_ && v != t_ && through_[v]) visit(x, in(v));
      }
    }
    if (parent[dst] == -1) return false;
    for (int x = dst; x != src; x = parent[x]) {
      int p = parent[x];
      int pv = p / 2;
      int xv = x / 2;
      if (pv == xv) {
        through_[pv] = (p % 2 == 0);
      } else if (p % 2 == 1) {
        // out(pv) -> in(xv): cancel reverse flow first, otherwise push.
        if (along_[xv].contains(pv)) along_[xv].erase(pv);
        else along_[pv].insert(xv);
      } else {
        // in(pv) -> out(xv) is the residual of out(xv) -> in(pv).
        along_[xv].erase(pv);
      }
    }
    return true;
  }

  const Graph& g_;
  int s_;
  int t_;
  std::array<bool, Graph::kMaxVertices> through_{};
  std::array<VertexSet, Graph::kMaxVertices> along_{};
};

}  // namespace

int local_connectivity(const Graph& g, int s, int t, int limit) {
  if (s == t || g.adjacent(s, t))
    throw PreconditionError("local_connectivity: terminals must be distinct and non-adjacent");
  return SplitFlow(g, s, t).run(limit);
}

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  const int n = g.order();
  if (n < k + 1) return false;
  if (g.min_degree() < k) return false;
  // Any cut of size < k misses one of the first k vertices, and that vertex
  // is separated from some non-neighbour.
  for (int s = 0; s < k; ++s) {
    VertexSet others = g.vertices() - g.neighbors(s) - VertexSet::single(s);
    for (int t : others)
      if (local_connectivity(g, s, t, k) < k) return false;
  }
  return true;
}

int vertex_connectivity(const Graph& g) {
  int k = 0;
  while (is_k_connected(g, k + 1)) ++k;
  return k;
}

bool is_internally_k_connected(const Graph& g, VertexSet z, int k) {
  if (!z.subset_of(g.vertices())) throw std::out_of_range("root set outside graph");
  if (k <= 0) return true;
  // (Z, V) itself is a separation of order |Z|; the clique criterion misses it.
  if (z.size() < k && z != g.vertices()) return false;
  if (g.order() >= k + 1) return is_k_connected(add_clique(g, z), k);
  // Too few vertices: (z, V) is a violating separation unless z = V.
  return z == g.vertices();
}

namespace {

bool qualifies(const Separation& s, int max_order, VertexSet z) {
  if (!z.subset_of(s.a) || s.order() > max_order || (s.b - s.a).empty()) return false;
  if (z.empty() && (s.a - s.b).empty()) return false;
  return true;
}

}  // namespace

void for_each_separation(const Graph& g, int max_order, VertexSet z,
                         const std::function<void(const Separation&)>& fn) {
  const int n = g.order();
  if (!z.subset_of(g.vertices())) throw std::out_of_range("root set outside graph");
  max_order = std::min(max_order, n);
  for (int size = 0; size <= max_order; ++size) {
    // Gosper's hack over separators of this size.
    std::uint64_t sep = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = n >= 64 ? 0 : std::uint64_t{1} << n;
    while (true) {
      VertexSet s(sep);
      std::vector<VertexSet> comps = components(g, g.vertices() - s);
      VertexSet forced = s;
      std::vector<VertexSet> free;
      for (VertexSet c : comps) {
        if (c.intersects(z)) forced |= c;
        else free.push_back(c);
      }
      if (free.size() < 63) {
        const std::uint64_t masks = std::uint64_t{1} << free.size();
        for (std::uint64_t m = 1; m < masks; ++m) {
          VertexSet b = s;
          VertexSet a = forced;
          for (std::size_t i = 0; i < free.size(); ++i) {
            if ((m >> i) & 1U) b |= free[i];
            else a |= free[i];
          }
          Separation cand{a, b};
          if (!qualifies(cand, max_order, z)) continue;
          Separation rev{b, a};
          if (qualifies(rev, max_order, z) && (b - a).first() < (a - b).first()) continue;
          fn(cand);
        }
      }
      if (size == 0 || size == 64) break;
      std::uint64_t c = sep & (~sep + 1);
      std::uint64_t r = sep + c;
      if (r == 0) break;
      sep = (((r ^ sep) >> 2) / c) | r;
      if (limit != 0 && sep >= limit) break;
    }
  }
}

std::vector<Separation> enumerate_separations(const Graph& g, int max_order, VertexSet z) {
  std::vector<Separation> out;
  for_each_separation(g, max_order, z, [&](const Separation& s) { out.push_back(s); });
  return out;
}

}  // namespace mf
