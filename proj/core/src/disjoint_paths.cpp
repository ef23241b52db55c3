#include "mf/disjoint_paths.hpp"

#include <array>

namespace mf {

namespace {

// Shortest path inside `within`, lowest labels first on ties.
std::optional<Path> bfs_path(const Graph& g, int from, int to, VertexSet within) {
  std::array<int, Graph::kMaxVertices> parent;
  parent.fill(-1);
  parent[from] = from;
  VertexSet seen = VertexSet::single(from);
  std::vector<int> frontier{from};
  while (!frontier.empty() && !seen.contains(to)) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int y : (g.neighbors(x) & within) - seen) {
        seen.insert(y);
        parent[y] = x;
        next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  if (!seen.contains(to)) return std::nullopt;
  Path p;
  for (int x = to; x != from; x = parent[x]) p.push_back(x);
  p.push_back(from);
  return Path(p.rbegin(), p.rend());
}

class LinkageSearch {
 public:
  LinkageSearch(const Graph& g, int s1, int t1, int s2, int t2)
      : g_(g), s1_(s1), t1_(t1), s2_(s2), t2_(t2) {}

  std::optional<std::pair<Path, Path>> run() {
    path_.push_back(s1_);
    if (extend(VertexSet::single(s1_))) return std::make_pair(path_, second_);
    return std::nullopt;
  }

 private:
  // A solution can always be shortcut along chords of P1 without touching P2,
  // so only chordless first paths are explored.
  bool extend(VertexSet on_path) {
    const int end = path_.back();
    const VertexSet free = g_.vertices() - on_path;
    if (end == t1_) {
      auto p2 = bfs_path(g_, s2_, t2_, free);
      if (!p2) return false;
      second_ = *p2;
      return true;
    }
    const VertexSet open = free - VertexSet{s2_, t2_};
    if (!reachable(g_, end, open | VertexSet::single(end)).contains(t1_)) return false;
    if (!reachable(g_, s2_, free).contains(t2_)) return false;

    VertexSet next = g_.neighbors(end) & open;
    if (next.contains(t1_)) next = VertexSet::single(t1_);
    const VertexSet earlier = on_path - VertexSet::single(end);
    for (int w : next) {
      if (g_.neighbors(w).intersects(earlier)) continue;
      path_.push_back(w);
      if (extend(on_path | VertexSet::single(w))) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int s1_, t1_, s2_, t2_;
  Path path_;
  Path second_;
};

}  // namespace

std::optional<std::pair<Path, Path>> two_disjoint_paths(const Graph& g, int s1, int t1, int s2,
                                                        int t2) {
  for (int v : {s1, t1, s2, t2})
    if (v < 0 || v >= g.order()) throw std::out_of_range("two_disjoint_paths: terminal out of range");
  if (VertexSet{s1, t1, s2, t2}.size() != 4)
    throw PreconditionError("two_disjoint_paths: terminals must be distinct");
  return LinkageSearch(g, s1, t1, s2, t2).run();
}

}  // namespace mf
