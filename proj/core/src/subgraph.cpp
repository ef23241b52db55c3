#include "mf/subgraph.hpp"

#include <algorithm>
#include <array>

namespace mf {

namespace {

class Embedder {
 public:
  Embedder(const Graph& g, const Graph& h) : g_(g), h_(h) {
    // Place h's vertices so that each one (after the first of a component)
    // already has a placed neighbour; higher degree first.
    VertexSet placed;
    for (int step = 0; step < h.order(); ++step) {
      int best = -1;
      int best_links = -1;
      for (int u = 0; u < h.order(); ++u) {
        if (placed.contains(u)) continue;
        int links = (h.neighbors(u) & placed).size();
        if (links > best_links || (links == best_links && h.degree(u) > h.degree(best))) {
          best = u;
          best_links = links;
        }
      }
      order_.push_back(best);
      placed.insert(best);
    }
    image_.fill(-1);
  }

  std::optional<std::vector<int>> run() {
    if (h_.order() > g_.order() || h_.size() > g_.size()) return std::nullopt;
    if (!extend(0, VertexSet{})) return std::nullopt;
    return std::vector<int>(image_.begin(), image_.begin() + h_.order());
  }

 private:
  bool extend(int step, VertexSet used) {
    if (step == h_.order()) return true;
    const int u = order_[step];
    VertexSet cand = g_.vertices() - used;
    for (int w : h_.neighbors(u))
      if (image_[w] >= 0) cand &= g_.neighbors(image_[w]);
    const int need = h_.degree(u);
    for (int x : cand) {
      if (g_.degree(x) < need) continue;
      image_[u] = x;
      if (extend(step + 1, used | VertexSet::single(x))) return true;
    }
    image_[u] = -1;
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<int> order_;
  std::array<int, Graph::kMaxVertices> image_{};
};

}  // namespace

std::optional<std::vector<int>> has_subgraph(const Graph& g, const Graph& h) {
  return Embedder(g, h).run();
}

}  // namespace mf
