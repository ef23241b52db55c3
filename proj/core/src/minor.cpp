#include "mf/minor.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace mf {

const char* to_string(ModelDefect d) {
  switch (d) {
    case ModelDefect::none: return "none";
    case ModelDefect::shape: return "shape";
    case ModelDefect::bags_not_disjoint: return "bags not pairwise disjoint";
    case ModelDefect::bag_not_connected: return "bag empty or not connected";
    case ModelDefect::edge_not_realised: return "pattern edge not realised between bags";
    case ModelDefect::root_not_in_bag: return "root not in its bag";
  }
  return "unknown";
}

ModelCheck validate_model(const Model& m) {
  auto fail = [](ModelDefect d, std::string detail) { return ModelCheck{d, std::move(detail)}; };
  const Graph& g = m.host;
  const Graph& h = m.pattern.graph;
  if (static_cast<int>(m.bags.size()) != h.order())
    return fail(ModelDefect::shape, "expected " + std::to_string(h.order()) + " bags");
  for (std::size_t u = 0; u < m.bags.size(); ++u)
    if (!m.bags[u].subset_of(g.vertices()))
      return fail(ModelDefect::shape, "bag " + std::to_string(u) + " has vertices outside the host");

  VertexSet used;
  for (std::size_t u = 0; u < m.bags.size(); ++u) {
    if (m.bags[u].intersects(used))
      return fail(ModelDefect::bags_not_disjoint, "bag " + std::to_string(u) + " overlaps an earlier bag");
    used |= m.bags[u];
  }
  for (std::size_t u = 0; u < m.bags.size(); ++u) {
    if (m.bags[u].empty() || !is_connected(g, m.bags[u]))
      return fail(ModelDefect::bag_not_connected, "bag " + std::to_string(u));
  }
  for (auto [u, w] : h.edges()) {
    VertexSet reach;
    for (int x : m.bags[u]) reach |= g.neighbors(x);
    if (!reach.intersects(m.bags[w]))
      return fail(ModelDefect::edge_not_realised,
                  "pattern edge " + std::to_string(u) + "-" + std::to_string(w));
  }

  const RootSpec& spec = m.pattern.roots;
  if (m.root_binding.empty()) return {};
  if (spec.mode == RootMode::none || static_cast<int>(m.root_binding.size()) != spec.arity())
    return fail(ModelDefect::root_not_in_bag, "binding does not match the root spec");
  VertexSet pattern_side;
  VertexSet host_side;
  for (std::size_t i = 0; i < m.root_binding.size(); ++i) {
    auto [u, v] = m.root_binding[i];
    if (u < 0 || u >= h.order() || v < 0 || v >= g.order())
      return fail(ModelDefect::root_not_in_bag, "binding index out of range");
    if (spec.mode == RootMode::ordered && spec.indices[i] != u)
      return fail(ModelDefect::root_not_in_bag, "ordered binding out of sequence");
    if (pattern_side.contains(u) || host_side.contains(v))
      return fail(ModelDefect::root_not_in_bag, "repeated root in binding");
    pattern_side.insert(u);
    host_side.insert(v);
    if (!m.bags[u].contains(v))
      return fail(ModelDefect::root_not_in_bag,
                  "host root " + std::to_string(v) + " not in bag " + std::to_string(u));
  }
  if (pattern_side != VertexSet::of(spec.indices))
    return fail(ModelDefect::root_not_in_bag, "binding uses a non-root pattern vertex");
  return {};
}

namespace {

// Any unused host vertex next to a bag can join that bag, so it suffices to
// search partitions of whole host components into exactly |V(H)| connected
// bags, then look for a spanning copy of H in the quotient graph. Bags are
// created in order of their lowest vertex, which makes the enumeration
// duplicate-free and the first hit deterministic.
class ModelSearch {
 public:
  ModelSearch(const Graph& g, const Pattern& p, const std::vector<int>* host_roots)
      : g_(g), pattern_(p), h_(p.graph), p_(h_.order()) {
    for (int u = 0; u < p_; ++u) deg_h_[u] = h_.degree(u);
    min_deg_h_ = h_.min_degree();
    sorted_deg_h_.assign(deg_h_.begin(), deg_h_.begin() + p_);
    std::sort(sorted_deg_h_.rbegin(), sorted_deg_h_.rend());
    plan_order();
    if (host_roots != nullptr) {
      rooted_ = true;
      mode_ = p.roots.mode;
      for (std::size_t i = 0; i < host_roots->size(); ++i) {
        int r = (*host_roots)[i];
        host_roots_.insert(r);
        pattern_roots_.insert(p.roots.indices[i]);
        pattern_of_root_[r] = p.roots.indices[i];
      }
      host_root_list_ = *host_roots;
    }
  }

  std::optional<Model> run() {
    if (p_ == 0) return make_model();
    if (p_ > g_.order()) return std::nullopt;
    std::vector<VertexSet> comps = components(g_, g_.vertices());
    const bool connected_pattern = is_connected(h_);
    const std::size_t c = comps.size();
    if (connected_pattern) {
      for (VertexSet comp : comps)
        if (try_region(comp)) return make_model();
      return std::nullopt;
    }
    if (c >= 63) throw PreconditionError("find_model: too many host components for a disconnected pattern");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c); ++mask) {
      VertexSet region;
      for (std::size_t i = 0; i < c; ++i)
        if ((mask >> i) & 1U) region |= comps[i];
      if (try_region(region)) return make_model();
    }
    return std::nullopt;
  }

 private:
  // Pattern vertices in placement order: each next vertex has the most
  // already-placed neighbours, then the highest degree.
  void plan_order() {
    VertexSet placed;
    for (int step = 0; step < p_; ++step) {
      int best = -1;
      int best_links = -1;
      for (int u = 0; u < p_; ++u) {
        if (placed.contains(u)) continue;
        int links = (h_.neighbors(u) & placed).size();
        if (links > best_links || (links == best_links && deg_h_[u] > deg_h_[best])) {
          best = u;
          best_links = links;
        }
      }
      order_.push_back(best);
      placed.insert(best);
    }
  }

  bool try_region(VertexSet region) {
    if (region.size() < p_) return false;
    if (rooted_ && !host_roots_.subset_of(region)) return false;
    nbags_ = 0;
    return partition(region);
  }

  bool partition(VertexSet rem) {
    if (nbags_ == p_) return rem.empty() && quotient_match();
    if (rem.size() < p_ - nbags_) return false;
    if (static_cast<int>(components(g_, rem).size()) > p_ - nbags_) return false;
    const int v = rem.first();
    return grow(VertexSet::single(v), g_.neighbors(v) & rem, rem);
  }

  bool grow(VertexSet bag, VertexSet cand, VertexSet rem) {
    if (cand.empty()) return place(bag, rem);
    const int u = cand.first();
    VertexSet rest = cand - VertexSet::single(u);
    // Exclude u first so that small bags are tried before large ones.
    if (grow_excluding(bag, rest, rem, u)) return true;
    VertexSet bigger = bag | VertexSet::single(u);
    if (rooted_ && (bigger & host_roots_).size() > 1) return false;
    if (rem.size() - bigger.size() < p_ - nbags_ - 1) return false;
    VertexSet next = rest | ((g_.neighbors(u) & rem) - bigger - excluded_);
    return grow(bigger, next, rem);
  }

  bool grow_excluding(VertexSet bag, VertexSet rest, VertexSet rem, int u) {
    excluded_.insert(u);
    bool found = grow(bag, rest, rem);
    excluded_.erase(u);
    return found;
  }

  bool place(VertexSet bag, VertexSet rem) {
    VertexSet saved_excluded = excluded_;
    excluded_ = VertexSet{};
    bags_[nbags_] = bag;
    VertexSet reach;
    for (int x : bag) reach |= g_.neighbors(x);
    reach_[nbags_] = reach - bag;
    ++nbags_;
    VertexSet left = rem - bag;
    bool found = degrees_feasible(left) && partition(left);
    if (!found) --nbags_;
    excluded_ = saved_excluded;
    return found;
  }

  // Every bag must end with at least min-degree-of-H neighbouring bags.
  bool degrees_feasible(VertexSet left) const {
    const int open = p_ - nbags_;
    for (int i = 0; i < nbags_; ++i) {
      int deg = 0;
      for (int j = 0; j < nbags_; ++j)
        if (j != i && reach_[i].intersects(bags_[j])) ++deg;
      deg += std::min(open, (reach_[i] & left).size());
      if (deg < min_deg_h_) return false;
    }
    return true;
  }

  bool quotient_match() {
    for (int i = 0; i < p_; ++i) {
      quotient_[i] = VertexSet{};
      for (int j = 0; j < p_; ++j)
        if (j != i && reach_[i].intersects(bags_[j])) quotient_[i].insert(j);
      qdeg_[i] = quotient_[i].size();
    }
    std::array<int, Graph::kMaxVertices> sorted{};
    std::copy(qdeg_.begin(), qdeg_.begin() + p_, sorted.begin());
    std::sort(sorted.begin(), sorted.begin() + p_, std::greater<>());
    for (int i = 0; i < p_; ++i)
      if (sorted[i] < sorted_deg_h_[i]) return false;

    root_bags_ = VertexSet{};
    if (rooted_) {
      for (int i = 0; i < p_; ++i) {
        VertexSet here = bags_[i] & host_roots_;
        if (!here.empty()) {
          root_bags_.insert(i);
          if (mode_ == RootMode::ordered) forced_bag_[pattern_of_root_[here.first()]] = i;
        }
      }
    }
    return assign(0, VertexSet{});
  }

  bool assign(int step, VertexSet used) {
    if (step == p_) return true;
    const int u = order_[step];
    VertexSet cand = VertexSet::range(p_) - used;
    for (int w : h_.neighbors(u)) {
      if (placed_at_[w] < step) cand &= quotient_[phi_[w]];
    }
    if (rooted_) {
      if (!pattern_roots_.contains(u)) cand -= root_bags_;
      else if (mode_ == RootMode::ordered) cand &= VertexSet::single(forced_bag_[u]);
      else cand &= root_bags_;
    }
    for (int b : cand) {
      if (qdeg_[b] < deg_h_[u]) continue;
      phi_[u] = b;
      placed_at_[u] = step;
      if (assign(step + 1, used | VertexSet::single(b))) return true;
      placed_at_[u] = Graph::kMaxVertices;
    }
    return false;
  }

  Model make_model() const {
    Model m{g_, pattern_, std::vector<VertexSet>(p_), {}};
    for (int u = 0; u < p_; ++u) m.bags[u] = bags_[phi_[u]];
    if (rooted_) {
      if (mode_ == RootMode::ordered) {
        for (std::size_t i = 0; i < host_root_list_.size(); ++i)
          m.root_binding.emplace_back(pattern_.roots.indices[i], host_root_list_[i]);
      } else {
        for (int u : pattern_.roots.indices)
          m.root_binding.emplace_back(u, (m.bags[u] & host_roots_).first());
      }
    }
    return m;
  }

  const Graph& g_;
  const Pattern& pattern_;
  const Graph& h_;
  const int p_;
  std::array<int, Graph::kMaxVertices> deg_h_{};
  int min_deg_h_ = 0;
  std::vector<int> sorted_deg_h_;
  std::vector<int> order_;

  bool rooted_ = false;
  RootMode mode_ = RootMode::none;
  VertexSet host_roots_;
  VertexSet pattern_roots_;
  std::vector<int> host_root_list_;
  std::array<int, Graph::kMaxVertices> pattern_of_root_{};
  std::array<int, Graph::kMaxVertices> forced_bag_{};

  int nbags_ = 0;
  VertexSet excluded_;
  std::array<VertexSet, Graph::kMaxVertices> bags_{};
  std::array<VertexSet, Graph::kMaxVertices> reach_{};
  std::array<VertexSet, Graph::kMaxVertices> quotient_{};
  std::array<int, Graph::kMaxVertices> qdeg_{};
  VertexSet root_bags_;
  std::array<int, Graph::kMaxVertices> phi_{};
  std::array<int, Graph::kMaxVertices> placed_at_ = [] {
    std::array<int, Graph::kMaxVertices> a{};
    a.fill(Graph::kMaxVertices);
    return a;
  }();
};

}  // namespace

std::optional<Model> find_model(const Graph& g, const Pattern& p) {
  return ModelSearch(g, p, nullptr).run();
}

std::optional<Model> find_rooted_model(const Graph& g, const Pattern& p,
                                       const std::vector<int>& host_roots) {
  if (p.roots.mode == RootMode::none)
    throw PreconditionError("find_rooted_model: pattern " + p.name + " has no roots");
  if (static_cast<int>(host_roots.size()) != p.roots.arity())
    throw PreconditionError("find_rooted_model: expected " + std::to_string(p.roots.arity()) +
                            " host roots, got " + std::to_string(host_roots.size()));
  VertexSet seen;
  for (int r : host_roots) {
    if (r < 0 || r >= g.order()) throw PreconditionError("find_rooted_model: root out of range");
    if (seen.contains(r)) throw PreconditionError("find_rooted_model: repeated host root");
    seen.insert(r);
  }
  return ModelSearch(g, p, &host_roots).run();
}

}  // namespace mf
