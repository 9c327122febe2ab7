#include "forestlcs/forest.hpp"

#include <numeric>
#include <string>

#include "forestlcs/error.hpp"

namespace forestlcs {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string edge_text(Edge e) { return std::to_string(e.u) + " " + std::to_string(e.v); }

}  // namespace

Forest::Forest(std::size_t order) : order_(order) { build_adjacency(); }

Forest::Forest(std::size_t order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.v >= order_) throw ForestError(ForestErrc::vertex_out_of_range, "vertex out of range in edge " + edge_text(e));
    if (e.u == e.v) throw ForestError(ForestErrc::self_loop, "self-loop at vertex " + std::to_string(e.u));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw ForestError(ForestErrc::duplicate_edge, "duplicate edge " + edge_text(*dup));
  DisjointSets sets(order_);
  for (const Edge& e : edges_)
    if (!sets.unite(e.u, e.v)) throw ForestError(ForestErrc::cycle, "edge " + edge_text(e) + " closes a cycle");
  build_adjacency();
}

Forest::Forest(Trusted, std::size_t order, std::vector<Edge> sorted_edges)
    : order_(order), edges_(std::move(sorted_edges)) {
  build_adjacency();
}

void Forest::build_adjacency() {
  offsets_.assign(order_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(2 * edges_.size());
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    adjacency_[fill[e.v]++] = e.u;
  }
}

std::size_t Forest::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < order_; ++v) best = std::max<std::size_t>(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

Forest Forest::edge_subgraph(std::span<const Edge> kept) const {
  std::vector<Edge> sorted(kept.begin(), kept.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const Edge& e : sorted)
    if (!has_edge(e)) throw ForestError(ForestErrc::vertex_out_of_range, "edge " + edge_text(e) + " is not in the forest");
  return Forest(Trusted{}, order_, std::move(sorted));
}

Forest Forest::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> rest;
  rest.reserve(edges_.size());
  std::set_difference(edges_.begin(), edges_.end(), drop.begin(), drop.end(), std::back_inserter(rest));
  return Forest(Trusted{}, order_, std::move(rest));
}

std::vector<Component> components(const Forest& f) {
  std::vector<Component> out;
  std::vector<char> seen(f.order(), 0);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < f.order(); ++s) {
    if (seen[s]) continue;
    queue.assign(1, s);
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (Vertex w : f.neighbors(queue[head]))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    std::sort(queue.begin(), queue.end());
    out.push_back(Component{queue, std::nullopt});
  }
  return out;
}

std::vector<std::uint32_t> component_index(const Forest& f) {
  std::vector<std::uint32_t> index(f.order(), 0);
  const auto comps = components(f);
  for (std::uint32_t i = 0; i < comps.size(); ++i)
    for (Vertex v : comps[i].vertices) index[v] = i;
  return index;
}

SubtreeWalk walk_subtree(const Forest& f, Vertex root, std::optional<Vertex> parent) {
  SubtreeWalk walk;
  walk.order.push_back(root);
  walk.parent.push_back(parent.value_or(root));
  walk.parent_pos.push_back(0);
  for (std::size_t head = 0; head < walk.order.size(); ++head) {
    const Vertex x = walk.order[head];
    const Vertex up = walk.parent[head];
    for (Vertex w : f.neighbors(x)) {
      if (w == up) continue;
      walk.order.push_back(w);
      walk.parent.push_back(x);
      walk.parent_pos.push_back(head);
    }
  }
  return walk;
}

}  // namespace forestlcs
