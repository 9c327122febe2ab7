#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace forestlcs {

using Vertex = std::uint32_t;

/// Undirected edge, stored with u <= v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  constexpr Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// A simple undirected acyclic graph on the vertices 0..order()-1.
///
/// Edges are kept sorted, so two forests compare equal iff they have the same
/// vertex count and the same edge set. Adjacency is stored in CSR form with
/// each neighbor list sorted by id.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::size_t order);
  /// Throws ForestError on self-loops, out-of-range ids, duplicates or cycles.
  Forest(std::size_t order, std::vector<Edge> edges);

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;
  bool has_edge(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

  /// Spanning subgraph keeping only `kept` (each must be an edge of this forest).
  Forest edge_subgraph(std::span<const Edge> kept) const;
  /// Spanning subgraph with `removed` deleted; unknown edges are ignored.
  Forest without_edges(std::span<const Edge> removed) const;

  friend bool operator==(const Forest& a, const Forest& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  struct Trusted {};
  Forest(Trusted, std::size_t order, std::vector<Edge> sorted_edges);
  void build_adjacency();

  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// One connected component; vertices sorted ascending.
struct Component {
  std::vector<Vertex> vertices;
  std::optional<Vertex> root;

  std::size_t order() const noexcept { return vertices.size(); }
  Vertex min_vertex() const { return vertices.front(); }
};

/// Components ordered by minimum vertex id. Roots are left unset.
std::vector<Component> components(const Forest& f);

/// component_of[v] is the index into components(f) of the component holding v.
std::vector<std::uint32_t> component_index(const Forest& f);

/// Vertices of the subtree hanging below `root` when the edge to `parent` is
/// ignored, in BFS order (root first), with the BFS parent of each.
struct SubtreeWalk {
  std::vector<Vertex> order;
  std::vector<Vertex> parent;           // parent[i] is the parent of order[i]; the root maps to itself
  std::vector<std::size_t> parent_pos;  // index of parent[i] within order; 0 for the root
};
SubtreeWalk walk_subtree(const Forest& f, Vertex root, std::optional<Vertex> parent = std::nullopt);

}  // namespace forestlcs
