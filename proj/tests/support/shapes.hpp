#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "forestlcs/forest.hpp"

namespace shapes {

using forestlcs::Edge;
using forestlcs::Forest;
using forestlcs::Vertex;

inline Forest make(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.emplace_back(u, v);
  return Forest(n, std::move(list));
}

/// Disjoint union of paths with the given vertex counts.
inline Forest paths(std::initializer_list<std::size_t> orders) {
  std::vector<Edge> list;
  Vertex next = 0;
  for (std::size_t a : orders) {
    for (std::size_t k = 1; k < a; ++k) list.emplace_back(next + k - 1, next + k);
    next += static_cast<Vertex>(a);
  }
  return Forest(next, std::move(list));
}

/// Disjoint union of stars with the given leaf counts, centers first in each block.
inline Forest stars(std::initializer_list<std::size_t> leaves) {
  std::vector<Edge> list;
  Vertex next = 0;
  for (std::size_t k : leaves) {
    const Vertex c = next++;
    for (std::size_t i = 0; i < k; ++i) list.emplace_back(c, next++);
  }
  return Forest(next, std::move(list));
}

inline Forest relabel(const Forest& f, const std::vector<Vertex>& perm) {
  std::vector<Edge> list;
  for (const auto& e : f.edges()) list.emplace_back(perm[e.u], perm[e.v]);
  return Forest(f.order(), std::move(list));
}

}  // namespace shapes
