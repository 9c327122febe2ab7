#include "forestlcs/approx4.hpp"

#include "forestlcs/stars.hpp"

namespace forestlcs {

LayerDecomposition layer_decompose(const Forest& f) {
  LayerDecomposition out;
  std::vector<Edge> even, odd;
  for (const auto& c : components(f)) {
    Vertex root = c.vertices.front();
    for (Vertex v : c.vertices)
      if (f.degree(v) > f.degree(root)) root = v;
    out.roots.push_back(root);
    const auto walk = walk_subtree(f, root);
    std::vector<std::size_t> depth(walk.order.size(), 0);
    for (std::size_t i = 1; i < walk.order.size(); ++i) {
      depth[i] = depth[walk.parent_pos[i]] + 1;
      // The distance of an edge to the root is the depth of its upper end.
      (depth[walk.parent_pos[i]] % 2 == 0 ? even : odd).emplace_back(walk.parent[i], walk.order[i]);
    }
  }
  out.even = f.edge_subgraph(even);
  out.odd = f.edge_subgraph(odd);
  return out;
}

LcsResult lcs_approx4(const Forest& f1, const Forest& f2) {
  const auto a = layer_decompose(f1);
  const auto b = layer_decompose(f2);
  const Forest* left[] = {&a.even, &a.even, &a.odd, &a.odd};
  const Forest* right[] = {&b.even, &b.odd, &b.even, &b.odd};
  LcsResult best;
  for (int k = 0; k < 4; ++k) {
    auto r = lcs_star_forests(*left[k], *right[k]);
    if (k == 0 || r.size > best.size) best = std::move(r);
  }
  // Layer edges are host edges, so the witness carries over unchanged.
  best.size = verify_certificate(f1, f2, best.certificate);
  return best;
}

}  // namespace forestlcs
