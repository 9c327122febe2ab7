#include "forestlcs/canonical.hpp"

#include <algorithm>
#include <set>

#include "forestlcs/error.hpp"

namespace forestlcs {

namespace {

// Codes of every vertex of a walked subtree, indexed like walk.order.
std::vector<std::string> subtree_codes(const SubtreeWalk& walk) {
  const std::size_t k = walk.order.size();
  std::vector<std::vector<std::string>> child_codes(k);
  std::vector<std::string> codes(k);
  for (std::size_t i = k; i-- > 0;) {
    auto& kids = child_codes[i];
    std::sort(kids.begin(), kids.end());
    std::size_t len = 2;
    for (const auto& c : kids) len += c.size();
    std::string& code = codes[i];
    code.reserve(len);
    code.push_back('(');
    for (const auto& c : kids) code += c;
    code.push_back(')');
    kids.clear();
    kids.shrink_to_fit();
    if (i > 0) child_codes[walk.parent_pos[i]].push_back(code);
  }
  return codes;
}

}  // namespace

std::size_t CanonicalCode::order() const noexcept {
  return static_cast<std::size_t>(std::count(token_.begin(), token_.end(), '('));
}

CanonicalCode rooted_code(const Forest& f, Vertex root, std::optional<Vertex> parent) {
  const auto walk = walk_subtree(f, root, parent);
  return CanonicalCode(std::move(subtree_codes(walk).front()));
}

CanonicalCode canon_rooted(const Forest& f, const Component& t) {
  if (!t.root) throw PreconditionError("canon_rooted: component has no root");
  return rooted_code(f, *t.root);
}

std::vector<Vertex> centroids(const Forest& f, const Component& t) {
  const auto walk = walk_subtree(f, t.vertices.front());
  const std::size_t k = walk.order.size();
  std::vector<std::size_t> sub(k, 1), heaviest(k, 0);
  for (std::size_t i = k; i-- > 1;) {
    const std::size_t p = walk.parent_pos[i];
    sub[p] += sub[i];
    heaviest[p] = std::max(heaviest[p], sub[i]);
  }
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < k; ++i)
    if (2 * std::max(heaviest[i], k - sub[i]) <= k) out.push_back(walk.order[i]);
  std::sort(out.begin(), out.end());
  return out;
}

CanonicalCode canon_unrooted(const Forest& f, const Component& t) {
  std::optional<CanonicalCode> best;
  for (Vertex c : centroids(f, t)) {
    auto code = rooted_code(f, c);
    if (!best || code < *best) best = std::move(code);
  }
  return *best;
}

CanonicalCode unrooted_code(const Forest& f, Vertex v) {
  Component c;
  c.vertices = walk_subtree(f, v).order;
  std::sort(c.vertices.begin(), c.vertices.end());
  return canon_unrooted(f, c);
}

CanonicalCode forest_code(const Forest& f, bool skip_isolated) {
  std::vector<std::string> parts;
  for (const auto& c : components(f)) {
    if (skip_isolated && c.order() == 1) continue;
    parts.push_back(canon_unrooted(f, c).str());
  }
  std::sort(parts.begin(), parts.end());
  std::string joined;
  for (const auto& p : parts) joined += p;
  return CanonicalCode(std::move(joined));
}

VertexPairs rooted_isomorphism(const Forest& a, Vertex ra, std::optional<Vertex> pa, const Forest& b, Vertex rb,
                               std::optional<Vertex> pb) {
  const auto wa = walk_subtree(a, ra, pa);
  const auto wb = walk_subtree(b, rb, pb);
  const auto ca = subtree_codes(wa);
  const auto cb = subtree_codes(wb);
  if (ca.front() != cb.front()) throw PreconditionError("rooted_isomorphism: trees are not isomorphic");

  // Children of each walked vertex, as walk positions.
  auto children_of = [](const SubtreeWalk& w) {
    std::vector<std::vector<std::size_t>> kids(w.order.size());
    for (std::size_t i = 1; i < w.order.size(); ++i) kids[w.parent_pos[i]].push_back(i);
    return kids;
  };
  const auto ka = children_of(wa);
  const auto kb = children_of(wb);

  VertexPairs out;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    out.emplace_back(wa.order[x], wb.order[y]);
    auto xs = ka[x];
    auto ys = kb[y];
    auto by_code_a = [&](std::size_t p, std::size_t q) { return std::tie(ca[p], wa.order[p]) < std::tie(ca[q], wa.order[q]); };
    auto by_code_b = [&](std::size_t p, std::size_t q) { return std::tie(cb[p], wb.order[p]) < std::tie(cb[q], wb.order[q]); };
    std::sort(xs.begin(), xs.end(), by_code_a);
    std::sort(ys.begin(), ys.end(), by_code_b);
    for (std::size_t i = 0; i < xs.size(); ++i) stack.emplace_back(xs[i], ys[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexPairs unrooted_isomorphism(const Forest& a, Vertex va, const Forest& b, Vertex vb) {
  auto component_at = [](const Forest& f, Vertex v) {
    Component c;
    c.vertices = walk_subtree(f, v).order;
    std::sort(c.vertices.begin(), c.vertices.end());
    return c;
  };
  auto best_centroid = [](const Forest& f, const Component& c) {
    std::optional<std::pair<CanonicalCode, Vertex>> best;
    for (Vertex x : centroids(f, c)) {
      auto code = rooted_code(f, x);
      if (!best || code < best->first) best.emplace(std::move(code), x);
    }
    return *best;
  };
  const auto [code_a, root_a] = best_centroid(a, component_at(a, va));
  const auto [code_b, root_b] = best_centroid(b, component_at(b, vb));
  if (code_a != code_b) throw PreconditionError("unrooted_isomorphism: trees are not isomorphic");
  return rooted_isomorphism(a, root_a, std::nullopt, b, root_b, std::nullopt);
}

RootedTree::RootedTree(std::vector<int> parent) : parent_(std::move(parent)) {
  if (parent_.empty() || parent_[0] != -1) throw PreconditionError("RootedTree: vertex 0 must be the root");
  for (std::size_t i = 1; i < parent_.size(); ++i)
    if (parent_[i] < 0 || static_cast<std::size_t>(parent_[i]) >= i)
      throw PreconditionError("RootedTree: parent[i] must be in [0, i)");
}

RootedTree RootedTree::from_code(const CanonicalCode& code) {
  const std::string& s = code.str();
  std::vector<int> parent;
  std::vector<int> open;
  for (char ch : s) {
    if (ch == '(') {
      parent.push_back(open.empty() ? -1 : open.back());
      open.push_back(static_cast<int>(parent.size()) - 1);
    } else if (ch == ')') {
      if (open.empty()) throw PreconditionError("RootedTree::from_code: unbalanced code");
      open.pop_back();
    } else {
      throw PreconditionError("RootedTree::from_code: unexpected character");
    }
  }
  if (!open.empty() || parent.empty() || std::count(parent.begin(), parent.end(), -1) != 1)
    throw PreconditionError("RootedTree::from_code: not a single rooted tree");
  return RootedTree(std::move(parent));
}

Forest RootedTree::to_forest() const {
  std::vector<Edge> edges;
  edges.reserve(size());
  for (std::size_t i = 1; i < parent_.size(); ++i) edges.emplace_back(static_cast<Vertex>(parent_[i]), static_cast<Vertex>(i));
  return Forest(order(), std::move(edges));
}

CanonicalCode RootedTree::code() const { return rooted_code(to_forest(), 0); }

std::vector<RootedTree> enumerate_rooted_trees(std::size_t max_order) {
  if (max_order == 0) throw PreconditionError("enumerate_rooted_trees: max_order must be at least 1");
  std::vector<std::vector<CanonicalCode>> by_order{{}, {kSingleVertexCode}};
  for (std::size_t k = 2; k <= max_order; ++k) {
    std::set<CanonicalCode> next;
    for (const auto& code : by_order[k - 1]) {
      auto parent = RootedTree::from_code(code).parents();
      for (std::size_t attach = 0; attach < parent.size(); ++attach) {
        auto grown = parent;
        grown.push_back(static_cast<int>(attach));
        next.insert(RootedTree(std::move(grown)).code());
      }
    }
    by_order.emplace_back(next.begin(), next.end());
  }
  std::vector<RootedTree> out;
  for (std::size_t k = 2; k <= max_order; ++k)
    for (const auto& code : by_order[k]) out.push_back(RootedTree::from_code(code));
  out.push_back(RootedTree{});
  return out;
}

}  // namespace forestlcs
