#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forestlcs/forest.hpp"

namespace forestlcs {

/// AHU token of a rooted or unrooted tree. A vertex is written as "(" followed
/// by the sorted tokens of its children and ")", so a single vertex is "()".
/// Tokens are balanced bracket strings and therefore prefix-free, which makes
/// the concatenation of sorted tokens a valid multiset encoding as well.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string token) : token_(std::move(token)) {}

  const std::string& str() const noexcept { return token_; }
  bool empty() const noexcept { return token_.empty(); }
  /// Number of vertices encoded (one per opening bracket).
  std::size_t order() const noexcept;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string token_;
};

inline const CanonicalCode kSingleVertexCode{"()"};

/// Code of the subtree at `root`, ignoring the edge towards `parent`.
CanonicalCode rooted_code(const Forest& f, Vertex root, std::optional<Vertex> parent = std::nullopt);
/// Requires `t.root` to be set.
CanonicalCode canon_rooted(const Forest& f, const Component& t);
/// Minimum rooted code over the centroids of the component.
CanonicalCode canon_unrooted(const Forest& f, const Component& t);
/// canon_unrooted of the component containing `v`.
CanonicalCode unrooted_code(const Forest& f, Vertex v);

/// Multiset code of a forest: sorted concatenation of the unrooted codes of its
/// components. With `skip_isolated`, single-vertex components are left out.
CanonicalCode forest_code(const Forest& f, bool skip_isolated = false);

std::vector<Vertex> centroids(const Forest& f, const Component& t);

using VertexPairs = std::vector<std::pair<Vertex, Vertex>>;

/// Isomorphism between the subtree of `a` at `ra` (away from `pa`) and the one
/// of `b` at `rb` (away from `pb`), as (vertex in a, vertex in b) pairs.
/// Throws PreconditionError if the rooted trees are not isomorphic.
VertexPairs rooted_isomorphism(const Forest& a, Vertex ra, std::optional<Vertex> pa, const Forest& b, Vertex rb,
                               std::optional<Vertex> pb);
/// Isomorphism between the components of `a` and `b` containing `va` and `vb`.
VertexPairs unrooted_isomorphism(const Forest& a, Vertex va, const Forest& b, Vertex vb);

/// Small rooted tree in preorder-compatible form: vertex 0 is the root and
/// parent[i] < i for every other vertex.
class RootedTree {
 public:
  RootedTree() : parent_{-1} {}
  explicit RootedTree(std::vector<int> parent);
  static RootedTree from_code(const CanonicalCode& code);

  std::size_t order() const noexcept { return parent_.size(); }
  std::size_t size() const noexcept { return parent_.size() - 1; }
  const std::vector<int>& parents() const noexcept { return parent_; }
  Forest to_forest() const;
  CanonicalCode code() const;

 private:
  std::vector<int> parent_;
};

/// One representative per rooted-isomorphism class of order <= max_order,
/// sorted by (order, code) except that the single vertex comes last.
std::vector<RootedTree> enumerate_rooted_trees(std::size_t max_order);

}  // namespace forestlcs

template <>
struct std::hash<forestlcs::CanonicalCode> {
  std::size_t operator()(const forestlcs::CanonicalCode& c) const noexcept { return std::hash<std::string>{}(c.str()); }
};
