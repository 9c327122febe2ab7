#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "forestlcs/forest.hpp"

namespace forestlcs {

/// Witness of a common subgraph: an edge set of each host and a vertex map
/// from the vertices covered by edges1 onto those covered by edges2.
struct Certificate {
  std::vector<Edge> edges1;
  std::vector<Edge> edges2;
  std::vector<std::pair<Vertex, Vertex>> vertex_map;

  std::size_t size() const noexcept { return edges1.size(); }
  /// Sorts all three lists so equal witnesses compare equal.
  void normalize();
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Checks every certificate invariant against the two hosts and returns the
/// witnessed size. Throws CertificateError naming the first violation.
std::size_t verify_certificate(const Forest& f1, const Forest& f2, const Certificate& c);

/// Builds a certificate from two edge subsets whose non-trivial components
/// are isomorphic as forests. Throws PreconditionError otherwise.
Certificate certificate_from_subforests(const Forest& f1, std::span<const Edge> kept1, const Forest& f2,
                                        std::span<const Edge> kept2);

/// Union of two certificates over disjoint vertex sets.
Certificate merge_certificates(const Certificate& a, const Certificate& b);

}  // namespace forestlcs
