#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "forestlcs/canonical.hpp"
#include "forestlcs/forest.hpp"
#include "forestlcs/rational.hpp"

namespace forestlcs {

/// The degree set {0, ..., delta} together with every ceil((1 + eps)^i),
/// materialized up to `limit`. Powers are computed exactly.
class DegreeGrid {
 public:
  DegreeGrid(Rational eps, std::uint64_t delta, std::uint64_t limit);

  /// Both throw PreconditionError for d > limit().
  bool contains(std::uint64_t d) const;
  std::uint64_t project(std::uint64_t d) const;

  /// Distinct values ceil((1 + eps)^i) <= limit, ascending.
  const std::vector<std::uint64_t>& powers() const noexcept { return powers_; }
  Rational eps() const noexcept { return eps_; }
  std::uint64_t delta() const noexcept { return delta_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  Rational eps_;
  std::uint64_t delta_;
  std::uint64_t limit_;
  std::vector<std::uint64_t> powers_;
};

/// Largest grid member that is <= d.
std::uint64_t grid_project(std::uint64_t d, const DegreeGrid& grid);

/// max{1, floor(eps * d / (delta * C(2 delta, delta)))}, exact.
std::uint64_t multiplicity_modulus(std::uint64_t root_degree, Rational eps, std::uint64_t delta);

struct CleanReport {
  Forest cleaned;
  std::vector<Vertex> roots;                 // one per component of `cleaned`, in component order
  std::array<std::vector<Edge>, 4> removed;  // the four passes, in order
  bool loss_bound_ok = false;

  std::size_t removed_count() const noexcept {
    return removed[0].size() + removed[1].size() + removed[2].size() + removed[3].size();
  }
};

/// Four-pass cleaning. Requires 0 < eps < 1, delta >= 1 and eps * delta >= 1.
/// Pass 0 cuts the parent edge of every non-root vertex of degree > delta;
/// pass 1 cuts off deepest subtrees of order > delta; pass 2 trims root
/// degrees onto the grid; pass 3 trims child-type multiplicities to multiples
/// of the modulus.
CleanReport clean(const Forest& f, Rational eps, std::uint64_t delta);
/// Same, but components containing one of `roots` keep that root throughout.
CleanReport clean(const Forest& f, Rational eps, std::uint64_t delta, std::span<const Vertex> roots);

struct CleanCheck {
  bool clean = true;
  int condition = 0;  // 1: oversized child subtree, 2: root degree off the grid, 3: bad multiplicity
  std::size_t component = 0;
  Vertex root = 0;

  explicit operator bool() const noexcept { return clean; }
};

/// `roots` must hold exactly one vertex of every component.
CleanCheck is_clean(const Forest& f, std::span<const Vertex> roots, Rational eps, std::uint64_t delta);

/// Up to isomorphism, a clean component is its root degree plus the rooted
/// types (order >= 2) of the subtrees hanging off the root.
struct CleanComponentDescriptor {
  std::uint64_t root_degree = 0;
  std::map<CanonicalCode, std::uint64_t> multiplicities;

  std::uint64_t leaf_children() const noexcept;
  friend auto operator<=>(const CleanComponentDescriptor&, const CleanComponentDescriptor&) = default;
  friend bool operator==(const CleanComponentDescriptor&, const CleanComponentDescriptor&) = default;
};

/// Throws PreconditionError if the component of `root` is not clean.
CleanComponentDescriptor descriptor_of(const Forest& f, Vertex root, Rational eps, std::uint64_t delta);

/// {"e0": [[u,v],...], ..., "e3": [...], "roots": [...], "size": m', "loss_bound_ok": bool}
std::string clean_report_to_json(const CleanReport& report);

}  // namespace forestlcs
