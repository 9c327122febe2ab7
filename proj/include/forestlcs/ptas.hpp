#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "forestlcs/canonical.hpp"
#include "forestlcs/certificate.hpp"
#include "forestlcs/cleaner.hpp"
#include "forestlcs/exact.hpp"
#include "forestlcs/forest.hpp"
#include "forestlcs/rational.hpp"

namespace forestlcs {

/// One isomorphism class of clean components, with its members on each side.
struct CatalogEntry {
  CleanComponentDescriptor shape;
  std::array<std::uint64_t, 2> count{};
  std::array<std::vector<Vertex>, 2> members;  // roots, ascending
};

/// Counting constants for the class of all clean forests of order n. They can
/// be astronomically large and saturate to infinity.
struct CatalogConstants {
  long double rooted_types = 0;  // rooted trees of order <= delta
  long double per_degree = 0;    // shapes per large root degree
  long double small_shapes = 0;  // shapes with root degree below the large threshold
  long double c1 = 0;            // q <= c1 * ln(n)
  long double c2 = 0;            // d_i <= eps * d_j whenever j >= i + c2
  std::size_t observed_c2 = 0;   // least window that works for this catalog
};

struct Catalog {
  std::vector<CatalogEntry> entries;  // ascending root degree, then shape
  CatalogConstants constants;
  std::size_t n = 0;

  std::size_t q() const noexcept { return entries.size(); }
};

/// Throws PreconditionError if a root's component is not clean.
Catalog build_catalog(const Forest& f1, std::span<const Vertex> roots1, const Forest& f2,
                      std::span<const Vertex> roots2, Rational eps, std::uint64_t delta);

/// Exact count of rooted trees with at most max_order vertices.
long double count_rooted_trees(std::size_t max_order);

/// False when one degree is at least delta / eps and eps-dominates or is
/// eps-dominated by the other.
bool degree_pair_admissible(std::uint64_t d1, std::uint64_t d2, Rational eps, std::uint64_t delta);

/// d >= delta / eps, exactly.
bool is_large_degree(std::uint64_t d, Rational eps, std::uint64_t delta);

/// How two child subtrees of matched roots overlap. Two-sided tuples share the
/// root-containing subtree `core`; `rest1` and `rest2` are what is left of
/// each child. One-sided tuples leave the other index empty.
struct OverlayTuple {
  std::optional<std::size_t> first;
  std::optional<std::size_t> second;
  CanonicalCode core;
  CanonicalCode rest1;
  CanonicalCode rest2;
  std::vector<int> embed1;  // vertices of core inside types[first], aligned with embed2
  std::vector<int> embed2;

  bool two_sided() const noexcept { return first && second; }
};

struct OverlaySet {
  std::vector<RootedTree> types;  // by (order, code), single vertex last
  std::vector<OverlayTuple> tuples;
  bool truncated = false;

  std::size_t index_of(const CanonicalCode& code) const;
};

inline constexpr std::size_t kDefaultOverlayBudget = 200'000;

/// Overlays over the given rooted types. Two-sided tuples come first, by
/// (first, second, core, rest1, rest2), then (j, -) and (-, j) for every j.
/// `budget` caps the root-containing subtrees examined per type.
OverlaySet build_overlays(std::vector<RootedTree> types, std::size_t budget = kDefaultOverlayBudget);
/// Overlays over every rooted tree of order <= delta.
OverlaySet build_overlays(std::size_t delta, std::size_t budget = kDefaultOverlayBudget);

/// Counts per overlay tuple, indexed like OverlaySet::tuples.
struct Profile {
  std::vector<std::uint64_t> y;

  bool empty_match(const OverlaySet& x) const;
  friend bool operator==(const Profile&, const Profile&) = default;
};

struct ProfileSet {
  std::vector<Profile> profiles;  // two-sided counts descending lexicographically
  std::uint64_t step = 1;
  bool truncated = false;
};

/// Child-type counts of a shape, indexed like `x.types`.
std::vector<std::uint64_t> child_type_counts(const CleanComponentDescriptor& shape, const OverlaySet& x);

inline constexpr std::size_t kDefaultProfileBudget = 4096;

/// Every overlay profile between the two shapes whose two-sided counts are
/// multiples of the step. Throws PreconditionError on an inadmissible pair.
ProfileSet build_profiles(const CleanComponentDescriptor& a, const CleanComponentDescriptor& b, const OverlaySet& x,
                          Rational eps, std::uint64_t delta, std::size_t budget = kDefaultProfileBudget);

/// Profiles for one catalog pair; the all-zero profile is left out.
struct PairProfiles {
  std::size_t first = 0;
  std::size_t second = 0;
  ProfileSet set;
};

/// Catalog pairs that may share a large root: at least one degree is large,
/// the pair is admissible, within the c2 window, and present on both sides.
std::vector<PairProfiles> eligible_pairs(const Catalog& catalog, const OverlaySet& x, Rational eps,
                                         std::uint64_t delta, std::size_t profile_budget = kDefaultProfileBudget);

struct AssignmentCell {
  std::size_t pair = 0;     // index into the PairProfiles list
  std::size_t profile = 0;  // index into that pair's profiles
  std::uint64_t count = 0;

  friend bool operator==(const AssignmentCell&, const AssignmentCell&) = default;
};
using Assignment = std::vector<AssignmentCell>;  // non-zero cells only

/// Step for counts of pairs whose first shape has s members.
std::uint64_t assignment_step(std::uint64_t s, const CatalogConstants& constants, std::size_t overlay_count,
                              std::size_t type_count, Rational eps, std::uint64_t delta);

struct AssignmentStats {
  std::size_t emitted = 0;
  bool truncated = false;
  std::uint64_t max_step = 1;
};

/// Streams every assignment that respects the member counts of both sides,
/// the empty one first, then the rest with counts descending
/// lexicographically. Stops after `budget` assignments.
AssignmentStats enumerate_assignments(const Catalog& catalog, std::span<const PairProfiles> pairs,
                                      const OverlaySet& x, Rational eps, std::uint64_t delta, std::size_t budget,
                                      const std::function<void(const Assignment&)>& sink);

struct AppliedAssignment {
  Forest residual1;
  Forest residual2;
  Certificate partial;
};

/// Carves the matched cores out of the consumed component pairs and removes
/// every edge at a large root, leaving only small components.
AppliedAssignment apply_assignment(const Forest& f1, const Forest& f2, const Catalog& catalog,
                                   std::span<const PairProfiles> pairs, const OverlaySet& x,
                                   const Assignment& assignment, Rational eps, std::uint64_t delta);

struct AdditiveOptions {
  std::size_t assignment_budget = 256;
  std::size_t profile_budget = kDefaultProfileBudget;
  std::size_t overlay_budget = kDefaultOverlayBudget;
  BoundedOptions bounded;
};

struct AdditiveDiagnostics {
  Rational inner_eps{0};
  std::uint64_t delta = 0;
  std::size_t q = 0;
  std::size_t overlay_count = 0;
  long double c1 = 0;
  long double c2 = 0;
  std::size_t observed_c2 = 0;
  std::size_t eligible_pairs = 0;
  std::uint64_t max_profile_step = 1;
  std::uint64_t max_assignment_step = 1;
  std::size_t assignments = 0;
  bool truncated = false;
  bool fallback = false;  // some bounded DP ran out of states
  std::size_t pipeline_size = 0;
  std::size_t approx4_size = 0;
};

struct AdditiveResult {
  std::size_t size = 0;
  Certificate certificate;
  Rational gap_bound{0};
  bool heuristic = false;
  AdditiveDiagnostics diagnostics;
};

/// The pipeline on inputs that are already clean for (eps, delta): best
/// assignment, with the bounded DP on what remains. Ties keep the first.
AdditiveResult solve_clean(const Forest& f1, std::span<const Vertex> roots1, const Forest& f2,
                           std::span<const Vertex> roots2, Rational eps, std::uint64_t delta,
                           const AdditiveOptions& options = {});

/// The constant relating the user-facing eps to the one the pipeline runs at.
inline constexpr std::int64_t kErrorConstant = 32;

/// Common subgraph within eps * n of optimal when nothing was truncated;
/// never worse than lcs_approx4. Requires 0 < eps < 1.
AdditiveResult lcs_additive(const Forest& f1, const Forest& f2, Rational eps, const AdditiveOptions& options = {});

}  // namespace forestlcs
