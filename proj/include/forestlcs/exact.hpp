#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>

#include "forestlcs/canonical.hpp"
#include "forestlcs/certificate.hpp"
#include "forestlcs/forest.hpp"

namespace forestlcs {

/// Multiplicity of each unrooted tree type (single vertices included) in a
/// spanning subforest.
using TypeVector = std::map<CanonicalCode, std::uint64_t>;
using TypeSet = std::set<TypeVector>;

struct LcsResult {
  std::size_t size = 0;
  Certificate certificate;
};

/// Type vectors of all spanning subforests of component `k`.
/// Throws PreconditionError if the component has more than max_order vertices.
TypeSet subforest_types(const Forest& f, const Component& k, std::size_t max_order);

struct BoundedOptions {
  /// Cap on distinct partial states, per component and per DP layer.
  std::size_t max_states = 2'000'000;
};

/// Exact lcs for forests whose components have at most max_order vertices,
/// by dynamic programming over type vectors. The certificate is verified.
LcsResult lcs_bounded(const Forest& f1, const Forest& f2, std::size_t max_order, const BoundedOptions& options = {});

inline constexpr std::size_t kDefaultOracleBudget = 24;

/// Exact lcs by enumerating every edge subset of both forests. Throws
/// BudgetExceeded when m(f1) + m(f2) exceeds edge_budget.
LcsResult lcs_oracle(const Forest& f1, const Forest& f2, std::size_t edge_budget = kDefaultOracleBudget);

std::size_t max_component_order(const Forest& f);

}  // namespace forestlcs
