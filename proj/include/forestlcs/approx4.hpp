#pragma once

#include <vector>

#include "forestlcs/exact.hpp"
#include "forestlcs/forest.hpp"

namespace forestlcs {

/// Split of a forest's edges by the parity of their distance to a per-component
/// root. Both halves are spanning star forests.
struct LayerDecomposition {
  Forest even;
  Forest odd;
  std::vector<Vertex> roots;  // one per component, in component order
};

/// Roots are maximum-degree vertices, ties broken by smallest id.
LayerDecomposition layer_decompose(const Forest& f);

/// Best of the four exact star-forest solutions between the layers of f1 and f2.
/// Guarantees size >= lcs(f1, f2) / 4.
LcsResult lcs_approx4(const Forest& f1, const Forest& f2);

}  // namespace forestlcs
