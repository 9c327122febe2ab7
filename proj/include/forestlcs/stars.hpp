#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "forestlcs/exact.hpp"
#include "forestlcs/forest.hpp"

namespace forestlcs {

/// Edge counts of the stars of a star forest, sorted non-decreasingly.
class StarSequence {
 public:
  StarSequence() = default;
  explicit StarSequence(std::vector<std::size_t> degrees);

  const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }
  std::size_t length() const noexcept { return degrees_.size(); }
  std::size_t operator[](std::size_t i) const { return degrees_[i]; }
  friend bool operator==(const StarSequence&, const StarSequence&) = default;

 private:
  std::vector<std::size_t> degrees_;
};

/// Throws PreconditionError if some component is not a star.
StarSequence star_sequence_of(const Forest& f);

struct StarPairing {
  std::size_t size = 0;
  /// (index into a, index into b) of every paired position, both sequences sorted.
  std::vector<std::pair<std::size_t, std::size_t>> pairing;
};

/// Exact lcs of two star forests given by their sequences: the shorter one is
/// padded with leading zeros and positions are paired in sorted order.
StarPairing lcs_stars(const StarSequence& a, const StarSequence& b);

/// lcs_stars on two star forests, with a verified certificate.
LcsResult lcs_star_forests(const Forest& f1, const Forest& f2);

bool is_star_forest(const Forest& f);

}  // namespace forestlcs
