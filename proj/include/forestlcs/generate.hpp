#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "forestlcs/forest.hpp"
#include "forestlcs/rational.hpp"

namespace forestlcs {

/// Seeded 64-bit generator. Bounded draws use rejection sampling so the
/// stream does not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

/// Components of random order in [1, max_component_order], each a random
/// recursive tree, with vertex ids shuffled.
Forest random_forest(Rng& rng, std::size_t order, std::size_t max_component_order);
/// Stars with the given leaf counts, numbered consecutively, centers first.
Forest star_forest(std::span<const std::uint64_t> degrees);
/// Stars with leaf counts drawn from [min_degree, max_degree] until `order`
/// vertices are used; a leftover vertex stays isolated.
Forest random_star_forest(Rng& rng, std::size_t order, std::uint64_t min_degree, std::uint64_t max_degree);
/// Paths with the given vertex counts, numbered consecutively.
Forest path_forest(std::span<const std::uint64_t> orders);

/// Hardness instance: paths of orders a_1..a_3m against m paths of order
/// A = (a_1 + ... + a_3m) / m. Requires A / 4 < a_i < A / 2 for every i.
std::pair<Forest, Forest> path_3partition(std::span<const std::uint64_t> values);

enum class Family { random_forest, star_forest, path_3partition, clean_forest };

Family parse_family(std::string_view name);
std::string to_string(Family family);

struct GenSpec {
  Family family = Family::random_forest;
  std::size_t order = 0;
  std::uint64_t seed = 0;
  std::size_t max_component_order = 0;  // 0 means no limit
  std::vector<std::uint64_t> star_degrees;  // explicit stars; otherwise drawn from the range
  std::uint64_t min_star_degree = 1;
  std::uint64_t max_star_degree = 8;
  std::vector<std::uint64_t> partition;
  Rational eps{1, 2};
  std::uint64_t delta = 2;
};

struct Generated {
  Forest first;
  std::optional<Forest> second;  // set for path-3partition only
};

Generated generate(const GenSpec& spec);

}  // namespace forestlcs
