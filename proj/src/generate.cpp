#include "forestlcs/generate.hpp"

#include <algorithm>
#include <numeric>

#include "forestlcs/cleaner.hpp"
#include "forestlcs/error.hpp"

namespace forestlcs {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("Rng::below: bound must be positive");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

Forest random_forest(Rng& rng, std::size_t order, std::size_t max_component_order) {
  if (max_component_order == 0) max_component_order = std::max<std::size_t>(order, 1);
  std::vector<Edge> edges;
  for (std::size_t start = 0; start < order;) {
    const std::size_t size = rng.between(1, std::min(max_component_order, order - start));
    for (std::size_t i = 1; i < size; ++i)
      edges.emplace_back(static_cast<Vertex>(start + rng.below(i)), static_cast<Vertex>(start + i));
    start += size;
  }
  std::vector<Vertex> label(order);
  std::iota(label.begin(), label.end(), Vertex{0});
  for (std::size_t i = order; i > 1; --i) std::swap(label[i - 1], label[rng.below(i)]);
  for (auto& e : edges) e = Edge(label[e.u], label[e.v]);
  return Forest(order, std::move(edges));
}

Forest star_forest(std::span<const std::uint64_t> degrees) {
  std::vector<Edge> edges;
  Vertex next = 0;
  for (std::uint64_t d : degrees) {
    const Vertex center = next++;
    for (std::uint64_t k = 0; k < d; ++k) edges.emplace_back(center, next++);
  }
  return Forest(next, std::move(edges));
}

Forest random_star_forest(Rng& rng, std::size_t order, std::uint64_t min_degree, std::uint64_t max_degree) {
  if (min_degree > max_degree) throw PreconditionError("random_star_forest: empty degree range");
  std::vector<std::uint64_t> degrees;
  for (std::size_t left = order; left > 0;) {
    const std::uint64_t room = left - 1;
    const std::uint64_t d = room < min_degree ? room : rng.between(min_degree, std::min(max_degree, room));
    degrees.push_back(d);
    left -= d + 1;
  }
  return star_forest(degrees);
}

Forest path_forest(std::span<const std::uint64_t> orders) {
  std::vector<Edge> edges;
  Vertex next = 0;
  for (std::uint64_t a : orders) {
    if (a == 0) throw PreconditionError("path_forest: path order must be positive");
    for (std::uint64_t k = 1; k < a; ++k) edges.emplace_back(next + k - 1, next + k);
    next += static_cast<Vertex>(a);
  }
  return Forest(next, std::move(edges));
}

std::pair<Forest, Forest> path_3partition(std::span<const std::uint64_t> values) {
  if (values.empty() || values.size() % 3 != 0)
    throw PreconditionError("path_3partition: need 3m values, got " + std::to_string(values.size()));
  const std::uint64_t m = values.size() / 3;
  const std::uint64_t total = std::accumulate(values.begin(), values.end(), std::uint64_t{0});
  if (total % m != 0) throw PreconditionError("path_3partition: sum " + std::to_string(total) + " not divisible by m");
  const std::uint64_t target = total / m;
  for (std::uint64_t a : values)
    if (!(4 * a > target && 2 * a < target))
      throw PreconditionError("path_3partition: value " + std::to_string(a) + " outside (A/4, A/2) for A = " +
                              std::to_string(target));
  const std::vector<std::uint64_t> long_paths(m, target);
  return {path_forest(values), path_forest(long_paths)};
}

Family parse_family(std::string_view name) {
  if (name == "random-forest") return Family::random_forest;
  if (name == "star-forest") return Family::star_forest;
  if (name == "path-3partition") return Family::path_3partition;
  if (name == "clean-forest") return Family::clean_forest;
  throw PreconditionError("unknown family '" + std::string(name) + "'");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::random_forest: return "random-forest";
    case Family::star_forest: return "star-forest";
    case Family::path_3partition: return "path-3partition";
    case Family::clean_forest: return "clean-forest";
  }
  return "";
}

Generated generate(const GenSpec& spec) {
  Rng rng(spec.seed);
  switch (spec.family) {
    case Family::random_forest:
      return {random_forest(rng, spec.order, spec.max_component_order), std::nullopt};
    case Family::star_forest:
      if (!spec.star_degrees.empty()) return {star_forest(spec.star_degrees), std::nullopt};
      return {random_star_forest(rng, spec.order, spec.min_star_degree, spec.max_star_degree), std::nullopt};
    case Family::path_3partition: {
      auto [a, b] = path_3partition(spec.partition);
      return {std::move(a), std::move(b)};
    }
    case Family::clean_forest:
      return {clean(random_forest(rng, spec.order, spec.max_component_order), spec.eps, spec.delta).cleaned,
              std::nullopt};
  }
  return {};
}

}  // namespace forestlcs
