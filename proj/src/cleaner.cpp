#include "forestlcs/cleaner.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "forestlcs/error.hpp"
#include "json.hpp"

namespace forestlcs {

namespace bmp = boost::multiprecision;

namespace {

bmp::cpp_int central_binomial(std::uint64_t delta) {
  bmp::cpp_int c = 1;
  for (std::uint64_t k = 1; k <= delta; ++k) c = c * (delta + k) / k;
  return c;
}

Vertex max_degree_vertex(const Forest& f, const Component& c) {
  Vertex best = c.vertices.front();
  for (Vertex v : c.vertices)
    if (f.degree(v) > f.degree(best)) best = v;
  return best;
}

// The given root of a component, if it has one.
std::optional<Vertex> given_root(const Component& c, const std::vector<char>& given) {
  std::optional<Vertex> found;
  for (Vertex v : c.vertices) {
    if (!given[v]) continue;
    if (found) throw PreconditionError("clean: two roots given for one component");
    found = v;
  }
  return found;
}

// 0 when the component rooted at r satisfies all three conditions, else the
// number of the first one violated.
int violation(const Forest& f, Vertex r, const DegreeGrid& grid, Rational eps, std::uint64_t delta) {
  std::map<CanonicalCode, std::uint64_t> counts;
  for (Vertex c : f.neighbors(r)) {
    const auto walk = walk_subtree(f, c, r);
    if (walk.order.size() > delta) return 1;
    if (walk.order.size() > 1) ++counts[rooted_code(f, c, r)];
  }
  const std::uint64_t d = f.degree(r);
  if (!grid.contains(d)) return 2;
  const std::uint64_t step = multiplicity_modulus(d, eps, delta);
  for (const auto& [code, count] : counts)
    if (count % step != 0) return 3;
  return 0;
}

void check_hypotheses(Rational eps, std::uint64_t delta) {
  if (eps <= 0 || eps >= 1) throw PreconditionError("clean: eps must lie in (0, 1)");
  if (delta < 1) throw PreconditionError("clean: delta must be positive");
  if (eps * Rational(static_cast<std::int64_t>(delta)) < 1) throw PreconditionError("clean: requires eps * delta >= 1");
}

CleanReport clean_impl(const Forest& f, Rational eps, std::uint64_t delta, const std::vector<char>& given) {
  check_hypotheses(eps, delta);
  CleanReport report;

  // Pass 0: cut above every high-degree non-root.
  for (const auto& c : components(f)) {
    const Vertex root = given_root(c, given).value_or(max_degree_vertex(f, c));
    const auto walk = walk_subtree(f, root);
    for (std::size_t i = 1; i < walk.order.size(); ++i)
      if (f.degree(walk.order[i]) > delta) report.removed[0].emplace_back(walk.parent[i], walk.order[i]);
  }
  const Forest f0 = f.without_edges(report.removed[0]);

  // Pass 1: repeatedly cut the deepest vertex whose subtree is too large. One
  // sweep by decreasing depth (ties by id) visits the cuts in that order.
  std::vector<Vertex> roots;
  std::vector<std::tuple<std::size_t, Vertex, Vertex>> by_depth;  // (depth, vertex, parent)
  for (const auto& c : components(f0)) {
    const Vertex root = given_root(c, given).value_or(max_degree_vertex(f0, c));
    roots.push_back(root);
    const auto walk = walk_subtree(f0, root);
    std::vector<std::size_t> depth(walk.order.size(), 0);
    for (std::size_t i = 1; i < walk.order.size(); ++i) {
      depth[i] = depth[walk.parent_pos[i]] + 1;
      by_depth.emplace_back(depth[i], walk.order[i], walk.parent[i]);
    }
  }
  std::sort(by_depth.begin(), by_depth.end(), [](const auto& a, const auto& b) {
    return std::get<0>(a) != std::get<0>(b) ? std::get<0>(a) > std::get<0>(b) : std::get<1>(a) < std::get<1>(b);
  });
  std::vector<std::uint64_t> subtree(f.order(), 1);
  for (const auto& [depth, v, parent] : by_depth) {
    if (subtree[v] > delta) {
      report.removed[1].emplace_back(parent, v);
      roots.push_back(v);
    } else {
      subtree[parent] += subtree[v];
    }
  }
  const Forest f1 = f0.without_edges(report.removed[1]);
  std::sort(roots.begin(), roots.end());

  // Pass 2: trim root degrees onto the grid, dropping the lightest subtrees.
  const DegreeGrid grid(eps, delta, f1.max_degree());
  std::vector<Vertex> cut_children;
  for (Vertex r : roots) {
    const std::uint64_t d = f1.degree(r);
    if (grid.contains(d)) continue;
    const std::uint64_t excess = d - grid.project(d);
    std::vector<std::tuple<std::size_t, CanonicalCode, Vertex>> children;
    for (Vertex c : f1.neighbors(r))
      children.emplace_back(walk_subtree(f1, c, r).order.size() - 1, rooted_code(f1, c, r), c);
    std::sort(children.begin(), children.end());
    for (std::uint64_t k = 0; k < excess; ++k) {
      const Vertex c = std::get<2>(children[k]);
      report.removed[2].emplace_back(r, c);
      cut_children.push_back(c);
    }
  }
  const Forest f2 = f1.without_edges(report.removed[2]);
  roots.insert(roots.end(), cut_children.begin(), cut_children.end());
  std::sort(roots.begin(), roots.end());

  // Pass 3: strip whole copies of each child type down to a multiple of the modulus.
  for (Vertex r : roots) {
    const std::uint64_t step = multiplicity_modulus(f2.degree(r), eps, delta);
    if (step <= 1) continue;
    std::map<CanonicalCode, std::vector<Vertex>> groups;
    for (Vertex c : f2.neighbors(r))
      if (f2.degree(c) > 1) groups[rooted_code(f2, c, r)].push_back(c);
    for (auto& [code, copies] : groups) {
      std::sort(copies.begin(), copies.end());
      const std::size_t drop = copies.size() % step;
      for (std::size_t k = copies.size() - drop; k < copies.size(); ++k) {
        const auto walk = walk_subtree(f2, copies[k], r);
        for (std::size_t i = 1; i < walk.order.size(); ++i)
          report.removed[3].emplace_back(walk.parent[i], walk.order[i]);
      }
    }
  }
  report.cleaned = f2.without_edges(report.removed[3]);

  std::vector<char> is_root(f.order(), 0);
  for (Vertex r : roots) is_root[r] = 1;
  for (const auto& c : components(report.cleaned)) {
    Vertex root = c.vertices.front();
    for (Vertex v : c.vertices)
      if (is_root[v]) root = v;
    report.roots.push_back(root);
  }
  for (auto& removed : report.removed) std::sort(removed.begin(), removed.end());

  const auto m = static_cast<std::int64_t>(f.size());
  const auto kept = static_cast<std::int64_t>(report.cleaned.size());
  const Rational factor = Rational(1) - Rational(4) * (eps + Rational(1, static_cast<std::int64_t>(delta)));
  report.loss_bound_ok = Rational(kept) >= factor * Rational(m);
  return report;
}

}  // namespace

DegreeGrid::DegreeGrid(Rational eps, std::uint64_t delta, std::uint64_t limit)
    : eps_(eps), delta_(delta), limit_(limit) {
  if (eps <= 0) throw PreconditionError("DegreeGrid: eps must be positive");
  const bmp::cpp_int p = eps.numerator();
  const bmp::cpp_int q = eps.denominator();
  bmp::cpp_int num = 1;
  bmp::cpp_int den = 1;
  for (;;) {
    const bmp::cpp_int value = (num + den - 1) / den;
    if (value > limit) break;
    const auto v = value.convert_to<std::uint64_t>();
    if (powers_.empty() || powers_.back() != v) powers_.push_back(v);
    num *= p + q;
    den *= q;
  }
}

bool DegreeGrid::contains(std::uint64_t d) const {
  if (d > limit_) throw PreconditionError("DegreeGrid: degree " + std::to_string(d) + " beyond the grid limit");
  return d <= delta_ || std::binary_search(powers_.begin(), powers_.end(), d);
}

std::uint64_t DegreeGrid::project(std::uint64_t d) const {
  if (contains(d)) return d;
  std::uint64_t best = delta_;
  auto it = std::upper_bound(powers_.begin(), powers_.end(), d);
  if (it != powers_.begin()) best = std::max(best, *std::prev(it));
  return best;
}

std::uint64_t grid_project(std::uint64_t d, const DegreeGrid& grid) { return grid.project(d); }

std::uint64_t multiplicity_modulus(std::uint64_t root_degree, Rational eps, std::uint64_t delta) {
  const bmp::cpp_int num = bmp::cpp_int(eps.numerator()) * root_degree;
  const bmp::cpp_int den = bmp::cpp_int(eps.denominator()) * delta * central_binomial(delta);
  const bmp::cpp_int value = num / den;
  return value < 1 ? 1 : value.convert_to<std::uint64_t>();
}

CleanReport clean(const Forest& f, Rational eps, std::uint64_t delta) {
  return clean_impl(f, eps, delta, std::vector<char>(f.order(), 0));
}

CleanReport clean(const Forest& f, Rational eps, std::uint64_t delta, std::span<const Vertex> roots) {
  std::vector<char> given(f.order(), 0);
  for (Vertex r : roots) {
    if (r >= f.order()) throw PreconditionError("clean: root out of range");
    given[r] = 1;
  }
  return clean_impl(f, eps, delta, given);
}

CleanCheck is_clean(const Forest& f, std::span<const Vertex> roots, Rational eps, std::uint64_t delta) {
  std::vector<char> given(f.order(), 0);
  for (Vertex r : roots) {
    if (r >= f.order()) throw PreconditionError("is_clean: root out of range");
    given[r] = 1;
  }
  const DegreeGrid grid(eps, delta, f.max_degree());
  const auto comps = components(f);
  std::vector<Vertex> chosen;
  for (const auto& c : comps) {
    const auto r = given_root(c, given);
    if (!r)
      throw PreconditionError("is_clean: no root given for the component of vertex " + std::to_string(c.min_vertex()));
    chosen.push_back(*r);
  }
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (int bad = violation(f, chosen[i], grid, eps, delta)) return CleanCheck{false, bad, i, chosen[i]};
  return CleanCheck{};
}

std::uint64_t CleanComponentDescriptor::leaf_children() const noexcept {
  std::uint64_t inner = 0;
  for (const auto& [code, count] : multiplicities) inner += count;
  return root_degree - inner;
}

CleanComponentDescriptor descriptor_of(const Forest& f, Vertex root, Rational eps, std::uint64_t delta) {
  const DegreeGrid grid(eps, delta, std::max<std::uint64_t>(f.degree(root), 1));
  if (int bad = violation(f, root, grid, eps, delta))
    throw PreconditionError("descriptor_of: component of vertex " + std::to_string(root) +
                            " violates cleanliness condition " + std::to_string(bad));
  CleanComponentDescriptor d;
  d.root_degree = f.degree(root);
  for (Vertex c : f.neighbors(root))
    if (f.degree(c) > 1) ++d.multiplicities[rooted_code(f, c, root)];
  return d;
}

std::string clean_report_to_json(const CleanReport& report) {
  nlohmann::json j;
  for (std::size_t k = 0; k < 4; ++k) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Edge& e : report.removed[k]) arr.push_back({e.u, e.v});
    j["e" + std::to_string(k)] = std::move(arr);
  }
  j["roots"] = report.roots;
  j["size"] = report.cleaned.size();
  j["loss_bound_ok"] = report.loss_bound_ok;
  return j.dump() + "\n";
}

}  // namespace forestlcs
