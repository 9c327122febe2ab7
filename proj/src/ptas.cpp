#include "forestlcs/ptas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "forestlcs/approx4.hpp"
#include "forestlcs/error.hpp"

namespace forestlcs {

namespace bmp = boost::multiprecision;

namespace {

long double central_binomial_ld(std::uint64_t delta) {
  long double c = 1;
  for (std::uint64_t k = 1; k <= delta; ++k) c = c * static_cast<long double>(delta + k) / static_cast<long double>(k);
  return c;
}

// C(n + k, k) for real n, k >= 0; exact while it fits the mantissa.
long double multiset_count(long double n, long double k) {
  if (k == 0 || n == 0) return 1;
  const long double v = std::exp(std::lgamma(n + k + 1) - std::lgamma(n + 1) - std::lgamma(k + 1));
  return v < 1e18L ? std::round(v) : v;
}

long double to_ld(const Rational& r) {
  return static_cast<long double>(r.numerator()) / static_cast<long double>(r.denominator());
}

CatalogConstants catalog_constants(Rational eps, std::uint64_t delta) {
  CatalogConstants k;
  const long double e = to_ld(eps);
  const long double d = static_cast<long double>(delta);
  const long double binom = central_binomial_ld(delta);
  k.rooted_types = count_rooted_trees(delta);
  k.per_degree = std::pow(1 + 2 * d * binom / e, k.rooted_types - 1);

  // Grid degrees below the large threshold.
  const long double threshold = d / e * binom;
  std::set<long double> degrees;
  for (std::uint64_t i = 0; i <= delta && static_cast<long double>(i) < threshold; ++i) degrees.insert(i);
  for (long double power = 1; std::isfinite(power); power *= 1 + e) {
    const long double g = std::ceil(power);
    if (g >= threshold) break;
    degrees.insert(g);
  }
  if (!std::isfinite(threshold)) k.small_shapes = std::numeric_limits<long double>::infinity();
  for (long double g : degrees) k.small_shapes += multiset_count(g, k.rooted_types - 1);

  const long double steps = std::ceil(std::log(2 / e) / std::log1p(e));
  k.c1 = (k.small_shapes + k.per_degree) / std::log(2.0L) + k.per_degree / std::log1p(e);
  k.c2 = k.small_shapes + k.per_degree * (steps + 1);
  return k;
}

std::size_t observed_window(const std::vector<CatalogEntry>& entries, Rational eps) {
  const auto p = eps.numerator();
  const auto q = eps.denominator();
  std::size_t worst = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const bmp::cpp_int lhs = bmp::cpp_int(entries[i].shape.root_degree) * q;
    std::size_t j = i;
    while (j < entries.size() && lhs > bmp::cpp_int(entries[j].shape.root_degree) * p) ++j;
    worst = std::max(worst, j - i);
  }
  return worst;
}

std::uint64_t floor_ratio(const bmp::cpp_int& num, const bmp::cpp_int& den) {
  const bmp::cpp_int v = num / den;
  return v < 1 ? 1 : v.convert_to<std::uint64_t>();
}

// Forest on the vertices of `t` selected by `keep`, relabelled in order.
struct Induced {
  Forest forest;
  std::vector<int> original;
};

Induced induce(const RootedTree& t, const std::vector<char>& keep) {
  const auto& parent = t.parents();
  std::vector<int> index(parent.size(), -1);
  Induced out;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (keep[i]) {
      index[i] = static_cast<int>(out.original.size());
      out.original.push_back(static_cast<int>(i));
    }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < parent.size(); ++i)
    if (keep[i] && keep[parent[i]]) edges.emplace_back(index[parent[i]], index[i]);
  out.forest = Forest(out.original.size(), std::move(edges));
  return out;
}

struct Piece {
  std::vector<char> keep;
  CanonicalCode core;
  CanonicalCode rest;
};

// Root-containing subtrees of `t`, stopping after `budget` of them.
std::vector<Piece> root_pieces(const RootedTree& t, std::size_t budget, bool& truncated) {
  const auto& parent = t.parents();
  const std::size_t n = parent.size();
  std::vector<Piece> out;
  std::vector<char> keep(n, 0);
  keep[0] = 1;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (out.size() >= budget) {
      truncated = true;
      return;
    }
    if (i == n) {
      std::vector<char> drop(n);
      for (std::size_t v = 0; v < n; ++v) drop[v] = !keep[v];
      out.push_back(Piece{keep, rooted_code(induce(t, keep).forest, 0), forest_code(induce(t, drop).forest)});
      return;
    }
    if (keep[parent[i]]) {
      keep[i] = 1;
      self(self, i + 1);
      keep[i] = 0;
    }
    self(self, i + 1);
  };
  rec(rec, 1);
  return out;
}

bool candidate_pair(const Catalog& catalog, std::size_t i1, std::size_t i2, Rational eps, std::uint64_t delta) {
  const auto& a = catalog.entries[i1];
  const auto& b = catalog.entries[i2];
  if (a.count[0] == 0 || b.count[1] == 0) return false;
  const auto d1 = a.shape.root_degree;
  const auto d2 = b.shape.root_degree;
  if (!is_large_degree(d1, eps, delta) && !is_large_degree(d2, eps, delta)) return false;
  if (!degree_pair_admissible(d1, d2, eps, delta)) return false;
  const long double gap = static_cast<long double>(i1 > i2 ? i1 - i2 : i2 - i1);
  return gap <= catalog.constants.c2;
}

void add_incident(const Forest& f, Vertex v, std::vector<Edge>& out) {
  for (Vertex w : f.neighbors(v)) out.emplace_back(v, w);
}

}  // namespace

long double count_rooted_trees(std::size_t max_order) {
  std::vector<bmp::cpp_int> a(max_order + 2, 0);
  if (max_order >= 1) a[1] = 1;
  for (std::size_t n = 1; n + 1 <= max_order; ++n) {
    bmp::cpp_int sum = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      bmp::cpp_int inner = 0;
      for (std::size_t d = 1; d <= k; ++d)
        if (k % d == 0) inner += a[d] * d;
      sum += inner * a[n - k + 1];
    }
    a[n + 1] = sum / n;
  }
  bmp::cpp_int total = 0;
  for (std::size_t n = 1; n <= max_order; ++n) total += a[n];
  return total.convert_to<long double>();
}

Catalog build_catalog(const Forest& f1, std::span<const Vertex> roots1, const Forest& f2,
                      std::span<const Vertex> roots2, Rational eps, std::uint64_t delta) {
  const Forest* forests[2] = {&f1, &f2};
  const std::span<const Vertex> roots[2] = {roots1, roots2};
  std::map<CleanComponentDescriptor, CatalogEntry> by_shape;
  for (int side = 0; side < 2; ++side) {
    if (const auto check = is_clean(*forests[side], roots[side], eps, delta); !check)
      throw PreconditionError("build_catalog: input " + std::to_string(side + 1) + " is not clean (component " +
                              std::to_string(check.component) + ", condition " + std::to_string(check.condition) +
                              ")");
    for (Vertex r : roots[side]) {
      auto shape = descriptor_of(*forests[side], r, eps, delta);
      auto& entry = by_shape[shape];
      entry.shape = std::move(shape);
      ++entry.count[side];
      entry.members[side].push_back(r);
    }
  }
  Catalog catalog;
  for (auto& [shape, entry] : by_shape) {
    for (auto& m : entry.members) std::sort(m.begin(), m.end());
    catalog.entries.push_back(std::move(entry));
  }
  catalog.n = std::max(f1.order(), f2.order());
  catalog.constants = catalog_constants(eps, delta);
  catalog.constants.observed_c2 = observed_window(catalog.entries, eps);
  return catalog;
}

bool is_large_degree(std::uint64_t d, Rational eps, std::uint64_t delta) {
  return bmp::cpp_int(d) * eps.numerator() >= bmp::cpp_int(delta) * eps.denominator();
}

bool degree_pair_admissible(std::uint64_t d1, std::uint64_t d2, Rational eps, std::uint64_t delta) {
  const bmp::cpp_int p = eps.numerator();
  const bmp::cpp_int q = eps.denominator();
  auto dominated = [&](std::uint64_t a, std::uint64_t b) {
    return is_large_degree(a, eps, delta) && (p * a >= q * b || p * b >= q * a);
  };
  return !dominated(d1, d2) && !dominated(d2, d1);
}

std::size_t OverlaySet::index_of(const CanonicalCode& code) const {
  for (std::size_t j = 0; j < types.size(); ++j)
    if (types[j].code() == code) return j;
  throw PreconditionError("overlays: rooted type " + code.str() + " is not in the type list");
}

OverlaySet build_overlays(std::vector<RootedTree> types, std::size_t budget) {
  OverlaySet x;
  x.types = std::move(types);
  std::vector<std::vector<Piece>> pieces;
  for (const auto& t : x.types) pieces.push_back(root_pieces(t, budget, x.truncated));

  for (std::size_t j1 = 0; j1 < x.types.size(); ++j1)
    for (std::size_t j2 = 0; j2 < x.types.size(); ++j2) {
      std::map<std::tuple<CanonicalCode, CanonicalCode, CanonicalCode>, OverlayTuple> found;
      for (const auto& a : pieces[j1])
        for (const auto& b : pieces[j2]) {
          if (a.core != b.core) continue;
          auto key = std::make_tuple(a.core, a.rest, b.rest);
          if (found.count(key)) continue;
          const auto sub1 = induce(x.types[j1], a.keep);
          const auto sub2 = induce(x.types[j2], b.keep);
          OverlayTuple t{j1, j2, a.core, a.rest, b.rest, {}, {}};
          for (const auto& [u, v] : rooted_isomorphism(sub1.forest, 0, std::nullopt, sub2.forest, 0, std::nullopt)) {
            t.embed1.push_back(sub1.original[u]);
            t.embed2.push_back(sub2.original[v]);
          }
          found.emplace(std::move(key), std::move(t));
        }
      for (auto& [key, t] : found) x.tuples.push_back(std::move(t));
    }
  for (std::size_t j = 0; j < x.types.size(); ++j) x.tuples.push_back(OverlayTuple{j, std::nullopt, {}, {}, {}, {}, {}});
  for (std::size_t j = 0; j < x.types.size(); ++j) x.tuples.push_back(OverlayTuple{std::nullopt, j, {}, {}, {}, {}, {}});
  return x;
}

OverlaySet build_overlays(std::size_t delta, std::size_t budget) {
  return build_overlays(enumerate_rooted_trees(delta), budget);
}

bool Profile::empty_match(const OverlaySet& x) const {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] != 0 && x.tuples[i].two_sided()) return false;
  return true;
}

std::vector<std::uint64_t> child_type_counts(const CleanComponentDescriptor& shape, const OverlaySet& x) {
  std::vector<std::uint64_t> t(x.types.size(), 0);
  for (const auto& [code, count] : shape.multiplicities) t[x.index_of(code)] = count;
  if (const auto leaves = shape.leaf_children(); leaves > 0) t[x.index_of(kSingleVertexCode)] = leaves;
  return t;
}

ProfileSet build_profiles(const CleanComponentDescriptor& a, const CleanComponentDescriptor& b, const OverlaySet& x,
                          Rational eps, std::uint64_t delta, std::size_t budget) {
  if (!degree_pair_admissible(a.root_degree, b.root_degree, eps, delta))
    throw PreconditionError("build_profiles: root degrees " + std::to_string(a.root_degree) + " and " +
                            std::to_string(b.root_degree) + " are not admissible");
  std::vector<std::uint64_t> rest1 = child_type_counts(a, x);
  std::vector<std::uint64_t> rest2 = child_type_counts(b, x);

  ProfileSet out;
  const std::uint64_t o = std::max<std::size_t>(x.tuples.size(), 1);
  out.step = floor_ratio(bmp::cpp_int(eps.numerator()) * (a.root_degree + b.root_degree),
                         bmp::cpp_int(eps.denominator()) * o * delta);

  std::vector<std::size_t> vars;
  std::vector<std::size_t> first_only(x.types.size());
  std::vector<std::size_t> second_only(x.types.size());
  for (std::size_t i = 0; i < x.tuples.size(); ++i) {
    const auto& t = x.tuples[i];
    if (t.two_sided()) {
      if (rest1[*t.first] > 0 && rest2[*t.second] > 0) vars.push_back(i);
    } else if (t.first) {
      first_only[*t.first] = i;
    } else {
      second_only[*t.second] = i;
    }
  }

  Profile current{std::vector<std::uint64_t>(x.tuples.size(), 0)};
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (out.truncated) return;
    if (k == vars.size()) {
      if (out.profiles.size() >= budget) {
        out.truncated = true;
        return;
      }
      Profile p = current;
      for (std::size_t j = 0; j < x.types.size(); ++j) {
        p.y[first_only[j]] = rest1[j];
        p.y[second_only[j]] = rest2[j];
      }
      out.profiles.push_back(std::move(p));
      return;
    }
    const auto& t = x.tuples[vars[k]];
    auto& r1 = rest1[*t.first];
    auto& r2 = rest2[*t.second];
    for (std::uint64_t v = std::min(r1, r2) / out.step * out.step;; v -= out.step) {
      current.y[vars[k]] = v;
      r1 -= v;
      r2 -= v;
      self(self, k + 1);
      r1 += v;
      r2 += v;
      if (v == 0 || out.truncated) break;
    }
    current.y[vars[k]] = 0;
  };
  rec(rec, 0);
  return out;
}

std::vector<PairProfiles> eligible_pairs(const Catalog& catalog, const OverlaySet& x, Rational eps,
                                         std::uint64_t delta, std::size_t profile_budget) {
  std::vector<PairProfiles> out;
  for (std::size_t i1 = 0; i1 < catalog.q(); ++i1)
    for (std::size_t i2 = 0; i2 < catalog.q(); ++i2) {
      if (!candidate_pair(catalog, i1, i2, eps, delta)) continue;
      PairProfiles pp{i1, i2, build_profiles(catalog.entries[i1].shape, catalog.entries[i2].shape, x, eps, delta,
                                             profile_budget)};
      auto& list = pp.set.profiles;
      list.erase(std::remove_if(list.begin(), list.end(), [&](const Profile& p) { return p.empty_match(x); }),
                 list.end());
      if (!list.empty()) out.push_back(std::move(pp));
    }
  return out;
}

std::uint64_t assignment_step(std::uint64_t s, const CatalogConstants& constants, std::size_t overlay_count,
                              std::size_t type_count, Rational eps, std::uint64_t delta) {
  const long double e = to_ld(eps);
  const long double free_tuples = static_cast<long double>(overlay_count) - 2.0L * static_cast<long double>(type_count);
  const long double o_max = std::pow(1 + 2 * static_cast<long double>(overlay_count) * delta / e, free_tuples);
  const long double den = (2 * constants.c2 + 1) * o_max * static_cast<long double>(delta);
  if (!std::isfinite(den)) return 1;
  const long double v = std::floor(e * static_cast<long double>(s) / den);
  return v < 1 ? 1 : static_cast<std::uint64_t>(std::min(v, static_cast<long double>(s)));
}

AssignmentStats enumerate_assignments(const Catalog& catalog, std::span<const PairProfiles> pairs,
                                      const OverlaySet& x, Rational eps, std::uint64_t delta, std::size_t budget,
                                      const std::function<void(const Assignment&)>& sink) {
  struct Var {
    std::size_t pair, profile, first, second;
    std::uint64_t step;
  };
  AssignmentStats stats;
  std::vector<Var> vars;
  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    const auto& pp = pairs[pi];
    const auto step = assignment_step(catalog.entries[pp.first].count[0], catalog.constants, x.tuples.size(),
                                      x.types.size(), eps, delta);
    stats.max_step = std::max(stats.max_step, step);
    for (std::size_t k = 0; k < pp.set.profiles.size(); ++k) vars.push_back(Var{pi, k, pp.first, pp.second, step});
  }
  if (budget == 0) {
    stats.truncated = true;
    return stats;
  }
  sink(Assignment{});
  ++stats.emitted;

  std::vector<std::uint64_t> rest1(catalog.q());
  std::vector<std::uint64_t> rest2(catalog.q());
  for (std::size_t i = 0; i < catalog.q(); ++i) {
    rest1[i] = catalog.entries[i].count[0];
    rest2[i] = catalog.entries[i].count[1];
  }
  std::vector<std::uint64_t> value(vars.size(), 0);
  auto set = [&](std::size_t v, std::uint64_t to) {
    rest1[vars[v].first] += value[v];
    rest2[vars[v].second] += value[v];
    value[v] = to;
    rest1[vars[v].first] -= to;
    rest2[vars[v].second] -= to;
  };
  auto fill = [&](std::size_t from) {
    for (std::size_t v = from; v < vars.size(); ++v)
      set(v, std::min(rest1[vars[v].first], rest2[vars[v].second]) / vars[v].step * vars[v].step);
  };

  fill(0);
  for (;;) {
    std::size_t last = vars.size();
    for (std::size_t v = vars.size(); v-- > 0;)
      if (value[v] > 0) {
        last = v;
        break;
      }
    if (last == vars.size()) break;
    if (stats.emitted >= budget) {
      stats.truncated = true;
      break;
    }
    Assignment a;
    for (std::size_t v = 0; v < vars.size(); ++v)
      if (value[v] > 0) a.push_back(AssignmentCell{vars[v].pair, vars[v].profile, value[v]});
    sink(a);
    ++stats.emitted;
    set(last, value[last] - vars[last].step);
    fill(last + 1);
  }
  return stats;
}

AppliedAssignment apply_assignment(const Forest& f1, const Forest& f2, const Catalog& catalog,
                                   std::span<const PairProfiles> pairs, const OverlaySet& x,
                                   const Assignment& assignment, Rational eps, std::uint64_t delta) {
  const Forest* forests[2] = {&f1, &f2};
  std::vector<std::optional<Forest>> reps(x.types.size());
  auto rep = [&](std::size_t j) -> const Forest& {
    if (!reps[j]) reps[j] = x.types[j].to_forest();
    return *reps[j];
  };

  std::array<std::vector<std::size_t>, 2> cursor{std::vector<std::size_t>(catalog.q(), 0),
                                                 std::vector<std::size_t>(catalog.q(), 0)};
  std::array<std::vector<char>, 2> consumed{std::vector<char>(f1.order(), 0), std::vector<char>(f2.order(), 0)};
  std::array<std::vector<Edge>, 2> removed;
  Certificate partial;

  // Children of root r grouped by type, ascending ids.
  auto children_by_type = [&](int side, Vertex r) {
    std::vector<std::vector<Vertex>> groups(x.types.size());
    for (Vertex c : forests[side]->neighbors(r)) groups[x.index_of(rooted_code(*forests[side], c, r))].push_back(c);
    return groups;
  };

  for (const auto& cell : assignment) {
    const auto& pp = pairs[cell.pair];
    const auto& profile = pp.set.profiles.at(cell.profile);
    const std::size_t entry[2] = {pp.first, pp.second};
    for (std::uint64_t c = 0; c < cell.count; ++c) {
      Vertex root[2];
      std::vector<std::vector<Vertex>> groups[2];
      std::vector<std::size_t> taken[2];
      for (int side = 0; side < 2; ++side) {
        const auto& members = catalog.entries[entry[side]].members[side];
        auto& at = cursor[side][entry[side]];
        if (at >= members.size())
          throw PreconditionError("apply_assignment: catalog entry " + std::to_string(entry[side]) +
                                  " over-consumed on side " + std::to_string(side + 1));
        root[side] = members[at++];
        consumed[side][root[side]] = 1;
        add_incident(*forests[side], root[side], removed[side]);
        groups[side] = children_by_type(side, root[side]);
        taken[side].assign(x.types.size(), 0);
      }
      partial.vertex_map.emplace_back(root[0], root[1]);

      for (std::size_t nu = 0; nu < x.tuples.size(); ++nu) {
        const auto& t = x.tuples[nu];
        if (!t.two_sided()) continue;
        const std::size_t type[2] = {*t.first, *t.second};
        const std::vector<int>* embed[2] = {&t.embed1, &t.embed2};
        for (std::uint64_t k = 0; k < profile.y[nu]; ++k) {
          VertexPairs iso[2];
          for (int side = 0; side < 2; ++side) {
            const Vertex child = groups[side][type[side]].at(taken[side][type[side]]++);
            iso[side] = rooted_isomorphism(rep(type[side]), 0, std::nullopt, *forests[side], child, root[side]);
          }
          for (std::size_t e = 0; e < t.embed1.size(); ++e) {
            Vertex image[2];
            Vertex above[2];
            for (int side = 0; side < 2; ++side) {
              const int local = (*embed[side])[e];
              image[side] = iso[side][local].second;
              above[side] = e == 0 ? root[side] : iso[side][x.types[type[side]].parents()[local]].second;
              consumed[side][image[side]] = 1;
              add_incident(*forests[side], image[side], removed[side]);
            }
            partial.edges1.emplace_back(above[0], image[0]);
            partial.edges2.emplace_back(above[1], image[1]);
            partial.vertex_map.emplace_back(image[0], image[1]);
          }
        }
      }
    }
  }

  for (int side = 0; side < 2; ++side)
    for (const auto& entry : catalog.entries)
      if (is_large_degree(entry.shape.root_degree, eps, delta))
        for (Vertex r : entry.members[side])
          if (!consumed[side][r]) add_incident(*forests[side], r, removed[side]);

  partial.normalize();
  return AppliedAssignment{f1.without_edges(removed[0]), f2.without_edges(removed[1]), std::move(partial)};
}

AdditiveResult solve_clean(const Forest& f1, std::span<const Vertex> roots1, const Forest& f2,
                           std::span<const Vertex> roots2, Rational eps, std::uint64_t delta,
                           const AdditiveOptions& options) {
  AdditiveResult result;
  auto& diag = result.diagnostics;
  const Catalog catalog = build_catalog(f1, roots1, f2, roots2, eps, delta);
  diag.inner_eps = eps;
  diag.delta = delta;
  diag.q = catalog.q();
  diag.c1 = catalog.constants.c1;
  diag.c2 = catalog.constants.c2;
  diag.observed_c2 = catalog.constants.observed_c2;

  // Rooted types hanging off the roots that may be matched.
  std::set<CanonicalCode> codes;
  for (std::size_t i1 = 0; i1 < catalog.q(); ++i1)
    for (std::size_t i2 = 0; i2 < catalog.q(); ++i2)
      if (candidate_pair(catalog, i1, i2, eps, delta))
        for (std::size_t i : {i1, i2})
          for (const auto& [code, count] : catalog.entries[i].shape.multiplicities) codes.insert(code);
  std::vector<RootedTree> types;
  for (const auto& code : codes) types.push_back(RootedTree::from_code(code));
  std::sort(types.begin(), types.end(), [](const RootedTree& a, const RootedTree& b) {
    return std::make_pair(a.order(), a.code()) < std::make_pair(b.order(), b.code());
  });
  types.emplace_back();
  const OverlaySet x = build_overlays(std::move(types), options.overlay_budget);
  diag.overlay_count = x.tuples.size();

  const auto pairs = eligible_pairs(catalog, x, eps, delta, options.profile_budget);
  diag.eligible_pairs = pairs.size();
  diag.truncated = x.truncated;
  for (const auto& pp : pairs) {
    diag.max_profile_step = std::max(diag.max_profile_step, pp.set.step);
    diag.truncated = diag.truncated || pp.set.truncated;
  }

  bool have = false;
  const auto stats = enumerate_assignments(catalog, pairs, x, eps, delta, options.assignment_budget,
                                           [&](const Assignment& a) {
    const auto applied = apply_assignment(f1, f2, catalog, pairs, x, a, eps, delta);
    const auto& r1 = applied.residual1;
    const auto& r2 = applied.residual2;
    LcsResult rest;
    try {
      rest = lcs_bounded(r1, r2, std::max({max_component_order(r1), max_component_order(r2), std::size_t{1}}),
                         options.bounded);
    } catch (const BudgetExceeded&) {
      diag.fallback = true;
      rest = lcs_approx4(r1, r2);
    }
    if (!have || applied.partial.size() + rest.size > result.size) {
      have = true;
      result.certificate = merge_certificates(applied.partial, rest.certificate);
      result.certificate.normalize();
      result.size = result.certificate.size();
    }
  });
  diag.assignments = stats.emitted;
  diag.max_assignment_step = stats.max_step;
  diag.truncated = diag.truncated || stats.truncated;
  diag.pipeline_size = result.size;
  result.heuristic = diag.truncated || diag.fallback;
  verify_certificate(f1, f2, result.certificate);
  return result;
}

AdditiveResult lcs_additive(const Forest& f1, const Forest& f2, Rational eps, const AdditiveOptions& options) {
  if (eps <= 0 || eps >= 1) throw PreconditionError("lcs_additive: eps must lie in (0, 1)");
  const Rational inner = eps / kErrorConstant;
  const auto delta = static_cast<std::uint64_t>(ceil_of(Rational(1) / inner));
  const auto clean1 = clean(f1, inner, delta);
  const auto clean2 = clean(f2, inner, delta);
  AdditiveResult result = solve_clean(clean1.cleaned, clean1.roots, clean2.cleaned, clean2.roots, inner, delta, options);
  verify_certificate(f1, f2, result.certificate);

  auto approx = lcs_approx4(f1, f2);
  result.diagnostics.approx4_size = approx.size;
  if (approx.size > result.size) {
    result.size = approx.size;
    result.certificate = std::move(approx.certificate);
  }
  result.gap_bound = eps * Rational(static_cast<std::int64_t>(std::max(f1.order(), f2.order())));
  return result;
}

}  // namespace forestlcs
