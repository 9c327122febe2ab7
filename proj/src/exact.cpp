#include "forestlcs/exact.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>
#include <vector>

#include "forestlcs/error.hpp"

namespace forestlcs {

namespace {

struct ComponentOption {
  TypeVector types;
  std::vector<Edge> kept;
};

class UnrootedCache {
 public:
  const std::string& of_rooted(const std::string& rooted) {
    auto it = cache_.find(rooted);
    if (it == cache_.end()) {
      const Forest t = RootedTree::from_code(CanonicalCode(rooted)).to_forest();
      it = cache_.emplace(rooted, unrooted_code(t, 0).str()).first;
    }
    return it->second;
  }

 private:
  std::unordered_map<std::string, std::string> cache_;
};

// Partial solution for the subtree below one vertex: the components already
// cut off, plus the children hanging in the component still open at the vertex.
struct PartialState {
  std::vector<std::string> closed;
  std::vector<std::string> open;
  std::vector<Edge> kept;

  std::string key() const {
    std::string k;
    for (const auto& c : closed) k += c;
    k.push_back('|');
    for (const auto& c : open) k += c;
    return k;
  }
};

std::string bracket(const std::vector<std::string>& children) {
  std::string s = "(";
  for (const auto& c : children) s += c;
  s.push_back(')');
  return s;
}

template <class T>
void insert_sorted(std::vector<T>& v, T value) {
  v.insert(std::upper_bound(v.begin(), v.end(), value), std::move(value));
}

std::vector<ComponentOption> component_options(const Forest& f, const Component& k, std::size_t max_states,
                                               UnrootedCache& cache) {
  const auto walk = walk_subtree(f, k.vertices.front());
  const std::size_t n = walk.order.size();
  std::vector<std::vector<std::size_t>> kids(n);
  for (std::size_t i = 1; i < n; ++i) kids[walk.parent_pos[i]].push_back(i);

  std::vector<std::vector<PartialState>> states(n);
  for (std::size_t i = n; i-- > 0;) {
    std::vector<PartialState> current(1);
    for (std::size_t c : kids[i]) {
      const Edge link(walk.order[i], walk.order[c]);
      std::unordered_map<std::string, std::size_t> index;
      std::vector<PartialState> merged;
      auto push = [&](PartialState&& s) {
        if (index.emplace(s.key(), merged.size()).second) {
          if (merged.size() >= max_states) throw BudgetExceeded("subforest type enumeration exceeded its state budget");
          merged.push_back(std::move(s));
        }
      };
      for (const auto& s : current) {
        for (const auto& t : states[c]) {
          const std::string child = bracket(t.open);
          PartialState cut = s;
          for (const auto& x : t.closed) insert_sorted(cut.closed, x);
          PartialState keep = cut;
          insert_sorted(cut.closed, cache.of_rooted(child));
          cut.kept.insert(cut.kept.end(), t.kept.begin(), t.kept.end());
          insert_sorted(keep.open, child);
          keep.kept.insert(keep.kept.end(), t.kept.begin(), t.kept.end());
          keep.kept.push_back(link);
          push(std::move(cut));
          push(std::move(keep));
        }
      }
      states[c].clear();
      states[c].shrink_to_fit();
      current = std::move(merged);
    }
    states[i] = std::move(current);
  }

  std::vector<ComponentOption> out;
  std::set<TypeVector> seen;
  for (auto& s : states[0]) {
    ComponentOption opt;
    for (const auto& c : s.closed) ++opt.types[CanonicalCode(c)];
    ++opt.types[CanonicalCode(cache.of_rooted(bracket(s.open)))];
    if (!seen.insert(opt.types).second) continue;
    opt.kept = std::move(s.kept);
    std::sort(opt.kept.begin(), opt.kept.end());
    out.push_back(std::move(opt));
  }
  return out;
}

using Key = std::vector<std::uint32_t>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : k) h = (h ^ x) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

struct DenseOption {
  Key counts;
  std::size_t option;
};

struct Layer {
  std::vector<Key> keys;
  std::vector<std::uint32_t> pred;
  std::vector<std::uint32_t> choice;
};

// Reachable type vectors of the component prefixes, with back-pointers.
std::vector<Layer> run_dp(const std::vector<std::vector<DenseOption>>& comps, const Key& limit, std::size_t width,
                          std::size_t max_states) {
  std::vector<Layer> layers(1);
  layers[0].keys.push_back(Key(width, 0));
  layers[0].pred.push_back(0);
  layers[0].choice.push_back(0);
  for (const auto& opts : comps) {
    const Layer& prev = layers.back();
    Layer next;
    std::unordered_map<Key, std::uint32_t, KeyHash> index;
    for (std::uint32_t s = 0; s < prev.keys.size(); ++s) {
      for (std::uint32_t o = 0; o < opts.size(); ++o) {
        Key k = prev.keys[s];
        bool ok = true;
        for (std::size_t d = 0; d < width; ++d) {
          k[d] += opts[o].counts[d];
          if (k[d] > limit[d]) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        if (index.emplace(k, static_cast<std::uint32_t>(next.keys.size())).second) {
          if (next.keys.size() >= max_states) throw BudgetExceeded("type-vector DP exceeded its state budget");
          next.keys.push_back(std::move(k));
          next.pred.push_back(s);
          next.choice.push_back(o);
        }
      }
    }
    layers.push_back(std::move(next));
  }
  return layers;
}

std::vector<Edge> backtrack(const std::vector<Layer>& layers, const std::vector<std::vector<DenseOption>>& dense,
                            const std::vector<std::vector<ComponentOption>>& options, std::uint32_t at) {
  std::vector<Edge> kept;
  for (std::size_t i = layers.size() - 1; i > 0; --i) {
    const auto& chosen = options[i - 1][dense[i - 1][layers[i].choice[at]].option];
    kept.insert(kept.end(), chosen.kept.begin(), chosen.kept.end());
    at = layers[i].pred[at];
  }
  return kept;
}

}  // namespace

std::size_t max_component_order(const Forest& f) {
  std::size_t best = 0;
  for (const auto& c : components(f)) best = std::max(best, c.order());
  return best;
}

TypeSet subforest_types(const Forest& f, const Component& k, std::size_t max_order) {
  if (k.order() > max_order)
    throw PreconditionError("subforest_types: component of order " + std::to_string(k.order()) + " exceeds " +
                            std::to_string(max_order));
  UnrootedCache cache;
  TypeSet out;
  for (auto& opt : component_options(f, k, BoundedOptions{}.max_states, cache)) out.insert(std::move(opt.types));
  return out;
}

LcsResult lcs_bounded(const Forest& f1, const Forest& f2, std::size_t max_order, const BoundedOptions& options) {
  UnrootedCache cache;
  auto side_options = [&](const Forest& f) {
    std::vector<std::vector<ComponentOption>> out;
    for (const auto& c : components(f)) {
      if (c.order() > max_order)
        throw PreconditionError("lcs_bounded: component of order " + std::to_string(c.order()) + " exceeds " +
                                std::to_string(max_order));
      if (c.order() > 1) out.push_back(component_options(f, c, options.max_states, cache));
    }
    return out;
  };
  const auto opts1 = side_options(f1);
  const auto opts2 = side_options(f2);

  // Largest total count of each non-trivial type any subforest of a side reaches.
  auto capacity = [](const std::vector<std::vector<ComponentOption>>& side) {
    std::map<CanonicalCode, std::uint64_t> cap;
    for (const auto& comp : side) {
      std::map<CanonicalCode, std::uint64_t> best;
      for (const auto& o : comp)
        for (const auto& [code, count] : o.types)
          if (code.order() > 1) best[code] = std::max(best[code], count);
      for (const auto& [code, count] : best) cap[code] += count;
    }
    return cap;
  };
  const auto cap1 = capacity(opts1);
  const auto cap2 = capacity(opts2);

  std::map<CanonicalCode, std::uint32_t> ids;
  for (const auto& [code, count] : cap1)
    if (cap2.contains(code)) ids.emplace(code, 0);
  std::uint32_t next_id = 0;
  for (auto& [code, id] : ids) id = next_id++;
  const std::size_t width = ids.size();
  Key limit(width, 0);
  std::vector<std::size_t> edges_of(width, 0);
  for (const auto& [code, id] : ids) {
    limit[id] = static_cast<std::uint32_t>(std::min(cap1.at(code), cap2.at(code)));
    edges_of[id] = code.order() - 1;
  }

  // Options using a type the other side can never produce are dropped.
  auto densify = [&](const std::vector<std::vector<ComponentOption>>& side) {
    std::vector<std::vector<DenseOption>> out;
    for (const auto& comp : side) {
      std::vector<DenseOption> dense;
      for (std::size_t o = 0; o < comp.size(); ++o) {
        Key counts(width, 0);
        bool usable = true;
        for (const auto& [code, count] : comp[o].types) {
          if (code.order() == 1) continue;
          auto it = ids.find(code);
          if (it == ids.end() || count > limit[it->second]) {
            usable = false;
            break;
          }
          counts[it->second] = static_cast<std::uint32_t>(count);
        }
        if (usable) dense.push_back({std::move(counts), o});
      }
      out.push_back(std::move(dense));
    }
    return out;
  };
  const auto dense1 = densify(opts1);
  const auto dense2 = densify(opts2);

  const auto layers1 = run_dp(dense1, limit, width, options.max_states);
  const auto layers2 = run_dp(dense2, limit, width, options.max_states);

  std::unordered_map<Key, std::uint32_t, KeyHash> reach2;
  for (std::uint32_t i = 0; i < layers2.back().keys.size(); ++i) reach2.emplace(layers2.back().keys[i], i);

  std::size_t best_value = 0;
  std::uint32_t best1 = 0, best2 = 0;
  const Key* best_key = nullptr;
  const auto& final1 = layers1.back().keys;
  for (std::uint32_t i = 0; i < final1.size(); ++i) {
    auto it = reach2.find(final1[i]);
    if (it == reach2.end()) continue;
    std::size_t value = 0;
    for (std::size_t d = 0; d < width; ++d) value += final1[i][d] * edges_of[d];
    if (!best_key || value > best_value || (value == best_value && final1[i] < *best_key)) {
      best_value = value;
      best_key = &final1[i];
      best1 = i;
      best2 = it->second;
    }
  }

  const auto kept1 = backtrack(layers1, dense1, opts1, best1);
  const auto kept2 = backtrack(layers2, dense2, opts2, best2);
  LcsResult result;
  result.certificate = certificate_from_subforests(f1, kept1, f2, kept2);
  result.size = verify_certificate(f1, f2, result.certificate);
  return result;
}

LcsResult lcs_oracle(const Forest& f1, const Forest& f2, std::size_t edge_budget) {
  if (f1.size() + f2.size() > edge_budget)
    throw BudgetExceeded("oracle budget exceeded: " + std::to_string(f1.size() + f2.size()) + " edges > " +
                         std::to_string(edge_budget));
  if (f1.size() >= 63 || f2.size() >= 63) throw BudgetExceeded("oracle cannot enumerate that many edges");
  const auto e1 = f1.edges();
  const auto e2 = f2.edges();
  auto subset = [](std::span<const Edge> all, std::uint64_t mask) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1U) out.push_back(all[i]);
    return out;
  };

  std::unordered_map<std::string, std::uint64_t> shapes1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e1.size()); ++mask) {
    const Forest h = f1.edge_subgraph(subset(e1, mask));
    shapes1.emplace(forest_code(h, true).str(), mask);
  }

  int best = -1;
  std::uint64_t best1 = 0, best2 = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e2.size()); ++mask) {
    const int bits = std::popcount(mask);
    if (bits <= best) continue;
    const Forest h = f2.edge_subgraph(subset(e2, mask));
    if (auto it = shapes1.find(forest_code(h, true).str()); it != shapes1.end()) {
      best = bits;
      best1 = it->second;
      best2 = mask;
    }
  }

  LcsResult result;
  result.certificate = certificate_from_subforests(f1, subset(e1, best1), f2, subset(e2, best2));
  result.size = verify_certificate(f1, f2, result.certificate);
  return result;
}

}  // namespace forestlcs
