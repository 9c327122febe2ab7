#include "brute.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace brute {

Adjacency adjacency(std::size_t n, const std::vector<Edge>& edges) {
  Adjacency adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

std::string rooted(const Adjacency& adj, Vertex v, long parent) {
  std::vector<std::string> kids;
  for (Vertex w : adj[v])
    if (static_cast<long>(w) != parent) kids.push_back(rooted(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

std::string unrooted(const Adjacency& adj, Vertex v) {
  std::vector<Vertex> comp{v};
  std::set<Vertex> seen{v};
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (Vertex w : adj[comp[i]])
      if (seen.insert(w).second) comp.push_back(w);
  std::string best;
  for (Vertex r : comp) {
    auto s = rooted(adj, r, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

std::vector<std::string> shape(std::size_t n, const std::vector<Edge>& edges) {
  const auto adj = adjacency(n, edges);
  std::vector<char> seen(n, 0);
  std::vector<std::string> out;
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v] || adj[v].empty()) continue;
    std::vector<Vertex> stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex w : adj[x])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    out.push_back(unrooted(adj, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Edge> subset(const Forest& f, std::uint64_t mask) {
  std::vector<Edge> out;
  const auto edges = f.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (mask >> i & 1) out.push_back(edges[i]);
  return out;
}

}  // namespace

std::size_t lcs(const Forest& a, const Forest& b) {
  if (a.size() > 20 || b.size() > 20) throw std::invalid_argument("brute::lcs: too many edges");
  std::set<std::vector<std::string>> shapes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.size()); ++mask)
    shapes.insert(shape(a.order(), subset(a, mask)));
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b.size()); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    if (shapes.count(shape(b.order(), subset(b, mask)))) best = size;
  }
  return best;
}

std::vector<std::vector<Edge>> labeled_trees(std::size_t n) {
  std::vector<std::vector<Edge>> out;
  if (n == 0) return out;
  if (n == 1) return {{}};
  if (n == 2) return {{Edge(0, 1)}};
  std::vector<Vertex> seq(n - 2, 0);
  for (;;) {
    std::vector<std::size_t> degree(n, 1);
    for (Vertex x : seq) ++degree[x];
    std::vector<Edge> edges;
    for (Vertex x : seq) {
      Vertex leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    std::vector<Vertex> last;
    for (Vertex v = 0; v < n; ++v)
      if (degree[v] == 1) last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    out.push_back(edges);
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return out;
}

bool isomorphic_by_permutation(std::size_t n, const std::vector<Edge>& a, const std::vector<Edge>& b) {
  if (a.size() != b.size()) return false;
  std::set<Edge> target(b.begin(), b.end());
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    bool ok = true;
    for (const auto& e : a)
      if (!target.count(Edge(perm[e.u], perm[e.v]))) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<std::size_t> rooted_counts(std::size_t max_order) {
  // Trees as parent arrays, root 0.
  std::vector<std::size_t> counts;
  std::vector<std::vector<int>> level{{-1}};
  for (std::size_t order = 1; order <= max_order; ++order) {
    std::map<std::string, std::vector<int>> distinct;
    for (const auto& parent : level) {
      std::vector<Edge> edges;
      for (std::size_t i = 1; i < parent.size(); ++i) edges.emplace_back(parent[i], i);
      distinct.emplace(rooted(adjacency(parent.size(), edges), 0, -1), parent);
    }
    counts.push_back(distinct.size());
    std::vector<std::vector<int>> next;
    for (const auto& [code, parent] : distinct)
      for (std::size_t v = 0; v < parent.size(); ++v) {
        auto grown = parent;
        grown.push_back(static_cast<int>(v));
        next.push_back(grown);
      }
    level = std::move(next);
  }
  return counts;
}

std::vector<std::size_t> star_degrees(const Forest& f) {
  std::vector<Edge> edges(f.edges().begin(), f.edges().end());
  const auto adj = adjacency(f.order(), edges);
  std::vector<char> seen(f.order(), 0);
  std::vector<std::size_t> out;
  for (Vertex v = 0; v < f.order(); ++v) {
    if (seen[v]) continue;
    std::vector<Vertex> comp{v};
    seen[v] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : adj[comp[i]])
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::size_t hub = 0;
    for (Vertex x : comp) hub = std::max(hub, adj[x].size());
    if (hub + 1 != comp.size() && comp.size() > 1) throw std::invalid_argument("not a star forest");
    out.push_back(comp.size() - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace brute
