#include "forestlcs/stars.hpp"

#include <algorithm>
#include <string>

#include "forestlcs/error.hpp"

namespace forestlcs {

namespace {

struct Star {
  Vertex center;
  std::vector<Vertex> leaves;
};

std::optional<Star> as_star(const Forest& f, const Component& c) {
  const std::size_t edges = c.order() - 1;
  for (Vertex v : c.vertices) {
    if (f.degree(v) != edges) continue;
    Star s{v, {}};
    for (Vertex w : f.neighbors(v)) s.leaves.push_back(w);
    return s;
  }
  return std::nullopt;
}

// Stars sorted by edge count, ties by smallest vertex.
std::vector<Star> stars_of(const Forest& f) {
  std::vector<std::pair<std::size_t, Star>> keyed;
  for (const auto& c : components(f)) {
    auto s = as_star(f, c);
    if (!s)
      throw PreconditionError("component containing vertex " + std::to_string(c.min_vertex()) + " is not a star");
    keyed.emplace_back(c.min_vertex(), std::move(*s));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    return std::make_pair(x.second.leaves.size(), x.first) < std::make_pair(y.second.leaves.size(), y.first);
  });
  std::vector<Star> out;
  for (auto& [key, s] : keyed) out.push_back(std::move(s));
  return out;
}

}  // namespace

StarSequence::StarSequence(std::vector<std::size_t> degrees) : degrees_(std::move(degrees)) {
  std::sort(degrees_.begin(), degrees_.end());
}

bool is_star_forest(const Forest& f) {
  for (const auto& c : components(f))
    if (!as_star(f, c)) return false;
  return true;
}

StarSequence star_sequence_of(const Forest& f) {
  std::vector<std::size_t> degrees;
  for (const auto& s : stars_of(f)) degrees.push_back(s.leaves.size());
  return StarSequence(std::move(degrees));
}

StarPairing lcs_stars(const StarSequence& a, const StarSequence& b) {
  const std::size_t len = std::max(a.length(), b.length());
  const std::size_t pad_a = len - a.length();
  const std::size_t pad_b = len - b.length();
  StarPairing out;
  for (std::size_t k = 0; k < len; ++k) {
    if (k < pad_a || k < pad_b) continue;  // a padded zero contributes nothing
    const std::size_t i = k - pad_a;
    const std::size_t j = k - pad_b;
    out.size += std::min(a[i], b[j]);
    out.pairing.emplace_back(i, j);
  }
  return out;
}

LcsResult lcs_star_forests(const Forest& f1, const Forest& f2) {
  const auto s1 = stars_of(f1);
  const auto s2 = stars_of(f2);
  std::vector<std::size_t> d1, d2;
  for (const auto& s : s1) d1.push_back(s.leaves.size());
  for (const auto& s : s2) d2.push_back(s.leaves.size());
  const auto pairing = lcs_stars(StarSequence(d1), StarSequence(d2));

  Certificate cert;
  for (const auto& [i, j] : pairing.pairing) {
    const std::size_t k = std::min(d1[i], d2[j]);
    if (k == 0) continue;
    const Star& a = s1[i];
    const Star& b = s2[j];
    cert.vertex_map.emplace_back(a.center, b.center);
    for (std::size_t t = 0; t < k; ++t) {
      cert.vertex_map.emplace_back(a.leaves[t], b.leaves[t]);
      cert.edges1.emplace_back(a.center, a.leaves[t]);
      cert.edges2.emplace_back(b.center, b.leaves[t]);
    }
  }
  cert.normalize();
  LcsResult result;
  result.size = verify_certificate(f1, f2, cert);
  result.certificate = std::move(cert);
  return result;
}

}  // namespace forestlcs
