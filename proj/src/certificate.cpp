#include "forestlcs/certificate.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <unordered_map>

#include "forestlcs/canonical.hpp"
#include "forestlcs/error.hpp"

namespace forestlcs {

namespace {

std::string show(Edge e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

}  // namespace

void Certificate::normalize() {
  std::sort(edges1.begin(), edges1.end());
  std::sort(edges2.begin(), edges2.end());
  std::sort(vertex_map.begin(), vertex_map.end());
}

std::size_t verify_certificate(const Forest& f1, const Forest& f2, const Certificate& c) {
  for (const Edge& e : c.edges1)
    if (e.v >= f1.order() || !f1.has_edge(e))
      throw CertificateError(CertificateErrc::dangling_edge, "edge " + show(e) + " is not an edge of the first forest");
  for (const Edge& e : c.edges2)
    if (e.v >= f2.order() || !f2.has_edge(e))
      throw CertificateError(CertificateErrc::dangling_edge, "edge " + show(e) + " is not an edge of the second forest");
  if (c.edges1.size() != c.edges2.size())
    throw CertificateError(CertificateErrc::size_mismatch, "edge lists differ in length (" +
                                                               std::to_string(c.edges1.size()) + " vs " +
                                                               std::to_string(c.edges2.size()) + ")");

  std::unordered_map<Vertex, Vertex> forward;
  std::unordered_map<Vertex, Vertex> backward;
  for (const auto& [x, y] : c.vertex_map) {
    if (x >= f1.order() || y >= f2.order())
      throw CertificateError(CertificateErrc::domain_mismatch,
                             "map entry " + std::to_string(x) + "->" + std::to_string(y) + " is out of range");
    if (!forward.emplace(x, y).second)
      throw CertificateError(CertificateErrc::not_injective, "vertex " + std::to_string(x) + " is mapped twice");
    if (!backward.emplace(y, x).second)
      throw CertificateError(CertificateErrc::not_injective, "vertex " + std::to_string(y) + " is hit twice");
  }

  std::vector<Vertex> covered;
  for (const Edge& e : c.edges1) {
    covered.push_back(e.u);
    covered.push_back(e.v);
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  if (covered.size() != forward.size())
    throw CertificateError(CertificateErrc::domain_mismatch, "map covers " + std::to_string(forward.size()) +
                                                                 " vertices but edges1 covers " +
                                                                 std::to_string(covered.size()));
  for (Vertex x : covered)
    if (!forward.contains(x))
      throw CertificateError(CertificateErrc::domain_mismatch, "vertex " + std::to_string(x) + " has no image");

  std::vector<Edge> image;
  image.reserve(c.edges1.size());
  for (const Edge& e : c.edges1) image.emplace_back(forward.at(e.u), forward.at(e.v));
  std::sort(image.begin(), image.end());
  std::vector<Edge> target(c.edges2.begin(), c.edges2.end());
  std::sort(target.begin(), target.end());
  if (std::adjacent_find(target.begin(), target.end()) != target.end())
    throw CertificateError(CertificateErrc::edge_image_mismatch, "edges2 lists an edge twice");
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] != target[i]) {
      const Edge bad = std::binary_search(target.begin(), target.end(), image[i]) ? target[i] : image[i];
      throw CertificateError(CertificateErrc::edge_image_mismatch,
                             "edge " + show(bad) + " breaks the correspondence between edges1 and edges2");
    }
  }
  return c.edges1.size();
}

Certificate certificate_from_subforests(const Forest& f1, std::span<const Edge> kept1, const Forest& f2,
                                        std::span<const Edge> kept2) {
  const Forest h1 = f1.edge_subgraph(kept1);
  const Forest h2 = f2.edge_subgraph(kept2);
  auto keyed = [](const Forest& h) {
    std::vector<std::tuple<CanonicalCode, Vertex>> out;
    for (const auto& c : components(h))
      if (c.order() > 1) out.emplace_back(canon_unrooted(h, c), c.min_vertex());
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto a = keyed(h1);
  const auto b = keyed(h2);
  if (a.size() != b.size()) throw PreconditionError("certificate_from_subforests: component counts differ");

  Certificate cert;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::get<0>(a[i]) != std::get<0>(b[i]))
      throw PreconditionError("certificate_from_subforests: subforests are not isomorphic");
    auto pairs = unrooted_isomorphism(h1, std::get<1>(a[i]), h2, std::get<1>(b[i]));
    cert.vertex_map.insert(cert.vertex_map.end(), pairs.begin(), pairs.end());
  }
  cert.edges1.assign(h1.edges().begin(), h1.edges().end());
  cert.edges2.assign(h2.edges().begin(), h2.edges().end());
  cert.normalize();
  return cert;
}

Certificate merge_certificates(const Certificate& a, const Certificate& b) {
  Certificate out = a;
  out.edges1.insert(out.edges1.end(), b.edges1.begin(), b.edges1.end());
  out.edges2.insert(out.edges2.end(), b.edges2.begin(), b.edges2.end());
  out.vertex_map.insert(out.vertex_map.end(), b.vertex_map.begin(), b.vertex_map.end());
  out.normalize();
  return out;
}

}  // namespace forestlcs
