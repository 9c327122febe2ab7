#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "forestlcs/canonical.hpp"
#include "forestlcs/certificate.hpp"
#include "forestlcs/error.hpp"
#include "forestlcs/exact.hpp"
#include "forestlcs/generate.hpp"
#include "forestlcs/io.hpp"
#include "support/brute.hpp"
#include "support/corpus.hpp"
#include "support/shapes.hpp"

using namespace forestlcs;
using shapes::make;

namespace {

std::vector<Vertex> shuffled(Rng& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return perm;
}

ParseErrc parse_error_of(const std::string& text) {
  try {
    parse_forest(text);
  } catch (const ParseError& e) {
    return e.code();
  }
  FAIL("no parse error for: " << text);
  return ParseErrc::malformed;
}

CertificateErrc cert_error_of(const Forest& a, const Forest& b, const Certificate& c) {
  try {
    verify_certificate(a, b, c);
  } catch (const CertificateError& e) {
    return e.code();
  }
  FAIL("certificate accepted");
  return CertificateErrc::malformed;
}

// Definition-level check of a certificate, written independently of the library.
bool certificate_ok(const Forest& a, const Forest& b, const Certificate& c) {
  if (c.edges1.size() != c.edges2.size()) return false;
  for (const auto& e : c.edges1)
    if (!a.has_edge(e)) return false;
  for (const auto& e : c.edges2)
    if (!b.has_edge(e)) return false;
  std::map<Vertex, Vertex> map;
  std::set<Vertex> images;
  for (auto [x, y] : c.vertex_map) {
    if (!map.emplace(x, y).second || !images.insert(y).second) return false;
  }
  std::set<Vertex> covered;
  for (const auto& e : c.edges1) covered.insert({e.u, e.v});
  if (covered.size() != map.size()) return false;
  for (Vertex v : covered)
    if (!map.count(v)) return false;
  std::set<Edge> image;
  for (const auto& e : c.edges1) image.insert(Edge(map[e.u], map[e.v]));
  return image == std::set<Edge>(c.edges2.begin(), c.edges2.end()) && image.size() == c.edges2.size();
}

}  // namespace

TEST_CASE("parse_forest examples") {
  const Forest p3 = parse_forest("3\n0 1\n1 2");
  CHECK(p3.order() == 3);
  CHECK(p3.size() == 2);
  CHECK(p3 == make(3, {{0, 1}, {1, 2}}));

  const Forest one = parse_forest("1");
  CHECK(one.order() == 1);
  CHECK(one.size() == 0);

  CHECK(parse_error_of("3\n0 1\n1 2\n0 2") == ParseErrc::cycle);
}

TEST_CASE("parse_forest errors name the line") {
  CHECK(parse_error_of("") == ParseErrc::missing_header);
  CHECK(parse_error_of("# only a comment\n") == ParseErrc::missing_header);
  CHECK(parse_error_of("3\n0 x\n") == ParseErrc::malformed);
  CHECK(parse_error_of("3\n0 1 2\n") == ParseErrc::malformed);
  CHECK(parse_error_of("3\n0 3\n") == ParseErrc::vertex_out_of_range);
  CHECK(parse_error_of("3\n1 1\n") == ParseErrc::self_loop);
  CHECK(parse_error_of("3\n0 1\n1 0\n") == ParseErrc::duplicate_edge);
  try {
    parse_forest("# header\n4\n0 1\n\n1 2\n2 0\n");
    FAIL("cycle accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
    CHECK(std::string(e.what()).rfind("line 6:", 0) == 0);
  }
}

TEST_CASE("comments and blank lines are skipped") {
  CHECK(parse_forest("# a\n\n2\n# b\n0 1\n\n") == make(2, {{0, 1}}));
}

TEST_CASE("forest constructor validates") {
  CHECK_THROWS_AS(Forest(2, {Edge(0, 0)}), ForestError);
  CHECK_THROWS_AS(Forest(2, {Edge(0, 2)}), ForestError);
  CHECK_THROWS_AS(Forest(3, {Edge(0, 1), Edge(1, 0)}), ForestError);
  CHECK_THROWS_AS(Forest(3, {Edge(0, 1), Edge(1, 2), Edge(0, 2)}), ForestError);
}

TEST_CASE("serialization round-trips") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Forest f = random_forest(rng, rng.between(1, 40), rng.between(1, 10));
    CHECK(parse_forest(serialize_forest(f)) == f);
  }
  CHECK(serialize_forest(make(3, {{2, 1}, {0, 1}})) == "3\n0 1\n1 2\n");
}

TEST_CASE("components examples") {
  const auto two = components(shapes::paths({3, 2}));
  REQUIRE(two.size() == 2);
  CHECK(two[0].order() == 3);
  CHECK(two[1].order() == 2);
  CHECK(components(Forest(4)).size() == 4);
  CHECK(components(make(7, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}, {4, 6}})).size() == 1);
}

TEST_CASE("components partition the forest") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const Forest f = random_forest(rng, rng.between(1, 60), rng.between(1, 15));
    const auto comps = components(f);
    std::vector<int> hits(f.order(), 0);
    std::size_t edges = 0;
    for (const auto& c : comps) {
      CHECK(std::is_sorted(c.vertices.begin(), c.vertices.end()));
      for (Vertex v : c.vertices) ++hits[v];
      std::set<Vertex> inside(c.vertices.begin(), c.vertices.end());
      for (const auto& e : f.edges())
        if (inside.count(e.u)) {
          CHECK(inside.count(e.v));
          ++edges;
        }
    }
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    CHECK(edges == f.size());
    for (std::size_t k = 1; k < comps.size(); ++k) CHECK(comps[k - 1].min_vertex() < comps[k].min_vertex());
  }
}

TEST_CASE("canon_rooted examples") {
  const Forest a = make(4, {{0, 1}, {0, 2}, {0, 3}});
  const Forest b = make(4, {{3, 0}, {3, 1}, {3, 2}});
  CHECK(canon_rooted(a, Component{{0, 1, 2, 3}, 0}) == canon_rooted(b, Component{{0, 1, 2, 3}, 3}));

  const Forest p3 = shapes::paths({3});
  CHECK(canon_rooted(p3, Component{{0, 1, 2}, 0}) != canon_rooted(p3, Component{{0, 1, 2}, 1}));
  CHECK_THROWS_AS(canon_rooted(p3, Component{{0, 1, 2}, std::nullopt}), PreconditionError);

  std::set<CanonicalCode> codes;
  for (const auto& t : enumerate_rooted_trees(3)) codes.insert(t.code());
  CHECK(codes.size() == 4);
}

TEST_CASE("canon_unrooted examples") {
  const Forest p4 = shapes::paths({4});
  const Component all{{0, 1, 2, 3}, std::nullopt};
  for (Vertex v = 0; v < 4; ++v) CHECK(unrooted_code(p4, v) == canon_unrooted(p4, all));
  CHECK(canon_unrooted(p4, all) != canon_unrooted(shapes::stars({3}), all));

  std::set<CanonicalCode> codes;
  std::set<std::string> reference;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& edges : brute::labeled_trees(n)) {
      const Forest t(n, edges);
      codes.insert(unrooted_code(t, 0));
      reference.insert(brute::unrooted(brute::adjacency(n, edges), 0));
    }
  CHECK(reference.size() == 5);
  CHECK(codes.size() == 5);
}

TEST_CASE("enumerate_rooted_trees") {
  CHECK(enumerate_rooted_trees(1).size() == 1);
  CHECK(enumerate_rooted_trees(3).size() == 4);
  CHECK(enumerate_rooted_trees(4).size() == 8);

  const auto reference = brute::rooted_counts(8);
  const auto trees = enumerate_rooted_trees(8);
  std::vector<std::size_t> by_order(9, 0);
  std::set<CanonicalCode> codes;
  for (const auto& t : trees) {
    ++by_order[t.order()];
    codes.insert(t.code());
    CHECK(RootedTree::from_code(t.code()).code() == t.code());
  }
  CHECK(codes.size() == trees.size());
  for (std::size_t k = 1; k <= 8; ++k) CHECK(by_order[k] == reference[k - 1]);
  CHECK(trees.back().order() == 1);
  for (std::size_t i = 1; i + 1 < trees.size(); ++i)
    CHECK(std::make_pair(trees[i - 1].order(), trees[i - 1].code()) < std::make_pair(trees[i].order(), trees[i].code()));
}

TEST_CASE("codes are invariant under relabeling") {
  Rng rng(2024);
  for (int round = 0; round < 20; ++round) {
    const std::size_t n = rng.between(1, 12);
    const Forest t = corpus::random_tree(rng, n);
    const Vertex root = static_cast<Vertex>(rng.below(n));
    const auto rooted = rooted_code(t, root);
    const auto unrooted = unrooted_code(t, 0);
    for (int k = 0; k < 50; ++k) {
      const auto perm = shuffled(rng, n);
      const Forest u = shapes::relabel(t, perm);
      CHECK(rooted_code(u, perm[root]) == rooted);
      CHECK(unrooted_code(u, perm[0]) == unrooted);
    }
  }
}

TEST_CASE("unrooted codes separate all trees up to order 8") {
  const std::size_t expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23};
  for (std::size_t n = 1; n <= 8; ++n) {
    std::set<CanonicalCode> codes;
    std::set<std::string> reference;
    const auto trees = brute::labeled_trees(n);
    for (const auto& edges : trees) {
      codes.insert(unrooted_code(Forest(n, edges), 0));
      reference.insert(brute::unrooted(brute::adjacency(n, edges), 0));
    }
    CHECK(codes.size() == reference.size());
    CHECK(codes.size() == expected[n]);
    if (n <= 6) {
      // Class count by pairwise isomorphism testing over all vertex bijections.
      std::vector<std::vector<Edge>> classes;
      for (const auto& edges : trees)
        if (std::none_of(classes.begin(), classes.end(),
                         [&](const auto& rep) { return brute::isomorphic_by_permutation(n, rep, edges); }))
          classes.push_back(edges);
      CHECK(classes.size() == codes.size());
    }
  }
}

TEST_CASE("isomorphisms map edges onto edges") {
  Rng rng(77);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = rng.between(1, 15);
    const Forest t = corpus::random_tree(rng, n);
    const auto perm = shuffled(rng, n);
    const Forest u = shapes::relabel(t, perm);
    const auto iso = unrooted_isomorphism(t, 0, u, perm[0]);
    REQUIRE(iso.size() == n);
    std::map<Vertex, Vertex> m(iso.begin(), iso.end());
    for (const auto& e : t.edges()) CHECK(u.has_edge(Edge(m[e.u], m[e.v])));
  }
}

TEST_CASE("verify_certificate examples") {
  const Forest p3 = shapes::paths({3});
  Certificate id{{Edge(0, 1), Edge(1, 2)}, {Edge(0, 1), Edge(1, 2)}, {{0, 0}, {1, 1}, {2, 2}}};
  CHECK(verify_certificate(p3, p3, id) == 2);
  CHECK(verify_certificate(p3, p3, Certificate{}) == 0);

  const Forest two = shapes::paths({2, 2});
  Certificate wrong{{Edge(0, 1)}, {Edge(0, 1)}, {{0, 0}, {1, 2}}};
  CHECK(cert_error_of(two, two, wrong) == CertificateErrc::edge_image_mismatch);
}

TEST_CASE("verify_certificate error kinds") {
  const Forest p3 = shapes::paths({3});
  CHECK(cert_error_of(p3, p3, {{Edge(0, 2)}, {Edge(0, 1)}, {{0, 0}, {2, 1}}}) == CertificateErrc::dangling_edge);
  CHECK(cert_error_of(p3, p3, {{Edge(0, 1)}, {}, {{0, 0}, {1, 1}}}) == CertificateErrc::size_mismatch);
  CHECK(cert_error_of(p3, p3, {{Edge(0, 1)}, {Edge(0, 1)}, {{0, 0}, {1, 0}}}) == CertificateErrc::not_injective);
  CHECK(cert_error_of(p3, p3, {{Edge(0, 1)}, {Edge(0, 1)}, {{0, 0}}}) == CertificateErrc::domain_mismatch);
  CHECK(cert_error_of(p3, p3, {{Edge(0, 1)}, {Edge(0, 1)}, {{0, 0}, {1, 1}, {2, 2}}}) ==
        CertificateErrc::domain_mismatch);
}

TEST_CASE("verify_certificate agrees with the definition") {
  Rng rng(99);
  int accepted = 0;
  for (int i = 0; i < 400; ++i) {
    const Forest a = corpus::small_forest(rng, 10, 11);
    const Forest b = corpus::small_forest(rng, 10, 11);
    Certificate c = lcs_oracle(a, b).certificate;
    // Perturb one part of a valid witness at random.
    switch (rng.below(5)) {
      case 0: break;
      case 1:
        if (!c.vertex_map.empty()) c.vertex_map[rng.below(c.vertex_map.size())].second = rng.below(b.order());
        break;
      case 2:
        if (!c.edges2.empty()) c.edges2.erase(c.edges2.begin() + rng.below(c.edges2.size()));
        break;
      case 3:
        if (!c.vertex_map.empty()) c.vertex_map.pop_back();
        break;
      default:
        if (b.size() > 0) c.edges2.push_back(b.edges()[rng.below(b.size())]);
        break;
    }
    bool ok = true;
    std::size_t witnessed = c.size();
    try {
      witnessed = verify_certificate(a, b, c);
    } catch (const CertificateError&) {
      ok = false;
    }
    CHECK(witnessed == c.size());
    CHECK(ok == certificate_ok(a, b, c));
    accepted += ok;
  }
  CHECK(accepted > 50);
}

TEST_CASE("certificate JSON round-trips") {
  Certificate c{{Edge(0, 1), Edge(1, 2)}, {Edge(3, 4), Edge(4, 5)}, {{0, 5}, {1, 4}, {2, 3}}};
  const auto text = serialize_certificate(c);
  CHECK(parse_certificate(text) == c);
  CHECK(serialize_certificate(parse_certificate(text)) == text);
  CHECK_THROWS_AS(parse_certificate("{\"edges1\": [[0,1]], \"edges2\": [[0,1]], \"map\": [], \"size\": 2}"),
                  CertificateError);
  CHECK_THROWS_AS(parse_certificate("not json"), CertificateError);
}
