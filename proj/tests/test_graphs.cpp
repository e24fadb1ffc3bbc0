#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "prepcode/construct.hpp"
#include "prepcode/errors.hpp"
#include "prepcode/graph.hpp"
#include "prepcode/isometry.hpp"

using namespace prepcode;

namespace {

Graph from_edges(std::size_t v, std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> edges) {
  Graph g(v);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

std::vector<std::uint32_t> random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Graph petersen() {
  Graph g(10);
  for (std::uint32_t k = 0; k < 5; ++k) {
    g.add_edge(k, (k + 1) % 5);
    g.add_edge(k, k + 5);
    g.add_edge(k + 5, (k + 2) % 5 + 5);
  }
  return g;
}

}  // namespace

TEST_CASE("graph basics") {
  const Graph g = from_edges(3, {{0, 1}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_FALSE(g.regular_degree());
  CHECK(from_edges(3, {{0, 1}, {1, 2}, {0, 2}}).regular_degree() == 2);
  CHECK_THROWS_AS(Graph(kernels::Adjacency{{1}, {}}), InputError);
  const std::vector<std::uint32_t> perm{2, 0, 1};
  const Graph r = g.relabeled(perm);
  CHECK(r.adjacent(2, 0));
  CHECK(r.adjacent(0, 1));
  CHECK_FALSE(r.adjacent(2, 1));
}

TEST_CASE("minimal distance graphs") {
  const MinDistGraph p15 = build_mdg(build_punctured_preparata());
  CHECK(p15.graph.size() == 256);
  CHECK(p15.distance == 5);
  CHECK(p15.graph.regular_degree() == 42);
  const MinDistGraph p16 = build_mdg(build_extended_preparata(3));
  CHECK(p16.graph.regular_degree() == 112);
  const Code two(8, {BinaryWord::zeros(8), BinaryWord::from_string("01101000")});
  const MinDistGraph g2 = build_mdg(two);
  CHECK(g2.distance == 3);
  CHECK(g2.graph.edge_count() == 1);
  CHECK_THROWS_AS(build_mdg(Code(8, {BinaryWord::zeros(8)})), InputError);
}

TEST_CASE("color refinement") {
  const Graph tri = from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(color_refinement(tri, Coloring::uniform(3)).classes() == 1);
  const Coloring path = color_refinement(from_edges(3, {{0, 1}, {1, 2}}), Coloring::uniform(3));
  CHECK(path.classes() == 2);
  CHECK(path.color[0] == path.color[2]);
  CHECK(path.color[0] != path.color[1]);
  const Graph g = build_mdg(build_punctured_preparata()).graph;
  const Coloring once = color_refinement(g, Coloring::uniform(g.size()));
  CHECK(color_refinement(g, once).color == once.color);
  const std::vector<long> labels{5, -1, 5};
  const Coloring c = Coloring::from_labels(labels);
  CHECK(c.color == std::vector<int>{1, 0, 1});
}

TEST_CASE("certificates distinguish small graphs") {
  const auto tri = canonical_form(from_edges(3, {{0, 1}, {1, 2}, {0, 2}}));
  const auto path = canonical_form(from_edges(3, {{0, 1}, {1, 2}}));
  CHECK(tri.certificate != path.certificate);
  const Graph c6 = from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const Graph two_triangles = from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(canonical_form(c6).certificate != canonical_form(two_triangles).certificate);
  CHECK_FALSE(find_isomorphism(c6, two_triangles));
}

TEST_CASE("certificates are deterministic and labels matter") {
  const Graph g = petersen();
  CHECK(canonical_form(g).certificate == canonical_form(g).certificate);
  std::vector<long> a(10, 0), b(10, 0);
  a[0] = 1;
  b[5] = 1;
  CHECK(canonical_form(g, a).certificate == canonical_form(g, b).certificate);
  b[5] = 2;
  CHECK(canonical_form(g, a).certificate != canonical_form(g, b).certificate);
}

TEST_CASE("100 random relabelings of the n=15 MDG share a certificate") {
  const Graph g = build_mdg(build_punctured_preparata()).graph;
  const auto base = canonical_form(g);
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 100; ++k) {
    const auto perm = random_perm(g.size(), rng);
    const Graph h = g.relabeled(perm);
    REQUIRE(canonical_form(h).certificate == base.certificate);
  }
}

TEST_CASE("canonical labeling yields the same relabeled graph") {
  std::mt19937_64 rng(8);
  const Graph g = petersen();
  const auto perm = random_perm(10, rng);
  const Graph h = g.relabeled(perm);
  const Graph cg = g.relabeled(canonical_form(g).labeling);
  const Graph ch = h.relabeled(canonical_form(h).labeling);
  for (std::uint32_t u = 0; u < 10; ++u) {
    for (std::uint32_t v = 0; v < 10; ++v) CHECK(cg.adjacent(u, v) == ch.adjacent(u, v));
  }
}

TEST_CASE("find isomorphism") {
  const Code c = build_extended_preparata(3);
  const Graph g = build_mdg(c).graph;
  const auto self = find_isomorphism(g, g);
  REQUIRE(self);
  CHECK(is_isomorphism(g, g, *self));

  std::mt19937_64 rng(77);
  const SpaceAutomorphism f = SpaceAutomorphism::random(16, rng);
  const Graph h = build_mdg(apply_automorphism(f, c)).graph;
  const auto iso = find_isomorphism(g, h);
  REQUIRE(iso);
  CHECK(is_isomorphism(g, h, *iso));

  std::vector<BinaryWord> fewer(c.begin() + 1, c.end());
  const Graph smaller = build_mdg(fewer, 6).graph;
  CHECK_FALSE(find_isomorphism(g, smaller));

  CHECK(find_isomorphism(g, build_mdg(build_nr_via_octacode()).graph));
}

TEST_CASE("is_isomorphism rejects bad maps") {
  const Graph path = from_edges(3, {{0, 1}, {1, 2}});
  const std::vector<std::uint32_t> good{2, 1, 0}, bad{1, 0, 2}, not_bijective{0, 0, 1};
  CHECK(is_isomorphism(path, path, good));
  CHECK_FALSE(is_isomorphism(path, path, bad));
  CHECK_FALSE(is_isomorphism(path, path, not_bijective));
}

TEST_CASE("vertex cap") {
  CanonOptions opts;
  opts.vertex_cap = 100;
  CHECK_THROWS_AS(canonical_form(build_mdg(build_punctured_preparata()).graph, {}, opts), CapabilityError);
}

TEST_CASE("DIMACS export") {
  const Code two(8, {BinaryWord::zeros(8), BinaryWord::from_string("01101000")});
  std::ostringstream s;
  write_dimacs(s, build_mdg(two));
  CHECK(s.str() == "p edge 2 1\nc v 1 00\nc v 2 68\ne 1 2\n");
  std::ostringstream big;
  write_dimacs(big, build_mdg(build_extended_preparata(3)));
  CHECK(big.str().rfind("p edge 256 14336\n", 0) == 0);
}
