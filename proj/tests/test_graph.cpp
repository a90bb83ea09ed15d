#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "sturan/families.hpp"
#include "sturan/graph.hpp"
#include "sturan/harness.hpp"

using namespace sturan;

namespace {

Graph prism() {
  return build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

void check_well_formed(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    CHECK_FALSE(g.has_edge(u, u));
    for (Vertex v = 0; v < g.order(); ++v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
    degree_sum += g.degree(u);
  }
  CHECK(degree_sum == 2 * g.edge_count());
  if (g.order() > 0) {
    CHECK(g.average_degree() == doctest::Approx(2.0 * g.edge_count() / g.order()));
  }
}

}  // namespace

TEST_CASE("building small graphs") {
  auto empty = build_graph(3, {});
  CHECK(empty.edge_count() == 0);
  CHECK(empty.order() == 3);

  auto c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
  CHECK(c4.regular_degree() == 2u);

  CHECK(complete_graph(5).edge_count() == 10);
  CHECK_THROWS_AS(Graph(kMaxVertices + 1), std::length_error);
  CHECK_THROWS_AS(build_graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::out_of_range);
}

TEST_CASE("edge mutation keeps rows symmetric") {
  Graph g(70);
  g.add_edge(3, 66);
  g.add_edge(65, 0);
  CHECK(g.has_edge(66, 3));
  CHECK(g.edge_count() == 2);
  g.toggle_edge(3, 66);
  CHECK_FALSE(g.has_edge(3, 66));
  g.remove_edge(0, 65);
  CHECK(g.edge_count() == 0);
  check_well_formed(g);
}

TEST_CASE("complement") {
  SUBCASE("Turán complement is a union of cliques") {
    // b = 1 copy of K_3 and two copies of K_2.
    auto expected = disjoint_union(disjoint_union(complete_graph(3), complete_graph(2)), complete_graph(2));
    CHECK(is_isomorphic(complement(turan_graph(7, 3)), expected));
  }
  CHECK(complement(Graph(4)) == complete_graph(4));
  CHECK(is_isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
  CHECK(oracle::isomorphic(complement(cycle_graph(5)), cycle_graph(5)));

  SUBCASE("involution on every graph with up to 5 vertices") {
    for (std::size_t n = 0; n <= 5; ++n) {
      for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
        auto g = labeled_graph(n, mask);
        REQUIRE(complement(complement(g)) == g);
      }
    }
  }
}

TEST_CASE("complement involution on all 7-vertex graphs") {
  std::size_t checked = 0;
  enumerate_labeled_graphs(7, [&](const Graph& g) {
    if (complement(complement(g)) != g) FAIL("complement is not an involution");
    ++checked;
  });
  CHECK(checked == (1u << 21));
}

TEST_CASE("joins") {
  const std::size_t k23[] = {2, 3};
  CHECK(is_isomorphic(join(Graph(2), Graph(3)), complete_multipartite(k23)));

  auto wheel = join(Graph(1), cycle_graph(4));
  std::vector<std::size_t> degrees = wheel.degrees();
  CHECK(degrees == std::vector<std::size_t>{4, 3, 3, 3, 3});

  const std::size_t k33[] = {3, 3};
  CHECK(is_isomorphic(join(Graph(2), complete_multipartite(k33)), turan_graph(8, 3)));
  CHECK(oracle::isomorphic(join(Graph(2), complete_multipartite(k33)), turan_graph(8, 3)));

  SUBCASE("edge count of random joins") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      auto a = oracle::random_gnp(rng() % 9, 0.4, rng);
      auto b = oracle::random_gnp(rng() % 9, 0.6, rng);
      auto j = join(a, b);
      CHECK(j.edge_count() == a.edge_count() + b.edge_count() + a.order() * b.order());
      check_well_formed(j);
    }
  }
}

TEST_CASE("k-fold joins") {
  CHECK(is_isomorphic(k_fold_join(Graph(2), 2), cycle_graph(4)));
  CHECK(k_fold_join(complete_graph(2), 2) == complete_graph(4));
  for (std::size_t a = 1; a <= 3; ++a) {
    for (std::size_t r = 1; r <= 4; ++r) {
      CHECK(is_isomorphic(k_fold_join(Graph(a), r), turan_graph(r * a, r)));
    }
  }

  SUBCASE("edge and degree formulas for n <= 6, k <= 4") {
    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n <= 6; ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        auto g = oracle::random_gnp(n, 0.5, rng);
        for (std::size_t k = 1; k <= 4; ++k) {
          auto h = k_fold_join(g, k);
          CHECK(h.edge_count() == k * g.edge_count() + k * (k - 1) / 2 * n * n);
          for (std::size_t copy = 0; copy < k; ++copy) {
            for (Vertex v = 0; v < n; ++v) {
              CHECK(h.degree(copy * n + v) == g.degree(v) + (k - 1) * n);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("induced neighbourhoods") {
  for (Vertex v = 0; v < 4; ++v) CHECK(induced_neighborhood(complete_graph(4), v).graph == complete_graph(3));
  for (Vertex v = 0; v < 6; ++v) {
    auto sub = induced_neighborhood(prism(), v);
    CHECK(sub.graph.order() == 3);
    CHECK(sub.graph.edge_count() == 1);
  }
  for (Vertex v = 0; v < 5; ++v) CHECK(induced_neighborhood(cycle_graph(5), v).graph == Graph(2));

  auto sub = induced_neighborhood(path_graph(4), 1);
  CHECK(sub.vertices == std::vector<Vertex>{0, 2});
}

TEST_CASE("vertex sets") {
  VertexSet s(130);
  s.insert(0);
  s.insert(64);
  s.insert(129);
  CHECK(s.size() == 3);
  CHECK(s.first() == Vertex{0});
  auto t = VertexSet::full(130) - s;
  CHECK(t.size() == 127);
  CHECK((t & s).empty());
  CHECK((t | s) == VertexSet::full(130));
  CHECK(s.to_vector() == std::vector<Vertex>{0, 64, 129});
}

TEST_CASE("edges within and between sets") {
  auto g = prism();
  VertexSet tri(6);
  for (Vertex v : {0, 1, 2}) tri.insert(v);
  CHECK(edges_within(g, tri) == 3);
  CHECK(edges_between(g, tri, VertexSet::full(6) - tri) == 3);
  CHECK(connected_components(disjoint_union(complete_graph(3), complete_graph(2))).size() == 2);
}

TEST_CASE("clique number") {
  CHECK(clique_number(complete_graph(5)) == 5);
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(clique_number(prism()) == 3);
  CHECK(oracle::clique_number(prism()) == 3);
  CHECK(clique_number(Graph(4)) == 1);
  CHECK(clique_number(Graph(0)) == 0);

  SUBCASE("agrees with subset scan for n <= 8") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t n = 1 + rng() % 8;
      const double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
      auto g = oracle::random_gnp(n, p, rng);
      REQUIRE(clique_number(g) == oracle::clique_number(g));
      const std::size_t omega = oracle::clique_number(g);
      CHECK(has_clique(g, VertexSet::full(n), omega));
      CHECK_FALSE(has_clique(g, VertexSet::full(n), omega + 1));
    }
  }
}

TEST_CASE("isomorphism") {
  const std::size_t k22[] = {2, 2};
  CHECK(is_isomorphic(cycle_graph(4), complete_multipartite(k22)));
  const std::size_t k33[] = {3, 3};
  CHECK_FALSE(is_isomorphic(prism(), complete_multipartite(k33)));

  auto p4 = path_graph(4);
  auto relabelled = build_graph(4, {{2, 0}, {0, 3}, {3, 1}});
  CHECK(is_isomorphic(p4, relabelled));

  SUBCASE("reflexive and relabeling invariant for n <= 8") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 1 + rng() % 8;
      auto g = oracle::random_gnp(n, 0.5, rng);
      CHECK(is_isomorphic(g, g));
      CHECK(is_isomorphic(g, oracle::relabel(g, oracle::random_permutation(n, rng))));
    }
  }

  SUBCASE("agrees with permutation search on random pairs with equal degrees") {
    std::mt19937_64 rng(23);
    int agreements = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 4 + rng() % 4;
      auto a = oracle::random_gnp(n, 0.5, rng);
      auto b = oracle::random_gnp(n, 0.5, rng);
      if (a.edge_count() != b.edge_count()) continue;
      REQUIRE(is_isomorphic(a, b) == oracle::isomorphic(a, b));
      ++agreements;
    }
    CHECK(agreements > 20);
  }

  SUBCASE("regular graphs that colour refinement cannot split") {
    // C_6 and two triangles are both 2-regular on 6 vertices.
    CHECK_FALSE(is_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))));
    CHECK(is_isomorphic(cycle_graph(6), oracle::relabel(cycle_graph(6), {3, 1, 5, 0, 2, 4})));
  }
}

TEST_CASE("standard constructions") {
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(star_graph(3).degree(0) == 3);
  const std::size_t parts[] = {3, 2, 2};
  auto t = complete_multipartite(parts);
  CHECK(t.edge_count() == 16);
  CHECK(oracle::multipartite_edges({3, 2, 2}) == 16);
  CHECK_THROWS(cycle_graph(2));
}
