#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dit/canonical.hpp"
#include "dit/enumerate.hpp"
#include "dit/error.hpp"
#include "dit/families.hpp"
#include "dit/graph.hpp"
#include "oracles.hpp"

using namespace dit;

namespace {

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph relabel_randomly(const Graph& g, std::mt19937& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.permuted(perm);
}

}  // namespace

TEST_SUITE("graph-core") {
  TEST_CASE("construction") {
    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.order() == 4);
    CHECK(p4.size() == 3);
    Graph k1(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);
    CHECK_THROWS_AS(Graph(4, {{0, 1}, {0, 1}}), InputError);
    CHECK_THROWS_AS(Graph(4, {{1, 0}, {0, 1}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(Graph(0, {}), InputError);
  }

  TEST_CASE("bfs distances") {
    CHECK(bfs_distances(make_path(4), 0) == std::vector<int>{0, 1, 2, 3});
    CHECK(bfs_distances(make_cycle(4), 0) == std::vector<int>{0, 1, 2, 1});
    CHECK(bfs_distances(star(3), 0) == std::vector<int>{0, 1, 1, 1});
  }

  TEST_CASE("distance matrix") {
    const auto d3 = distance_matrix(make_path(3));
    const int expected[3][3] = {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};
    for (int u = 0; u < 3; ++u)
      for (int v = 0; v < 3; ++v) CHECK(d3(u, v) == expected[u][v]);

    const auto d5 = distance_matrix(make_cycle(5));
    for (int u = 0; u < 5; ++u) {
      std::vector<int> row(d5.row(u).begin(), d5.row(u).end());
      std::sort(row.begin(), row.end());
      CHECK(row == std::vector<int>{0, 1, 1, 2, 2});
    }

    const auto d4 = distance_matrix(make_path(4));
    std::vector<int> sums;
    for (int u = 0; u < 4; ++u) sums.push_back(std::accumulate(d4.row(u).begin(), d4.row(u).end(), 0));
    CHECK(sums == std::vector<int>{6, 4, 4, 6});

    CHECK_THROWS_AS(distance_matrix(Graph(4, {{0, 1}, {2, 3}})), GraphClassError);
  }

  TEST_CASE("distance matrix agrees with Floyd-Warshall and is a metric") {
    for (int n = 2; n <= 8; ++n) {
      const auto graphs = n <= 7 ? connected_graphs(n) : connected_graphs(n, {1, true});
      for (const auto& g : graphs) {
        const auto d = distance_matrix(g);
        const auto f = oracle::floyd_warshall(n, oracle::edges_of(g));
        bool ok = true;
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) {
            ok = ok && d(u, v) == f[u][v] && d(u, v) == d(v, u) && (u != v || d(u, v) == 0);
            for (int w = 0; w < n; ++w) ok = ok && d(u, w) <= d(u, v) + d(v, w);
          }
        REQUIRE(ok);
      }
    }
  }

  TEST_CASE("tree predicates") {
    CHECK(is_tree(make_path(7)));
    CHECK_FALSE(is_tree(make_cycle(6)));
    CHECK_FALSE(is_tree(Graph(4, {{0, 1}, {2, 3}})));
    CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
    CHECK(is_caterpillar(make_broom(6)));
    const std::vector<int> legs{2, 2, 2};
    CHECK_FALSE(is_caterpillar(make_spider(legs)));
  }

  TEST_CASE("edge split") {
    const auto p4 = make_path(4);
    auto mid = edge_split(p4, 1, 2);
    CHECK(mid.n_u == 2);
    CHECK(mid.n_v == 2);
    auto end = edge_split(p4, 0, 1);
    CHECK(end.n_u == 1);
    CHECK(end.n_v == 3);
    const auto s = star(3);
    for (int leaf = 1; leaf <= 3; ++leaf) {
      auto sp = edge_split(s, 0, leaf);
      CHECK(std::min(sp.n_u, sp.n_v) == 1);
      CHECK(std::max(sp.n_u, sp.n_v) == 3);
    }
    CHECK_THROWS_AS(edge_split(p4, 0, 2), InputError);
  }

  TEST_CASE("canonical codes") {
    Graph a(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph b(4, {{2, 0}, {0, 3}, {3, 1}});
    CHECK(canonical_code(a) == canonical_code(b));
    CHECK(canonical_code(a) != canonical_code(star(3)));

    const std::vector<int> legs{2, 2, 3};
    const auto spider = make_spider(legs);
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) CHECK(canonical_code(relabel_randomly(spider, rng)) == canonical_code(spider));
  }

  TEST_CASE("canonical codes separate exactly the isomorphism classes") {
    std::mt19937 rng(11);
    for (int n = 2; n <= 6; ++n) {
      const auto graphs = connected_graphs(n);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto relabeled = relabel_randomly(graphs[i], rng);
        REQUIRE(canonical_code(relabeled) == canonical_code(graphs[i]));
        REQUIRE(oracle::isomorphic(canonical_form(relabeled), graphs[i]));
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
          REQUIRE_FALSE(oracle::isomorphic(graphs[i], graphs[j]));
      }
    }
  }

  TEST_CASE("canonical form of random trees is label independent") {
    std::mt19937 rng(3);
    for (int n = 2; n <= 16; ++n)
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto t = make_random_tree(n, seed);
        const auto r = relabel_randomly(t, rng);
        REQUIRE(canonical_form(r) == canonical_form(t));
        REQUIRE(oracle::tree_key(n, oracle::edges_of(r)) == oracle::tree_key(n, oracle::edges_of(canonical_form(t))));
      }
  }
}
