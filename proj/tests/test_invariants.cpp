#include <doctest.h>

#include <algorithm>

#include "dit/enumerate.hpp"
#include "dit/error.hpp"
#include "dit/families.hpp"
#include "dit/invariants.hpp"
#include "oracles.hpp"

using namespace dit;

namespace {

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("rational arithmetic") {
    CHECK(Rat(6, 8) == Rat(3, 4));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(-1, 2).den() == 2);
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(1, 3) * Rat(3, 7) == Rat(1, 7));
    CHECK(Rat(2, 3) / Rat(4, 9) == Rat(3, 2));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-5, 2) < Rat(-2));
    CHECK(Rat(5).to_fraction() == "5/1");
    CHECK(Rat(-3, 4).to_fraction() == "-3/4");
    CHECK(Rat::parse("-6/8") == Rat(-3, 4));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK_THROWS_AS(Rat(1, 0), ArithmeticError);
    CHECK_THROWS_AS(Rat(1) / Rat(0), ArithmeticError);
    CHECK_THROWS(Rat::parse("1/x"));
  }

  TEST_CASE("profile of P4 and C4") {
    const auto p = invariant_profile(make_path(4));
    CHECK(p.radius == 2);
    CHECK(p.diameter == 3);
    CHECK(p.avg_ecc == Rat(5, 2));
    CHECK(p.proximity == Rat(4, 3));
    CHECK(p.remoteness == Rat(2));
    CHECK(p.avg_distance == Rat(5, 3));

    const auto c = invariant_profile(make_cycle(4));
    CHECK(c.proximity == Rat(4, 3));
    CHECK(c.remoteness == Rat(4, 3));
    CHECK(c.avg_distance == Rat(4, 3));
    CHECK(c.radius == 2);
    CHECK(c.diameter == 2);
    CHECK(c.avg_ecc == Rat(2));
  }

  TEST_CASE("profile examples from closed forms") {
    CHECK(invariant_profile(make_path(5)).proximity == Rat(3, 2));
    const auto s = invariant_profile(make_spider4(1));
    CHECK(s.avg_distance == Rat(8, 5));
    CHECK(s.proximity == Rat(1));
  }

  TEST_CASE("degenerate orders") {
    CHECK_THROWS_AS(invariant_profile(Graph(1, {})), InputError);
    const auto p = invariant_profile(make_path(2));
    CHECK(p.proximity == Rat(1));
    CHECK(p.remoteness == Rat(1));
    CHECK(p.avg_distance == Rat(1));
    CHECK(p.radius == 1);
    CHECK(p.diameter == 1);
    CHECK_THROWS_AS(invariant_profile(Graph(4, {{0, 1}, {2, 3}})), GraphClassError);
  }

  TEST_CASE("centroid") {
    CHECK(centroid(make_path(4)) == std::vector<Vertex>{1, 2});
    CHECK(edge_split(make_path(4), 1, 2).n_u == 2);
    CHECK(centroid(star(3)) == std::vector<Vertex>{0});
    CHECK(centroid(make_path(5)) == std::vector<Vertex>{2});
  }

  TEST_CASE("center") {
    CHECK(center_set(make_path(5)) == std::vector<Vertex>{2});
    CHECK(center_set(make_path(6)) == std::vector<Vertex>{2, 3});
    CHECK(center_set(make_broom(6)) == std::vector<Vertex>{2});
  }

  TEST_CASE("diametric decomposition") {
    const auto p5 = diametric_decomposition(make_path(5));
    CHECK(p5.path == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(std::all_of(p5.component_sizes.begin(), p5.component_sizes.end(), [](int s) { return s == 0; }));

    const auto b = diametric_decomposition(make_broom(6));
    CHECK(b.path == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(b.component_sizes[2] == 1);

    const std::vector<int> legs{2, 2, 2};
    const auto s = diametric_decomposition(make_spider(legs));
    CHECK(s.diameter() == 4);
    CHECK(s.path[2] == 0);
    CHECK(s.component_sizes[2] == 2);
    int off_path = 0;
    for (int size : s.component_sizes) off_path += size;
    CHECK(off_path == 2);

    CHECK_THROWS_AS(diametric_decomposition(make_cycle(5)), GraphClassError);
  }

  TEST_CASE("centroid characterizations agree on every tree up to 12 vertices") {
    for (int n = 2; n <= 12; ++n)
      for (const auto& t : free_trees(n)) {
        const auto by_split = centroid(t);
        REQUIRE(by_split == centroid_by_transmission(t));
        REQUIRE(by_split == invariant_profile(t).centroids);
        REQUIRE((by_split.size() == 1 || by_split.size() == 2));
        if (by_split.size() == 2) {
          REQUIRE(t.has_edge(by_split[0], by_split[1]));
          const auto sp = edge_split(t, by_split[0], by_split[1]);
          REQUIRE(2 * sp.n_u == n);
        }
        if (n >= 3)
          for (Vertex leaf : t.leaves()) REQUIRE(std::find(by_split.begin(), by_split.end(), leaf) == by_split.end());
      }
  }

  TEST_CASE("profile relations on every connected graph up to 7 vertices") {
    for (int n = 2; n <= 7; ++n)
      for (const auto& g : connected_graphs(n)) {
        const auto p = invariant_profile(g);
        REQUIRE(p.proximity <= p.avg_distance);
        REQUIRE(p.avg_distance <= p.remoteness);
        REQUIRE(p.radius <= p.diameter);
        REQUIRE(p.diameter <= 2 * p.radius);
        // direct evaluation from the Floyd-Warshall matrix
        const auto d = oracle::floyd_warshall(n, oracle::edges_of(g));
        long total = 0;
        int max_row = 0;
        int min_row = 1 << 30;
        for (int u = 0; u < n; ++u) {
          int row = 0;
          for (int v = 0; v < n; ++v) row += d[u][v];
          total += row;
          max_row = std::max(max_row, row);
          min_row = std::min(min_row, row);
        }
        REQUIRE(p.avg_distance == Rat(total, static_cast<long>(n) * (n - 1)));
        REQUIRE(p.remoteness == Rat(max_row, n - 1));
        REQUIRE(p.proximity == Rat(min_row, n - 1));
      }
  }

  TEST_CASE("diametric path realizes the diameter") {
    for (int n = 2; n <= 11; ++n)
      for (const auto& t : free_trees(n)) {
        const auto d = diametric_decomposition(t);
        const auto p = invariant_profile(t);
        REQUIRE(d.diameter() == p.diameter);
        REQUIRE(p.ecc_of[d.path.front()] == p.diameter);
        REQUIRE(p.ecc_of[d.path.back()] == p.diameter);
        int sum = d.diameter() + 1;
        for (int s : d.component_sizes) sum += s;
        REQUIRE(sum == n);
      }
  }
}
