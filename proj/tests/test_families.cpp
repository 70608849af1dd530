#include <doctest.h>

#include <algorithm>

#include "dit/error.hpp"
#include "dit/families.hpp"
#include "dit/invariants.hpp"
#include "dit/transforms.hpp"

using namespace dit;

TEST_SUITE("families") {
  TEST_CASE("path") {
    CHECK(make_path(1).order() == 1);
    const auto p4 = make_path(4);
    CHECK(p4.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(invariant_profile(make_path(5)).proximity == Rat(3, 2));
    CHECK_THROWS_AS(make_path(0), InputError);
  }

  TEST_CASE("cycle") {
    const auto c3 = make_cycle(3);
    CHECK(c3.size() == 3);
    CHECK(c3.has_edge(0, 2));
    CHECK(ecc_minus_rho(invariant_profile(make_cycle(6))) == Rat(6, 5));
    const auto c4 = invariant_profile(make_cycle(4));
    CHECK(c4.proximity == Rat(4, 3));
    CHECK(c4.remoteness == Rat(4, 3));
    CHECK_THROWS_AS(make_cycle(2), InputError);
  }

  TEST_CASE("spider3") {
    CHECK(spider_legs(make_spider3(4)) == std::vector<int>{1, 1, 1});
    const auto p7 = invariant_profile(make_spider3(7));
    CHECK(p7.avg_distance == Rat(16, 7));
    CHECK(p7.proximity == Rat(3, 2));
    CHECK(lbar_minus_pi(p7) == Rat(11, 14));
    auto legs = *spider_legs(make_spider3(8));
    std::sort(legs.rbegin(), legs.rend());
    CHECK(legs == std::vector<int>{3, 2, 2});
    CHECK_THROWS_AS(make_spider3(3), InputError);
    for (int n = 4; n <= 40; ++n) {
      auto got = *spider_legs(make_spider3(n));
      auto want = balanced_partition(n - 1, 3);
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      REQUIRE(got == want);
      REQUIRE(want.back() - want.front() <= 1);
    }
  }

  TEST_CASE("spider4") {
    const auto k1 = invariant_profile(make_spider4(1));
    CHECK(k1.avg_distance == Rat(8, 5));
    CHECK(k1.avg_distance == closed_form("lbar_spider4", 5));
    CHECK(k1.proximity == Rat(1));
    CHECK(k1.proximity == closed_form("pi_spider4", 5));
    const auto k2 = make_spider4(2);
    CHECK(k2.order() == 9);
    CHECK(spider_legs(k2) == std::vector<int>{2, 2, 2, 2});
    CHECK_THROWS_AS(make_spider4(0), InputError);
  }

  TEST_CASE("broom") {
    const auto b6 = make_broom(6);
    CHECK(b6.has_edge(2, 5));
    CHECK(rho_minus_r(invariant_profile(b6)) == Rat(3, 5));
    const auto b4 = make_broom(4);
    CHECK(b4.degree(1) == 3);
    CHECK(rho_minus_r(invariant_profile(make_broom(8))) == Rat(4, 7));
    CHECK_THROWS_AS(make_broom(3), InputError);
  }

  TEST_CASE("crossed cycle") {
    const auto c5 = make_crossed_cycle(5);
    CHECK(c5.size() == 7);
    CHECK(c5.has_edge(0, 2));
    CHECK(c5.has_edge(1, 3));
    const auto p5 = invariant_profile(c5);
    CHECK(p5.remoteness == Rat(3, 2));
    CHECK(p5.radius == 2);
    CHECK(rho_minus_r(p5) == Rat(-1, 2));
    CHECK(rho_minus_r(invariant_profile(make_crossed_cycle(7))) == Rat(-1));
    CHECK_THROWS_AS(make_crossed_cycle(4), InputError);
  }

  TEST_CASE("closed form values") {
    CHECK(closed_form("con2_bound", 6) == Rat(6, 5));
    CHECK(closed_form("ecc_minus_rho_path", 5) == Rat(7, 10));
    CHECK(closed_form("con3_bound", 5) == Rat(-1, 2));
    CHECK_THROWS_AS(closed_form("pi_path_odd", 4), InputError);
    CHECK_THROWS_AS(closed_form("lbar_spider4", 6), InputError);
    CHECK_THROWS_AS(closed_form("no_such_form", 6), InputError);
  }

  TEST_CASE("cycle identities against the conjecture bounds") {
    for (int n = 4; n <= 20; n += 2) {
      const auto p = invariant_profile(make_cycle(n));
      REQUIRE(ecc_minus_rho(p) == closed_form("con2_bound", n));
      REQUIRE(ecc_minus_rho(p) == Rat(n * (n - 2), 4 * (n - 1)));
      REQUIRE(rho_minus_r(p) == closed_form("con3_bound", n));
    }
    for (int n = 5; n <= 15; n += 2)
      REQUIRE(rho_minus_r(invariant_profile(make_crossed_cycle(n))) == Rat(3 - n, 4));
  }

  TEST_CASE("odd cycle and odd path under the second bound") {
    for (int n = 5; n <= 15; n += 2) {
      REQUIRE(ecc_minus_rho(invariant_profile(make_cycle(n))) == Rat(n - 3, 4));
      REQUIRE(ecc_minus_rho(invariant_profile(make_path(n))) == closed_form("con2_bound", n));
      REQUIRE(closed_form("con2_bound", n) == Rat(n * n - 2 * n - 1, 4 * n));
    }
  }

  TEST_CASE("registry entries with a domain match their families up to n = 30 except where noted") {
    // Full registry sweep runs in the acceptance binary; here the entries that hold everywhere.
    for (const auto& cf : closed_form_registry()) {
      if (cf.measured == nullptr || cf.id == "lbar_spider4") continue;
      for (int n = cf.min_n; n <= 30; ++n) {
        if (!parity_admits(cf.parity, n)) continue;
        const auto p = invariant_profile(make_family(cf.family, n));
        INFO(cf.id, " n=", n);
        REQUIRE(cf.measured(p) == cf.formula(n));
      }
    }
  }

  TEST_CASE("spider4 average distance") {
    // (3n^2 + 10n + 3)/(16n) holds for k = 1 only; the exact value is (5n^2 + 14n - 3)/(24n).
    for (int k = 1; k <= 7; ++k) {
      const int n = 4 * k + 1;
      const auto p = invariant_profile(make_spider4(k));
      REQUIRE(p.avg_distance == Rat(5 * n * n + 14 * n - 3, 24 * n));
      REQUIRE(p.proximity == Rat(n + 3, 8));
    }
  }

  TEST_CASE("random trees") {
    for (int n = 1; n <= 20; ++n) {
      const auto t = make_random_tree(n, 42);
      REQUIRE(t.order() == n);
      REQUIRE(is_tree(t));
      REQUIRE(make_random_tree(n, 42) == t);
    }
    CHECK_THROWS_AS(make_family("hexagon", 6), InputError);
  }
}
