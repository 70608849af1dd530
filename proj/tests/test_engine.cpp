#include <doctest.h>

#include <random>

#include "dit/canonical.hpp"
#include "dit/error.hpp"
#include "dit/expr.hpp"
#include "dit/families.hpp"
#include "dit/invariants.hpp"
#include "dit/search.hpp"
#include "random_ast.hpp"

using namespace dit;


TEST_SUITE("engine") {
  TEST_CASE("parse") {
    const auto e = parse_expr("avg_distance - proximity");
    REQUIRE(e->kind == ExprKind::Sub);
    CHECK(e->lhs->kind == ExprKind::Var);
    CHECK(e->lhs->var == Variable::AvgDistance);
    CHECK(e->rhs->var == Variable::Proximity);

    try {
      parse_expr("ecc_typo");
      FAIL("expected a parse error");
    } catch (const ParseError& err) {
      CHECK(err.column() == 1);
    }

    const auto bound = parse_expr("(3*n+1)/4 * (n-1)/n - n/2");
    const auto n = make_var(Variable::N);
    const auto one = make_number(1);
    const auto expected = make_binary(
        ExprKind::Sub,
        make_binary(ExprKind::Div,
                    make_binary(ExprKind::Mul,
                                make_binary(ExprKind::Div,
                                            make_binary(ExprKind::Add, make_binary(ExprKind::Mul, make_number(3), n), one),
                                            make_number(4)),
                                make_binary(ExprKind::Sub, n, one)),
                    n),
        make_binary(ExprKind::Div, n, make_number(2)));
    CHECK(same_structure(bound, expected));
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_expr("avg_ecc +"), ParseError);
    CHECK_THROWS_AS(parse_expr("(n"), ParseError);
    CHECK_THROWS_AS(parse_expr("n / 0"), ParseError);
    CHECK_THROWS_AS(parse_expr("n # 2"), ParseError);
    CHECK_THROWS_AS(parse_expr(""), ParseError);
  }

  TEST_CASE("literals and associativity") {
    CHECK(eval_expr(parse_expr("3/4"), Bindings{}) == Rat(3, 4));
    CHECK(eval_expr(parse_expr("8 - 3 - 2"), Bindings{}) == Rat(3));
    CHECK(eval_expr(parse_expr("- -2 * 3"), Bindings{}) == Rat(6));
    CHECK(eval_expr(parse_expr("1/2/2"), Bindings{}) == Rat(1, 4));
  }

  TEST_CASE("evaluate") {
    const auto p6 = invariant_profile(make_path(6));
    CHECK(eval_expr(parse_expr("avg_ecc - remoteness"), p6) == Rat(1));
    CHECK(eval_expr(parse_expr("remoteness - radius"), invariant_profile(make_path(5))) == Rat(1, 2));
    CHECK(eval_expr(parse_expr("n - n"), invariant_profile(make_cycle(7))) == Rat(0));
    CHECK(eval_expr(parse_expr("m"), invariant_profile(make_crossed_cycle(5))) == Rat(7));
    CHECK_THROWS_AS(eval_expr(parse_expr("1/(n-n)"), p6), ArithmeticError);
    CHECK_THROWS_AS(eval_expr(parse_expr("radius"), bindings_of_order(6)), InputError);
    for (int n = 3; n <= 20; ++n)
      REQUIRE(eval_expr(parse_expr("avg_distance"), invariant_profile(make_path(n))) == Rat(n + 1, 3));
  }

  TEST_CASE("print and parse round trip") {
    std::mt19937 rng(5);
    for (int i = 0; i < 2000; ++i) {
      const auto ast = testgen::random_ast(rng, 5);
      const auto text = print_expr(ast);
      INFO(text);
      REQUIRE(same_structure(parse_expr(text), ast));
    }
  }

  TEST_CASE("search examples") {
    const auto t4 = search_extremal(GraphClass::Tree, 4, parse_expr("avg_distance - proximity"), Direction::Maximize);
    CHECK(t4.extremal_value == Rat(1, 2));
    CHECK(t4.has_witness(canonical_code(make_spider3(4))));
    CHECK(t4.tie_count == 1);
    CHECK(t4.class_size == 2);

    const auto t6 = search_extremal(GraphClass::Tree, 6, parse_expr("avg_ecc - remoteness"), Direction::Maximize);
    CHECK(t6.extremal_value == Rat(1));
    CHECK(t6.has_witness(canonical_code(make_path(6))));

    const auto g5 = search_extremal(GraphClass::Connected, 5, parse_expr("remoteness - radius"), Direction::Minimize);
    CHECK(g5.extremal_value == Rat(-1, 2));
    CHECK(g5.has_witness(canonical_code(make_crossed_cycle(5))));
    CHECK(g5.class_size == 21);
  }

  TEST_CASE("witnesses attain the extremum and are sorted") {
    const auto r = search_extremal(GraphClass::Connected, 6, parse_expr("avg_ecc - remoteness"), Direction::Maximize);
    CHECK(r.tie_count == r.witnesses.size());
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      CHECK(eval_expr(parse_expr("avg_ecc - remoteness"), invariant_profile(r.witnesses[i].graph)) ==
            r.extremal_value);
      CHECK(canonical_code(r.witnesses[i].graph) == r.witnesses[i].code);
      if (i > 0) CHECK(r.witnesses[i - 1].code < r.witnesses[i].code);
    }
    CHECK(r.has_witness(canonical_code(make_cycle(6))));
  }

  TEST_CASE("search is independent of the worker count") {
    const auto objective = parse_expr("remoteness - radius");
    const auto one = search_extremal(GraphClass::Connected, 7, objective, Direction::Minimize, {1, false});
    for (int jobs : {2, 4}) {
      const auto many = search_extremal(GraphClass::Connected, 7, objective, Direction::Minimize, {jobs, false});
      REQUIRE(many.extremal_value == one.extremal_value);
      REQUIRE(many.witnesses.size() == one.witnesses.size());
      for (std::size_t i = 0; i < one.witnesses.size(); ++i) REQUIRE(many.witnesses[i].code == one.witnesses[i].code);
    }
  }

  TEST_CASE("search rejects orders outside the class") {
    const auto e = parse_expr("n");
    CHECK_THROWS_AS(search_extremal(GraphClass::Connected, 8, e, Direction::Maximize), InputError);
    CHECK_THROWS_AS(search_extremal(GraphClass::Tree, 1, e, Direction::Maximize), InputError);
  }

  TEST_CASE("catalog") {
    for (auto id : {"con1-trees", "con1-graphs", "con2-trees", "con2-graphs", "con3-trees", "con3-graphs"})
      CHECK(find_conjecture(id).id == id);
    CHECK_THROWS_AS(find_conjecture("con4"), InputError);
  }

  TEST_CASE("first conjecture over trees 4..10") {
    const auto report = verify_conjecture(find_conjecture("con1-trees"), 4, 10);
    for (const auto& row : report.rows) {
      INFO("n=", row.n, " extremal=", row.extremal_value.to_fraction(), " spider3=", row.family_value.to_fraction());
      CHECK(row.family_is_extremal);
    }
  }

  TEST_CASE("third conjecture over trees at n = 5") {
    const auto row = verify_conjecture(find_conjecture("con3-trees"), 5, 5).rows.at(0);
    INFO("extremal=", row.extremal_value.to_fraction());
    CHECK(row.extremal_value == Rat(1, 2));
    REQUIRE(row.witnesses.size() == 1);
    CHECK(row.witnesses[0].code == canonical_code(make_path(5)));
  }

  TEST_CASE("second conjecture over graphs at n = 6") {
    const auto row = verify_conjecture(find_conjecture("con2-graphs"), 6, 6).rows.at(0);
    CHECK(row.bound_tight);
    CHECK(row.bound_value == Rat(6, 5));
    CHECK(row.family_is_extremal);
  }

  TEST_CASE("family membership matches witness membership") {
    const auto report = verify_conjecture(find_conjecture("con3-graphs"), 4, 7);
    for (const auto& row : report.rows) {
      bool member = false;
      const auto code = canonical_code(make_family(row.family, row.n));
      for (const auto& w : row.witnesses) member = member || w.code == code;
      REQUIRE(member == row.family_is_extremal);
      REQUIRE(row.bound_respected);
    }
  }
}
