#pragma once

#include <random>

#include "dit/expr.hpp"

namespace testgen {

/// Random well-formed AST. Divisors that fold to the constant zero are regenerated,
/// since the parser rejects them.
inline dit::ExprPtr random_ast(std::mt19937& rng, int depth) {
  using dit::ExprKind;
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
  auto sub = [&] { return random_ast(rng, depth - 1); };
  switch (pick(rng)) {
    case 0: {
      std::uniform_int_distribution<int> num(1, 40), den(1, 9);
      return dit::make_number(dit::Rat(num(rng), den(rng)));
    }
    case 1:
      return dit::make_var(static_cast<dit::Variable>(std::uniform_int_distribution<int>(0, dit::kVariableCount - 1)(rng)));
    case 2: return dit::make_neg(sub());
    case 3: return dit::make_binary(ExprKind::Add, sub(), sub());
    case 4: return dit::make_binary(ExprKind::Sub, sub(), sub());
    case 5: return dit::make_binary(ExprKind::Mul, sub(), sub());
    default: {
      auto lhs = sub();
      auto rhs = sub();
      while (dit::is_constant(rhs) && dit::eval_expr(rhs, dit::Bindings{}) == dit::Rat(0)) rhs = sub();
      return dit::make_binary(ExprKind::Div, std::move(lhs), std::move(rhs));
    }
  }
}

}  // namespace testgen
