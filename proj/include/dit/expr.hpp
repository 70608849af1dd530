#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "dit/invariants.hpp"
#include "dit/rational.hpp"

namespace dit {

enum class Variable { AvgDistance, Proximity, Remoteness, AvgEcc, Radius, Diameter, N, M };
inline constexpr int kVariableCount = 8;

std::string_view variable_name(Variable v);
std::optional<Variable> variable_from_name(std::string_view name);

enum class ExprKind { Number, Var, Neg, Add, Sub, Mul, Div };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression node. Number and Var are leaves, Neg uses lhs only.
struct Expr {
  ExprKind kind = ExprKind::Number;
  Rat value;
  Variable var = Variable::N;
  ExprPtr lhs;
  ExprPtr rhs;
};

ExprPtr make_number(Rat value);
ExprPtr make_var(Variable v);
ExprPtr make_neg(ExprPtr operand);
ExprPtr make_binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs);

/// expr   := term (('+'|'-') term)*
/// term   := factor (('*'|'/') factor)*
/// factor := INT | INT '/' INT | IDENT | '(' expr ')' | '-' factor
/// Throws ParseError (1-based column) on syntax errors, unknown identifiers
/// and divisions whose denominator is a constant equal to zero.
ExprPtr parse_expr(std::string_view text);

/// Text that parse_expr maps back to a structurally identical tree.
std::string print_expr(const ExprPtr& e);

bool same_structure(const ExprPtr& a, const ExprPtr& b);
bool is_constant(const ExprPtr& e);

/// Values available to the evaluator; unbound variables raise InputError.
struct Bindings {
  std::array<std::optional<Rat>, kVariableCount> values;
  Bindings& set(Variable v, Rat r) {
    values[static_cast<int>(v)] = r;
    return *this;
  }
};

Bindings bindings_of(const InvariantProfile& p);
/// Only n is bound; used for bound formulas.
Bindings bindings_of_order(int n);

/// Exact evaluation; ArithmeticError on division by zero.
Rat eval_expr(const ExprPtr& e, const Bindings& bindings);
Rat eval_expr(const ExprPtr& e, const InvariantProfile& profile);

}  // namespace dit
