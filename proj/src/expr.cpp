#include "dit/expr.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "dit/error.hpp"

namespace dit {
namespace {

constexpr std::array<std::string_view, kVariableCount> kVariableNames{
    "avg_distance", "proximity", "remoteness", "avg_ecc", "radius", "diameter", "n", "m"};

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::Int, src.substr(start, i - start), start + 1});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      out.push_back({Tok::Ident, src.substr(start, i - start), start + 1});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start + 1);
    }
    out.push_back({kind, src.substr(start, 1), start + 1});
    ++i;
  }
  out.push_back({Tok::End, {}, src.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + std::string(peek().text) + "'", peek().column);
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[pos_++]; }

  ExprPtr expr() {
    ExprPtr e = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      ExprKind kind = next().kind == Tok::Plus ? ExprKind::Add : ExprKind::Sub;
      e = make_binary(kind, e, term());
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = next();
      ExprPtr rhs = factor();
      if (op.kind == Tok::Slash) {
        check_denominator(rhs, op.column);
        e = make_binary(ExprKind::Div, e, rhs);
      } else {
        e = make_binary(ExprKind::Mul, e, rhs);
      }
    }
    return e;
  }

  ExprPtr factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        next();
        Rat value(integer(t));
        if (peek().kind == Tok::Slash && peek(1).kind == Tok::Int) {
          std::size_t slash_col = next().column;
          std::int64_t den = integer(next());
          if (den == 0) throw ParseError("division by constant zero", slash_col);
          value = Rat(value.num(), den);
        }
        return make_number(value);
      }
      case Tok::Ident: {
        next();
        auto v = variable_from_name(t.text);
        if (!v) throw ParseError("unknown identifier '" + std::string(t.text) + "'", t.column);
        return make_var(*v);
      }
      case Tok::LParen: {
        next();
        ExprPtr e = expr();
        if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().column);
        next();
        return e;
      }
      case Tok::Minus:
        next();
        return make_neg(factor());
      case Tok::End:
        throw ParseError("unexpected end of expression", t.column);
      default:
        throw ParseError("unexpected '" + std::string(t.text) + "'", t.column);
    }
  }

  static std::int64_t integer(const Token& t) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      throw ParseError("integer literal out of range", t.column);
    }
    return v;
  }

  static void check_denominator(const ExprPtr& rhs, std::size_t column) {
    if (!is_constant(rhs)) return;
    bool zero = false;
    try {
      zero = eval_expr(rhs, Bindings{}) == Rat(0);
    } catch (const ArithmeticError&) {
      return;  // already rejected deeper down or reported at evaluation
    }
    if (zero) throw ParseError("division by constant zero", column);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul:
    case ExprKind::Div: return 2;
    default: return 3;
  }
}

void print_into(const Expr& e, std::string& out);

void print_wrapped(const Expr& e, bool wrap, std::string& out) {
  if (wrap) out.push_back('(');
  print_into(e, out);
  if (wrap) out.push_back(')');
}

void print_into(const Expr& e, std::string& out) {
  switch (e.kind) {
    case ExprKind::Number:
      if (e.value < Rat(0)) {
        out += "-(" + (-e.value).to_string() + ")";
      } else {
        out += e.value.to_string();
      }
      return;
    case ExprKind::Var:
      out += variable_name(e.var);
      return;
    case ExprKind::Neg:
      out.push_back('-');
      print_wrapped(*e.lhs, precedence(*e.lhs) < 3, out);
      return;
    default: break;
  }
  const int p = precedence(e);
  const char* op = e.kind == ExprKind::Add ? " + " : e.kind == ExprKind::Sub ? " - " : e.kind == ExprKind::Mul ? " * " : " / ";
  print_wrapped(*e.lhs, precedence(*e.lhs) < p, out);
  out += op;
  // Left associativity: an equal-precedence right operand needs parentheses;
  // a bare number after '/' would be read back as a fraction literal.
  bool wrap_rhs = precedence(*e.rhs) <= p || (e.kind == ExprKind::Div && e.rhs->kind == ExprKind::Number);
  print_wrapped(*e.rhs, wrap_rhs, out);
}

}  // namespace

std::string_view variable_name(Variable v) { return kVariableNames[static_cast<int>(v)]; }

std::optional<Variable> variable_from_name(std::string_view name) {
  for (int i = 0; i < kVariableCount; ++i) {
    if (kVariableNames[i] == name) return static_cast<Variable>(i);
  }
  return std::nullopt;
}

ExprPtr make_number(Rat value) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Number;
  e->value = value;
  return e;
}

ExprPtr make_var(Variable v) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Var;
  e->var = v;
  return e;
}

ExprPtr make_neg(ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Neg;
  e->lhs = std::move(operand);
  return e;
}

ExprPtr make_binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const ExprPtr& e) {
  std::string out;
  print_into(*e, out);
  return out;
}

bool same_structure(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprKind::Number: return a->value == b->value;
    case ExprKind::Var: return a->var == b->var;
    case ExprKind::Neg: return same_structure(a->lhs, b->lhs);
    default: return same_structure(a->lhs, b->lhs) && same_structure(a->rhs, b->rhs);
  }
}

bool is_constant(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::Number: return true;
    case ExprKind::Var: return false;
    case ExprKind::Neg: return is_constant(e->lhs);
    default: return is_constant(e->lhs) && is_constant(e->rhs);
  }
}

Bindings bindings_of(const InvariantProfile& p) {
  Bindings b;
  b.set(Variable::AvgDistance, p.avg_distance)
      .set(Variable::Proximity, p.proximity)
      .set(Variable::Remoteness, p.remoteness)
      .set(Variable::AvgEcc, p.avg_ecc)
      .set(Variable::Radius, Rat(p.radius))
      .set(Variable::Diameter, Rat(p.diameter))
      .set(Variable::N, Rat(p.n))
      .set(Variable::M, Rat(p.m));
  return b;
}

Bindings bindings_of_order(int n) {
  Bindings b;
  b.set(Variable::N, Rat(n));
  return b;
}

Rat eval_expr(const ExprPtr& e, const Bindings& bindings) {
  switch (e->kind) {
    case ExprKind::Number: return e->value;
    case ExprKind::Var: {
      const auto& v = bindings.values[static_cast<int>(e->var)];
      if (!v) throw InputError("variable '" + std::string(variable_name(e->var)) + "' is not bound here");
      return *v;
    }
    case ExprKind::Neg: return -eval_expr(e->lhs, bindings);
    case ExprKind::Add: return eval_expr(e->lhs, bindings) + eval_expr(e->rhs, bindings);
    case ExprKind::Sub: return eval_expr(e->lhs, bindings) - eval_expr(e->rhs, bindings);
    case ExprKind::Mul: return eval_expr(e->lhs, bindings) * eval_expr(e->rhs, bindings);
    case ExprKind::Div: {
      Rat den = eval_expr(e->rhs, bindings);
      if (den == Rat(0)) throw ArithmeticError("division by zero while evaluating '" + print_expr(e) + "'");
      return eval_expr(e->lhs, bindings) / den;
    }
  }
  return {};
}

Rat eval_expr(const ExprPtr& e, const InvariantProfile& profile) { return eval_expr(e, bindings_of(profile)); }

}  // namespace dit
