#include "dyadkit/notation.hpp"

#include <cstdio>

namespace dyadkit::notation {

// ---------------------------------------------------------------- Expr

ExprPtr Expr::make_nabla(std::size_t offset) { return ExprPtr(new Expr(ExprKind::nabla, offset)); }

ExprPtr Expr::make_ref(std::string name, std::size_t offset) {
  auto e = new Expr(ExprKind::ref, offset);
  e->name_ = std::move(name);
  return ExprPtr(e);
}

ExprPtr Expr::make_scalar(double value, std::size_t offset) {
  auto e = new Expr(ExprKind::scalar, offset);
  e->value_ = value;
  return ExprPtr(e);
}

ExprPtr Expr::make_unary(ExprKind kind, ExprPtr operand, std::size_t offset) {
  auto e = new Expr(kind, offset);
  e->children_.push_back(std::move(operand));
  return ExprPtr(e);
}

ExprPtr Expr::make_binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs, std::size_t offset) {
  auto e = new Expr(kind, offset);
  e->children_.push_back(std::move(lhs));
  e->children_.push_back(std::move(rhs));
  return ExprPtr(e);
}

bool Expr::operator==(const Expr& o) const {
  if (kind_ != o.kind_ || name_ != o.name_ || value_ != o.value_ || children_.size() != o.children_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (!(*children_[i] == *o.children_[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------- parser

namespace {

std::string_view op_symbol(TokenKind k) {
  switch (k) {
    case TokenKind::dyad: return "⊗";
    case TokenKind::dot: return "·";
    case TokenKind::wedge: return "∧";
    case TokenKind::cross: return "×";
    case TokenKind::star: return "*";
    default: return "?";
  }
}

bool is_product_op(TokenKind k) {
  return k == TokenKind::dyad || k == TokenKind::dot || k == TokenKind::wedge || k == TokenKind::cross ||
         k == TokenKind::star;
}

ExprKind product_kind(TokenKind k) {
  switch (k) {
    case TokenKind::dyad: return ExprKind::dyad;
    case TokenKind::dot: return ExprKind::dot;
    case TokenKind::wedge: return ExprKind::wedge;
    case TokenKind::cross: return ExprKind::cross;
    default: return ExprKind::scalar_mul;
  }
}

bool starts_primary(TokenKind k) {
  return k == TokenKind::number || k == TokenKind::ident || k == TokenKind::lparen || k == TokenKind::nabla;
}

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : toks_(tokens) {}

  ExprPtr parse_all() {
    ExprPtr e = sum();
    if (!at_end()) {
      const Token& t = peek();
      if (t.kind == TokenKind::rparen) throw ParseError(t.offset, "unbalanced ')'");
      throw ParseError(t.offset, "unexpected '" + t.text + "'");
    }
    return e;
  }

 private:
  bool at_end() const { return pos_ >= toks_.size(); }
  const Token& peek() const { return toks_[pos_]; }
  bool next_is(TokenKind k) const { return !at_end() && peek().kind == k; }
  std::size_t end_offset() const {
    return toks_.empty() ? 0 : toks_.back().offset + toks_.back().text.size();
  }

  ExprPtr sum() {
    ExprPtr lhs = negation();
    while (next_is(TokenKind::plus) || next_is(TokenKind::minus)) {
      const Token& op = toks_[pos_++];
      ExprPtr rhs = negation();
      lhs = Expr::make_binary(op.kind == TokenKind::plus ? ExprKind::add : ExprKind::sub, lhs, rhs, op.offset);
    }
    return lhs;
  }

  ExprPtr negation() {
    if (next_is(TokenKind::minus)) {
      const std::size_t at = toks_[pos_++].offset;
      return Expr::make_unary(ExprKind::negate, negation(), at);
    }
    return product();
  }

  ExprPtr product() {
    ExprPtr lhs = postfix();
    const Token* first_op = nullptr;
    while (!at_end() && is_product_op(peek().kind)) {
      const Token& op = toks_[pos_++];
      if (first_op && first_op->kind != op.kind) {
        throw ParseError(op.offset, "ambiguous mix of '" + std::string(op_symbol(first_op->kind)) + "' and '" +
                                        std::string(op_symbol(op.kind)) + "' without parentheses");
      }
      first_op = &op;
      ExprPtr rhs = postfix();
      lhs = Expr::make_binary(product_kind(op.kind), lhs, rhs, op.offset);
    }
    return lhs;
  }

  ExprPtr postfix() {
    ExprPtr e = primary();
    while (next_is(TokenKind::dagger)) {
      e = Expr::make_unary(ExprKind::transpose, e, toks_[pos_++].offset);
    }
    return e;
  }

  ExprPtr primary() {
    if (at_end()) throw ParseError(end_offset(), "expected an operand at end of input");
    const Token& t = toks_[pos_];
    switch (t.kind) {
      case TokenKind::number:
        ++pos_;
        return Expr::make_scalar(t.number, t.offset);
      case TokenKind::ident:
        ++pos_;
        return Expr::make_ref(t.text, t.offset);
      case TokenKind::nabla: {
        ++pos_;
        ExprPtr nabla = Expr::make_nabla(t.offset);
        if (!at_end() && starts_primary(peek().kind)) {
          return Expr::make_binary(ExprKind::gradient, nabla, primary(), t.offset);
        }
        return nabla;
      }
      case TokenKind::lparen: {
        ++pos_;
        ExprPtr inner = sum();
        if (!next_is(TokenKind::rparen)) {
          throw ParseError(at_end() ? end_offset() : peek().offset,
                           "unbalanced '(' opened at offset " + std::to_string(t.offset));
        }
        ++pos_;
        return Expr::make_unary(ExprKind::group, inner, t.offset);
      }
      case TokenKind::rparen:
        throw ParseError(t.offset, "unbalanced ')'");
      default:
        throw ParseError(t.offset, "expected an operand before '" + t.text + "'");
    }
  }

  std::span<const Token> toks_;
  std::size_t pos_ = 0;
};

std::string number_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

ExprPtr parse(std::span<const Token> tokens) {
  if (tokens.empty()) throw ParseError(0, "empty expression");
  return Parser(tokens).parse_all();
}

ExprPtr parse(std::string_view src) {
  const std::vector<Token> tokens = tokenize(src);
  return parse(tokens);
}

std::string render(const Expr& e, Spelling spelling) {
  const bool uni = spelling == Spelling::unicode;
  const auto bin = [&](std::string_view u, std::string_view a) {
    return render(e.child(0), spelling) + " " + std::string(uni ? u : a) + " " + render(e.child(1), spelling);
  };
  switch (e.kind()) {
    case ExprKind::nabla: return uni ? "∇" : "grad";
    case ExprKind::ref: return e.name();
    case ExprKind::scalar: return number_text(e.value());
    case ExprKind::transpose: return render(e.child(0), spelling) + (uni ? "†" : "'");
    case ExprKind::negate: return "-" + render(e.child(0), spelling);
    case ExprKind::gradient: return render(e.child(0), spelling) + " " + render(e.child(1), spelling);
    case ExprKind::dyad: return bin("⊗", "(x)");
    case ExprKind::dot: return bin("·", ".");
    case ExprKind::wedge: return bin("∧", "^");
    case ExprKind::cross: return bin("×", "cross");
    case ExprKind::add: return bin("+", "+");
    case ExprKind::sub: return bin("-", "-");
    case ExprKind::scalar_mul: return bin("*", "*");
    case ExprKind::group: {
      // "(x)" would lex as the dyad operator
      const std::string inner = render(e.child(0), spelling);
      return inner == "x" ? "( x )" : "(" + inner + ")";
    }
  }
  return {};
}

} // namespace dyadkit::notation
