#pragma once

// Gibbsian tensor notation: lexer, parser, evaluator and convention audit.
//
// Grammar, loosest binding first:
//
//   sum      := negation (('+' | '-') negation)*
//   negation := '-' negation | product
//   product  := postfix (op postfix)*      op in { ⊗ · ∧ × * }, one kind per chain
//   postfix  := primary ('†')*
//   primary  := number | identifier | '(' sum ')' | '∇' [primary]
//
// Mixing different product operators in one chain without parentheses is a
// parse error: `dr · ∇⊗v` is rejected, `dr · (∇⊗v)` is accepted. `∇ s`
// (nabla followed directly by an operand) is the gradient of a scalar.
//
// ASCII aliases: grad = ∇, (x) = ⊗, . = ·, ^ = ∧, cross = ×, ' = †.
// Note that "(x)" is always the dyad operator; write "( x )" to group a name x.

#include "dyadkit/dyadics.hpp"
#include "dyadkit/fields.hpp"
#include "dyadkit/ga.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dyadkit::notation {

// Base of every lexing, parsing and evaluation failure; offset() is the byte
// offset into the source text.
class NotationError : public std::runtime_error {
 public:
  NotationError(std::size_t offset, const std::string& what)
      : std::runtime_error("at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class LexError : public NotationError {
  using NotationError::NotationError;
};

class ParseError : public NotationError {
  using NotationError::NotationError;
};

class EvalError : public NotationError {
 public:
  enum class Kind { type_mismatch, unbound_name, misplaced_nabla, no_second_derivative };
  EvalError(Kind kind, std::size_t offset, const std::string& what) : NotationError(offset, what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// ---------------------------------------------------------------- lexing

enum class TokenKind { nabla, dyad, dot, wedge, cross, dagger, plus, minus, star, lparen, rparen, ident, number };

struct Token {
  TokenKind kind;
  std::string text;  // source spelling
  std::size_t offset = 0;
  double number = 0.0;
};

std::vector<Token> tokenize(std::string_view src);

// ---------------------------------------------------------------- syntax tree

enum class ExprKind {
  nabla,
  ref,        // named vector, field or tensor
  scalar,     // numeric literal
  transpose,  // postfix †
  negate,
  gradient,   // children: nabla, scalar operand
  dyad,
  dot,
  wedge,
  cross,
  add,
  sub,
  scalar_mul,
  group,
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
 public:
  static ExprPtr make_nabla(std::size_t offset);
  static ExprPtr make_ref(std::string name, std::size_t offset);
  static ExprPtr make_scalar(double value, std::size_t offset);
  static ExprPtr make_unary(ExprKind kind, ExprPtr operand, std::size_t offset);
  static ExprPtr make_binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs, std::size_t offset);

  ExprKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  double value() const { return value_; }
  std::size_t offset() const { return offset_; }
  const std::vector<ExprPtr>& children() const { return children_; }
  const Expr& child(std::size_t i) const { return *children_.at(i); }

  // Structural equality; source offsets are ignored.
  bool operator==(const Expr& o) const;

 private:
  Expr(ExprKind kind, std::size_t offset) : kind_(kind), offset_(offset) {}

  ExprKind kind_;
  std::string name_;
  double value_ = 0.0;
  std::size_t offset_ = 0;
  std::vector<ExprPtr> children_;
};

ExprPtr parse(std::span<const Token> tokens);
ExprPtr parse(std::string_view src);

enum class Spelling { unicode, ascii };

// Source text that parses back to an equal tree.
std::string render(const Expr& e, Spelling spelling = Spelling::unicode);

// ---------------------------------------------------------------- evaluation

enum class ValueKind { scalar, vector, tensor, multivector };

std::string_view to_string(ValueKind k);

class Value {
 public:
  using Storage = std::variant<double, Vec3, Tensor3, Multivector>;

  Value(double s) : v_(s) {}
  Value(const Vec3& v) : v_(v) {}
  Value(const Tensor3& t) : v_(t) {}
  Value(const Multivector& m) : v_(m) {}

  ValueKind kind() const { return static_cast<ValueKind>(v_.index()); }
  const Storage& storage() const { return v_; }

  // Throw std::bad_variant_access on a kind mismatch.
  double scalar() const { return std::get<double>(v_); }
  const Vec3& vector() const { return std::get<Vec3>(v_); }
  const Tensor3& tensor() const { return std::get<Tensor3>(v_); }
  const Multivector& multivector() const { return std::get<Multivector>(v_); }

  bool operator==(const Value&) const = default;

 private:
  Storage v_;
};

std::string to_string(const Value& v, int precision = 6);

// Names the evaluator resolves without a binding: the field `v`, its rate of
// strain `d` and its rate of rotation `Ω` (alias `omega`, postfactor form).
inline constexpr std::string_view kFieldName = "v";
bool is_reserved_name(std::string_view name);

struct EvalContext {
  std::optional<VectorField> field;
  Vec3 point;
  std::map<std::string, Vec3, std::less<>> bindings;
};

// `∇⊗v` is grad_gibbs; `c · T` is the postfactor and `T · c` the prefactor
// product; `∇ · v`, `∇ ∧ v` and `∇ × v` are divergence, the bivector curl and
// the vorticity vector. Throws EvalError.
Value evaluate(const Expr& e, const EvalContext& ctx);
Value evaluate(std::string_view src, const EvalContext& ctx);

// ---------------------------------------------------------------- audit

enum class Verdict { gibbs, alternative, symmetric_ambiguous, neither };

std::string_view to_string(Verdict v);

struct AuditResult {
  Verdict verdict = Verdict::neither;
  double max_abs_deviation_gibbs = 0.0;
  double max_abs_deviation_alt = 0.0;
};

inline constexpr double kAuditRelTol = 1e-9;

// Classifies t as the Gibbs gradient of f at x, its transpose, or neither.
// When the gradient is symmetric the two conventions coincide and the verdict
// is symmetric_ambiguous.
AuditResult audit_convention(const Tensor3& t, const VectorField& f, const Vec3& x);

} // namespace dyadkit::notation
