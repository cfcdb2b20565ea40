#include "dyadkit/kinematics.hpp"
#include "dyadkit/notation.hpp"

#include <array>
#include <cstdio>

namespace dyadkit::notation {

namespace {

using Kind = EvalError::Kind;

// A value together with its first partial derivatives at the evaluation
// point. Everything the grammar can build is multilinear in the field, so
// derivatives propagate exactly by the product rule. Results of a nabla
// application would need second derivatives of the field and are marked
// `unknown`.
struct Jet {
  enum class Deriv { constant, known, unknown };

  Value value;
  Deriv deriv = Deriv::constant;
  std::array<Value, 3> partials{0.0, 0.0, 0.0};
};

Value zero_like(const Value& v) {
  switch (v.kind()) {
    case ValueKind::scalar: return 0.0;
    case ValueKind::vector: return Vec3{};
    case ValueKind::tensor: return Tensor3{};
    case ValueKind::multivector: return Multivector{};
  }
  return 0.0;
}

Multivector as_mv(const Value& v) {
  return v.kind() == ValueKind::vector ? Multivector::vector(v.vector()) : v.multivector();
}

bool is_mv_like(const Value& v) { return v.kind() == ValueKind::vector || v.kind() == ValueKind::multivector; }

std::string kinds(std::string_view op, const Value& a, const Value& b) {
  return "'" + std::string(op) + "' is not defined for " + std::string(to_string(a.kind())) + " and " +
         std::string(to_string(b.kind()));
}

// ---- plain value operations; `at` is the operator offset for errors

Value add(const Value& a, const Value& b, std::size_t at, bool subtract = false) {
  if (a.kind() != b.kind()) throw EvalError(Kind::type_mismatch, at, kinds(subtract ? "-" : "+", a, b));
  const double s = subtract ? -1.0 : 1.0;
  switch (a.kind()) {
    case ValueKind::scalar: return a.scalar() + s * b.scalar();
    case ValueKind::vector: return a.vector() + b.vector() * s;
    case ValueKind::tensor: return a.tensor() + b.tensor() * s;
    case ValueKind::multivector: return a.multivector() + b.multivector() * s;
  }
  return 0.0;
}

Value scale(const Value& v, double s) {
  switch (v.kind()) {
    case ValueKind::scalar: return v.scalar() * s;
    case ValueKind::vector: return v.vector() * s;
    case ValueKind::tensor: return v.tensor() * s;
    case ValueKind::multivector: return v.multivector() * s;
  }
  return 0.0;
}

Value transpose_value(const Value& v, std::size_t at) {
  if (v.kind() != ValueKind::tensor) {
    throw EvalError(Kind::type_mismatch, at, "'†' needs a tensor, got " + std::string(to_string(v.kind())));
  }
  return transpose(v.tensor());
}

Value apply_binary(ExprKind op, const Value& a, const Value& b, std::size_t at) {
  switch (op) {
    case ExprKind::dyad:
      if (a.kind() == ValueKind::vector && b.kind() == ValueKind::vector) return dyad(a.vector(), b.vector());
      throw EvalError(Kind::type_mismatch, at, kinds("⊗", a, b));
    case ExprKind::dot:
      if (a.kind() == ValueKind::vector && b.kind() == ValueKind::vector) return dyadkit::dot(a.vector(), b.vector());
      if (a.kind() == ValueKind::vector && b.kind() == ValueKind::tensor) return postfactor(a.vector(), b.tensor());
      if (a.kind() == ValueKind::tensor && b.kind() == ValueKind::vector) return prefactor(a.tensor(), b.vector());
      if (is_mv_like(a) && is_mv_like(b)) return dyadkit::dot(as_mv(a), as_mv(b));
      throw EvalError(Kind::type_mismatch, at, kinds("·", a, b));
    case ExprKind::wedge:
      if (is_mv_like(a) && is_mv_like(b)) return wedge(as_mv(a), as_mv(b));
      throw EvalError(Kind::type_mismatch, at, kinds("∧", a, b));
    case ExprKind::cross:
      if (a.kind() == ValueKind::vector && b.kind() == ValueKind::vector) return cross(a.vector(), b.vector());
      throw EvalError(Kind::type_mismatch, at, kinds("×", a, b));
    case ExprKind::scalar_mul:
      if (a.kind() == ValueKind::scalar) return scale(b, a.scalar());
      if (b.kind() == ValueKind::scalar) return scale(a, b.scalar());
      throw EvalError(Kind::type_mismatch, at, kinds("*", a, b));
    case ExprKind::add: return add(a, b, at);
    case ExprKind::sub: return add(a, b, at, true);
    default: break;
  }
  throw EvalError(Kind::type_mismatch, at, "not a binary operator");
}

const Expr& strip_groups(const Expr& e) {
  const Expr* p = &e;
  while (p->kind() == ExprKind::group) p = &p->child(0);
  return *p;
}

class Evaluator {
 public:
  explicit Evaluator(const EvalContext& ctx) : ctx_(ctx) {
    for (const auto& [name, value] : ctx_.bindings) {
      if (is_reserved_name(name)) {
        throw EvalError(Kind::unbound_name, 0, "'" + name + "' is reserved and cannot be bound");
      }
    }
  }

  Jet eval(const Expr& e) {
    switch (e.kind()) {
      case ExprKind::nabla:
        throw EvalError(Kind::misplaced_nabla, e.offset(),
                        "'∇' must be the left operand of ⊗, ·, ∧ or ×, or be applied to a scalar");
      case ExprKind::scalar: return {e.value()};
      case ExprKind::ref: return lookup(e);
      case ExprKind::group: return eval(e.child(0));
      case ExprKind::transpose: return linear(eval(e.child(0)), [&](const Value& v) { return transpose_value(v, e.offset()); });
      case ExprKind::negate: return linear(eval(e.child(0)), [](const Value& v) { return scale(v, -1.0); });
      case ExprKind::gradient: return nabla_apply(ExprKind::gradient, e.child(1), e.offset());
      case ExprKind::add:
      case ExprKind::sub: {
        const Jet a = eval(e.child(0));
        const Jet b = eval(e.child(1));
        Jet out{apply_binary(e.kind(), a.value, b.value, e.offset())};
        out.deriv = combine(a.deriv, b.deriv);
        if (out.deriv == Jet::Deriv::known) {
          for (std::size_t i = 0; i < 3; ++i) {
            out.partials[i] = apply_binary(e.kind(), partial(a, i), partial(b, i), e.offset());
          }
        }
        return out;
      }
      case ExprKind::dyad:
      case ExprKind::dot:
      case ExprKind::wedge:
      case ExprKind::cross:
      case ExprKind::scalar_mul: {
        if (strip_groups(e.child(1)).kind() == ExprKind::nabla) {
          throw EvalError(Kind::misplaced_nabla, strip_groups(e.child(1)).offset(),
                          "'∇' may only act to its right");
        }
        if (strip_groups(e.child(0)).kind() == ExprKind::nabla) {
          if (e.kind() == ExprKind::scalar_mul) {
            throw EvalError(Kind::misplaced_nabla, e.offset(), "'∇' cannot be scaled; apply it to an operand");
          }
          return nabla_apply(e.kind(), e.child(1), e.offset());
        }
        const Jet a = eval(e.child(0));
        const Jet b = eval(e.child(1));
        Jet out{apply_binary(e.kind(), a.value, b.value, e.offset())};
        out.deriv = combine(a.deriv, b.deriv);
        if (out.deriv == Jet::Deriv::known) {
          // product rule
          for (std::size_t i = 0; i < 3; ++i) {
            Value term_a = apply_binary(e.kind(), partial(a, i), b.value, e.offset());
            Value term_b = apply_binary(e.kind(), a.value, partial(b, i), e.offset());
            out.partials[i] = add(term_a, term_b, e.offset());
          }
        }
        return out;
      }
    }
    throw EvalError(Kind::type_mismatch, e.offset(), "unsupported expression");
  }

 private:
  static Jet::Deriv combine(Jet::Deriv a, Jet::Deriv b) {
    if (a == Jet::Deriv::unknown || b == Jet::Deriv::unknown) return Jet::Deriv::unknown;
    if (a == Jet::Deriv::known || b == Jet::Deriv::known) return Jet::Deriv::known;
    return Jet::Deriv::constant;
  }

  static Value partial(const Jet& j, std::size_t i) {
    return j.deriv == Jet::Deriv::known ? j.partials[i] : zero_like(j.value);
  }

  template <class F>
  static Jet linear(const Jet& in, F&& f) {
    Jet out{f(in.value)};
    out.deriv = in.deriv;
    if (in.deriv == Jet::Deriv::known) {
      for (std::size_t i = 0; i < 3; ++i) out.partials[i] = f(in.partials[i]);
    }
    return out;
  }

  const Tensor3& field_gradient(std::size_t at) {
    if (!ctx_.field) throw EvalError(Kind::unbound_name, at, "no field is bound to 'v'");
    if (!grad_) grad_ = grad_gibbs(*ctx_.field, ctx_.point);
    return *grad_;
  }

  Jet lookup(const Expr& e) {
    const std::string& name = e.name();
    if (name == kFieldName) {
      const Tensor3& g = field_gradient(e.offset());
      Jet j{eval_field()};
      j.deriv = Jet::Deriv::known;
      for (std::size_t i = 0; i < 3; ++i) j.partials[i] = g.row(i);
      return j;
    }
    if (name == "d" || name == "Ω" || name == "omega") {
      const Decomposition parts = decompose(field_gradient(e.offset()));
      Jet j{name == "d" ? parts.d : parts.omega};
      j.deriv = Jet::Deriv::unknown;
      return j;
    }
    if (auto it = ctx_.bindings.find(name); it != ctx_.bindings.end()) return {it->second};
    throw EvalError(Kind::unbound_name, e.offset(), "unbound name '" + name + "'");
  }

  Vec3 eval_field() { return dyadkit::eval(*ctx_.field, ctx_.point); }

  Jet nabla_apply(ExprKind op, const Expr& operand_expr, std::size_t at) {
    const Jet operand = eval(operand_expr);
    if (operand.deriv == Jet::Deriv::unknown) {
      throw EvalError(Kind::no_second_derivative, at, "'∇' applied to an operand that already contains '∇', d or Ω");
    }
    const Value& v = operand.value;
    const auto d = [&](std::size_t i) { return partial(operand, i); };
    Jet out{0.0};
    out.deriv = operand.deriv == Jet::Deriv::constant ? Jet::Deriv::constant : Jet::Deriv::unknown;
    const auto bad = [&](std::string_view sym) {
      return EvalError(Kind::type_mismatch, at,
                       "'∇" + std::string(sym) + "' is not defined for a " + std::string(to_string(v.kind())) +
                           (v.kind() == ValueKind::vector && sym.empty() ? "; write ∇⊗ for the vector gradient" : ""));
    };
    switch (op) {
      case ExprKind::gradient:
        if (v.kind() != ValueKind::scalar) throw bad("");
        out.value = Vec3{d(0).scalar(), d(1).scalar(), d(2).scalar()};
        break;
      case ExprKind::dyad: {
        if (v.kind() != ValueKind::vector) throw bad("⊗");
        Tensor3 t;
        for (std::size_t i = 0; i < 3; ++i) t += dyad(Vec3::unit(i), d(i).vector());
        out.value = t;
        break;
      }
      case ExprKind::dot:
        if (v.kind() == ValueKind::vector) {
          out.value = d(0).vector().x + d(1).vector().y + d(2).vector().z;
        } else if (v.kind() == ValueKind::tensor) {
          Vec3 s;
          for (std::size_t i = 0; i < 3; ++i) s += postfactor(Vec3::unit(i), d(i).tensor());
          out.value = s;
        } else if (v.kind() == ValueKind::multivector) {
          Multivector s;
          for (std::size_t i = 0; i < 3; ++i) s += dyadkit::dot(Multivector::vector(Vec3::unit(i)), d(i).multivector());
          out.value = s;
        } else {
          throw bad("·");
        }
        break;
      case ExprKind::wedge: {
        if (!is_mv_like(v)) throw bad("∧");
        Multivector s;
        for (std::size_t i = 0; i < 3; ++i) s += wedge(Multivector::vector(Vec3::unit(i)), as_mv(d(i)));
        out.value = s;
        break;
      }
      case ExprKind::cross: {
        if (v.kind() != ValueKind::vector) throw bad("×");
        Vec3 s;
        for (std::size_t i = 0; i < 3; ++i) s += cross(Vec3::unit(i), d(i).vector());
        out.value = s;
        break;
      }
      default:
        throw EvalError(Kind::misplaced_nabla, at, "unsupported use of '∇'");
    }
    return out;
  }

  const EvalContext& ctx_;
  std::optional<Tensor3> grad_;
};

} // namespace

std::string_view to_string(ValueKind k) {
  switch (k) {
    case ValueKind::scalar: return "scalar";
    case ValueKind::vector: return "vector";
    case ValueKind::tensor: return "tensor";
    case ValueKind::multivector: return "multivector";
  }
  return "?";
}

std::string to_string(const Value& v, int precision) {
  char buf[128];
  const auto clean = [](double x) { return x == 0.0 ? 0.0 : x; };
  switch (v.kind()) {
    case ValueKind::scalar:
      std::snprintf(buf, sizeof buf, "%.*g", precision, clean(v.scalar()));
      return buf;
    case ValueKind::vector: {
      const Vec3& a = v.vector();
      std::snprintf(buf, sizeof buf, "(%.*g, %.*g, %.*g)", precision, clean(a.x), precision, clean(a.y), precision,
                    clean(a.z));
      return buf;
    }
    case ValueKind::tensor: return to_string(v.tensor(), precision);
    case ValueKind::multivector: return to_string(v.multivector(), precision);
  }
  return {};
}

bool is_reserved_name(std::string_view name) {
  return name == kFieldName || name == "d" || name == "Ω" || name == "omega" || name == "grad" || name == "cross";
}

Value evaluate(const Expr& e, const EvalContext& ctx) { return Evaluator(ctx).eval(e).value; }

Value evaluate(std::string_view src, const EvalContext& ctx) { return evaluate(*parse(src), ctx); }

} // namespace dyadkit::notation
