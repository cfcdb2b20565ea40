#include "dyadkit/check_suite.hpp"

#include "dyadkit/compare.hpp"
#include "dyadkit/kinematics.hpp"
#include "dyadkit/notation.hpp"
#include "dyadkit/sampling.hpp"

#include <array>
#include <cstdio>
#include <functional>

namespace dyadkit {

namespace {

constexpr std::size_t kCases = 1000;
constexpr double kRelTol = 1e-12;
constexpr double kDyadicTol = 1e-14;
constexpr double kMinOrder = 1.9;
constexpr std::array<double, 3> kSteps = {1e-2, 1e-3, 1e-4};

// Empty string on success, otherwise a description of the failing case.
using Case = std::function<std::string(Sampler&)>;

template <class T>
std::string expect_close(const T& a, const T& b, double tol, const char* what) {
  const double err = rel_error(a, b);
  if (err <= tol) return {};
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s: relative error %.3e > %.1e", what, err, tol);
  return buf;
}

std::string expect(bool ok, const char* what) { return ok ? std::string{} : std::string(what); }

std::string first_of(std::initializer_list<std::string> outcomes) {
  for (const std::string& s : outcomes) {
    if (!s.empty()) return s;
  }
  return {};
}

Multivector vec(const Vec3& v) { return Multivector::vector(v); }

class Suite {
 public:
  explicit Suite(std::uint64_t seed) : seed_(seed) {}

  void property(std::string name, std::size_t cases, const Case& body) {
    // Each property draws from its own stream so adding one never shifts another.
    Sampler sampler(seed_ * 0x9E3779B97F4A7C15ull + results_.size() + 1);
    PropertyResult r;
    r.name = std::move(name);
    for (std::size_t i = 0; i < cases; ++i) {
      std::string outcome;
      try {
        outcome = body(sampler);
      } catch (const std::exception& e) {
        outcome = std::string("exception: ") + e.what();
      }
      ++r.cases;
      if (!outcome.empty()) {
        if (r.failures == 0) r.first_failure = "case " + std::to_string(i) + ": " + outcome;
        ++r.failures;
      }
    }
    results_.push_back(std::move(r));
  }

  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  std::uint64_t seed_;
  std::vector<PropertyResult> results_;
};

void ga_properties(Suite& suite) {
  suite.property("ga.anticommutation", kCases, [](Sampler& s) {
    const int i = 1 + static_cast<int>(s.uniform(0.0, 3.0));
    const int j = 1 + static_cast<int>(s.uniform(0.0, 3.0));
    const Multivector ei = Multivector::basis(i);
    const Multivector ej = Multivector::basis(j);
    if (i == j) return expect(ei * ej == Multivector::scalar(1.0), "e_i e_i != 1");
    return expect(ei * ej == -(ej * ei), "e_i e_j != -e_j e_i");
  });
  suite.property("ga.fundamental_identity", kCases, [](Sampler& s) {
    const Multivector a = vec(s.vec()), b = vec(s.vec());
    return expect_close(a * b, dot(a, b) + wedge(a, b), kRelTol, "ab = a.b + a^b");
  });
  suite.property("ga.symmetric_split", kCases, [](Sampler& s) {
    const Multivector a = vec(s.vec()), b = vec(s.vec());
    const Multivector bivector = s.blade(2);
    return first_of({
        expect_close(dot(a, b), (a * b + b * a) * 0.5, kRelTol, "a.b = (ab+ba)/2"),
        expect_close(wedge(a, b), (a * b - b * a) * 0.5, kRelTol, "a^b = (ab-ba)/2"),
        expect_close(wedge(a, b), -wedge(b, a), kRelTol, "a^b = -b^a"),
        expect_close(dot(bivector, a), (bivector * a - a * bivector) * 0.5, kRelTol, "B.a = (Ba-aB)/2"),
        expect_close(dot(bivector, a), -dot(a, bivector), kRelTol, "B.a = -a.B"),
    });
  });
  for (int k = 1; k <= 3; ++k) {
    suite.property("ga.blade_rule.k" + std::to_string(k), kCases, [k](Sampler& s) {
      const Multivector bk = s.blade(k);
      const Multivector a = vec(s.vec());
      const double sign = (k + 1) % 2 == 0 ? 1.0 : -1.0;
      return first_of({
          expect_close(dot(bk, a), (bk * a + a * bk * sign) * 0.5, kRelTol, "B.a blade rule"),
          expect_close(wedge(bk, a), (bk * a - a * bk * sign) * 0.5, kRelTol, "B^a blade rule"),
      });
    });
  }
  suite.property("ga.distribution_identity", kCases, [](Sampler& s) {
    const Vec3 a = s.vec(), b = s.vec(), c = s.vec();
    const Multivector lhs = dot(vec(a), wedge(vec(b), vec(c)));
    return expect_close(lhs, vec(c * dyadkit::dot(a, b) - b * dyadkit::dot(a, c)), kRelTol,
                        "a.(b^c) = (a.b)c - (a.c)b");
  });
  suite.property("ga.grade_completeness", kCases, [](Sampler& s) {
    const Multivector m = s.multivector();
    return expect(grade(m, 0) + grade(m, 1) + grade(m, 2) + grade(m, 3) == m, "sum of grades != m");
  });
  suite.property("ga.associativity", kCases, [](Sampler& s) {
    const Multivector m = s.multivector(), n = s.multivector(), p = s.multivector();
    return expect_close((m * n) * p, m * (n * p), kRelTol, "(mn)p = m(np)");
  });
  suite.property("ga.worked_product", 1, [](Sampler&) {
    const Multivector e1 = Multivector::basis(1), e2 = Multivector::basis(2), e3 = Multivector::basis(3);
    const Multivector expected = Multivector::scalar(-1.0) + Multivector::blade(Blade::e23);
    return expect(e1 * (e2 + e3) * e1 * e2 == expected, "e1(e2+e3)e1e2 != -1 + e23");
  });
}

void dyadic_properties(Suite& suite) {
  suite.property("dyadics.transpose_identity", kCases, [](Sampler& s) {
    const Vec3 c = s.vec();
    const Tensor3 t = s.tensor();
    return expect_close(postfactor(c, t), prefactor(transpose(t), c), kDyadicTol, "c.T = T^T.c");
  });
  suite.property("dyadics.dyad_factor_laws", kCases, [](Sampler& s) {
    const Vec3 a = s.vec(), b = s.vec(), c = s.vec();
    const Tensor3 ab = dyad(a, b);
    return first_of({
        expect_close(postfactor(c, ab), b * dyadkit::dot(c, a), kDyadicTol, "c.(a(x)b) = (c.a)b"),
        expect_close(prefactor(ab, c), a * dyadkit::dot(b, c), kDyadicTol, "(a(x)b).c = a(b.c)"),
        expect(transpose(ab) == dyad(b, a), "(a(x)b)^T != b(x)a"),
    });
  });
  suite.property("dyadics.nonion_reconstruction", kCases, [](Sampler& s) {
    const Tensor3 t = s.tensor();
    Tensor3 rebuilt;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) rebuilt += nonion_basis(i, j) * t(i - 1, j - 1);
    return expect(rebuilt == t, "nonion expansion does not reproduce T");
  });
  suite.property("dyadics.sym_antisym_split", kCases, [](Sampler& s) {
    const Tensor3 t = s.tensor();
    const Tensor3 sp = sym(t), ap = antisym(t);
    return first_of({
        expect(sp == transpose(sp), "sym not symmetric"),
        expect(ap == -transpose(ap), "antisym not antisymmetric"),
        expect_close(sp + ap, t, kDyadicTol, "sym + antisym = T"),
        expect(transpose(transpose(t)) == t, "transpose not an involution"),
    });
  });
  suite.property("dyadics.postfactor_prefactor_differ", 1, [](Sampler&) {
    const Tensor3 t = dyad(Vec3::unit(0), Vec3::unit(1));
    return expect(!(postfactor(Vec3::unit(0), t) == prefactor(t, Vec3::unit(0))), "e1.(e1(x)e2) == (e1(x)e2).e1");
  });
}

double taylor_residual(const PolyField& f, const Vec3& x, const Vec3& u, double h) {
  const Vec3 step = eval(f, x + u * h) - eval(f, x) - postfactor(u, grad_gibbs(f, x)) * h;
  return norm(step);
}

void field_properties(Suite& suite) {
  suite.property("fields.convention_duality", 100, [](Sampler& s) {
    const VectorField f = s.cubic_field();
    const Vec3 x = s.vec();
    return expect(grad_alt(f, x) == transpose(grad_gibbs(f, x)), "grad_alt != grad_gibbs^T");
  });
  suite.property("fields.linear_field_gradient", 100, [](Sampler& s) {
    const Tensor3 a = s.tensor();
    const VectorField f = linear_field(a);
    const Vec3 x = s.vec();
    return first_of({
        expect_close(grad_gibbs(f, x), transpose(a), kRelTol, "grad_gibbs(A.x) = A^T"),
        expect_close(fd_grad(as_black_box(std::get<PolyField>(f), 0.1), x), transpose(a), 1e-13,
                     "central differences exact on linear fields"),
    });
  });
  suite.property("fields.taylor_order", 10, [](Sampler& s) {
    const PolyField f = s.cubic_field();
    const Vec3 x = s.vec(), u = s.unit_vec();
    std::array<double, 3> errs{};
    for (std::size_t k = 0; k < kSteps.size(); ++k) errs[k] = taylor_residual(f, x, u, kSteps[k]);
    return expect(fitted_order(kSteps, errs) >= kMinOrder, "first-order Taylor residual not O(h^2)");
  });
  suite.property("fields.fd_order", 10, [](Sampler& s) {
    const PolyField f = s.cubic_field();
    const Vec3 x = s.vec();
    const Tensor3 exact = grad_gibbs(f, x);
    std::array<double, 3> errs{};
    for (std::size_t k = 0; k < kSteps.size(); ++k) errs[k] = max_abs_diff(fd_grad(as_black_box(f, kSteps[k]), x), exact);
    return expect(fitted_order(kSteps, errs) >= kMinOrder, "central differences not second order");
  });
  suite.property("fields.monomial_derivative", kCases, [](Sampler& s) {
    const Powers p{static_cast<unsigned>(s.uniform(0, 5)), static_cast<unsigned>(s.uniform(0, 5)),
                   static_cast<unsigned>(s.uniform(0, 5))};
    const double c = s.uniform();
    const auto axis = static_cast<std::size_t>(s.uniform(0, 3));
    const Polynomial d = Polynomial{{c, p}}.derivative(axis);
    if (p[axis] == 0) return expect(d.is_zero(), "derivative of a constant monomial is not zero");
    Powers q = p;
    q[axis] -= 1;
    return expect(d == Polynomial{{c * p[axis], q}}, "d/dx_i c x^p != c p_i x^(p - e_i)");
  });
  suite.property("fields.divergence_is_trace", 100, [](Sampler& s) {
    const VectorField f = s.cubic_field();
    const Vec3 x = s.vec();
    return expect(divergence(f, x) == grad_gibbs(f, x).trace(), "divergence != trace(grad)");
  });
}

void kinematic_properties(Suite& suite) {
  suite.property("kinematics.decomposition", kCases, [](Sampler& s) {
    const VectorField f = s.cubic_field();
    const Vec3 x = s.vec();
    const Tensor3 g = grad_gibbs(f, x);
    const Decomposition p = decompose(g);
    return first_of({
        expect_close(p.d + p.omega, g, kRelTol, "d + omega = grad"),
        expect(p.d == transpose(p.d), "d != d^T"),
        expect(p.omega == -transpose(p.omega), "omega != -omega^T"),
        expect_close(p.omega(0, 1), 0.5 * (g(0, 1) - g(1, 0)), kRelTol, "omega(1,2) = (dv2/dx - dv1/dy)/2"),
        expect_close(p.omega(0, 2), -0.5 * (g(2, 0) - g(0, 2)), kRelTol, "omega(1,3) = -(dv1/dz - dv3/dx)/2"),
        expect_close(p.omega(1, 2), 0.5 * (g(1, 2) - g(2, 1)), kRelTol, "omega(2,3) = (dv3/dy - dv2/dz)/2"),
    });
  });
  suite.property("kinematics.dv_factor_forms", kCases, [](Sampler& s) {
    const VectorField f = s.cubic_field();
    const Vec3 x = s.vec(), dr = s.vec();
    return expect_close(dv_postfactor(f, x, dr), dv_prefactor(f, x, dr), 1e-13, "dr.G = G^T.dr");
  });
  suite.property("kinematics.omega_matrix_vs_bivector", kCases, [](Sampler& s) {
    const VectorField f = s.cubic_field();
    const Vec3 x = s.vec(), dx = s.vec();
    const Decomposition p = decompose(f, x);
    const Multivector ga = dot(vec(dx), omega_bivector(f, x));
    return first_of({
        expect(ga.is_pure_grade(1), "dx . omega_bivector is not a vector"),
        expect_close(postfactor(dx, p.omega), ga.vector_part(), kRelTol, "dx.omega = dx.(grad^v)/2"),
    });
  });
  suite.property("kinematics.rotation_factor_forms", kCases, [](Sampler& s) {
    const VectorField f = s.cubic_field();
    const Vec3 x = s.vec(), dr = s.vec();
    const Tensor3 omega = decompose(f, x).omega;
    return expect(postfactor(dr, omega) == prefactor(transpose(omega), dr), "dr.omega != omega^T.dr");
  });
  suite.property("kinematics.strain_split", kCases, [](Sampler& s) {
    const VectorField f = s.cubic_field();
    const Vec3 x = s.vec(), dx = s.vec();
    const StrainSplit split = strain_split(f, x, dx);
    return expect_close(split.compressive + split.incompressive, dv_postfactor(f, x, dx), kRelTol,
                        "dx(div v) + div(dx^v) = dv");
  });
  suite.property("kinematics.symmetric_split", kCases, [](Sampler& s) {
    const VectorField f = s.cubic_field();
    const Vec3 x = s.vec(), dx = s.vec();
    const Vec3 lhs = postfactor(dx, decompose(f, x).d);
    return expect_close(lhs, (dx * divergence(f, x) + bidi_forward(f, x, dx)) * 0.5, kRelTol,
                        "dx.d = (dx div v + <grad dx v>_1)/2");
  });
  suite.property("kinematics.antisymmetric_split", kCases, [](Sampler& s) {
    const VectorField f = s.cubic_field();
    const Vec3 x = s.vec(), dx = s.vec();
    const Vec3 lhs = postfactor(dx, decompose(f, x).omega);
    return expect_close(lhs, (dx * divergence(f, x) - bidi_reverse(f, x, dx)) * 0.5, kRelTol,
                        "dx.omega = (dx div v - <dx v grad>_1)/2");
  });
  suite.property("kinematics.vector_calculus_forms", kCases, [](Sampler& s) {
    const PolyField pf = s.cubic_field();
    const VectorField f = pf;
    const Vec3 x = s.vec(), dx = s.vec();
    Vec3 directional;  // (dx . grad) v
    for (std::size_t i = 0; i < 3; ++i) directional += eval(pf.partial(i), x) * dx[i];
    const Vec3 grad_dot = gradient(dot(dx, pf), x);  // grad (dx . v)
    const Decomposition p = decompose(f, x);
    return first_of({
        expect_close(postfactor(dx, p.d), (directional + grad_dot) * 0.5, kRelTol, "dx.d vector form"),
        expect_close(postfactor(dx, p.omega), (directional - grad_dot) * 0.5, kRelTol, "dx.omega vector form"),
        expect_close(bidi_forward(f, x, dx), grad_dot + strain_split(f, x, dx).incompressive, kRelTol,
                     "<grad dx v>_1 = grad(dx.v) + div(dx^v)"),
    });
  });
  suite.property("kinematics.solenoidal_bidirectional", kCases, [](Sampler& s) {
    const VectorField f = s.solenoidal_cubic_field();
    const Vec3 x = s.vec(), dx = s.vec();
    const Decomposition p = decompose(f, x);
    return first_of({
        expect_close(divergence(f, x), 0.0, kRelTol, "div curl A = 0"),
        expect_close(bidi_forward(f, x, dx), postfactor(dx, p.d) * 2.0, kRelTol, "<grad dx v>_1 = 2 dx.d"),
        expect_close(bidi_reverse(f, x, dx), postfactor(dx, p.omega) * -2.0, kRelTol, "<dx v grad>_1 = -2 dx.omega"),
    });
  });
  suite.property("kinematics.rotation_direction", kCases, [](Sampler& s) {
    const Vec3 w = s.vec(), x = s.vec(), dr = s.vec();
    const VectorField f = rotation_field(w);
    const Tensor3 omega = decompose(f, x).omega;
    return first_of({
        expect_close(postfactor(dr, omega), cross(w, dr), kRelTol, "dr.omega = w x dr"),
        expect_close(postfactor(dr, transpose(omega)), -cross(w, dr), kRelTol, "dr.omega^T = -w x dr"),
        expect_close(vorticity(grad_gibbs(f, x)), w * 2.0, kRelTol, "curl(w x r) = 2w"),
    });
  });
  suite.property("kinematics.report_consistency", 100, [](Sampler& s) {
    const VectorField f = s.cubic_field();
    const KinematicsReport r = report(f, s.vec());
    return first_of({
        expect(r.grad_alt == transpose(r.grad_gibbs), "report grad_alt"),
        expect_close(r.d + r.omega, r.grad_gibbs, kRelTol, "report d + omega"),
        expect(r.omega_bivector.is_pure_grade(2), "report omega_bivector not a bivector"),
        expect_close(vector_dual(r.omega_bivector * 2.0), r.vorticity, kRelTol, "vorticity = dual(2 omega_bivector)"),
        expect(r.divergence == r.grad_gibbs.trace(), "report divergence"),
    });
  });
}

void notation_properties(Suite& suite) {
  using notation::EvalContext;
  using notation::evaluate;

  suite.property("notation.library_coherence", kCases, [](Sampler& s) {
    EvalContext ctx{s.cubic_field(), s.vec(), {}};
    const Vec3 dr = s.vec();
    ctx.bindings.emplace("dr", dr);
    const Decomposition p = decompose(*ctx.field, ctx.point);
    return first_of({
        expect_close(evaluate("dr · (∇⊗v)", ctx).vector(), dv_postfactor(*ctx.field, ctx.point, dr), kDyadicTol,
                     "dr·(∇⊗v)"),
        expect_close(evaluate("(∇⊗v)† · dr", ctx).vector(), dv_prefactor(*ctx.field, ctx.point, dr), kDyadicTol,
                     "(∇⊗v)†·dr"),
        expect_close(evaluate("dr·(d)", ctx).vector(), postfactor(dr, p.d), kDyadicTol, "dr·(d)"),
        expect_close(evaluate("dr·(Ω)", ctx).vector(), postfactor(dr, p.omega), kDyadicTol, "dr·(Ω)"),
    });
  });
  suite.property("notation.transpose_law", kCases, [](Sampler& s) {
    EvalContext ctx{s.cubic_field(), s.vec(), {}};
    ctx.bindings.emplace("c", s.vec());
    ctx.bindings.emplace("a", s.vec());
    ctx.bindings.emplace("b", s.vec());
    for (const char* t : {"(∇⊗v)", "(a ⊗ b)", "d", "Ω", "(∇⊗v)†", "(a ⊗ v - v ⊗ b)"}) {
      const std::string post = std::string("c · ") + t;
      const std::string pre = std::string(t) + "† · c";
      const std::string outcome =
          expect_close(evaluate(post, ctx).vector(), evaluate(pre, ctx).vector(), kDyadicTol, t);
      if (!outcome.empty()) return outcome;
    }
    return std::string{};
  });
  suite.property("notation.parse_totality", 1, [](Sampler&) {
    for (const char* good : {"dr . (grad (x) v)'", "∇⊗v", "dr · (∇⊗v)", "(∇⊗v)† · dr", "∇ · v", "∇ ∧ v",
                             "∇ × v", "dr·(d)", "dr·(Ω)", "dr ∧ v", "∇ · (dr ∧ v)", "∇ (dr · v)"}) {
      try {
        (void)notation::parse(good);
      } catch (const notation::NotationError& e) {
        return std::string("rejected '") + good + "': " + e.what();
      }
    }
    for (const char* bad : {"@", "dr · ∇⊗v", "(∇⊗v", "∇⊗v)", "", "dr ·", "a ⊗ b · c"}) {
      try {
        (void)notation::parse(bad);
        return std::string("accepted malformed '") + bad + "'";
      } catch (const notation::NotationError&) {
      }
    }
    return std::string{};
  });
  suite.property("notation.audit_verdicts", 100, [](Sampler& s) {
    const VectorField f = s.cubic_field();
    const VectorField dilation = linear_field(Tensor3::identity() * s.uniform(0.5, 2.0));
    const Vec3 x = s.vec();
    const Tensor3 g = grad_gibbs(f, x);
    using notation::Verdict;
    return first_of({
        expect(notation::audit_convention(g, f, x).verdict == Verdict::gibbs, "gibbs verdict"),
        expect(notation::audit_convention(transpose(g), f, x).verdict == Verdict::alternative, "alternative verdict"),
        expect(notation::audit_convention(g * 2.0, f, x).verdict == Verdict::neither, "neither verdict"),
        expect(notation::audit_convention(grad_gibbs(dilation, x), dilation, x).verdict == Verdict::symmetric_ambiguous,
               "symmetric verdict"),
    });
  });
}

} // namespace

std::vector<PropertyResult> run_check_suite(std::uint64_t seed) {
  Suite suite(seed);
  ga_properties(suite);
  dyadic_properties(suite);
  field_properties(suite);
  kinematic_properties(suite);
  notation_properties(suite);
  return suite.take();
}

} // namespace dyadkit
