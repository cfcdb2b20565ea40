#include "dyadkit/notation.hpp"

#include <algorithm>

namespace dyadkit::notation {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::gibbs: return "gibbs";
    case Verdict::alternative: return "alternative";
    case Verdict::symmetric_ambiguous: return "symmetric-ambiguous";
    case Verdict::neither: return "neither";
  }
  return "?";
}

AuditResult audit_convention(const Tensor3& t, const VectorField& f, const Vec3& x) {
  const Tensor3 gibbs = grad_gibbs(f, x);
  const Tensor3 alt = transpose(gibbs);

  AuditResult r;
  r.max_abs_deviation_gibbs = max_abs_diff(t, gibbs);
  r.max_abs_deviation_alt = max_abs_diff(t, alt);

  const double tol = kAuditRelTol * std::max(max_abs(gibbs), max_abs(t));
  const bool symmetric = max_abs_diff(gibbs, alt) <= tol;
  const bool is_gibbs = r.max_abs_deviation_gibbs <= tol;
  const bool is_alt = r.max_abs_deviation_alt <= tol;

  if (symmetric) {
    r.verdict = Verdict::symmetric_ambiguous;
  } else if (is_gibbs) {
    r.verdict = Verdict::gibbs;
  } else if (is_alt) {
    r.verdict = Verdict::alternative;
  } else {
    r.verdict = Verdict::neither;
  }
  return r;
}

} // namespace dyadkit::notation
