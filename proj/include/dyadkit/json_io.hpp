#pragma once

// JSON renderings used by the CLI. Matrices are row-major arrays of arrays,
// vectors are three-element arrays, negative zero is written as 0.
//
// KinematicsReport:
//   { "point", "grad_gibbs", "grad_alt", "d", "omega",
//     "omega_bivector": {"e12", "e13", "e23"}, "vorticity", "divergence" }
//
// AuditResult:
//   { "verdict", "max_abs_deviation_gibbs", "max_abs_deviation_alt" }

#include "dyadkit/kinematics.hpp"
#include "dyadkit/notation.hpp"

#include "json.hpp"

namespace dyadkit {

nlohmann::json to_json(const Vec3& v);
nlohmann::json to_json(const Tensor3& t);
// All eight coefficients keyed "scalar", "e1", ..., "e123".
nlohmann::json to_json(const Multivector& m);
nlohmann::json to_json(const KinematicsReport& r);
nlohmann::json to_json(const notation::Value& v);
nlohmann::json to_json(const notation::AuditResult& a);

// Throw std::invalid_argument on shape mismatch.
Vec3 vec3_from_json(const nlohmann::json& j);
Tensor3 tensor_from_json(const nlohmann::json& j);
KinematicsReport report_from_json(const nlohmann::json& j);

} // namespace dyadkit
