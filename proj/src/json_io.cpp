#include "dyadkit/json_io.hpp"

#include <stdexcept>

namespace dyadkit {

using nlohmann::json;

namespace {

double clean(double x) { return x == 0.0 ? 0.0 : x; }

double number_at(const json& j, const char* what) {
  if (!j.is_number()) throw std::invalid_argument(std::string(what) + " must be a number");
  return j.get<double>();
}

} // namespace

json to_json(const Vec3& v) { return json::array({clean(v.x), clean(v.y), clean(v.z)}); }

json to_json(const Tensor3& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < 3; ++i) rows.push_back(to_json(t.row(i)));
  return rows;
}

json to_json(const Multivector& m) {
  json out = json::object();
  for (Blade b : kCanonicalBlades) {
    out[b == Blade::scalar ? "scalar" : blade_name(b)] = clean(m[b]);
  }
  return out;
}

json to_json(const KinematicsReport& r) {
  return {
      {"point", to_json(r.point)},
      {"grad_gibbs", to_json(r.grad_gibbs)},
      {"grad_alt", to_json(r.grad_alt)},
      {"d", to_json(r.d)},
      {"omega", to_json(r.omega)},
      {"omega_bivector",
       {{"e12", clean(r.omega_bivector[Blade::e12])},
        {"e13", clean(r.omega_bivector[Blade::e13])},
        {"e23", clean(r.omega_bivector[Blade::e23])}}},
      {"vorticity", to_json(r.vorticity)},
      {"divergence", clean(r.divergence)},
  };
}

json to_json(const notation::Value& v) {
  using notation::ValueKind;
  json value;
  switch (v.kind()) {
    case ValueKind::scalar: value = clean(v.scalar()); break;
    case ValueKind::vector: value = to_json(v.vector()); break;
    case ValueKind::tensor: value = to_json(v.tensor()); break;
    case ValueKind::multivector: value = to_json(v.multivector()); break;
  }
  return {{"kind", notation::to_string(v.kind())}, {"value", std::move(value)}};
}

json to_json(const notation::AuditResult& a) {
  return {{"verdict", notation::to_string(a.verdict)},
          {"max_abs_deviation_gibbs", clean(a.max_abs_deviation_gibbs)},
          {"max_abs_deviation_alt", clean(a.max_abs_deviation_alt)}};
}

Vec3 vec3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("vector must be an array of three numbers");
  return {number_at(j[0], "vector component"), number_at(j[1], "vector component"),
          number_at(j[2], "vector component")};
}

Tensor3 tensor_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("matrix must be an array of three rows");
  return Tensor3::from_rows(vec3_from_json(j[0]), vec3_from_json(j[1]), vec3_from_json(j[2]));
}

KinematicsReport report_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("report must be an object");
  KinematicsReport r;
  r.point = vec3_from_json(j.at("point"));
  r.grad_gibbs = tensor_from_json(j.at("grad_gibbs"));
  r.grad_alt = tensor_from_json(j.at("grad_alt"));
  r.d = tensor_from_json(j.at("d"));
  r.omega = tensor_from_json(j.at("omega"));
  const json& bv = j.at("omega_bivector");
  r.omega_bivector[Blade::e12] = number_at(bv.at("e12"), "e12");
  r.omega_bivector[Blade::e13] = number_at(bv.at("e13"), "e13");
  r.omega_bivector[Blade::e23] = number_at(bv.at("e23"), "e23");
  r.vorticity = vec3_from_json(j.at("vorticity"));
  r.divergence = number_at(j.at("divergence"), "divergence");
  return r;
}

} // namespace dyadkit
