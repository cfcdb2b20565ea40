#include "dyadkit/field_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace dyadkit {

using nlohmann::json;

namespace {

std::string escape_key(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

void reject_unknown_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw FieldSpecError(where + "/" + escape_key(key), "unknown key");
  }
}

const json& require(const json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw FieldSpecError(where + "/" + key, "missing required key");
  return *it;
}

unsigned parse_power(const json& p, const std::string& where) {
  if (p.is_number_unsigned()) return p.get<unsigned>();
  if (p.is_number_integer()) throw FieldSpecError(where, "exponent must be non-negative");
  if (p.is_number_float()) {
    const double d = p.get<double>();
    if (d >= 0.0 && d == std::floor(d) && d < 4.0e9) return static_cast<unsigned>(d);
  }
  throw FieldSpecError(where, "exponent must be a non-negative integer");
}

Monomial parse_monomial(const json& m, const std::string& where) {
  if (!m.is_object()) throw FieldSpecError(where, "monomial must be an object");
  reject_unknown_keys(m, where, {"coeff", "powers"});
  const json& coeff = require(m, where, "coeff");
  if (!coeff.is_number()) throw FieldSpecError(where + "/coeff", "coefficient must be a number");
  const json& powers = require(m, where, "powers");
  if (!powers.is_array() || powers.size() != 3) {
    throw FieldSpecError(where + "/powers", "powers must be an array of three integers");
  }
  Monomial out;
  out.coeff = coeff.get<double>();
  if (!std::isfinite(out.coeff)) throw FieldSpecError(where + "/coeff", "coefficient must be finite");
  for (std::size_t k = 0; k < 3; ++k) {
    out.powers[k] = parse_power(powers[k], where + "/powers/" + std::to_string(k));
  }
  return out;
}

} // namespace

PolyField parse_field_spec(const json& doc) {
  if (!doc.is_object()) throw FieldSpecError("", "field spec must be a JSON object");
  reject_unknown_keys(doc, "", {"type", "components"});
  const json& type = require(doc, "", "type");
  if (!type.is_string() || type.get<std::string>() != "polynomial") {
    throw FieldSpecError("/type", "only \"polynomial\" fields are supported");
  }
  const json& comps = require(doc, "", "components");
  if (!comps.is_array() || comps.size() != 3) {
    throw FieldSpecError("/components", "components must be an array of three monomial lists");
  }
  std::array<Polynomial, 3> polys;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string where = "/components/" + std::to_string(i);
    if (!comps[i].is_array()) throw FieldSpecError(where, "component must be an array of monomials");
    std::vector<Monomial> terms;
    for (std::size_t k = 0; k < comps[i].size(); ++k) {
      terms.push_back(parse_monomial(comps[i][k], where + "/" + std::to_string(k)));
    }
    polys[i] = Polynomial(terms);
  }
  return PolyField(std::move(polys));
}

PolyField parse_field_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FieldSpecError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_field_spec(doc);
}

PolyField load_field_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read field spec " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_field_spec(ss.str());
}

json to_json(const PolyField& f) {
  json comps = json::array();
  for (const Polynomial& p : f.components()) {
    json terms = json::array();
    for (const auto& [powers, coeff] : p.terms()) {
      terms.push_back({{"coeff", coeff}, {"powers", {powers[0], powers[1], powers[2]}}});
    }
    comps.push_back(std::move(terms));
  }
  return {{"type", "polynomial"}, {"components", std::move(comps)}};
}

} // namespace dyadkit
