#pragma once

// Field spec files:
//
//   { "type": "polynomial",
//     "components": [ [ {"coeff": 1.0, "powers": [2,0,0]}, ... ],   // v1
//                     [ ... ],                                       // v2
//                     [ ... ] ] }                                    // v3
//
// Unknown keys are rejected; powers must be non-negative integers.

#include "dyadkit/fields.hpp"

#include "json.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace dyadkit {

// Schema violation. pointer() is the JSON pointer of the offending value.
class FieldSpecError : public std::runtime_error {
 public:
  FieldSpecError(std::string pointer, const std::string& what)
      : std::runtime_error((pointer.empty() ? "/" : pointer) + ": " + what), pointer_(std::move(pointer)), detail_(what) {}
  const std::string& pointer() const { return pointer_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string pointer_;
  std::string detail_;
};

PolyField parse_field_spec(const nlohmann::json& doc);
// Parses JSON text; malformed JSON is reported as a FieldSpecError at "".
PolyField parse_field_spec(const std::string& text);
// Throws std::runtime_error when the file cannot be read.
PolyField load_field_spec(const std::filesystem::path& path);

nlohmann::json to_json(const PolyField& f);

} // namespace dyadkit
