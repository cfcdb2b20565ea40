#pragma once

// Command-line front end.
//
//   dyadkit eval        --point x y z [--field f.json] [--bind name=x,y,z]... EXPR | @script
//   dyadkit kinematics  --field f.json --point x y z
//   dyadkit conventions --field f.json --point x y z [EXPR]
//   dyadkit check       [--seed N]
//
// Shared flags: --output text|json, --fd-step h (differentiate the field by
// central differences instead of symbolically).
//
// Exit status: 0 ok, 1 malformed configuration, 2 field-spec schema
// violation, 3 expression parse/evaluation error, 4 identity-suite failure.

#include "dyadkit/vec3.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dyadkit::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 1,
  kFieldSpecError = 2,
  kExpressionError = 3,
  kCheckFailure = 4,
};

enum class Command { eval, kinematics, conventions, check };
enum class OutputFormat { text, json };

struct RunConfig {
  Command command = Command::check;
  std::optional<std::string> field_path;
  std::optional<Vec3> point;
  std::map<std::string, Vec3, std::less<>> bindings;
  // Either a single expression or "@path" naming a file with one per line.
  std::optional<std::string> expression;
  OutputFormat output = OutputFormat::text;
  std::optional<double> fd_step;
  std::uint64_t seed = 0;
};

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// args excludes the program name. Throws ConfigError.
RunConfig parse_args(std::span<const std::string> args);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// parse_args + run; usage problems are reported on err with status 1.
int main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace dyadkit::cli
