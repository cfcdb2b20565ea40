#include "dyadkit/cli.hpp"

#include "dyadkit/check_suite.hpp"
#include "dyadkit/field_io.hpp"
#include "dyadkit/json_io.hpp"
#include "dyadkit/kinematics.hpp"
#include "dyadkit/notation.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace dyadkit::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string field;
  std::vector<double> point;
  std::vector<std::string> binds;
  std::string expression;
  std::string output = "text";
  std::optional<double> fd_step;
  std::uint64_t seed = 0;
};

void add_common(CLI::App& sub, Options& o) {
  sub.add_option("--output", o.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub.add_option("--fd-step", o.fd_step, "differentiate by central differences with this step");
}

void add_point(CLI::App& sub, Options& o, bool required) {
  sub.add_option("--point", o.point, "evaluation point x y z")->expected(3)->allow_extra_args(false)->required(required);
}

struct Parsed {
  std::unique_ptr<CLI::App> app;
  Options opts;
  CLI::App* eval = nullptr;
  CLI::App* kinematics = nullptr;
  CLI::App* conventions = nullptr;
  CLI::App* check = nullptr;
};

std::unique_ptr<Parsed> build_app() {
  auto p = std::make_unique<Parsed>();
  p->app = std::make_unique<CLI::App>("Gibbsian dyadics, velocity-gradient kinematics and GA identities", "dyadkit");
  p->app->require_subcommand(1);
  Options& o = p->opts;

  p->eval = p->app->add_subcommand("eval", "evaluate a tensor-notation expression at a point");
  p->eval->add_option("--field", o.field, "polynomial field spec (JSON)");
  add_point(*p->eval, o, true);
  p->eval->add_option("--bind", o.binds, "bind a vector: name=x,y,z")->allow_extra_args(false);
  p->eval->add_option("expression", o.expression, "expression, or @file with one expression per line")->required();
  add_common(*p->eval, o);

  p->kinematics = p->app->add_subcommand("kinematics", "velocity-gradient report at a point");
  p->kinematics->add_option("--field", o.field, "polynomial field spec (JSON)")->required();
  add_point(*p->kinematics, o, true);
  add_common(*p->kinematics, o);

  p->conventions = p->app->add_subcommand("conventions", "compare the Gibbs and alternative gradient forms");
  p->conventions->add_option("--field", o.field, "polynomial field spec (JSON)")->required();
  add_point(*p->conventions, o, true);
  p->conventions->add_option("expression", o.expression, "tensor expression to audit against both forms");
  add_common(*p->conventions, o);

  p->check = p->app->add_subcommand("check", "run the seeded identity suite");
  p->check->add_option("--seed", o.seed, "random seed")->default_val(0);
  add_common(*p->check, o);
  return p;
}

std::vector<std::string> reversed(std::span<const std::string> args) { return {args.rbegin(), args.rend()}; }

Vec3 parse_triple(const std::string& text, const std::string& what) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(what + ": '" + item + "' is not a number");
    }
  }
  if (v.size() != 3) throw ConfigError(what + ": expected three comma-separated numbers");
  return {v[0], v[1], v[2]};
}

RunConfig to_config(const Parsed& p) {
  const Options& o = p.opts;
  RunConfig cfg;
  if (p.eval->parsed()) cfg.command = Command::eval;
  if (p.kinematics->parsed()) cfg.command = Command::kinematics;
  if (p.conventions->parsed()) cfg.command = Command::conventions;
  if (p.check->parsed()) cfg.command = Command::check;

  if (!o.field.empty()) cfg.field_path = o.field;
  if (o.point.size() == 3) cfg.point = Vec3{o.point[0], o.point[1], o.point[2]};
  for (const std::string& b : o.binds) {
    const auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("--bind expects name=x,y,z, got '" + b + "'");
    const std::string name = b.substr(0, eq);
    if (notation::is_reserved_name(name)) throw ConfigError("--bind: '" + name + "' is a reserved name");
    cfg.bindings[name] = parse_triple(b.substr(eq + 1), "--bind " + name);
  }
  if (!o.expression.empty()) cfg.expression = o.expression;
  cfg.output = o.output == "json" ? OutputFormat::json : OutputFormat::text;
  if (o.fd_step) {
    if (!(*o.fd_step > 0.0)) throw ConfigError("--fd-step must be positive");
    cfg.fd_step = o.fd_step;
  }
  cfg.seed = o.seed;
  return cfg;
}

// ---- rendering helpers

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string fmt(const Vec3& v) { return "(" + fmt(v.x) + ", " + fmt(v.y) + ", " + fmt(v.z) + ")"; }

std::string indent(const std::string& block) {
  std::string out;
  std::istringstream in(block);
  for (std::string line; std::getline(in, line);) out += "  " + line + "\n";
  return out;
}

void side_by_side(std::ostream& out, const std::string& left_title, const Tensor3& left,
                  const std::string& right_title, const Tensor3& right) {
  std::istringstream l(to_string(left)), r(to_string(right));
  constexpr std::size_t width = 39;  // three columns of 13
  std::string lt = "  " + left_title;
  // pad by display columns, not bytes
  std::size_t cols = 0;
  for (unsigned char ch : lt) cols += (ch & 0xC0) != 0x80;
  out << lt << std::string(cols < width + 2 ? width + 2 - cols : 1, ' ') << "   " << right_title << "\n";
  for (std::string a, b; std::getline(l, a) && std::getline(r, b);) out << "  " << a << "   |" << b << "\n";
}

// ---- commands

VectorField load_field(const RunConfig& cfg) {
  if (!cfg.field_path) throw ConfigError("--field is required");
  PolyField f;
  try {
    f = load_field_spec(*cfg.field_path);
  } catch (const FieldSpecError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  if (cfg.fd_step) return as_black_box(f, *cfg.fd_step);
  return f;
}

Vec3 require_point(const RunConfig& cfg) {
  if (!cfg.point) throw ConfigError("--point x y z is required");
  return *cfg.point;
}

// A notation error inside an @script, tagged with its file and line.
class ScriptError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SourceLine {
  std::size_t number = 0;  // 0 for a command-line expression
  std::string text;
};

std::vector<SourceLine> expressions_of(const std::string& spec) {
  if (spec.empty() || spec[0] != '@') return {{0, spec}};
  std::ifstream in(spec.substr(1));
  if (!in) throw ConfigError("cannot read expression script " + spec.substr(1));
  std::vector<SourceLine> out;
  std::size_t number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

int run_eval(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.expression) throw ConfigError("eval needs an expression");
  notation::EvalContext ctx;
  if (cfg.field_path) ctx.field = load_field(cfg);
  ctx.point = require_point(cfg);
  ctx.bindings = cfg.bindings;

  const std::vector<SourceLine> exprs = expressions_of(*cfg.expression);
  const bool script = (*cfg.expression)[0] == '@';
  json results = json::array();
  for (const auto& [number, src] : exprs) {
    std::optional<notation::Value> evaluated;
    try {
      evaluated = notation::evaluate(src, ctx);
    } catch (const notation::NotationError& e) {
      if (!script) throw;
      throw ScriptError(cfg.expression->substr(1) + " line " + std::to_string(number) + ": " + e.what());
    }
    const notation::Value& v = *evaluated;
    if (cfg.output == OutputFormat::json) {
      json j = to_json(v);
      j["expression"] = src;
      results.push_back(std::move(j));
    } else if (script) {
      const std::string text = notation::to_string(v);
      out << src << " =" << (v.kind() == notation::ValueKind::tensor ? "\n" + text : " " + text + "\n");
    } else {
      const std::string text = notation::to_string(v);
      out << text << (text.back() == '\n' ? "" : "\n");
    }
  }
  if (cfg.output == OutputFormat::json) out << (script ? results : results.at(0)).dump(2) << "\n";
  return kOk;
}

int run_kinematics(const RunConfig& cfg, std::ostream& out) {
  const VectorField f = load_field(cfg);
  const KinematicsReport r = report(f, require_point(cfg));
  if (cfg.output == OutputFormat::json) {
    out << to_json(r).dump(2) << "\n";
    return kOk;
  }
  out << "point: " << fmt(r.point) << "\n";
  out << "grad_gibbs = ∇⊗v   (row i = ∂v/∂x_i)\n" << indent(to_string(r.grad_gibbs));
  out << "grad_alt = (∇⊗v)†  (row i = ∇v_i)\n" << indent(to_string(r.grad_alt));
  out << "d (rate of strain)\n" << indent(to_string(r.d));
  out << "Ω (rate of rotation, postfactor: dr·Ω)\n" << indent(to_string(r.omega));
  out << "Ω bivector = ½ ∇∧v: " << to_string(r.omega_bivector) << "\n";
  out << "vorticity ∇×v: " << fmt(r.vorticity) << "\n";
  out << "divergence ∇·v: " << fmt(r.divergence) << "\n";
  return kOk;
}

int run_conventions(const RunConfig& cfg, std::ostream& out) {
  const VectorField f = load_field(cfg);
  const Vec3 x = require_point(cfg);
  const Tensor3 gibbs = grad_gibbs(f, x);
  const Tensor3 alt = transpose(gibbs);
  const Decomposition parts = decompose(gibbs);

  std::optional<notation::AuditResult> audit;
  if (cfg.expression) {
    notation::EvalContext ctx{f, x, cfg.bindings};
    const notation::Value v = notation::evaluate(*cfg.expression, ctx);
    if (v.kind() != notation::ValueKind::tensor) {
      throw notation::EvalError(notation::EvalError::Kind::type_mismatch, 0,
                                "audited expression must be a tensor, got " + std::string(to_string(v.kind())));
    }
    audit = notation::audit_convention(v.tensor(), f, x);
  }

  if (cfg.output == OutputFormat::json) {
    json j = {{"point", to_json(x)},
              {"grad_gibbs", to_json(gibbs)},
              {"grad_alt", to_json(alt)},
              {"difference", to_json(gibbs - alt)},
              {"omega_postfactor", to_json(parts.omega)},
              {"omega_prefactor", to_json(transpose(parts.omega))}};
    if (audit) j["audit"] = to_json(*audit);
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "point: " << fmt(x) << "\n";
  side_by_side(out, "∇⊗v (Gibbs)", gibbs, "(∇⊗v)† (alternative)", alt);
  out << "  ∇⊗v - (∇⊗v)†\n" << indent(to_string(gibbs - alt));
  side_by_side(out, "Ω (postfactor, dr·Ω)", parts.omega, "Ω† (prefactor, Ω†·dr)", transpose(parts.omega));
  if (audit) {
    out << "audit: " << notation::to_string(audit->verdict) << " (max |t - ∇⊗v| = " << fmt(audit->max_abs_deviation_gibbs)
        << ", max |t - (∇⊗v)†| = " << fmt(audit->max_abs_deviation_alt) << ")\n";
  }
  return kOk;
}

int run_check(const RunConfig& cfg, std::ostream& out) {
  const std::vector<PropertyResult> results = run_check_suite(cfg.seed);
  const auto failed = static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const PropertyResult& r) { return !r.passed(); }));
  if (cfg.output == OutputFormat::json) {
    json props = json::array();
    for (const PropertyResult& r : results) {
      props.push_back({{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"first_failure", r.first_failure}});
    }
    out << json{{"seed", cfg.seed}, {"properties", props}, {"passed", results.size() - failed}, {"failed", failed}}.dump(2)
        << "\n";
  } else {
    for (const PropertyResult& r : results) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases";
      if (!r.passed()) out << ", " << r.failures << " failed: " << r.first_failure;
      out << ")\n";
    }
    out << "seed " << cfg.seed << ": " << results.size() - failed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kOk : kCheckFailure;
}

} // namespace

RunConfig parse_args(std::span<const std::string> args) {
  auto p = build_app();
  try {
    p->app->parse(reversed(args));
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  return to_config(*p);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::eval: return run_eval(cfg, out);
      case Command::kinematics: return run_kinematics(cfg, out);
      case Command::conventions: return run_conventions(cfg, out);
      case Command::check: return run_check(cfg, out);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const FieldSpecError& e) {
    err << "error: field spec violation at " << (e.pointer().empty() ? "/" : e.pointer()) << ": " << e.detail() << "\n";
    return kFieldSpecError;
  } catch (const notation::NotationError& e) {
    err << "error: " << e.what() << "\n";
    return kExpressionError;
  } catch (const ScriptError& e) {
    err << "error: " << e.what() << "\n";
    return kExpressionError;
  }
  return kConfigError;
}

int main(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  auto p = build_app();
  try {
    p->app->parse(reversed(args));
  } catch (const CLI::CallForHelp& e) {
    out << p->app->help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kConfigError;
  }
  RunConfig cfg;
  try {
    cfg = to_config(*p);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return run(cfg, out, err);
}

} // namespace dyadkit::cli
