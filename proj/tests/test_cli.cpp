#include "doctest.h"

#include "dyadkit/cli.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = dyadkit::cli::main(args, out, err);
  return {status, out.str(), err.str()};
}

std::string field(const char* name) { return std::string(DYADKIT_DATA_DIR "/fields/") + name + ".json"; }

json fixture(const char* name) {
  std::ifstream in(std::string(DYADKIT_FIXTURE_DIR "/") + name);
  REQUIRE(in);
  return json::parse(in);
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = std::string(DYADKIT_BINARY_DIR "/") + name;
  std::ofstream(path) << body;
  return path;
}

} // namespace

TEST_CASE("argument parsing") {
  using namespace dyadkit::cli;
  const std::vector<std::string> args{"eval", "--point", "1", "-2", "0.5", "--bind", "dr=0,1,0", "--bind",
                                      "a=1e-3,2,3", "--output", "json", "dr · (∇⊗v)"};
  const RunConfig cfg = parse_args(args);
  CHECK(cfg.command == Command::eval);
  REQUIRE(cfg.point);
  CHECK(*cfg.point == dyadkit::Vec3{1, -2, 0.5});
  CHECK(cfg.bindings.at("dr") == dyadkit::Vec3{0, 1, 0});
  CHECK(cfg.bindings.at("a") == dyadkit::Vec3{1e-3, 2, 3});
  CHECK(cfg.output == OutputFormat::json);
  CHECK(cfg.expression == "dr · (∇⊗v)");
  CHECK(!cfg.field_path);

  const std::vector<std::string> check{"check", "--seed", "42"};
  CHECK(parse_args(check).seed == 42);

  for (std::vector<std::string> bad : {
           std::vector<std::string>{},
           {"frobnicate"},
           {"kinematics", "--point", "0", "0", "0"},
           {"kinematics", "--field", "f.json", "--point", "0", "0"},
           {"eval", "--point", "0", "0", "0", "--bind", "dr=1,2", "x"},
           {"eval", "--point", "0", "0", "0", "--bind", "v=1,2,3", "x"},
           {"eval", "--point", "0", "0", "0", "--bind", "=1,2,3", "x"},
           {"eval", "--point", "0", "0", "0", "--bind", "dr=a,b,c", "x"},
           {"check", "--output", "xml"},
           {"check", "--fd-step", "0"},
           {"check", "--seed", "-1"},
       }) {
    CAPTURE(bad.size());
    CHECK_THROWS_AS(parse_args(bad), ConfigError);
  }
}

TEST_CASE("kinematics reports match the stored fixtures") {
  const struct {
    const char* field;
    std::vector<std::string> point;
    const char* fixture;
  } cases[] = {
      {"rotation", {"1", "0", "0"}, "report_rotation.json"},
      {"shear", {"0", "0", "0"}, "report_shear.json"},
      {"dilation", {"1", "2", "3"}, "report_dilation.json"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.field);
    std::vector<std::string> args{"kinematics", "--field", field(c.field), "--output", "json", "--point"};
    args.insert(args.end(), c.point.begin(), c.point.end());
    const Outcome o = run(args);
    REQUIRE(o.status == 0);
    CHECK(json::parse(o.out) == fixture(c.fixture));
  }
}

TEST_CASE("shear report in text form") {
  const Outcome o = run({"kinematics", "--field", field("shear"), "--point", "0", "0", "0", "--output", "json"});
  REQUIRE(o.status == 0);
  const json j = json::parse(o.out);
  CHECK(j["d"][0][1] == 0.5);
  CHECK(j["omega"][0][1] == -0.5);

  const Outcome t = run({"kinematics", "--field", field("shear"), "--point", "0", "0", "0"});
  CHECK(t.status == 0);
  CHECK(t.out.find("divergence") != std::string::npos);
}

TEST_CASE("eval") {
  const Outcome rot =
      run({"eval", "--field", field("rotation"), "--point", "1", "0", "0", "--bind", "dr=0,1,0", "dr · (∇⊗v)"});
  CHECK(rot.status == 0);
  CHECK(rot.out == "(-1, 0, 0)\n");

  const Outcome js = run({"eval", "--field", field("rotation"), "--point", "1", "0", "0", "--bind", "dr=0,1,0",
                          "--output", "json", "dr . (grad (x) v)"});
  REQUIRE(js.status == 0);
  CHECK(json::parse(js.out) ==
        json{{"expression", "dr . (grad (x) v)"}, {"kind", "vector"}, {"value", {-1.0, 0.0, 0.0}}});

  const Outcome no_field = run({"eval", "--point", "0", "0", "0", "--bind", "a=1,0,0", "--bind", "b=0,1,0", "a ^ b"});
  CHECK(no_field.status == 0);
  CHECK(no_field.out == "1 e12\n");

  const Outcome fd = run({"eval", "--field", field("cubic"), "--point", "0.1", "0.2", "0.3", "--fd-step", "1e-4",
                          "--output", "json", "∇⊗v"});
  const Outcome exact =
      run({"eval", "--field", field("cubic"), "--point", "0.1", "0.2", "0.3", "--output", "json", "∇⊗v"});
  REQUIRE(fd.status == 0);
  REQUIRE(exact.status == 0);
  const json a = json::parse(fd.out)["value"], b = json::parse(exact.out)["value"];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(a[i][j].get<double>() == doctest::Approx(b[i][j].get<double>()).epsilon(1e-6));
}

TEST_CASE("eval script") {
  const Outcome o = run({"eval", "--field", field("shear"), "--point", "0", "0", "0", "--bind", "dr=0,1,0",
                         "@" DYADKIT_DATA_DIR "/expressions.txt"});
  REQUIRE(o.status == 0);
  CHECK(o.out.find("dr · (∇⊗v) = (1, 0, 0)\n") != std::string::npos);
  CHECK(o.out.find("∇ × v = (0, 0, -1)\n") != std::string::npos);

  const std::string bad = write_temp("bad_script.txt", "# fine\ndr · (∇⊗v)\ndr · ∇⊗v\n");
  const Outcome e = run({"eval", "--field", field("shear"), "--point", "0", "0", "0", "--bind", "dr=0,1,0", "@" + bad});
  CHECK(e.status == dyadkit::cli::kExpressionError);
  CHECK(e.err.find("line 3") != std::string::npos);

  CHECK(run({"eval", "--point", "0", "0", "0", "@/no/such/script"}).status == dyadkit::cli::kConfigError);
}

TEST_CASE("conventions") {
  const Outcome o = run({"conventions", "--field", field("shear"), "--point", "0", "0", "0", "(∇⊗v)†"});
  CHECK(o.status == 0);
  CHECK(o.out.find("audit: alternative") != std::string::npos);

  const Outcome j =
      run({"conventions", "--field", field("dilation"), "--point", "1", "2", "3", "--output", "json", "∇⊗v"});
  REQUIRE(j.status == 0);
  CHECK(json::parse(j.out)["audit"]["verdict"] == "symmetric-ambiguous");

  const Outcome g = run({"conventions", "--field", field("rotation"), "--point", "1", "0", "0", "--output", "json"});
  REQUIRE(g.status == 0);
  const json doc = json::parse(g.out);
  CHECK(doc["grad_gibbs"] == json::parse("[[0,1,0],[-1,0,0],[0,0,0]]"));
  CHECK(doc["grad_alt"] == json::parse("[[0,-1,0],[1,0,0],[0,0,0]]"));

  CHECK(run({"conventions", "--field", field("shear"), "--point", "0", "0", "0", "dr"}).status ==
        dyadkit::cli::kExpressionError);
}

TEST_CASE("exit codes") {
  using namespace dyadkit::cli;
  CHECK(run({"--help"}).status == kOk);
  CHECK(run({"bogus"}).status == kConfigError);
  CHECK(run({"kinematics", "--field", "/no/such/file.json", "--point", "0", "0", "0"}).status == kConfigError);

  const std::string neg = write_temp(
      "neg_power.json", R"({"type":"polynomial","components":[[{"coeff":1,"powers":[1,-1,0]}],[],[]]})");
  const Outcome spec = run({"kinematics", "--field", neg, "--point", "0", "0", "0"});
  CHECK(spec.status == kFieldSpecError);
  CHECK(spec.err.find("/components/0/0/powers/1") != std::string::npos);

  const std::string garbage = write_temp("garbage.json", "{ nope");
  CHECK(run({"kinematics", "--field", garbage, "--point", "0", "0", "0"}).status == kFieldSpecError);

  const Outcome parse_err = run({"eval", "--point", "0", "0", "0", "dr · ∇⊗v"});
  CHECK(parse_err.status == kExpressionError);
  CHECK(parse_err.err.find("offset 9") != std::string::npos);
  CHECK(run({"eval", "--point", "0", "0", "0", "@"}).status != kOk);
  CHECK(run({"eval", "--point", "0", "0", "0", "q"}).status == kExpressionError);
}

TEST_CASE("check is green and deterministic") {
  const Outcome a = run({"check", "--seed", "0"});
  const Outcome b = run({"check", "--seed", "0"});
  CHECK(a.status == dyadkit::cli::kOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("FAIL") == std::string::npos);

  const Outcome j1 = run({"check", "--seed", "9", "--output", "json"});
  const Outcome j2 = run({"check", "--seed", "9", "--output", "json"});
  CHECK(j1.status == 0);
  CHECK(j1.out == j2.out);
  CHECK(json::parse(j1.out).is_object());

  const std::vector<std::string> k{"kinematics", "--field", field("cubic"), "--point", "0.3", "-0.1", "2"};
  CHECK(run(k).out == run(k).out);
}
