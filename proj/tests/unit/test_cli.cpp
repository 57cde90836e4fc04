#include "helpers.hpp"

#include "minlin/cli/expression.hpp"
#include "minlin/cli/instance.hpp"
#include "minlin/cli/report.hpp"
#include "minlin/cli/suite.hpp"
#include "minlin/error.hpp"

#include <doctest.h>

using namespace minlin;
using namespace minlin::cli;

namespace {

constexpr const char* kTwoPoint = R"({
  "points": ["a", "b"],
  "metric": [["0", "1"], ["1", "0"]],
  "class": {"kind": "full"},
  "functions": {"f": ["0", "1"], "g": ["2", "0"], "h": ["0", "+inf"]},
  "measures": {"Q": ["1/2", "1/2"], "R": ["-1", "2"]},
  "delta_sets": {"A": ["1", "2"]}
})";

constexpr const char* kConeNoH = R"({
  "points": ["a", "b"],
  "class": {"kind": "finite_cone", "generators": [["0", "1"]]},
  "functions": {"f": ["5", "0"]},
  "expect_fail": ["biconjugation"]
})";

std::string error_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("instance parsing") {
  const Instance inst = parse_instance(kTwoPoint);
  CHECK(inst.space.size() == 2);
  CHECK(inst.space.has_metric());
  CHECK(inst.function_class.kind() == FunctionClass::Kind::Full);
  REQUIRE(inst.functions.size() == 3);
  CHECK(inst.functions[2].name == "h");
  CHECK(inst.find_function("h")->str() == "(0, +inf)");
  CHECK(inst.find_measure("Q") != nullptr);
  CHECK(inst.find_delta_set("A") != nullptr);
  CHECK(inst.find_function("nope") == nullptr);

  const Instance minimal = parse_instance(R"({"points": ["a", "b"]})");
  CHECK(minimal.space.size() == 2);
  CHECK(minimal.function_class.kind() == FunctionClass::Kind::Full);

  const Instance cone = parse_instance(kConeNoH);
  CHECK(cone.function_class.kind() == FunctionClass::Kind::FiniteCone);
  CHECK(cone.expects_failure("biconjugation"));
  CHECK_FALSE(cone.expects_failure("minimize"));
}

TEST_CASE("instance errors") {
  CHECK_THROWS_AS(parse_instance(R"({"points": ["a", "b"], "functions": {"f": ["0.5", "1"]}})"),
                  ParseError);
  CHECK(error_of(R"({"points": ["a", "b"], "functions": {"f": ["0.5", "1"]}})").find("functions.f") !=
        std::string::npos);
  CHECK_THROWS_AS(parse_instance(R"({"points": ["a", "b"], "measures": {"Q": ["+inf", "1"]}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"points": ["a", "b"], "functions": {"f": ["0"]}})"), Error);
  CHECK_THROWS_AS(parse_instance(R"({"points": ["a", "b"], "class": {"kind": "lipschitz"}})"),
                  InvalidInput);
  CHECK_THROWS_AS(parse_instance(R"({"points": ["a", "b"], "class": {"kind": "round"}})"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"points": ["a", "b"] "x": 1})"), ParseError);
  CHECK(error_of("{\n  \"points\": [\"a\",\n  }").find("line") != std::string::npos);

  const std::string tri = error_of(R"({
    "points": ["a", "b", "c"],
    "metric": [["0", "1", "5"], ["1", "0", "1"], ["5", "1", "0"]]
  })");
  CHECK(tri.find("triangle") != std::string::npos);
  CHECK(tri.find("(a, b, c)") != std::string::npos);
}

TEST_CASE("suite names") {
  CHECK(parse_suite("all") == Suite::All);
  CHECK(parse_suite("infconv") == Suite::InfConv);
  CHECK_THROWS_AS(parse_suite("nonsense"), InvalidInput);
}

TEST_CASE("two-point full instance passes every suite") {
  const auto report = run_suite(parse_instance(kTwoPoint), Suite::All, 0);
  CHECK(report.all_passed());
  CHECK(report.count(Status::Pass) > 20);
  for (const auto& item : report.items) CHECK_FALSE(item.anchor.empty());
}

TEST_CASE("hypothesis failure is reported as expected") {
  const auto report = run_suite(parse_instance(kConeNoH), Suite::Biconjugation, 0);
  CHECK_FALSE(report.all_passed());
  CHECK(report.expected_failures() == report.count(Status::Fail));
  bool gap = false;
  for (const auto& item : report.items) {
    if (item.status != Status::Fail) continue;
    CHECK(item.detail.find("hypothesis (H) fails: expected") != std::string::npos);
    gap = gap || item.detail.find("f^×× = (0, 0) < f = (5, 0)") != std::string::npos;
  }
  CHECK(gap);

  // The same instance without the declaration fails plainly.
  const auto plain = run_suite(parse_instance(R"({
    "points": ["a", "b"],
    "class": {"kind": "finite_cone", "generators": [["0", "1"]]},
    "functions": {"f": ["5", "0"]}
  })"),
                               Suite::Biconjugation, 0);
  CHECK(plain.expected_failures() == 0);
  CHECK_FALSE(plain.all_passed());
}

TEST_CASE("minimize suite") {
  const auto report = run_suite(parse_instance(R"({
    "points": ["x1", "x2", "x3"],
    "functions": {"f": ["3", "1", "2"]}
  })"),
                                Suite::Minimize, 0);
  CHECK(report.all_passed());
  REQUIRE_FALSE(report.items.empty());
  CHECK(report.items[0].detail.find("simplex min = 1,") != std::string::npos);
  CHECK(report.items[0].detail.find("conv{x2}") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  const Instance inst = parse_instance(kTwoPoint);
  const auto a = run_suite(inst, Suite::All, 42);
  const auto b = run_suite(inst, Suite::All, 42);
  CHECK(a.to_text() == b.to_text());
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.to_json()["seed"] == 42);
}

TEST_CASE("expression evaluation") {
  const Instance inst = parse_instance(kTwoPoint);
  CHECK(format_value(evaluate(inst, "T(f)(Q)")) == "1/2");
  CHECK(format_value(evaluate(inst, "F(f)(R)")) == "+inf");
  CHECK(format_value(evaluate(inst, "conjugate(f, zero)")) == "0");
  CHECK(format_value(evaluate(inst, "conjugate(f,g)")) == "2");
  CHECK(format_value(evaluate(inst, "sigma(A)(R)")) == "+inf");
  CHECK(format_value(evaluate(inst, "sigma(A)(Q)")) == "3/2");
  CHECK(format_value(evaluate(inst, "biconjugate(h)")) == "(0, +inf)");
  CHECK(format_value(evaluate(inst, "envelope(f)")) == "(0, 1)");
  CHECK(format_value(evaluate(inst, "infconv(f, g)(zero)")) == "-1");
  CHECK(value_to_json(evaluate(inst, "T(f)(Q)")) == "1/2");

  CHECK_THROWS_AS(evaluate(inst, "conjugate(f)"), ParseError);
  CHECK_THROWS_AS(evaluate(inst, "T(nope)(Q)"), ParseError);
  CHECK_THROWS_AS(evaluate(inst, "wobble(f)"), ParseError);
  CHECK_THROWS_AS(evaluate(inst, "T(f)(Q"), ParseError);
  CHECK_THROWS_AS(evaluate(inst, "T(f)(R)"), PreconditionError);
}
