#include "minlin/cli/expression.hpp"
#include "minlin/cli/instance.hpp"
#include "minlin/cli/suite.hpp"
#include "minlin/error.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitInputError = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minlin: exact checks of conjugacy, inf-convolution and the measure transform"};
  app.require_subcommand(1);

  std::string path;
  std::string suite_name = "all";
  std::uint64_t seed = 0;
  bool json = false;
  std::string expression;

  auto* check = app.add_subcommand("check", "Run identity suites on an instance");
  check->add_option("instance", path, "Instance JSON file")->required();
  check->add_option("--suite", suite_name,
                    "biconjugation | infconv | minimax | transform | isotone | minimize | delta | all");
  check->add_option("--seed", seed, "Seed for sampled measures and test functions");
  check->add_flag("--json", json, "Emit the report as JSON");

  auto* eval = app.add_subcommand("eval", "Evaluate an expression against an instance");
  eval->add_option("instance", path, "Instance JSON file")->required();
  eval->add_option("expression", expression, "e.g. \"T(f)(Q)\"")->required();
  eval->add_flag("--json", json, "Emit the value as JSON");

  auto* validate = app.add_subcommand("validate", "Parse and validate an instance");
  validate->add_option("instance", path, "Instance JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    const auto instance = minlin::cli::load_instance(path);

    if (*validate) {
      std::cout << "valid: " << instance.space.size() << " points, class "
                << minlin::to_string(instance.function_class.kind()) << ", "
                << instance.functions.size() << " functions, " << instance.measures.size()
                << " measures, " << instance.delta_sets.size() << " delta sets\n";
      return kExitPass;
    }

    if (*eval) {
      const auto value = minlin::cli::evaluate(instance, expression);
      if (json) {
        nlohmann::ordered_json out;
        out["expression"] = expression;
        out["value"] = minlin::cli::value_to_json(value);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << minlin::cli::format_value(value) << "\n";
      }
      return kExitPass;
    }

    const auto suite = minlin::cli::parse_suite(suite_name);
    const auto report = minlin::cli::run_suite(instance, suite, seed);
    if (json) {
      std::cout << report.to_json().dump(2) << "\n";
    } else {
      std::cout << report.to_text();
    }
    return report.all_passed() ? kExitPass : kExitIdentityFailure;
  } catch (const minlin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
