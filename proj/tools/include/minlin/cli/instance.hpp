#pragma once

#include "minlin/ext_function.hpp"
#include "minlin/function_class.hpp"
#include "minlin/measure.hpp"
#include "minlin/space.hpp"
#include "minlin/transform.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace minlin::cli {

template <typename T>
struct Named {
  std::string name;
  T value;
};

/// A validated problem instance. Named objects keep their declaration order.
struct Instance {
  Space space;
  FunctionClass function_class;
  std::vector<Named<ExtFun>> functions;
  std::vector<Named<Measure>> measures;
  std::vector<Named<DeltaSet>> delta_sets;
  /// Suites whose failures are hypothesis violations the author anticipated.
  std::vector<std::string> expect_fail;

  const ExtFun* find_function(std::string_view name) const;
  const Measure* find_measure(std::string_view name) const;
  const DeltaSet* find_delta_set(std::string_view name) const;
  bool expects_failure(std::string_view suite) const;
};

/// Parses the JSON instance format. Throws ParseError (syntax, with line and
/// column, or a bad field, with its path) and InvalidInput (invariant
/// violations, naming the failing check).
Instance parse_instance(std::string_view text);

Instance load_instance(const std::filesystem::path& path);

}  // namespace minlin::cli
