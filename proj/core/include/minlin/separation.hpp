#pragma once

#include "minlin/ext_function.hpp"
#include "minlin/function_class.hpp"
#include "minlin/space.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace minlin {

struct SeparatingPair {
  std::size_t x = 0;
  std::size_t y = 0;
  std::optional<ExtFun> witness;  // φ ∈ Y with φ(x) ≠ φ(y)
};

struct SeparationReport {
  std::vector<SeparatingPair> pairs;

  bool separates() const;
  const SeparatingPair* first_failure() const;
};

/// For every unordered pair x ≠ y, find φ ∈ Y with φ(x) ≠ φ(y). Full uses
/// indicators, Lipschitz the distance d(x,·), FiniteCone its generators
/// (a nonnegative combination separates only if some generator does).
SeparationReport separates_points(const Space& space, const FunctionClass& cls);

}  // namespace minlin
