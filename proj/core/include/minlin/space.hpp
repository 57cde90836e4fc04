#pragma once

#include "minlin/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace minlin {

using PointId = std::string;
using Matrix = std::vector<std::vector<Rational>>;

/// Finite ground set with an optional exact metric. The topology is always the
/// discrete one, so every function on a Space is continuous.
class Space {
 public:
  /// Validates ids (nonempty, distinct) and, when given, the metric: square,
  /// zero diagonal, positive off-diagonal, symmetric, triangle inequality.
  /// Throws InvalidInput naming the failing entry or triple.
  explicit Space(std::vector<PointId> ids, std::optional<Matrix> metric = std::nullopt);

  /// Points named x1..xn.
  static Space indexed(std::size_t n, std::optional<Matrix> metric = std::nullopt);

  std::size_t size() const { return ids_.size(); }
  const std::vector<PointId>& ids() const { return ids_; }
  const PointId& id(std::size_t index) const { return ids_.at(index); }

  /// Throws UnknownPoint.
  std::size_t index_of(std::string_view id) const;

  bool has_metric() const { return metric_.has_value(); }
  const Matrix& metric() const;
  const Rational& distance(std::size_t i, std::size_t j) const;

 private:
  std::vector<PointId> ids_;
  std::optional<Matrix> metric_;
};

}  // namespace minlin
