#include "minlin/space.hpp"

#include "minlin/error.hpp"

#include <set>

namespace minlin {

namespace {

void validate_metric(const std::vector<PointId>& ids, const Matrix& d) {
  const std::size_t n = ids.size();
  if (d.size() != n) throw InvalidInput("metric: expected " + std::to_string(n) + " rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i].size() != n) {
      throw InvalidInput("metric: row " + ids[i] + " has " + std::to_string(d[i].size()) +
                         " entries, expected " + std::to_string(n));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i][i] != 0) throw InvalidInput("metric: nonzero diagonal at " + ids[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (d[i][j] <= 0) {
        throw InvalidInput("metric: distance between " + ids[i] + " and " + ids[j] +
                           " is not strictly positive");
      }
      if (d[i][j] != d[j][i]) {
        throw InvalidInput("metric: not symmetric at (" + ids[i] + ", " + ids[j] + ")");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (d[i][k] > d[i][j] + d[j][k]) {
          throw InvalidInput("metric: triangle inequality violated by triple (" + ids[i] + ", " +
                             ids[j] + ", " + ids[k] + "): d(" + ids[i] + "," + ids[k] + ") = " +
                             to_string(d[i][k]) + " > " + to_string(d[i][j] + d[j][k]));
        }
      }
    }
  }
}

}  // namespace

Space::Space(std::vector<PointId> ids, std::optional<Matrix> metric)
    : ids_(std::move(ids)), metric_(std::move(metric)) {
  if (ids_.empty()) throw InvalidInput("space must contain at least one point");
  std::set<std::string_view> seen;
  for (const auto& id : ids_) {
    if (id.empty()) throw InvalidInput("point id must be nonempty");
    if (!seen.insert(id).second) throw InvalidInput("duplicate point id: " + id);
  }
  if (metric_) validate_metric(ids_, *metric_);
}

Space Space::indexed(std::size_t n, std::optional<Matrix> metric) {
  std::vector<PointId> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i + 1));
  return Space(std::move(ids), std::move(metric));
}

std::size_t Space::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] == id) return i;
  }
  throw UnknownPoint("unknown point id: " + std::string(id));
}

const Matrix& Space::metric() const {
  if (!metric_) throw PreconditionError("space has no metric");
  return *metric_;
}

const Rational& Space::distance(std::size_t i, std::size_t j) const { return metric()[i][j]; }

}  // namespace minlin
