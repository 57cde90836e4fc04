#include "minlin/measure.hpp"

#include "minlin/error.hpp"

#include <algorithm>

namespace minlin {

Rational Measure::total_mass() const {
  Rational total = 0;
  for (const auto& w : weights_) total += w;
  return total;
}

std::string Measure::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) s += ", ";
    s += to_string(weights_[i]);
  }
  return s + ")";
}

Measure dirac(const Space& space, std::string_view id) {
  return dirac(space.size(), space.index_of(id));
}

Measure dirac(std::size_t n, std::size_t index) {
  if (index >= n) throw UnknownPoint("point index " + std::to_string(index) + " out of range");
  std::vector<Rational> w(n, Rational(0));
  w[index] = 1;
  return Measure(std::move(w));
}

Rational pairing(const Measure& q, const ExtFun& phi) {
  if (q.size() != phi.size()) {
    throw InvalidInput("pairing: measure has " + std::to_string(q.size()) +
                       " weights, function has " + std::to_string(phi.size()) + " values");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < q.size(); ++i) total += q[i] * phi.finite_at(i);
  return total;
}

bool in_simplex(const Measure& q) {
  return std::all_of(q.weights().begin(), q.weights().end(),
                     [](const Rational& w) { return w >= 0; }) &&
         q.total_mass() == 1;
}

MeasureKind classify_measure(const Measure& q) {
  if (!in_simplex(q)) return MeasureKind::OutsideSimplex;
  const auto support = std::count_if(q.weights().begin(), q.weights().end(),
                                     [](const Rational& w) { return w != 0; });
  if (support == 1) return MeasureKind::Vertex;
  if (static_cast<std::size_t>(support) == q.size()) return MeasureKind::InteriorOfSimplex;
  return MeasureKind::BoundaryOfSimplex;
}

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::Vertex:
      return "vertex";
    case MeasureKind::InteriorOfSimplex:
      return "interior-of-simplex";
    case MeasureKind::BoundaryOfSimplex:
      return "boundary-of-simplex";
    case MeasureKind::OutsideSimplex:
      return "outside-simplex";
  }
  return "unknown";
}

}  // namespace minlin
