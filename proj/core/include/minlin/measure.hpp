#pragma once

#include "minlin/ext_function.hpp"
#include "minlin/rational.hpp"
#include "minlin/space.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace minlin {

/// Signed rational weight vector on the points of a Space. The probability
/// simplex plays the role of the closed convex hull of the Dirac masses.
class Measure {
 public:
  explicit Measure(std::vector<Rational> weights) : weights_(std::move(weights)) {}

  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<Rational>& weights() const { return weights_; }
  Rational total_mass() const;

  friend bool operator==(const Measure& a, const Measure& b) { return a.weights_ == b.weights_; }

  std::string str() const;

 private:
  std::vector<Rational> weights_;
};

Measure dirac(const Space& space, std::string_view id);
Measure dirac(std::size_t n, std::size_t index);

/// Σ_x Q(x)·φ(x). Throws NotFinite if φ takes +inf, InvalidInput on size mismatch.
Rational pairing(const Measure& q, const ExtFun& phi);

enum class MeasureKind { Vertex, InteriorOfSimplex, BoundaryOfSimplex, OutsideSimplex };

MeasureKind classify_measure(const Measure& q);
bool in_simplex(const Measure& q);
std::string_view to_string(MeasureKind kind);

}  // namespace minlin
