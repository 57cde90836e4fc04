#pragma once

#include "minlin/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace minlin {

/// Function from the points of a Space to Q ∪ {+inf}, stored by point index.
/// At least one value is finite.
class ExtFun {
 public:
  /// Throws EmptyDomain when every value is +inf (or there are no values).
  explicit ExtFun(std::vector<Extended> values);

  static ExtFun real(const std::vector<Rational>& values);
  static ExtFun constant(std::size_t n, const Rational& c);

  std::size_t size() const { return values_.size(); }
  const Extended& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Extended>& values() const { return values_; }

  bool in_domain(std::size_t i) const { return values_[i].is_finite(); }
  std::vector<std::size_t> domain() const;
  bool is_real_valued() const;

  /// Throws NotFinite.
  const Rational& finite_at(std::size_t i) const;
  /// Throws NotFinite if any value is +inf.
  std::vector<Rational> real_values() const;

  /// Smallest finite value.
  Rational infimum() const;

  /// Pointwise f ≤ g with +inf ≤ +inf.
  bool pointwise_le(const ExtFun& other) const;

  /// Pointwise sum; +inf absorbs.
  ExtFun operator+(const ExtFun& other) const;
  /// Subtracts a real-valued function. Throws NotFinite otherwise.
  ExtFun operator-(const ExtFun& other) const;
  /// Nonnegative scaling with 0·(+inf) = 0.
  ExtFun scaled(const Rational& alpha) const;
  ExtFun shifted(const Rational& c) const;

  friend bool operator==(const ExtFun& a, const ExtFun& b) { return a.values_ == b.values_; }

  /// "(0, 1/2, +inf)"
  std::string str() const;

 private:
  std::vector<Extended> values_;
};

}  // namespace minlin
