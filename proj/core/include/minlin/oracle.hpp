#pragma once

#include "minlin/ext_function.hpp"
#include "minlin/measure.hpp"
#include "minlin/rational.hpp"

#include <cstddef>
#include <vector>

// Brute-force graders for tiny instances. They evaluate the defining sup/inf
// over a finite grid of test functions and never touch the LP solver.
namespace minlin::oracle {

inline constexpr std::size_t kMaxGridPoints = 3;

/// The grid {−M, −M + h, …, M}. Throws InvalidInput unless M, h > 0 and M/h is
/// an integer.
class GridSpec {
 public:
  GridSpec(Rational bound, Rational step);

  const Rational& bound() const { return bound_; }
  const Rational& step() const { return step_; }
  std::vector<Rational> values() const;

 private:
  Rational bound_;
  Rational step_;
};

/// max over grid-valued φ of ⟨Q, φ⟩ − f^×(φ): a lower bound for F(f)(Q).
/// Throws InvalidInput for more than kMaxGridPoints points.
Rational grid_sup_conjugate_transform(const ExtFun& f, const Measure& q, const GridSpec& grid);

/// min over grid-valued ξ of f^×(ξ) + g^×(θ − ξ): an upper bound for
/// (f^× ⋄ g^×)(θ).
Rational grid_inf_convolution(const ExtFun& f, const ExtFun& g, const ExtFun& theta,
                              const GridSpec& grid);

struct VertexMinimum {
  Rational value;
  std::vector<std::size_t> argmin;
};

/// Minimum of f over its domain and every point attaining it.
VertexMinimum vertex_enumerate_min(const ExtFun& f);

/// Calls `visit` with every grid-valued vector of length n (odometer order).
template <typename Visitor>
void for_each_grid_vector(const std::vector<Rational>& values, std::size_t n, Visitor&& visit) {
  std::vector<std::size_t> digits(n, 0);
  std::vector<Rational> point(n, values.front());
  for (;;) {
    visit(static_cast<const std::vector<Rational>&>(point));
    std::size_t k = 0;
    while (k < n && ++digits[k] == values.size()) {
      digits[k] = 0;
      point[k] = values.front();
      ++k;
    }
    if (k == n) return;
    point[k] = values[digits[k]];
  }
}

}  // namespace minlin::oracle
