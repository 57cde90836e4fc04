#include "minlin/oracle.hpp"

#include "minlin/duality.hpp"
#include "minlin/error.hpp"

#include <optional>

namespace minlin::oracle {

GridSpec::GridSpec(Rational bound, Rational step) : bound_(std::move(bound)), step_(std::move(step)) {
  if (bound_ <= 0 || step_ <= 0) throw InvalidInput("grid bound and step must be positive");
  const Rational ratio = bound_ / step_;
  if (denominator(ratio) != 1) throw InvalidInput("grid bound must be a multiple of the step");
}

std::vector<Rational> GridSpec::values() const {
  std::vector<Rational> out;
  for (Rational v = -bound_; v <= bound_; v += step_) out.push_back(v);
  return out;
}

namespace {

void require_small(std::size_t n) {
  if (n > kMaxGridPoints) {
    throw InvalidInput("grid oracles support at most " + std::to_string(kMaxGridPoints) +
                       " points, got " + std::to_string(n));
  }
}

}  // namespace

Rational grid_sup_conjugate_transform(const ExtFun& f, const Measure& q, const GridSpec& grid) {
  require_small(f.size());
  if (q.size() != f.size()) throw InvalidInput("measure and function sizes differ");
  std::optional<Rational> best;
  for_each_grid_vector(grid.values(), f.size(), [&](const std::vector<Rational>& phi) {
    const ExtFun test = ExtFun::real(phi);
    Rational v = pairing(q, test) - conjugate(f, test).value;
    if (!best || v > *best) best = std::move(v);
  });
  return *best;
}

Rational grid_inf_convolution(const ExtFun& f, const ExtFun& g, const ExtFun& theta,
                              const GridSpec& grid) {
  require_small(f.size());
  std::optional<Rational> best;
  for_each_grid_vector(grid.values(), f.size(), [&](const std::vector<Rational>& xi) {
    const ExtFun test = ExtFun::real(xi);
    Rational v = conjugate(f, test).value + conjugate(g, theta - test).value;
    if (!best || v < *best) best = std::move(v);
  });
  return *best;
}

VertexMinimum vertex_enumerate_min(const ExtFun& f) {
  std::optional<Rational> best;
  std::vector<std::size_t> argmin;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!f.in_domain(x)) continue;
    const Rational& v = f.finite_at(x);
    if (!best || v < *best) {
      best = v;
      argmin.assign(1, x);
    } else if (v == *best) {
      argmin.push_back(x);
    }
  }
  return {*best, std::move(argmin)};
}

}  // namespace minlin::oracle
