#include "minlin/function_class.hpp"

#include "minlin/error.hpp"
#include "minlin/lp.hpp"

#include <algorithm>

namespace minlin {

FunctionClass FunctionClass::finite_cone(std::size_t num_points, std::vector<ExtFun> generators,
                                         bool affine_closed) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != num_points) {
      throw InvalidInput("generator " + std::to_string(i) + " has " +
                         std::to_string(generators[i].size()) + " values, expected " +
                         std::to_string(num_points));
    }
    if (!generators[i].is_real_valued()) {
      throw NotFinite("generator " + std::to_string(i) + " takes the value +inf");
    }
  }
  FunctionClass cls(Kind::FiniteCone);
  cls.affine_closed_ = affine_closed;
  cls.declared_ = generators;
  cls.generators_ = std::move(generators);
  if (affine_closed) {
    cls.generators_.push_back(ExtFun::constant(num_points, 1));
    cls.generators_.push_back(ExtFun::constant(num_points, -1));
  }
  return cls;
}

ExtFun FunctionClass::combine(const std::vector<Rational>& coefficients) const {
  if (coefficients.size() != generators_.size() || generators_.empty()) {
    throw InvalidInput("coefficient count does not match generator count");
  }
  std::vector<Rational> out(generators_.front().size(), Rational(0));
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (coefficients[i] == 0) continue;
    for (std::size_t x = 0; x < out.size(); ++x) {
      out[x] += coefficients[i] * generators_[i].finite_at(x);
    }
  }
  return ExtFun::real(out);
}

std::string_view to_string(FunctionClass::Kind kind) {
  switch (kind) {
    case FunctionClass::Kind::Full:
      return "full";
    case FunctionClass::Kind::Lipschitz:
      return "lipschitz";
    case FunctionClass::Kind::FiniteCone:
      return "finite_cone";
  }
  return "unknown";
}

namespace {

void require_points(const Space& space, const ExtFun& f) {
  if (f.size() != space.size()) {
    throw InvalidInput("function has " + std::to_string(f.size()) + " values, space has " +
                       std::to_string(space.size()) + " points");
  }
}

Rational best_lipschitz_constant(const Space& space, const std::vector<Rational>& phi) {
  Rational best = 0;
  for (std::size_t x = 0; x < phi.size(); ++x) {
    for (std::size_t y = x + 1; y < phi.size(); ++y) {
      Rational ratio = abs(phi[x] - phi[y]) / space.distance(x, y);
      if (ratio > best) best = std::move(ratio);
    }
  }
  return best;
}

// Cone coefficients λ ≥ 0 for `phi`, or nullopt.
std::optional<std::vector<Rational>> cone_coefficients(const FunctionClass& cls,
                                                       const std::vector<Rational>& phi) {
  const auto& gens = cls.generators();
  if (gens.empty()) {
    if (std::all_of(phi.begin(), phi.end(), [](const Rational& v) { return v == 0; })) {
      return std::vector<Rational>{};
    }
    return std::nullopt;
  }
  lp::LinearProgram program(lp::Sense::Minimize);
  for (std::size_t i = 0; i < gens.size(); ++i) program.add_variable("l" + std::to_string(i), true);
  for (std::size_t x = 0; x < phi.size(); ++x) {
    std::vector<lp::Term> terms;
    for (std::size_t i = 0; i < gens.size(); ++i) terms.push_back({i, gens[i].finite_at(x)});
    program.add_constraint(terms, lp::Relation::Equal, phi[x]);
  }
  auto result = lp::solve(program);
  if (auto* opt = std::get_if<lp::Optimal>(&result)) return std::move(opt->point);
  return std::nullopt;
}

}  // namespace

Membership contains(const Space& space, const FunctionClass& cls, const ExtFun& phi) {
  require_points(space, phi);
  const std::vector<Rational> values = phi.real_values();
  Membership m;
  switch (cls.kind()) {
    case FunctionClass::Kind::Full:
      m.member = true;
      break;
    case FunctionClass::Kind::Lipschitz:
      if (!space.has_metric()) throw PreconditionError("Lipschitz class requires a metric");
      m.member = true;
      m.lipschitz_constant = best_lipschitz_constant(space, values);
      break;
    case FunctionClass::Kind::FiniteCone:
      if (auto coeffs = cone_coefficients(cls, values)) {
        m.member = true;
        m.coefficients = std::move(*coeffs);
      }
      break;
  }
  return m;
}

BumpWitness check_property_H(const Space& space, const FunctionClass& cls, std::size_t x,
                             const std::vector<std::size_t>& neighborhood) {
  const std::size_t n = space.size();
  if (x >= n) throw UnknownPoint("point index " + std::to_string(x) + " out of range");
  std::vector<bool> in_u(n, false);
  for (auto y : neighborhood) {
    if (y >= n) throw UnknownPoint("point index " + std::to_string(y) + " out of range");
    in_u[y] = true;
  }
  if (!in_u[x]) {
    throw PreconditionError("point " + space.id(x) + " is not in the neighborhood");
  }

  BumpWitness witness{x, neighborhood, std::nullopt};
  switch (cls.kind()) {
    case FunctionClass::Kind::Full: {
      std::vector<Rational> sigma(n, Rational(0));
      sigma[x] = 1;
      witness.sigma = ExtFun::real(sigma);
      break;
    }
    case FunctionClass::Kind::Lipschitz: {
      if (!space.has_metric()) throw PreconditionError("Lipschitz class requires a metric");
      std::optional<Rational> radius;
      for (std::size_t y = 0; y < n; ++y) {
        if (!in_u[y] && (!radius || space.distance(x, y) < *radius)) radius = space.distance(x, y);
      }
      std::vector<Rational> sigma(n, Rational(1));
      if (radius) {
        for (std::size_t y = 0; y < n; ++y) {
          const Rational hat = 1 - space.distance(x, y) / *radius;
          sigma[y] = hat > 0 ? hat : Rational(0);
        }
      }
      witness.sigma = ExtFun::real(sigma);
      break;
    }
    case FunctionClass::Kind::FiniteCone: {
      const auto& gens = cls.generators();
      if (gens.empty()) break;
      lp::LinearProgram program(lp::Sense::Minimize);
      for (std::size_t i = 0; i < gens.size(); ++i) {
        program.add_variable("l" + std::to_string(i), true);
      }
      for (std::size_t y = 0; y < n; ++y) {
        std::vector<lp::Term> terms;
        for (std::size_t i = 0; i < gens.size(); ++i) terms.push_back({i, gens[i].finite_at(y)});
        if (y == x) {
          program.add_constraint(terms, lp::Relation::Equal, 1);
        } else if (!in_u[y]) {
          program.add_constraint(terms, lp::Relation::Equal, 0);
        } else {
          program.add_constraint(terms, lp::Relation::GreaterEqual, 0);
          program.add_constraint(terms, lp::Relation::LessEqual, 1);
        }
      }
      const auto result = lp::solve(program);
      if (const auto* opt = std::get_if<lp::Optimal>(&result)) {
        witness.sigma = cls.combine(opt->point);
      }
      break;
    }
  }
  return witness;
}

bool certify_bump(const Space& space, const FunctionClass& cls, const BumpWitness& witness) {
  if (!witness.sigma) return false;
  const ExtFun& sigma = *witness.sigma;
  if (sigma.size() != space.size() || !sigma.is_real_valued()) return false;
  std::vector<bool> in_u(space.size(), false);
  for (auto y : witness.neighborhood) in_u[y] = true;
  for (std::size_t y = 0; y < space.size(); ++y) {
    const Rational& v = sigma.finite_at(y);
    if (v < 0 || v > 1) return false;
    if (!in_u[y] && v != 0) return false;
  }
  if (sigma.finite_at(witness.point) != 1) return false;
  return contains(space, cls, sigma).member;
}

bool PropertyHReport::all_pass() const {
  return covers_singletons && std::all_of(entries.begin(), entries.end(),
                                          [](const BumpWitness& w) { return w.found(); });
}

const BumpWitness* PropertyHReport::first_failure() const {
  for (const auto& e : entries) {
    if (!e.found()) return &e;
  }
  return nullptr;
}

std::vector<std::vector<std::size_t>> singleton_basis(std::size_t n) {
  std::vector<std::vector<std::size_t>> basis;
  for (std::size_t x = 0; x < n; ++x) basis.push_back({x});
  return basis;
}

PropertyHReport check_property_H_all(const Space& space, const FunctionClass& cls,
                                     const std::vector<std::vector<std::size_t>>& basis) {
  const auto& sets = basis.empty() ? singleton_basis(space.size()) : basis;
  PropertyHReport report;
  std::vector<bool> singleton_seen(space.size(), false);
  for (const auto& u : sets) {
    if (u.size() == 1 && u.front() < space.size()) singleton_seen[u.front()] = true;
    for (auto x : u) report.entries.push_back(check_property_H(space, cls, x, u));
  }
  report.covers_singletons =
      std::all_of(singleton_seen.begin(), singleton_seen.end(), [](bool b) { return b; });
  return report;
}

}  // namespace minlin
