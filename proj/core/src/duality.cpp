#include "minlin/duality.hpp"

#include "detail/class_program.hpp"
#include "minlin/error.hpp"
#include "minlin/lp.hpp"

namespace minlin {

namespace {

void require_size(const ExtFun& f, std::size_t n, const char* what) {
  if (f.size() != n) {
    throw InvalidInput(std::string(what) + " has " + std::to_string(f.size()) +
                       " values, expected " + std::to_string(n));
  }
}

void require_real(const ExtFun& f, const char* what) {
  if (!f.is_real_valued()) throw NotFinite(std::string(what) + " must be real-valued");
}

}  // namespace

ConjugateValue conjugate(const ExtFun& f, const ExtFun& phi) {
  require_size(phi, f.size(), "test function");
  require_real(phi, "test function");
  std::optional<ConjugateValue> best;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!f.in_domain(x)) continue;
    Rational v = phi.finite_at(x) - f.finite_at(x);
    if (!best || v > best->value) best = ConjugateValue{std::move(v), x};
  }
  return *best;  // ExtFun guarantees a nonempty domain
}

bool has_minorant(const Space& space, const ExtFun& f, const FunctionClass& cls) {
  require_size(f, space.size(), "function");
  if (cls.kind() != FunctionClass::Kind::FiniteCone) return true;
  lp::LinearProgram program(lp::Sense::Minimize);
  const auto vars = detail::add_class_variables(program, space, cls);
  for (auto y : f.domain()) {
    program.add_constraint(vars.value_terms[y], lp::Relation::LessEqual, f.finite_at(y));
  }
  if (program.num_variables() == 0) {
    // Empty cone: only φ = 0.
    for (auto y : f.domain()) {
      if (f.finite_at(y) < 0) return false;
    }
    return true;
  }
  return !std::holds_alternative<lp::Infeasible>(lp::solve(program));
}

ExtFun biconjugate(const Space& space, const ExtFun& f, const FunctionClass& cls) {
  if (!has_minorant(space, f, cls)) {
    throw NoMinorant("A_Y(f) is empty for f = " + f.str());
  }
  const std::size_t n = space.size();
  std::vector<Extended> out;
  out.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    // max φ(x) − s  s.t.  s ≥ φ(y) − f(y)  for y ∈ dom f
    lp::LinearProgram program(lp::Sense::Maximize);
    const auto vars = detail::add_class_variables(program, space, cls);
    const std::size_t s = program.add_variable("s");
    for (const auto& t : vars.value_terms[x]) program.set_objective(t.variable, t.coefficient);
    program.set_objective(s, -1);
    for (auto y : f.domain()) {
      program.add_constraint(detail::with_term(detail::negated(vars.value_terms[y]), s, 1),
                             lp::Relation::GreaterEqual, -f.finite_at(y));
    }
    const auto result = lp::solve(program);
    if (const auto* opt = std::get_if<lp::Optimal>(&result)) {
      out.emplace_back(opt->value);
    } else {
      out.push_back(Extended::infinity());
    }
  }
  return ExtFun(std::move(out));
}

bool BiconjugationReport::consistent() const {
  if (!minorant_exists) return true;
  if (!below_original) return false;
  return !property_H || equal();
}

BiconjugationReport check_biconjugation(const Space& space, const ExtFun& f,
                                        const FunctionClass& cls) {
  BiconjugationReport report{f, std::nullopt, false, false, false, {}};
  report.property_H = check_property_H_all(space, cls).all_pass();
  report.minorant_exists = has_minorant(space, f, cls);
  if (!report.minorant_exists) return report;
  report.biconjugate = biconjugate(space, f, cls);
  report.below_original = report.biconjugate->pointwise_le(f);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if ((*report.biconjugate)[x] < f[x]) report.gap_points.push_back(x);
  }
  return report;
}

ExtFun minorant_envelope(const Space& space, const ExtFun& f, const FunctionClass& cls) {
  require_size(f, space.size(), "function");
  const std::size_t n = space.size();
  std::vector<Extended> out;
  out.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    lp::LinearProgram program(lp::Sense::Maximize);
    const auto vars = detail::add_class_variables(program, space, cls);
    if (program.num_variables() == 0) program.add_variable("unused");
    for (const auto& t : vars.value_terms[x]) program.set_objective(t.variable, t.coefficient);
    for (auto y : f.domain()) {
      program.add_constraint(vars.value_terms[y], lp::Relation::LessEqual, f.finite_at(y));
    }
    const auto result = lp::solve(program);
    if (std::holds_alternative<lp::Infeasible>(result)) {
      throw NoMinorant("A_Y(f) is empty for f = " + f.str());
    }
    if (const auto* opt = std::get_if<lp::Optimal>(&result)) {
      out.emplace_back(opt->value);
    } else {
      out.push_back(Extended::infinity());
    }
  }
  return ExtFun(std::move(out));
}

Rational insertion_lipschitz_constant(const Space& space, const ExtFun& u, const ExtFun& v) {
  Rational best = 0;
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t y = 0; y < space.size(); ++y) {
      if (x == y || !v.in_domain(y)) continue;
      Rational slope = (u.finite_at(x) - v.finite_at(y)) / space.distance(x, y);
      if (slope > best) best = std::move(slope);
    }
  }
  return best;
}

ExtFun insert_between(const Space& space, const ExtFun& u, const ExtFun& v,
                      const FunctionClass& cls) {
  require_size(u, space.size(), "lower function");
  require_size(v, space.size(), "upper function");
  if (!u.is_real_valued()) throw PreconditionError("lower function must be real-valued");
  if (!u.pointwise_le(v)) {
    throw PreconditionError("insertion requires u <= v, got u = " + u.str() + ", v = " + v.str());
  }
  switch (cls.kind()) {
    case FunctionClass::Kind::Full:
      return u;
    case FunctionClass::Kind::Lipschitz: {
      if (!space.has_metric()) throw PreconditionError("Lipschitz class requires a metric");
      const Rational lip = insertion_lipschitz_constant(space, u, v);
      std::vector<Rational> psi(space.size());
      for (std::size_t x = 0; x < space.size(); ++x) {
        std::optional<Rational> best;
        for (auto y : v.domain()) {
          Rational candidate = v.finite_at(y) + lip * space.distance(x, y);
          if (!best || candidate < *best) best = std::move(candidate);
        }
        psi[x] = *best;
      }
      return ExtFun::real(psi);
    }
    case FunctionClass::Kind::FiniteCone:
      break;
  }
  throw Unsupported("insertion is not available for a finite cone");
}

Decomposition sum_decompose(const Space& space, const ExtFun& phi, const ExtFun& f,
                            const ExtFun& g, const FunctionClass& cls) {
  require_size(phi, space.size(), "phi");
  require_size(f, space.size(), "f");
  require_size(g, space.size(), "g");
  if (!f.is_real_valued() || !g.is_real_valued()) {
    throw PreconditionError("sum_decompose requires real-valued f and g");
  }
  if (!phi.is_real_valued()) throw PreconditionError("phi must be real-valued");
  if (!phi.pointwise_le(f + g)) throw PreconditionError("phi is not below f + g");
  if (!contains(space, cls, phi).member) throw PreconditionError("phi is not in the class");
  ExtFun first = insert_between(space, phi - g, f, cls);
  ExtFun second = phi - first;
  return {std::move(first), std::move(second)};
}

bool certify_decomposition(const Space& space, const ExtFun& phi, const ExtFun& f,
                           const ExtFun& g, const FunctionClass& cls, const Decomposition& d) {
  if (!d.first.is_real_valued() || !d.second.is_real_valued()) return false;
  if (!d.first.pointwise_le(f) || !d.second.pointwise_le(g)) return false;
  if (!(d.first + d.second == phi)) return false;
  return contains(space, cls, d.first).member && contains(space, cls, d.second).member;
}

MinimaxReport minimax_identity_check(const ExtFun& f, const ExtFun& xi) {
  require_size(xi, f.size(), "xi");
  require_real(xi, "xi");
  const std::size_t n = f.size();
  // min t  s.t.  t ≥ ξ(y) − φ(y) for all y,  φ(y) ≤ f(y) on dom f
  lp::LinearProgram program(lp::Sense::Minimize);
  std::vector<std::size_t> phi(n);
  for (std::size_t y = 0; y < n; ++y) phi[y] = program.add_variable("phi" + std::to_string(y));
  const std::size_t t = program.add_variable("t");
  program.set_objective(t, 1);
  for (std::size_t y = 0; y < n; ++y) {
    program.add_constraint({{t, 1}, {phi[y], 1}}, lp::Relation::GreaterEqual, xi.finite_at(y));
    if (f.in_domain(y)) program.add_constraint({{phi[y], 1}}, lp::Relation::LessEqual, f.finite_at(y));
  }
  auto result = lp::solve(program);
  auto& opt = std::get<lp::Optimal>(result);  // bounded: t ≥ ξ(y) − f(y) on dom f
  std::vector<Rational> minorant(n);
  for (std::size_t y = 0; y < n; ++y) minorant[y] = opt.point[phi[y]];
  return {conjugate(f, xi).value, opt.value, ExtFun::real(minorant)};
}

InfConvolution infconv_eval(const ExtFun& f, const ExtFun& g, const ExtFun& theta) {
  require_size(g, f.size(), "g");
  require_size(theta, f.size(), "theta");
  require_real(f, "f");
  require_real(g, "g");
  require_real(theta, "theta");
  const std::size_t n = f.size();
  // min s + t  s.t.  s ≥ ξ(x) − f(x),  t ≥ θ(x) − ξ(x) − g(x)
  lp::LinearProgram program(lp::Sense::Minimize);
  std::vector<std::size_t> xi(n);
  for (std::size_t x = 0; x < n; ++x) xi[x] = program.add_variable("xi" + std::to_string(x));
  const std::size_t s = program.add_variable("s");
  const std::size_t t = program.add_variable("t");
  program.set_objective(s, 1);
  program.set_objective(t, 1);
  for (std::size_t x = 0; x < n; ++x) {
    program.add_constraint({{s, 1}, {xi[x], -1}}, lp::Relation::GreaterEqual, -f.finite_at(x));
    program.add_constraint({{t, 1}, {xi[x], 1}}, lp::Relation::GreaterEqual,
                           theta.finite_at(x) - g.finite_at(x));
  }
  auto result = lp::solve(program);
  auto& opt = std::get<lp::Optimal>(result);  // bounded below by (f+g)^×(θ)
  std::vector<Rational> witness(n);
  for (std::size_t x = 0; x < n; ++x) witness[x] = opt.point[xi[x]];
  return {opt.value, ExtFun::real(witness)};
}

InfConvolutionReport check_infconv_theorem(const ExtFun& f, const ExtFun& g,
                                           const ExtFun& theta) {
  InfConvolution ic = infconv_eval(f, g, theta);
  Rational witness_value = conjugate(f, ic.xi).value + conjugate(g, theta - ic.xi).value;
  Rational of_sum = conjugate(f + g, theta).value;
  return {std::move(ic), std::move(witness_value), std::move(of_sum)};
}

}  // namespace minlin
