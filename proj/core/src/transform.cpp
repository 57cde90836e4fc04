#include "minlin/transform.hpp"

#include "detail/class_program.hpp"
#include "minlin/error.hpp"
#include "minlin/lp.hpp"

#include <algorithm>
#include <sstream>

namespace minlin {

namespace {

void require_measure(const Space& space, const Measure& q) {
  if (q.size() != space.size()) {
    throw InvalidInput("measure has " + std::to_string(q.size()) + " weights, space has " +
                       std::to_string(space.size()) + " points");
  }
}

void require_function(const Space& space, const ExtFun& f) {
  if (f.size() != space.size()) {
    throw InvalidInput("function has " + std::to_string(f.size()) + " values, space has " +
                       std::to_string(space.size()) + " points");
  }
}

Extended minus(const Extended& a, const Rational& b) { return a + Extended(Rational(-b)); }

Extended scaled(const Rational& alpha, const Extended& v) {
  if (alpha == 0) return Rational(0);
  return v.is_finite() ? Extended(alpha * v.value()) : Extended::infinity();
}

}  // namespace

TransformValue fenchel_transform(const Space& space, const ExtFun& f, const FunctionClass& cls,
                                 const Measure& q) {
  require_function(space, f);
  require_measure(space, q);
  lp::LinearProgram program(lp::Sense::Maximize);
  const auto vars = detail::add_class_variables(program, space, cls);
  const std::size_t s = program.add_variable("s");
  std::vector<Rational> objective(program.num_variables(), Rational(0));
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (const auto& t : vars.value_terms[x]) objective[t.variable] += q[x] * t.coefficient;
  }
  for (std::size_t v = 0; v < objective.size(); ++v) program.set_objective(v, objective[v]);
  program.set_objective(s, -1);
  for (auto x : f.domain()) {
    program.add_constraint(detail::with_term(detail::negated(vars.value_terms[x]), s, 1),
                           lp::Relation::GreaterEqual, -f.finite_at(x));
  }
  auto result = lp::solve(program);
  if (auto* opt = std::get_if<lp::Optimal>(&result)) return {opt->value, {}};
  return {Extended::infinity(), std::move(std::get<lp::Unbounded>(result).ray)};
}

bool certifies_divergence(const Space& space, const ExtFun& f, const FunctionClass& cls,
                          const Measure& q, const std::vector<Rational>& ray) {
  const std::size_t n = space.size();
  const bool cone = cls.kind() == FunctionClass::Kind::FiniteCone;
  const std::size_t k = cone ? cls.generators().size() : n;
  if (ray.size() != k + 1) return false;
  std::vector<Rational> dphi(n, Rational(0));
  if (cone) {
    for (std::size_t i = 0; i < k; ++i) {
      if (ray[i] < 0) return false;
      for (std::size_t x = 0; x < n; ++x) dphi[x] += ray[i] * cls.generators()[i].finite_at(x);
    }
  } else {
    std::copy(ray.begin(), ray.begin() + static_cast<std::ptrdiff_t>(n), dphi.begin());
  }
  const Rational& ds = ray[k];
  for (auto x : f.domain()) {
    if (ds < dphi[x]) return false;
  }
  Rational gain = -ds;
  for (std::size_t x = 0; x < n; ++x) gain += q[x] * dphi[x];
  return gain > 0;
}

bool IdentityReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SampleCheck& c) { return c.holds(); });
}

const SampleCheck* IdentityReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.holds()) return &c;
  }
  return nullptr;
}

IdentityReport check_constant_transform(const Space& space, const Rational& c,
                                        const std::vector<Measure>& sample,
                                        const FunctionClass& cls) {
  const ExtFun constant = ExtFun::constant(space.size(), c);
  IdentityReport report;
  for (const auto& q : sample) {
    const auto value = fenchel_transform(space, constant, cls, q);
    const Extended expected = in_simplex(q) ? Extended(c) : Extended::infinity();
    const bool certified = value.value.is_finite() ||
                           certifies_divergence(space, constant, cls, q, value.ray);
    report.checks.push_back({"F(c)(Q) = c + indicator(Q)", q, value.value, expected, certified});
  }
  return report;
}

IdentityReport check_translation(const Space& space, const ExtFun& f, const ExtFun& phi,
                                 const std::vector<Measure>& sample, const FunctionClass& cls) {
  if (!phi.is_real_valued()) throw NotFinite("translation function must be real-valued");
  const ExtFun shifted = f - phi;
  IdentityReport report;
  for (const auto& q : sample) {
    if (!in_simplex(q)) continue;
    const Rational along = pairing(q, phi);
    report.checks.push_back({"F(f - phi)(Q) = F(f)(Q) - <Q,phi>", q,
                             fenchel_transform(space, shifted, cls, q).value,
                             minus(fenchel_transform(space, f, cls, q).value, along)});
    report.checks.push_back(
        {"F(phi)(Q) = <Q,phi>", q, fenchel_transform(space, phi, cls, q).value, along});
  }
  return report;
}

DeltaSet::DeltaSet(std::vector<Rational> bounds) : bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw InvalidInput("delta set needs at least one bound");
}

ExtFun delta_set_to_function(const DeltaSet& set) { return ExtFun::real(set.bounds()); }

DeltaSet function_to_delta_set(const ExtFun& f) {
  if (!f.is_real_valued()) {
    throw NotFinite("only real-valued functions correspond to delta sets, got " + f.str());
  }
  return DeltaSet(f.real_values());
}

TransformValue support_function(const DeltaSet& set, const Measure& q) {
  if (q.size() != set.size()) throw InvalidInput("measure and delta set sizes differ");
  lp::LinearProgram program(lp::Sense::Maximize);
  for (std::size_t x = 0; x < set.size(); ++x) {
    const auto v = program.add_variable("phi" + std::to_string(x));
    program.set_objective(v, q[x]);
    program.add_constraint({{v, 1}}, lp::Relation::LessEqual, set.bounds()[x]);
  }
  auto result = lp::solve(program);
  if (auto* opt = std::get_if<lp::Optimal>(&result)) return {opt->value, {}};
  return {Extended::infinity(), std::move(std::get<lp::Unbounded>(result).ray)};
}

TransformedFunction::TransformedFunction(Space space, ExtFun source, FunctionClass cls)
    : space_(std::move(space)), source_(std::move(source)), class_(std::move(cls)) {
  require_function(space_, source_);
  if (!source_.is_real_valued()) {
    throw NotFinite("T is defined for real-valued functions, got " + source_.str());
  }
}

TransformedFunction::TransformedFunction(const TransformedFunction& other)
    : space_(other.space_), source_(other.source_), class_(other.class_) {
  std::lock_guard lock(other.mutex_);
  cache_ = other.cache_;
}

Extended TransformedFunction::operator()(const Measure& q) const {
  if (!in_simplex(q)) {
    throw PreconditionError("T(f) is only defined on the probability simplex, got " + q.str());
  }
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(q.weights()); it != cache_.end()) return it->second;
  }
  Extended value = fenchel_transform(space_, source_, class_, q).value;
  std::lock_guard lock(mutex_);
  cache_.insert_or_assign(q.weights(), value);
  return value;
}

std::size_t TransformedFunction::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

TransformedFunction transform_T(const Space& space, const ExtFun& f, const FunctionClass& cls) {
  return TransformedFunction(space, f, cls);
}

IdentityReport check_cone_morphism(const Space& space, const ExtFun& f, const ExtFun& g,
                                   const Rational& alpha, const Rational& beta,
                                   const std::vector<Measure>& sample, const FunctionClass& cls) {
  if (alpha < 0 || beta < 0) {
    throw PreconditionError("cone morphism needs nonnegative coefficients, got alpha = " +
                            to_string(alpha) + ", beta = " + to_string(beta));
  }
  const auto combined = transform_T(space, f.scaled(alpha) + g.scaled(beta), cls);
  const auto tf = transform_T(space, f, cls);
  const auto tg = transform_T(space, g, cls);
  IdentityReport report;
  for (const auto& q : sample) {
    report.checks.push_back({"T(af + bg)(Q) = aT(f)(Q) + bT(g)(Q)", q, combined(q),
                             scaled(alpha, tf(q)) + scaled(beta, tg(q))});
  }
  return report;
}

bool IsotoneReport::consistent() const {
  return (!f_le_g || transform_f_le_g) && (!g_le_f || transform_g_le_f) &&
         (!dirac_f_le_g || f_le_g) && (!dirac_g_le_f || g_le_f);
}

std::string IsotoneReport::summary() const {
  std::ostringstream out;
  if (f_le_g && g_le_f) {
    out << "f = g; T(f) = T(g) " << (transform_f_le_g && transform_g_le_f ? "holds" : "FAILS");
  } else if (f_le_g) {
    out << "f <= g; T(f) <= T(g) " << (transform_f_le_g ? "holds" : "FAILS");
  } else if (g_le_f) {
    out << "g <= f; T(g) <= T(f) " << (transform_g_le_f ? "holds" : "FAILS");
  } else {
    out << "f and g incomparable; neither direction's hypothesis holds";
  }
  if ((dirac_f_le_g && !f_le_g) || (dirac_g_le_f && !g_le_f)) {
    out << "; Dirac comparison does not transfer back";
  }
  return out.str();
}

IsotoneReport check_isotone(const Space& space, const ExtFun& f, const ExtFun& g,
                            const std::vector<Measure>& sample, const FunctionClass& cls) {
  const auto tf = transform_T(space, f, cls);
  const auto tg = transform_T(space, g, cls);
  IsotoneReport report;
  report.f_le_g = f.pointwise_le(g);
  report.g_le_f = g.pointwise_le(f);
  report.dirac_f_le_g = true;
  report.dirac_g_le_f = true;
  for (std::size_t x = 0; x < space.size(); ++x) {
    const Measure d = dirac(space.size(), x);
    const Extended a = tf(d);
    const Extended b = tg(d);
    report.dirac_f_le_g = report.dirac_f_le_g && a <= b;
    report.dirac_g_le_f = report.dirac_g_le_f && b <= a;
  }
  report.transform_f_le_g = report.dirac_f_le_g;
  report.transform_g_le_f = report.dirac_g_le_f;
  for (const auto& q : sample) {
    if (!in_simplex(q)) continue;
    const Extended a = tf(q);
    const Extended b = tg(q);
    report.transform_f_le_g = report.transform_f_le_g && a <= b;
    report.transform_g_le_f = report.transform_g_le_f && b <= a;
  }
  return report;
}

MinimizeReport minimize_equivalence(const Space& space, const ExtFun& f,
                                    const FunctionClass& cls) {
  require_function(space, f);
  MinimizeReport report;
  report.infimum = f.infimum();
  for (auto x : f.domain()) {
    if (f.finite_at(x) == report.infimum) report.argmin.push_back(x);
  }

  // min Σ q_x f(x)  over q ≥ 0, Σ q = 1, q = 0 off dom f
  const auto dom = f.domain();
  lp::LinearProgram program(lp::Sense::Minimize);
  std::vector<lp::Term> mass;
  for (auto x : dom) {
    const auto v = program.add_variable("q_" + space.id(x), true);
    program.set_objective(v, f.finite_at(x));
    mass.push_back({v, 1});
  }
  program.add_constraint(mass, lp::Relation::Equal, 1);
  const auto result = lp::solve(program);
  const auto& opt = std::get<lp::Optimal>(result);
  report.simplex_minimum = opt.value;
  std::vector<Rational> weights(space.size(), Rational(0));
  for (std::size_t k = 0; k < dom.size(); ++k) weights[dom[k]] = opt.point[k];
  report.lp_minimizer = Measure(std::move(weights));

  for (std::size_t x = 0; x < space.size(); ++x) {
    if (fenchel_transform(space, f, cls, dirac(space.size(), x)).value == Extended(report.simplex_minimum)) {
      report.dirac_argmin.push_back(x);
    }
  }
  report.minimizer_in_face = true;
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (report.lp_minimizer[x] != 0 &&
        std::find(report.argmin.begin(), report.argmin.end(), x) == report.argmin.end()) {
      report.minimizer_in_face = false;
    }
  }
  return report;
}

PerturbationReport perturbation_principle(const Space& space, const ExtFun& f,
                                          const ExtFun& phi, const std::vector<Measure>& sample,
                                          const FunctionClass& cls) {
  if (!phi.is_real_valued()) throw NotFinite("perturbation must be real-valued");
  const ExtFun perturbed = f + phi;
  const auto tf = transform_T(space, f, cls);
  const auto tp = transform_T(space, perturbed, cls);

  PerturbationReport report;
  for (const auto& q : sample) {
    if (!in_simplex(q)) continue;
    report.additivity.checks.push_back(
        {"T(f + phi)(Q) = T(f)(Q) + <Q,phi>", q, tp(q), tf(q) + Extended(pairing(q, phi))});
  }
  report.perturbed = minimize_equivalence(space, perturbed, cls);

  report.transfer = true;
  const Extended minimum(report.perturbed.simplex_minimum);
  for (std::size_t x = 0; x < space.size(); ++x) {
    const bool minimizes_f = std::find(report.perturbed.argmin.begin(), report.perturbed.argmin.end(),
                                       x) != report.perturbed.argmin.end();
    const bool minimizes_t = tf(dirac(space.size(), x)) + Extended(phi.finite_at(x)) == minimum;
    report.transfer = report.transfer && minimizes_f == minimizes_t;
  }
  return report;
}

LiftReport minimizing_sequence_lift(const Space& space, const ExtFun& f, const Rational& epsilon,
                                    const FunctionClass& cls) {
  if (epsilon < 0) throw PreconditionError("epsilon must be nonnegative");
  const auto minimum = minimize_equivalence(space, f, cls);
  LiftReport report{epsilon, minimum.infimum, minimum.simplex_minimum, {}, true};
  const Extended bound(minimum.simplex_minimum + epsilon);
  for (auto x : f.domain()) {
    if (f.finite_at(x) > minimum.infimum + epsilon) continue;
    report.near_minimizers.push_back(x);
    if (fenchel_transform(space, f, cls, dirac(space.size(), x)).value > bound) {
      report.all_lifted = false;
    }
  }
  return report;
}

}  // namespace minlin
