#pragma once

#include "minlin/ext_function.hpp"
#include "minlin/function_class.hpp"
#include "minlin/measure.hpp"
#include "minlin/rational.hpp"
#include "minlin/space.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace minlin {

/// Value of a sup-type LP on the measure side. When the value is +inf, `ray`
/// holds the LP recession direction that certifies it.
struct TransformValue {
  Extended value;
  std::vector<Rational> ray;
};

/// F(f)(Q) = sup_{φ ∈ Y} ⟨Q, φ⟩ − f^×(φ).
///
/// Solved as   max ⟨Q, φ⟩ − s   s.t.  s ≥ φ(x) − f(x) for x ∈ dom f,
/// with φ free per point (Full, Lipschitz) or φ = Σ λ_i g_i, λ ≥ 0 (finite
/// cone). The ray, when present, is laid out as (φ or λ variables..., s).
TransformValue fenchel_transform(const Space& space, const ExtFun& f, const FunctionClass& cls,
                                 const Measure& q);

/// Checks a divergence ray for F(f)(Q) directly from the definition:
/// ds ≥ dφ(x) on dom f, dλ ≥ 0 for a cone, and ⟨Q, dφ⟩ − ds > 0.
bool certifies_divergence(const Space& space, const ExtFun& f, const FunctionClass& cls,
                          const Measure& q, const std::vector<Rational>& ray);

struct SampleCheck {
  std::string label;
  Measure measure;
  Extended lhs;
  Extended rhs;
  /// False when an infinite side came with a ray that failed verification.
  bool certified = true;

  bool holds() const { return certified && lhs == rhs; }
};

/// Pointwise identity lhs(Q) = rhs(Q) over a list of measures.
struct IdentityReport {
  std::uint64_t seed = 0;
  std::vector<SampleCheck> checks;

  bool passed() const;
  const SampleCheck* first_failure() const;
};

/// F(c) = c on the simplex and +inf off it (with a certified ray).
IdentityReport check_constant_transform(const Space& space, const Rational& c,
                                        const std::vector<Measure>& sample,
                                        const FunctionClass& cls = FunctionClass::full());

/// F(f − φ)(Q) = F(f)(Q) − ⟨Q, φ⟩ and F(φ)(Q) = ⟨Q, φ⟩ on simplex measures.
IdentityReport check_translation(const Space& space, const ExtFun& f, const ExtFun& phi,
                                 const std::vector<Measure>& sample,
                                 const FunctionClass& cls = FunctionClass::full());

/// Pointwise upper bounds λ_x describing the set {φ : φ(x) ≤ λ_x for all x}.
class DeltaSet {
 public:
  explicit DeltaSet(std::vector<Rational> bounds);

  std::size_t size() const { return bounds_.size(); }
  const std::vector<Rational>& bounds() const { return bounds_; }

  friend bool operator==(const DeltaSet& a, const DeltaSet& b) { return a.bounds_ == b.bounds_; }

 private:
  std::vector<Rational> bounds_;
};

ExtFun delta_set_to_function(const DeltaSet& set);
/// Throws NotFinite when f takes +inf.
DeltaSet function_to_delta_set(const ExtFun& f);

/// σ_A(Q) = sup_{φ ∈ A} ⟨Q, φ⟩. The ray, when present, is a dφ ≤ 0 with
/// ⟨Q, dφ⟩ > 0.
TransformValue support_function(const DeltaSet& set, const Measure& q);

/// F(f) restricted to the probability simplex, for real-valued f. Values are
/// memoized per measure; concurrent evaluation is safe.
class TransformedFunction {
 public:
  TransformedFunction(Space space, ExtFun source, FunctionClass cls);
  TransformedFunction(const TransformedFunction& other);
  TransformedFunction& operator=(const TransformedFunction&) = delete;

  /// Throws PreconditionError for a measure outside the simplex.
  Extended operator()(const Measure& q) const;

  const ExtFun& source() const { return source_; }
  const FunctionClass& function_class() const { return class_; }
  std::size_t cache_size() const;

 private:
  Space space_;
  ExtFun source_;
  FunctionClass class_;
  mutable std::mutex mutex_;
  mutable std::map<std::vector<Rational>, Extended> cache_;
};

/// Throws NotFinite when f takes +inf.
TransformedFunction transform_T(const Space& space, const ExtFun& f,
                                const FunctionClass& cls = FunctionClass::full());

/// T(αf + βg)(Q) = αT(f)(Q) + βT(g)(Q). Throws PreconditionError for α < 0
/// or β < 0.
IdentityReport check_cone_morphism(const Space& space, const ExtFun& f, const ExtFun& g,
                                   const Rational& alpha, const Rational& beta,
                                   const std::vector<Measure>& sample,
                                   const FunctionClass& cls = FunctionClass::full());

struct IsotoneReport {
  bool f_le_g = false;
  bool g_le_f = false;
  /// T(f) ≤ T(g) at every Dirac mass and sampled measure.
  bool transform_f_le_g = false;
  bool transform_g_le_f = false;
  /// T(f)(δx) ≤ T(g)(δx) for all x.
  bool dirac_f_le_g = false;
  bool dirac_g_le_f = false;

  /// Both implications hold in both directions.
  bool consistent() const;
  std::string summary() const;
};

IsotoneReport check_isotone(const Space& space, const ExtFun& f, const ExtFun& g,
                            const std::vector<Measure>& sample,
                            const FunctionClass& cls = FunctionClass::full());

struct MinimizeReport {
  Rational infimum;                     // inf_X f by scan
  Rational simplex_minimum;             // LP minimum of F(f) over the simplex
  Measure lp_minimizer{{}};
  std::vector<std::size_t> argmin;        // argmin f by scan
  std::vector<std::size_t> dirac_argmin;  // x with F(f)(δx) = simplex_minimum
  bool minimizer_in_face = false;         // LP optimum supported on argmin f

  bool values_equal() const { return infimum == simplex_minimum; }
  bool correspondence() const { return argmin == dirac_argmin; }
  bool passed() const { return values_equal() && correspondence() && minimizer_in_face; }
};

/// inf_X f against the simplex minimum of F(f); the optimal face is the convex
/// hull of the Dirac masses in `dirac_argmin`.
MinimizeReport minimize_equivalence(const Space& space, const ExtFun& f,
                                    const FunctionClass& cls = FunctionClass::full());

struct PerturbationReport {
  IdentityReport additivity;  // T(f + φ) = T(f) + ⟨·, φ⟩
  MinimizeReport perturbed;   // minimize_equivalence(f + φ)
  bool transfer = false;      // x ∈ argmin(f+φ) ⟺ δx minimizes T(f) + ⟨·, φ⟩

  bool passed() const { return additivity.passed() && perturbed.passed() && transfer; }
};

PerturbationReport perturbation_principle(const Space& space, const ExtFun& f,
                                          const ExtFun& phi, const std::vector<Measure>& sample,
                                          const FunctionClass& cls = FunctionClass::full());

struct LiftReport {
  Rational epsilon;
  Rational infimum;
  Rational simplex_minimum;
  std::vector<std::size_t> near_minimizers;  // f(x) ≤ inf f + ε
  bool all_lifted = false;                   // F(f)(δx) ≤ min F(f) + ε for each

  bool passed() const { return all_lifted && infimum == simplex_minimum; }
};

/// Throws PreconditionError for ε < 0.
LiftReport minimizing_sequence_lift(const Space& space, const ExtFun& f, const Rational& epsilon,
                                    const FunctionClass& cls = FunctionClass::full());

}  // namespace minlin
