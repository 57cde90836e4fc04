#pragma once

#include "minlin/ext_function.hpp"
#include "minlin/rational.hpp"
#include "minlin/space.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace minlin {

/// The cone Y of real-valued test functions.
///
///  - Full: every function on the space.
///  - Lipschitz: Lipschitz functions for the space metric. On a finite metric
///    space this is again every function; the class differs from Full only in
///    the constructions it admits (hat bumps, Pasch–Hausdorff insertion) and in
///    requiring a metric.
///  - FiniteCone: nonnegative combinations of finitely many generators. With
///    `affine_closed` the constants +1 and -1 are adjoined, so the cone is
///    closed under adding constants.
class FunctionClass {
 public:
  enum class Kind { Full, Lipschitz, FiniteCone };

  static FunctionClass full() { return FunctionClass(Kind::Full); }
  static FunctionClass lipschitz() { return FunctionClass(Kind::Lipschitz); }

  /// Throws NotFinite for a generator with a +inf value and InvalidInput when
  /// a generator length differs from `num_points`.
  static FunctionClass finite_cone(std::size_t num_points, std::vector<ExtFun> generators,
                                   bool affine_closed = true);

  Kind kind() const { return kind_; }
  bool affine_closed() const { return kind_ != Kind::FiniteCone || affine_closed_; }

  /// Generators as declared, without the adjoined constants.
  const std::vector<ExtFun>& declared_generators() const { return declared_; }
  /// Generators spanning the cone, including ±1 when affine closed.
  const std::vector<ExtFun>& generators() const { return generators_; }

  /// Σ λ_i g_i.
  ExtFun combine(const std::vector<Rational>& coefficients) const;

 private:
  explicit FunctionClass(Kind kind) : kind_(kind) {}

  Kind kind_;
  bool affine_closed_ = true;
  std::vector<ExtFun> declared_;
  std::vector<ExtFun> generators_;
};

std::string_view to_string(FunctionClass::Kind kind);

struct Membership {
  bool member = false;
  /// Lipschitz: best constant max_{x≠y} |φ(x)-φ(y)| / d(x,y).
  std::optional<Rational> lipschitz_constant;
  /// FiniteCone: λ ≥ 0 with Σ λ_i g_i = φ, indexed like generators().
  std::vector<Rational> coefficients;
};

/// Throws NotFinite if φ takes +inf and PreconditionError for the Lipschitz
/// class on a space without a metric.
Membership contains(const Space& space, const FunctionClass& cls, const ExtFun& phi);

/// Result of looking for a [0,1]-valued bump σ ∈ Y with σ(x) = 1 and σ ≡ 0
/// off the neighborhood.
struct BumpWitness {
  std::size_t point = 0;
  std::vector<std::size_t> neighborhood;
  std::optional<ExtFun> sigma;

  bool found() const { return sigma.has_value(); }
};

/// Throws PreconditionError when x is not in U.
BumpWitness check_property_H(const Space& space, const FunctionClass& cls, std::size_t x,
                             const std::vector<std::size_t>& neighborhood);

/// Independent certification of a witness: membership, range, peak, support.
bool certify_bump(const Space& space, const FunctionClass& cls, const BumpWitness& witness);

struct PropertyHReport {
  std::vector<BumpWitness> entries;
  /// Every singleton {x} appears in the basis.
  bool covers_singletons = false;

  bool all_pass() const;
  /// First (x, U) without a witness.
  const BumpWitness* first_failure() const;
};

/// Checks every (x, U) with x ∈ U over the basis. An empty basis means the
/// singleton basis, the minimal neighborhoods of the discrete topology.
PropertyHReport check_property_H_all(const Space& space, const FunctionClass& cls,
                                     const std::vector<std::vector<std::size_t>>& basis = {});

std::vector<std::vector<std::size_t>> singleton_basis(std::size_t n);

}  // namespace minlin
