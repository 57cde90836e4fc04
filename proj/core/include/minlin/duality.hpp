#pragma once

#include "minlin/ext_function.hpp"
#include "minlin/function_class.hpp"
#include "minlin/rational.hpp"
#include "minlin/space.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace minlin {

struct ConjugateValue {
  Rational value;
  std::size_t maximizer = 0;  // lowest index attaining the value, always in dom(f)
};

/// f^×(φ) = max_{x ∈ dom f} φ(x) − f(x).
ConjugateValue conjugate(const ExtFun& f, const ExtFun& phi);

/// Whether A_Y(f) = {φ ∈ Y : φ ≤ f} is nonempty.
bool has_minorant(const Space& space, const ExtFun& f, const FunctionClass& cls);

/// f^××(x) = sup_{φ ∈ Y} φ(x) − f^×(φ), one LP per point; an unbounded LP
/// gives +inf. Throws NoMinorant when A_Y(f) is empty.
ExtFun biconjugate(const Space& space, const ExtFun& f, const FunctionClass& cls);

struct BiconjugationReport {
  ExtFun original;
  std::optional<ExtFun> biconjugate;  // empty when A_Y(f) = ∅
  bool minorant_exists = false;
  bool property_H = false;
  bool below_original = false;        // f^×× ≤ f
  std::vector<std::size_t> gap_points;  // f^××(x) < f(x)

  bool equal() const { return biconjugate && gap_points.empty(); }
  /// f^×× = f whenever (H) holds and A_Y(f) ≠ ∅.
  bool consistent() const;
};

BiconjugationReport check_biconjugation(const Space& space, const ExtFun& f,
                                        const FunctionClass& cls);

/// sup { φ(x) : φ ∈ A_Y(f) } per point. Throws NoMinorant.
ExtFun minorant_envelope(const Space& space, const ExtFun& f, const FunctionClass& cls);

/// Smallest L with u(x) ≤ v(y) + L d(x,y) for all x ≠ y, y ∈ dom v.
Rational insertion_lipschitz_constant(const Space& space, const ExtFun& u, const ExtFun& v);

/// ψ ∈ Y with u ≤ ψ ≤ v. Full returns u; Lipschitz returns the Pasch–Hausdorff
/// envelope ψ(x) = min_{y ∈ dom v} v(y) + L d(x,y). Throws Unsupported for a
/// finite cone and PreconditionError unless u is real-valued with u ≤ v.
ExtFun insert_between(const Space& space, const ExtFun& u, const ExtFun& v,
                      const FunctionClass& cls);

struct Decomposition {
  ExtFun first;   // ψ1 ≤ f
  ExtFun second;  // ψ2 ≤ g
};

/// Splits φ ≤ f + g as ψ1 + ψ2 with ψ1 ∈ A_Y(f), ψ2 ∈ A_Y(g).
Decomposition sum_decompose(const Space& space, const ExtFun& phi, const ExtFun& f,
                            const ExtFun& g, const FunctionClass& cls);

/// ψ1 ≤ f, ψ2 ≤ g, ψ1 + ψ2 = φ and both in Y, checked exactly.
bool certify_decomposition(const Space& space, const ExtFun& phi, const ExtFun& f,
                           const ExtFun& g, const FunctionClass& cls, const Decomposition& d);

struct MinimaxReport {
  Rational direct;          // f^×(ξ)
  Rational via_minorants;   // inf_{φ ≤ f} φ^×(ξ), by LP
  ExtFun optimal_minorant;  // attains via_minorants

  bool equal() const { return direct == via_minorants; }
};

/// Full class only.
MinimaxReport minimax_identity_check(const ExtFun& f, const ExtFun& xi);

struct InfConvolution {
  Rational value;
  ExtFun xi;  // f^×(ξ) + g^×(θ − ξ) = value
};

/// (f^× ⋄ g^×)(θ) over the full class, by LP. f, g and θ must be real-valued
/// (throws NotFinite).
InfConvolution infconv_eval(const ExtFun& f, const ExtFun& g, const ExtFun& theta);

struct InfConvolutionReport {
  InfConvolution infconv;
  Rational witness_value;     // f^×(ξ) + g^×(θ − ξ) recomputed directly
  Rational conjugate_of_sum;  // (f + g)^×(θ)

  bool equal() const {
    return infconv.value == conjugate_of_sum && witness_value == infconv.value;
  }
};

InfConvolutionReport check_infconv_theorem(const ExtFun& f, const ExtFun& g,
                                           const ExtFun& theta);

}  // namespace minlin
