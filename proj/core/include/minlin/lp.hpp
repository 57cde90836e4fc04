#pragma once

#include "minlin/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace minlin::lp {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, Equal, GreaterEqual };

struct Term {
  std::size_t variable;
  Rational coefficient;
};

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation;
  Rational rhs;
};

/// Small dense linear program over the rationals. Variables are free unless
/// flagged nonnegative.
class LinearProgram {
 public:
  explicit LinearProgram(Sense sense) : sense_(sense) {}

  std::size_t add_variable(std::string name, bool nonnegative = false);
  void set_objective(std::size_t variable, Rational coefficient);

  /// Sparse form; unmentioned variables get coefficient zero. Repeated
  /// variables accumulate.
  void add_constraint(const std::vector<Term>& terms, Relation relation, Rational rhs);
  /// Dense form. The length is checked by validate().
  void add_dense_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs);

  Sense sense() const { return sense_; }
  std::size_t num_variables() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<bool>& nonnegative() const { return nonnegative_; }
  const std::vector<Rational>& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  /// Throws MalformedProgram on dimension mismatch or an empty variable list.
  void validate() const;

 private:
  Sense sense_;
  std::vector<std::string> names_;
  std::vector<bool> nonnegative_;
  std::vector<Rational> objective_;
  std::vector<Constraint> constraints_;
};

struct Optimal {
  Rational value;
  std::vector<Rational> point;
};

/// `ray` is a direction along which every constraint stays satisfied and the
/// objective strictly improves.
struct Unbounded {
  std::vector<Rational> ray;
};

struct Infeasible {};

using Result = std::variant<Optimal, Unbounded, Infeasible>;

/// Two-phase primal simplex with Bland's rule on an exact rational tableau.
/// Deterministic: ties break on the lowest column index.
Result solve(const LinearProgram& program);

Rational objective_value(const LinearProgram& program, std::span<const Rational> point);

/// Exact feasibility check with zero tolerance.
bool is_feasible(const LinearProgram& program, std::span<const Rational> point);

/// Checks the recession conditions and strict improvement of a ray.
bool is_improving_ray(const LinearProgram& program, std::span<const Rational> ray);

}  // namespace minlin::lp
