#pragma once

#include "minlin/ext_function.hpp"
#include "minlin/function_class.hpp"
#include "minlin/lp.hpp"
#include "minlin/space.hpp"

#include <cstddef>
#include <vector>

namespace minlin::detail {

// LP variables parameterizing a test function φ ∈ Y: one free variable per
// point for Full/Lipschitz, one nonnegative coefficient per generator for a
// finite cone. `value_terms[y]` expresses φ(y) as a linear form.
struct ClassVariables {
  std::vector<std::size_t> variables;
  std::vector<std::vector<lp::Term>> value_terms;
};

inline ClassVariables add_class_variables(lp::LinearProgram& program, const Space& space,
                                          const FunctionClass& cls) {
  ClassVariables out;
  const std::size_t n = space.size();
  out.value_terms.resize(n);
  if (cls.kind() == FunctionClass::Kind::FiniteCone) {
    const auto& gens = cls.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      out.variables.push_back(program.add_variable("lambda" + std::to_string(i), true));
    }
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].finite_at(y) != 0) out.value_terms[y].push_back({out.variables[i], gens[i].finite_at(y)});
      }
    }
  } else {
    for (std::size_t y = 0; y < n; ++y) {
      out.variables.push_back(program.add_variable("phi_" + space.id(y)));
      out.value_terms[y].push_back({out.variables.back(), Rational(1)});
    }
  }
  return out;
}

// Reads φ back from an LP point.
inline ExtFun extract_function(const ClassVariables& vars, const FunctionClass& cls,
                               const std::vector<Rational>& point) {
  std::vector<Rational> coeffs;
  coeffs.reserve(vars.variables.size());
  for (auto v : vars.variables) coeffs.push_back(point[v]);
  if (cls.kind() == FunctionClass::Kind::FiniteCone) return cls.combine(coeffs);
  return ExtFun::real(coeffs);
}

inline std::vector<lp::Term> with_term(std::vector<lp::Term> terms, std::size_t variable,
                                       Rational coefficient) {
  terms.push_back({variable, std::move(coefficient)});
  return terms;
}

inline std::vector<lp::Term> negated(std::vector<lp::Term> terms) {
  for (auto& t : terms) t.coefficient = -t.coefficient;
  return terms;
}

}  // namespace minlin::detail
