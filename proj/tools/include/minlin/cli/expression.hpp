#pragma once

#include "minlin/cli/instance.hpp"
#include "minlin/ext_function.hpp"
#include "minlin/rational.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace minlin::cli {

/// A scalar (possibly +inf) or a whole function.
using Value = std::variant<Extended, ExtFun>;

/// Evaluates one of
///
///   conjugate(f, phi)      biconjugate(f)          envelope(f)
///   T(f)(Q)                F(f)(Q)                 sigma(A)(Q)
///   infconv(f, g)(theta)
///
/// against the named objects of an instance. `zero` names the zero function
/// unless the instance defines it. Throws ParseError for malformed
/// expressions, unknown names or arity mismatches.
Value evaluate(const Instance& instance, std::string_view expression);

std::string format_value(const Value& value);
nlohmann::ordered_json value_to_json(const Value& value);

}  // namespace minlin::cli
