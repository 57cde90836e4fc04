#pragma once

#include "minlin/ext_function.hpp"
#include "minlin/measure.hpp"
#include "minlin/rational.hpp"

#include <initializer_list>
#include <ostream>
#include <vector>

namespace minlin {

// doctest prints these on failure.
inline std::ostream& operator<<(std::ostream& os, const Extended& e) { return os << e.str(); }
inline std::ostream& operator<<(std::ostream& os, const ExtFun& f) { return os << f.str(); }
inline std::ostream& operator<<(std::ostream& os, const Measure& m) { return os << m.str(); }

}  // namespace minlin

namespace minlin::testing {

inline ExtFun fn(std::initializer_list<const char*> values) {
  std::vector<Extended> out;
  for (const char* v : values) out.push_back(parse_extended(v));
  return ExtFun(std::move(out));
}

inline Measure ms(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.push_back(parse_rational(v));
  return Measure(std::move(out));
}

inline Rational q(const char* text) { return parse_rational(text); }

}  // namespace minlin::testing
