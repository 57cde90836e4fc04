#include "minlin/rational.hpp"

#include "minlin/error.hpp"

#include <cctype>

namespace minlin {

const Rational& Extended::value() const {
  if (infinite_) throw NotFinite("value of +inf requested");
  return value_;
}

std::string Extended::str() const { return infinite_ ? "+inf" : to_string(value_); }

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                               : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw ParseError("not an exact rational (expected \"p\" or \"p/q\"): \"" + std::string(text) +
                     "\"");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  const Rational denominator{std::string(den)};
  if (denominator == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  return Rational{n} / denominator;
}

Extended parse_extended(std::string_view text) {
  if (text == "+inf") return Extended::infinity();
  return parse_rational(text);
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace minlin
