#include "minlin/ext_function.hpp"

#include "minlin/error.hpp"

#include <algorithm>

namespace minlin {

namespace {

void require_same_size(const ExtFun& a, const ExtFun& b) {
  if (a.size() != b.size()) {
    throw InvalidInput("function size mismatch: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()));
  }
}

}  // namespace

ExtFun::ExtFun(std::vector<Extended> values) : values_(std::move(values)) {
  if (std::none_of(values_.begin(), values_.end(),
                   [](const Extended& v) { return v.is_finite(); })) {
    throw EmptyDomain("function has empty domain (no finite value)");
  }
}

ExtFun ExtFun::real(const std::vector<Rational>& values) {
  return ExtFun(std::vector<Extended>(values.begin(), values.end()));
}

ExtFun ExtFun::constant(std::size_t n, const Rational& c) {
  return ExtFun(std::vector<Extended>(n, Extended(c)));
}

std::vector<std::size_t> ExtFun::domain() const {
  std::vector<std::size_t> dom;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].is_finite()) dom.push_back(i);
  }
  return dom;
}

bool ExtFun::is_real_valued() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Extended& v) { return v.is_finite(); });
}

const Rational& ExtFun::finite_at(std::size_t i) const {
  if (values_[i].is_infinite()) {
    throw NotFinite("function takes the value +inf at index " + std::to_string(i));
  }
  return values_[i].value();
}

std::vector<Rational> ExtFun::real_values() const {
  std::vector<Rational> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out.push_back(finite_at(i));
  return out;
}

Rational ExtFun::infimum() const {
  return std::min_element(values_.begin(), values_.end())->value();
}

bool ExtFun::pointwise_le(const ExtFun& other) const {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > other.values_[i]) return false;
  }
  return true;
}

ExtFun ExtFun::operator+(const ExtFun& other) const {
  require_same_size(*this, other);
  std::vector<Extended> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out.push_back(values_[i] + other.values_[i]);
  return ExtFun(std::move(out));
}

ExtFun ExtFun::operator-(const ExtFun& other) const {
  require_same_size(*this, other);
  std::vector<Extended> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const Rational& sub = other.finite_at(i);
    out.push_back(values_[i].is_finite() ? Extended(values_[i].value() - sub)
                                         : Extended::infinity());
  }
  return ExtFun(std::move(out));
}

ExtFun ExtFun::scaled(const Rational& alpha) const {
  if (alpha < 0) throw PreconditionError("negative scaling factor " + to_string(alpha));
  std::vector<Extended> out;
  out.reserve(values_.size());
  for (const auto& v : values_) {
    if (alpha == 0) {
      out.emplace_back(Rational(0));
    } else {
      out.push_back(v.is_finite() ? Extended(alpha * v.value()) : Extended::infinity());
    }
  }
  return ExtFun(std::move(out));
}

ExtFun ExtFun::shifted(const Rational& c) const {
  std::vector<Extended> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v + Extended(c));
  return ExtFun(std::move(out));
}

std::string ExtFun::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ", ";
    s += values_[i].str();
  }
  return s + ")";
}

}  // namespace minlin
