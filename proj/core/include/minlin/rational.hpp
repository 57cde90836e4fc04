#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace minlin {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Exact rational or +inf. There is no -inf: every quantity that can diverge
/// in this library diverges upward.
class Extended {
 public:
  Extended() = default;
  Extended(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Extended(long value) : value_(value) {}                 // NOLINT(google-explicit-constructor)

  static Extended infinity() {
    Extended e;
    e.infinite_ = true;
    return e;
  }

  bool is_finite() const { return !infinite_; }
  bool is_infinite() const { return infinite_; }

  /// Throws NotFinite on +inf.
  const Rational& value() const;

  std::string str() const;

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend bool operator<(const Extended& a, const Extended& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Extended& a, const Extended& b) { return !(b < a); }
  friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
  friend bool operator>=(const Extended& a, const Extended& b) { return !(a < b); }

  friend Extended operator+(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Extended(a.value_ + b.value_);
  }

 private:
  Rational value_{0};
  bool infinite_ = false;
};

/// Parses "p/q", "p" or "-p/q". Decimal notation is rejected.
Rational parse_rational(std::string_view text);

/// As parse_rational, and additionally accepts "+inf".
Extended parse_extended(std::string_view text);

std::string to_string(const Rational& r);

}  // namespace minlin
