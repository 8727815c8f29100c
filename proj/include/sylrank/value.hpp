#pragma once

#include <compare>
#include <string>

#include "sylrank/ring.hpp"

namespace sylrank {

/// "p/q" with the denominator always written, e.g. "0/1", "-3/2".
std::string fraction_text(const Rational& q);

/// Nonnegative rational or +inf.
class ExtendedValue {
 public:
  ExtendedValue() = default;
  /// Throws InvariantViolation on a negative value.
  explicit ExtendedValue(const Rational& q);
  static ExtendedValue infinity();

  bool is_infinite() const { return infinite_; }
  /// The finite value; throws on inf.
  const Rational& finite() const;

  ExtendedValue operator+(const ExtendedValue& other) const;
  /// a - b; refuses inf - inf, finite - inf, and negative results.
  ExtendedValue minus(const ExtendedValue& other) const;
  ExtendedValue scaled(const Rational& w) const;

  bool operator==(const ExtendedValue& other) const;
  std::partial_ordering operator<=>(const ExtendedValue& other) const;

  std::string text() const;

 private:
  Rational q_ = 0;
  bool infinite_ = false;
};

}  // namespace sylrank
