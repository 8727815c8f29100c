#include "sylrank/value.hpp"

#include "sylrank/error.hpp"

namespace sylrank {

std::string fraction_text(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

ExtendedValue::ExtendedValue(const Rational& q) : q_(q) {
  q_.canonicalize();
  if (q_ < 0) throw InvariantViolation("negative extended value " + fraction_text(q_));
}

ExtendedValue ExtendedValue::infinity() {
  ExtendedValue v;
  v.infinite_ = true;
  return v;
}

const Rational& ExtendedValue::finite() const {
  if (infinite_) throw InvariantViolation("value is infinite");
  return q_;
}

ExtendedValue ExtendedValue::operator+(const ExtendedValue& other) const {
  if (infinite_ || other.infinite_) return infinity();
  return ExtendedValue(q_ + other.q_);
}

ExtendedValue ExtendedValue::minus(const ExtendedValue& other) const {
  if (other.infinite_) throw InvariantViolation("subtraction of an infinite value");
  if (infinite_) return infinity();
  return ExtendedValue(q_ - other.q_);
}

ExtendedValue ExtendedValue::scaled(const Rational& w) const {
  if (w < 0) throw InvariantViolation("negative scale factor");
  if (infinite_) return w == 0 ? ExtendedValue() : infinity();
  return ExtendedValue(q_ * w);
}

bool ExtendedValue::operator==(const ExtendedValue& other) const {
  if (infinite_ || other.infinite_) return infinite_ == other.infinite_;
  return q_ == other.q_;
}

std::partial_ordering ExtendedValue::operator<=>(const ExtendedValue& other) const {
  if (infinite_ && other.infinite_) return std::partial_ordering::equivalent;
  if (infinite_) return std::partial_ordering::greater;
  if (other.infinite_) return std::partial_ordering::less;
  const int c = cmp(q_, other.q_);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

std::string ExtendedValue::text() const { return infinite_ ? "inf" : fraction_text(q_); }

}  // namespace sylrank
