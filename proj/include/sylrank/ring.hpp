#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sylrank/group.hpp"

namespace sylrank {

using Integer = mpz_class;
using Rational = mpq_class;

/// A ring element. The active alternative is dictated by the owning Ring:
/// Integer for Z and residue rings (canonical representative in [0, n)),
/// Rational for Q, and a dense vector of base-ring scalars for group algebras
/// (indexed by group element) and matrix amplifications (row-major k*k).
struct Scalar {
  std::variant<Integer, Rational, std::vector<Scalar>> rep;

  bool operator==(const Scalar& other) const = default;
};

enum class RingKind { Integers, Rationals, PrimeField, IntegersMod, GroupAlgebra, MatrixAmplification };

bool is_prime(const Integer& n);

/// Descriptor of a supported exact coefficient ring together with its arithmetic.
/// Rings are cheap to copy; nested rings and groups are shared immutably.
class Ring {
 public:
  static Ring integers();
  static Ring rationals();
  static Ring prime_field(const Integer& p);
  static Ring integers_mod(const Integer& n);
  static Ring group_algebra(const Ring& base, const FiniteGroup& group);
  static Ring matrix_amplification(const Ring& base, std::size_t k);

  RingKind kind() const { return kind_; }
  /// p for PrimeField, n for IntegersMod, 0 otherwise.
  const Integer& modulus() const { return modulus_; }
  const Ring& base() const;
  const FiniteGroup& group() const;
  /// k for MatrixAmplification.
  std::size_t degree() const { return degree_; }

  bool is_field() const { return kind_ == RingKind::Rationals || kind_ == RingKind::PrimeField; }
  bool is_residue_ring() const { return kind_ == RingKind::PrimeField || kind_ == RingKind::IntegersMod; }
  bool is_finite() const;

  /// Canonical descriptor in the ring grammar, e.g. "GroupRing(Q,C3)".
  std::string name() const;
  bool operator==(const Ring& other) const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_integer(const Integer& value) const;
  Scalar from_int(long value) const { return from_integer(Integer(value)); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  bool is_zero(const Scalar& a) const;
  /// Multiplicative inverse for fields; empty for zero.
  std::optional<Scalar> inverse(const Scalar& a) const;

  /// Reduces/normalizes a scalar into canonical form for this ring.
  Scalar normalize(Scalar a) const;

  std::string format(const Scalar& a) const;
  /// Parses a scalar; errors are reported as ParseError with column offsets
  /// relative to `column` on line `line`.
  Scalar parse(std::string_view text, std::size_t line = 1, std::size_t column = 1) const;

 private:
  Ring() = default;

  RingKind kind_ = RingKind::Integers;
  Integer modulus_ = 0;
  std::size_t degree_ = 0;
  std::shared_ptr<const Ring> base_;
  std::shared_ptr<const FiniteGroup> group_;
};

}  // namespace sylrank
