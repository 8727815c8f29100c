#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sylrank/matrix.hpp"

namespace sylrank {

/// U * A * V = D over Z with U, V unimodular and D diagonal with d1 | d2 | ... .
struct SmithDecomposition {
  Matrix u;
  Matrix d;
  Matrix v;
  /// Inverse of V; rows of v_inverse map Smith coordinates back to generators.
  Matrix v_inverse;
  /// The min(n, m) diagonal entries of D, nonnegative, zeros last.
  std::vector<Integer> divisors;
};

/// Dimension of the row space over Q or Fp; group-algebra matrices are measured
/// through regular_rep (so the result is a k-dimension, not normalized by |G|).
std::size_t field_rank(const Matrix& a);

SmithDecomposition smith(const Matrix& a);

/// Smith divisors of a Zmod(n) matrix: lift to Z, run integer Smith, reduce mod n.
std::vector<Integer> smith_divisors_mod(const Matrix& a);

/// Some u with u * A = v (v a 1 x cols row), or nothing if v is outside the row space.
/// Supported rings: Z, Q, Fp, Zmod(n), group algebras over a field.
std::optional<Matrix> row_membership(const Matrix& a, const Matrix& v);

/// Rows generating {u : u * A = 0} as a module.
Matrix left_kernel(const Matrix& a);

/// True when row_membership/left_kernel support the ring.
bool supports_kernels(const Ring& ring);

/// Residue-ring matrix lifted entrywise to Z (representatives in [0, n)).
Matrix lift_to_integers(const Matrix& a);

/// p-adic valuation of a nonzero integer.
std::size_t valuation(const Integer& d, const Integer& p);

/// Incremental row echelon basis over Q or Fp; rows are inserted one by one
/// and reduced against the current pivots.
class EchelonBasis {
 public:
  EchelonBasis(Ring field, std::size_t cols);

  /// Returns true if the row was independent of the rows inserted so far.
  bool insert(const std::vector<Scalar>& row);
  std::size_t rank() const { return pivots_.size(); }

 private:
  Ring field_;
  std::size_t cols_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::ptrdiff_t> pivot_of_col_;
};

}  // namespace sylrank
