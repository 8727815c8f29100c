#include "sylrank/normal_form.hpp"

#include <algorithm>
#include <utility>

#include "sylrank/error.hpp"
#include "sylrank/hom.hpp"

namespace sylrank {

namespace {

// Plain dense integer matrix used inside the eliminations.
struct IntMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> e;

  IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c) {}
  Integer& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

  static IntMat identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(at(a, j), at(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, a), at(i, b));
  }
  // row_dst += q * row_src
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (at(src, j) != 0) at(dst, j) += q * at(src, j);
    }
  }
  // col_dst += q * col_src
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < rows; ++i) {
      if (at(i, src) != 0) at(i, dst) += q * at(i, src);
    }
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols; ++j) at(r, j) = -at(r, j);
  }
};

IntMat to_int(const Matrix& a) {
  IntMat m(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.entries().size(); ++k) m.e[k] = std::get<Integer>(a.entries()[k].rep);
  return m;
}

Matrix from_int(const IntMat& m) {
  std::vector<Scalar> out;
  out.reserve(m.e.size());
  for (const auto& x : m.e) out.push_back(Scalar{x});
  return Matrix(Ring::integers(), m.rows, m.cols, std::move(out));
}

struct IntSmith {
  IntMat u, d, v, vinv;
};

IntSmith int_smith(IntMat a) {
  const std::size_t n = a.rows;
  const std::size_t m = a.cols;
  IntSmith s{IntMat::identity(n), IntMat(0, 0), IntMat::identity(m), IntMat::identity(m)};

  // Column operations on A are mirrored on V (columns) and on V^{-1} (inverse row op).
  auto col_swap = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    s.v.swap_cols(x, y);
    s.vinv.swap_rows(x, y);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& q) {
    a.add_col(dst, src, q);
    s.v.add_col(dst, src, q);
    s.vinv.add_row(src, dst, -q);
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    s.u.swap_rows(x, y);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& q) {
    a.add_row(dst, src, q);
    s.u.add_row(dst, src, q);
  };

  const std::size_t lim = std::min(n, m);
  for (std::size_t t = 0; t < lim; ++t) {
    // Pivot: nonzero entry of minimal absolute value in the trailing block.
    std::size_t pi = n, pj = m;
    for (std::size_t i = t; i < n; ++i) {
      for (std::size_t j = t; j < m; ++j) {
        if (a.at(i, j) == 0) continue;
        if (pi == n || abs(a.at(i, j)) < abs(a.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == n) break;
    row_swap(t, pi);
    col_swap(t, pj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a.at(i, t) == 0) continue;
        Integer q = a.at(i, t) / a.at(t, t);
        if (q != 0) row_add(i, t, -q);
        if (a.at(i, t) != 0) clean = false;
      }
      if (!clean) {
        std::size_t best = t;
        for (std::size_t i = t + 1; i < n; ++i) {
          if (a.at(i, t) != 0 && abs(a.at(i, t)) < abs(a.at(best, t))) best = i;
        }
        row_swap(t, best);
        continue;
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        if (a.at(t, j) == 0) continue;
        Integer q = a.at(t, j) / a.at(t, t);
        if (q != 0) col_add(j, t, -q);
        if (a.at(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t best = t;
        for (std::size_t j = t + 1; j < m; ++j) {
          if (a.at(t, j) != 0 && abs(a.at(t, j)) < abs(a.at(t, best))) best = j;
        }
        col_swap(t, best);
        continue;
      }
      // Divisibility of the trailing block by the pivot.
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i) {
        for (std::size_t j = t + 1; j < m; ++j) {
          if (!mpz_divisible_p(a.at(i, j).get_mpz_t(), a.at(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == n) break;
      row_add(t, bad, Integer(1));
    }
    if (a.at(t, t) < 0) {
      a.negate_row(t);
      s.u.negate_row(t);
    }
  }
  s.d = std::move(a);
  return s;
}

// Field arithmetic on raw scalars for Q (Rational) and Fp (Integer residues).
bool field_zero(const Ring& f, const Scalar& x) { return f.is_zero(x); }

struct FieldSolve {
  std::vector<std::vector<Scalar>> echelon;    // reduced rows (A-part)
  std::vector<std::vector<Scalar>> transform;  // matching combination of the input rows
  std::vector<std::size_t> pivot_cols;
  std::vector<std::vector<Scalar>> kernel;
};

// Gauss-Jordan on [A | I] over a field.
FieldSolve field_solve(const Matrix& a) {
  const Ring& f = a.ring();
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(m));
  std::vector<std::vector<Scalar>> tr(n, std::vector<Scalar>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) rows[i][j] = a(i, j);
    tr[i][i] = f.one();
  }

  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < m && rank < n; ++col) {
    std::size_t p = rank;
    while (p < n && field_zero(f, rows[p][col])) ++p;
    if (p == n) continue;
    std::swap(rows[p], rows[rank]);
    std::swap(tr[p], tr[rank]);
    Scalar inv = *f.inverse(rows[rank][col]);
    for (auto& x : rows[rank]) x = f.mul(inv, x);
    for (auto& x : tr[rank]) x = f.mul(inv, x);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == rank || field_zero(f, rows[i][col])) continue;
      Scalar c = rows[i][col];
      for (std::size_t j = 0; j < m; ++j) {
        if (!field_zero(f, rows[rank][j])) rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[rank][j]));
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (!field_zero(f, tr[rank][j])) tr[i][j] = f.sub(tr[i][j], f.mul(c, tr[rank][j]));
      }
    }
    pivots.push_back(col);
    ++rank;
  }

  FieldSolve out;
  out.pivot_cols = pivots;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < rank) {
      out.echelon.push_back(std::move(rows[i]));
      out.transform.push_back(std::move(tr[i]));
    } else {
      out.kernel.push_back(std::move(tr[i]));
    }
  }
  return out;
}

std::optional<std::vector<Scalar>> field_membership(const Matrix& a, const std::vector<Scalar>& v) {
  const Ring& f = a.ring();
  FieldSolve fs = field_solve(a);
  std::vector<Scalar> rest = v;
  std::vector<Scalar> u(a.rows(), f.zero());
  for (std::size_t k = 0; k < fs.pivot_cols.size(); ++k) {
    Scalar c = rest[fs.pivot_cols[k]];
    if (field_zero(f, c)) continue;
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] = f.sub(rest[j], f.mul(c, fs.echelon[k][j]));
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = f.add(u[j], f.mul(c, fs.transform[k][j]));
  }
  for (const auto& x : rest) {
    if (!field_zero(f, x)) return std::nullopt;
  }
  return u;
}

Matrix rows_to_matrix(const Ring& ring, std::size_t cols, const std::vector<std::vector<Scalar>>& rows) {
  std::vector<Scalar> e;
  for (const auto& r : rows) e.insert(e.end(), r.begin(), r.end());
  return Matrix(ring, rows.size(), cols, std::move(e));
}

// Group-algebra rows <-> base-field coordinate vectors (entry-major, then group index).
std::vector<Scalar> ga_coords(const Matrix& row) {
  std::vector<Scalar> out;
  for (const auto& e : row.entries()) {
    const auto& c = std::get<std::vector<Scalar>>(e.rep);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

Matrix ga_from_coords(const Ring& ga, const std::vector<std::vector<Scalar>>& coords, std::size_t entries) {
  const std::size_t g = ga.group().order();
  Matrix out(ga, coords.size(), entries);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    for (std::size_t j = 0; j < entries; ++j) {
      out(i, j) = Scalar{std::vector<Scalar>(coords[i].begin() + static_cast<std::ptrdiff_t>(j * g),
                                             coords[i].begin() + static_cast<std::ptrdiff_t>((j + 1) * g))};
    }
  }
  return out;
}

// [lift(A); n I] over Z for residue rings.
IntMat residue_system(const Matrix& a) {
  const Integer& n = a.ring().modulus();
  IntMat lifted = to_int(lift_to_integers(a));
  IntMat b(a.rows() + a.cols(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) b.at(i, j) = lifted.at(i, j);
  }
  for (std::size_t j = 0; j < a.cols(); ++j) b.at(a.rows() + j, j) = n;
  return b;
}

std::optional<std::vector<Integer>> int_membership(const IntMat& a, const std::vector<Integer>& v) {
  IntSmith s = int_smith(a);
  const std::size_t n = a.rows;
  const std::size_t m = a.cols;
  // w = v V; solve y D = w; u = y U.
  std::vector<Integer> w(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t l = 0; l < m; ++l) {
      if (v[l] != 0 && s.v.at(l, j) != 0) w[j] += v[l] * s.v.at(l, j);
    }
  }
  std::vector<Integer> y(n);
  for (std::size_t j = 0; j < m; ++j) {
    const Integer d = j < n ? s.d.at(j, j) : Integer(0);
    if (d == 0) {
      if (w[j] != 0) return std::nullopt;
      continue;
    }
    if (!mpz_divisible_p(w[j].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    y[j] = w[j] / d;
  }
  std::vector<Integer> u(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) u[j] += y[i] * s.u.at(i, j);
  }
  return u;
}

std::vector<std::vector<Integer>> int_kernel(const IntMat& a) {
  IntSmith s = int_smith(a);
  std::size_t r = 0;
  while (r < std::min(a.rows, a.cols) && s.d.at(r, r) != 0) ++r;
  std::vector<std::vector<Integer>> out;
  for (std::size_t i = r; i < a.rows; ++i) {
    out.emplace_back(s.u.e.begin() + static_cast<std::ptrdiff_t>(i * a.rows),
                     s.u.e.begin() + static_cast<std::ptrdiff_t>((i + 1) * a.rows));
  }
  return out;
}

std::size_t bareiss_rank(IntMat a) {
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < a.cols && rank < a.rows; ++col) {
    std::size_t p = rank;
    while (p < a.rows && a.at(p, col) == 0) ++p;
    if (p == a.rows) continue;
    a.swap_rows(p, rank);
    const Integer& piv = a.at(rank, col);
    for (std::size_t i = rank + 1; i < a.rows; ++i) {
      const Integer lead = a.at(i, col);
      for (std::size_t j = col + 1; j < a.cols; ++j) {
        Integer& x = a.at(i, j);
        x *= piv;
        if (lead != 0 && a.at(rank, j) != 0) x -= lead * a.at(rank, j);
        if (prev != 1) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, col) = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

std::size_t rational_rank(const Matrix& a) {
  IntMat m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& q = std::get<Rational>(a(i, j).rep);
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& q = std::get<Rational>(a(i, j).rep);
      m.at(i, j) = q.get_num() * (l / q.get_den());
    }
  }
  return bareiss_rank(std::move(m));
}

std::size_t prime_rank(const Matrix& a) {
  const Ring& f = a.ring();
  EchelonBasis basis(f, a.cols());
  std::vector<Scalar> row(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a(i, j);
    basis.insert(row);
  }
  return basis.rank();
}

}  // namespace

Matrix lift_to_integers(const Matrix& a) {
  if (!a.ring().is_residue_ring()) throw Error("lift_to_integers requires a residue ring");
  return Matrix(Ring::integers(), a.rows(), a.cols(), a.entries());
}

std::size_t valuation(const Integer& d, const Integer& p) {
  if (d == 0) throw Error("valuation of zero");
  Integer x = abs(d);
  std::size_t v = 0;
  while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
    x /= p;
    ++v;
  }
  return v;
}

bool supports_kernels(const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::PrimeField:
    case RingKind::IntegersMod:
    case RingKind::GroupAlgebra:
      return true;
    default:
      return false;
  }
}

std::size_t field_rank(const Matrix& a) {
  if (a.empty()) return 0;
  switch (a.ring().kind()) {
    case RingKind::Rationals:
      return rational_rank(a);
    case RingKind::PrimeField:
      return prime_rank(a);
    case RingKind::GroupAlgebra:
      return field_rank(regular_rep(a));
    default:
      throw Error("field_rank: unsupported ring " + a.ring().name());
  }
}

SmithDecomposition smith(const Matrix& a) {
  if (a.ring().kind() != RingKind::Integers) throw RingMismatch("smith requires an integer matrix, got " + a.ring().name());
  IntSmith s = int_smith(to_int(a));
  SmithDecomposition out{from_int(s.u), from_int(s.d), from_int(s.v), from_int(s.vinv), {}};
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) out.divisors.push_back(s.d.at(i, i));
  return out;
}

std::vector<Integer> smith_divisors_mod(const Matrix& a) {
  if (!a.ring().is_residue_ring()) throw RingMismatch("smith_divisors_mod requires Zmod(n)");
  std::vector<Integer> out = smith(lift_to_integers(a)).divisors;
  for (auto& d : out) mpz_fdiv_r(d.get_mpz_t(), d.get_mpz_t(), a.ring().modulus().get_mpz_t());
  return out;
}

std::optional<Matrix> row_membership(const Matrix& a, const Matrix& v) {
  require_same_ring(a.ring(), v.ring(), "row_membership");
  if (v.rows() != 1 || v.cols() != a.cols()) throw Error("row_membership: v must be a 1 x cols row");
  const Ring& ring = a.ring();
  switch (ring.kind()) {
    case RingKind::Integers: {
      auto u = int_membership(to_int(a), to_int(v).e);
      if (!u) return std::nullopt;
      IntMat out(1, a.rows());
      out.e = std::move(*u);
      return from_int(out);
    }
    case RingKind::PrimeField:
    case RingKind::IntegersMod: {
      auto u = int_membership(residue_system(a), to_int(lift_to_integers(v)).e);
      if (!u) return std::nullopt;
      Matrix out(ring, 1, a.rows());
      for (std::size_t i = 0; i < a.rows(); ++i) out(0, i) = ring.from_integer((*u)[i]);
      return out;
    }
    case RingKind::Rationals: {
      auto u = field_membership(a, v.entries());
      if (!u) return std::nullopt;
      return Matrix(ring, 1, a.rows(), std::move(*u));
    }
    case RingKind::GroupAlgebra: {
      auto c = field_membership(regular_rep(a), ga_coords(v));
      if (!c) return std::nullopt;
      return ga_from_coords(ring, {*c}, a.rows());
    }
    default:
      throw Error("row_membership: unsupported ring " + ring.name());
  }
}

Matrix left_kernel(const Matrix& a) {
  const Ring& ring = a.ring();
  switch (ring.kind()) {
    case RingKind::Integers: {
      auto rows = int_kernel(to_int(a));
      IntMat m(rows.size(), a.rows());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < a.rows(); ++j) m.at(i, j) = rows[i][j];
      }
      return from_int(m);
    }
    case RingKind::PrimeField:
    case RingKind::IntegersMod: {
      std::vector<std::vector<Scalar>> kept;
      for (const auto& r : int_kernel(residue_system(a))) {
        std::vector<Scalar> u;
        bool nonzero = false;
        for (std::size_t j = 0; j < a.rows(); ++j) {
          u.push_back(ring.from_integer(r[j]));
          nonzero = nonzero || !ring.is_zero(u.back());
        }
        if (nonzero) kept.push_back(std::move(u));
      }
      return rows_to_matrix(ring, a.rows(), kept);
    }
    case RingKind::Rationals:
      return rows_to_matrix(ring, a.rows(), field_solve(a).kernel);
    case RingKind::GroupAlgebra:
      return ga_from_coords(ring, field_solve(regular_rep(a)).kernel, a.rows());
    default:
      throw Error("left_kernel: unsupported ring " + ring.name());
  }
}

EchelonBasis::EchelonBasis(Ring field, std::size_t cols)
    : field_(std::move(field)), cols_(cols), pivot_of_col_(cols, -1) {
  if (!field_.is_field()) throw Error("EchelonBasis requires Q or Fp");
}

bool EchelonBasis::insert(const std::vector<Scalar>& input) {
  std::vector<Scalar> row = input;
  const Ring& f = field_;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (f.is_zero(row[j])) continue;
    const std::ptrdiff_t p = pivot_of_col_[j];
    if (p < 0) {
      Scalar inv = *f.inverse(row[j]);
      for (std::size_t l = j; l < cols_; ++l) {
        if (!f.is_zero(row[l])) row[l] = f.mul(inv, row[l]);
      }
      pivot_of_col_[j] = static_cast<std::ptrdiff_t>(rows_.size());
      pivots_.push_back(j);
      rows_.push_back(std::move(row));
      return true;
    }
    const auto& basis_row = rows_[static_cast<std::size_t>(p)];
    Scalar c = row[j];
    for (std::size_t l = j; l < cols_; ++l) {
      if (!f.is_zero(basis_row[l])) row[l] = f.sub(row[l], f.mul(c, basis_row[l]));
    }
  }
  return false;
}

}  // namespace sylrank
