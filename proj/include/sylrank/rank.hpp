#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sylrank/hom.hpp"
#include "sylrank/module.hpp"
#include "sylrank/value.hpp"

namespace sylrank {

/// Sylvester matrix rank function. Catalog values are always finite rationals,
/// so the evaluator returns a Rational; callers wanting the extended type use value().
class MatrixRankFn {
 public:
  using Evaluator = std::function<Rational(const Matrix&)>;

  MatrixRankFn(Ring ring, std::string label, Evaluator evaluator);

  const Ring& ring() const { return ring_; }
  const std::string& label() const { return label_; }
  /// Refuses matrices over any other ring.
  Rational operator()(const Matrix& a) const;
  ExtendedValue value(const Matrix& a) const { return ExtendedValue((*this)(a)); }

 private:
  Ring ring_;
  std::string label_;
  Evaluator evaluator_;
};

class ModuleRankFn {
 public:
  using Evaluator = std::function<ExtendedValue(const FPModule&)>;

  ModuleRankFn(Ring ring, std::string label, Evaluator evaluator);
  const Ring& ring() const { return ring_; }
  const std::string& label() const { return label_; }
  ExtendedValue operator()(const FPModule& m) const;

 private:
  Ring ring_;
  std::string label_;
  Evaluator evaluator_;
};

/// Rank of maps R^n -> R^m between free modules, given by their matrices.
class MapRankFn {
 public:
  using Evaluator = std::function<ExtendedValue(const Matrix&)>;

  MapRankFn(Ring ring, std::string label, Evaluator evaluator);
  const Ring& ring() const { return ring_; }
  const std::string& label() const { return label_; }
  ExtendedValue operator()(const Matrix& f) const;

 private:
  Ring ring_;
  std::string label_;
  Evaluator evaluator_;
};

MatrixRankFn rk_field(const Ring& field);
/// Over Zmod(p^k), induced by the length L(Z/p^i) = i/k.
MatrixRankFn rk_zmod_pk(const Integer& p, std::size_t k);
MatrixRankFn rk_group_vn(const Ring& field, const FiniteGroup& group);
MatrixRankFn rk_pullback(const RingHom& h, const MatrixRankFn& rk_target);
MatrixRankFn rk_convex(const std::vector<std::pair<Rational, MatrixRankFn>>& terms);
MatrixRankFn rk_morita(const MatrixRankFn& base, std::size_t k);

/// m - rk(A).
ExtendedValue module_dim(const MatrixRankFn& rk, const FPModule& m);
/// dim(R^m) - dim(R^m / R^n F).
ExtendedValue map_rank_from_module(const ModuleRankFn& dim, const Matrix& f);
/// rk(alpha_A).
ExtendedValue matrix_rank_from_map(const MapRankFn& mrf, const Matrix& a);

ModuleRankFn module_rank_of(const MatrixRankFn& rk);
MapRankFn map_rank_of(const ModuleRankFn& dim);
/// Matrix rank read back from a map rank (values must be finite).
MatrixRankFn matrix_rank_of(const MapRankFn& mrf);

}  // namespace sylrank
