#include "sylrank/rank.hpp"

#include <algorithm>

#include "sylrank/error.hpp"
#include "sylrank/normal_form.hpp"

namespace sylrank {

MatrixRankFn::MatrixRankFn(Ring ring, std::string label, Evaluator evaluator)
    : ring_(std::move(ring)), label_(std::move(label)), evaluator_(std::move(evaluator)) {}

Rational MatrixRankFn::operator()(const Matrix& a) const {
  require_same_ring(ring_, a.ring(), label_.c_str());
  Rational q = evaluator_(a);
  q.canonicalize();
  return q;
}

ModuleRankFn::ModuleRankFn(Ring ring, std::string label, Evaluator evaluator)
    : ring_(std::move(ring)), label_(std::move(label)), evaluator_(std::move(evaluator)) {}

ExtendedValue ModuleRankFn::operator()(const FPModule& m) const {
  require_same_ring(ring_, m.ring(), label_.c_str());
  return evaluator_(m);
}

MapRankFn::MapRankFn(Ring ring, std::string label, Evaluator evaluator)
    : ring_(std::move(ring)), label_(std::move(label)), evaluator_(std::move(evaluator)) {}

ExtendedValue MapRankFn::operator()(const Matrix& f) const {
  require_same_ring(ring_, f.ring(), label_.c_str());
  return evaluator_(f);
}

MatrixRankFn rk_field(const Ring& field) {
  if (!field.is_field()) throw Error("rk_field needs Q or Fp, got " + field.name());
  std::string label = field.kind() == RingKind::Rationals ? "rkQ" : "rkFp(" + field.modulus().get_str() + ")";
  return MatrixRankFn(field, label, [](const Matrix& a) { return Rational(field_rank(a)); });
}

MatrixRankFn rk_zmod_pk(const Integer& p, std::size_t k) {
  if (!is_prime(p)) throw Error("rkZmodPk needs a prime, got " + p.get_str());
  if (k == 0) throw Error("rkZmodPk needs k >= 1");
  Integer n;
  mpz_pow_ui(n.get_mpz_t(), p.get_mpz_t(), k);
  Ring ring = Ring::integers_mod(n);
  std::string label = "rkZmodPk(" + p.get_str() + "," + std::to_string(k) + ")";
  return MatrixRankFn(ring, label, [p, k](const Matrix& a) -> Rational {
    const std::size_t m = a.cols();
    const std::size_t r = std::min(a.rows(), m);
    if (r == 0) return Rational(0);
    // Length of the cokernel, in units of 1/k.
    std::size_t loss = (m - r) * k;
    for (const auto& d : smith(lift_to_integers(a)).divisors) loss += d == 0 ? k : std::min(valuation(d, p), k);
    return Rational(static_cast<long>(m * k - loss), static_cast<long>(k));
  });
}

MatrixRankFn rk_group_vn(const Ring& field, const FiniteGroup& group) {
  Ring ring = Ring::group_algebra(field, group);
  const auto order = static_cast<long>(group.order());
  return MatrixRankFn(ring, "vN(" + field.name() + "," + group.name() + ")",
                      [order](const Matrix& a) { return Rational(static_cast<long>(field_rank(a)), order); });
}

MatrixRankFn rk_pullback(const RingHom& h, const MatrixRankFn& rk_target) {
  require_same_ring(h.target(), rk_target.ring(), "pullback");
  return MatrixRankFn(h.source(), "pullback(" + h.name() + "," + rk_target.label() + ")",
                      [h, rk_target](const Matrix& a) { return rk_target(h.apply(a)); });
}

MatrixRankFn rk_convex(const std::vector<std::pair<Rational, MatrixRankFn>>& terms) {
  if (terms.empty()) throw Error("convex combination of nothing");
  Rational total = 0;
  std::string label = "convex(";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [w, fn] = terms[i];
    if (w <= 0) throw Error("convex weights must be positive");
    require_same_ring(terms[0].second.ring(), fn.ring(), "convex combination");
    total += w;
    if (i) label += "+";
    label += w.get_str() + "*" + fn.label();
  }
  if (total != 1) throw Error("convex weights sum to " + total.get_str() + ", not 1");
  label += ")";
  return MatrixRankFn(terms[0].second.ring(), label, [terms](const Matrix& a) {
    Rational out = 0;
    for (const auto& [w, fn] : terms) out += w * fn(a);
    return out;
  });
}

MatrixRankFn rk_morita(const MatrixRankFn& base, std::size_t k) {
  Ring ring = Ring::matrix_amplification(base.ring(), k);
  return MatrixRankFn(ring, "morita(" + base.label() + "," + std::to_string(k) + ")", [base, k](const Matrix& a) -> Rational {
    return base(flatten(a)) / Rational(static_cast<long>(k));
  });
}

ExtendedValue module_dim(const MatrixRankFn& rk, const FPModule& m) {
  return ExtendedValue(Rational(static_cast<long>(m.generators())) - rk(m.relations()));
}

ExtendedValue map_rank_from_module(const ModuleRankFn& dim, const Matrix& f) {
  return dim(FPModule::free(f.ring(), f.cols())).minus(dim(FPModule(f)));
}

ExtendedValue matrix_rank_from_map(const MapRankFn& mrf, const Matrix& a) { return mrf(a); }

ModuleRankFn module_rank_of(const MatrixRankFn& rk) {
  return ModuleRankFn(rk.ring(), "dim[" + rk.label() + "]", [rk](const FPModule& m) { return module_dim(rk, m); });
}

MapRankFn map_rank_of(const ModuleRankFn& dim) {
  return MapRankFn(dim.ring(), "rk[" + dim.label() + "]", [dim](const Matrix& f) { return map_rank_from_module(dim, f); });
}

MatrixRankFn matrix_rank_of(const MapRankFn& mrf) {
  return MatrixRankFn(mrf.ring(), "rk'[" + mrf.label() + "]",
                      [mrf](const Matrix& a) { return matrix_rank_from_map(mrf, a).finite(); });
}

}  // namespace sylrank
