#include "sylrank/hom.hpp"

#include "sylrank/error.hpp"

namespace sylrank {

namespace {

bool is_reduction(HomRule r) { return r == HomRule::ReduceMod || r == HomRule::ReduceModBetweenQuotients; }

}  // namespace

RingHom RingHom::reduce_mod(const Ring& source, const Ring& target) {
  if (!target.is_residue_ring()) throw Error("reduction target must be Zmod(n) or Fp(p), got " + target.name());
  if (source.kind() == RingKind::Integers) return RingHom(HomRule::ReduceMod, source, target);
  if (source.is_residue_ring()) {
    if (!mpz_divisible_p(source.modulus().get_mpz_t(), target.modulus().get_mpz_t())) {
      throw Error("no unital reduction from " + source.name() + " to " + target.name());
    }
    return RingHom(HomRule::ReduceModBetweenQuotients, source, target);
  }
  throw Error("reduction source must be Z or a residue ring, got " + source.name());
}

RingHom RingHom::include_integers_in_rationals() {
  return RingHom(HomRule::IncludeIntegersInRationals, Ring::integers(), Ring::rationals());
}

RingHom RingHom::augmentation(const Ring& group_algebra) {
  if (group_algebra.kind() != RingKind::GroupAlgebra) throw Error("augmentation requires a group algebra");
  return RingHom(HomRule::Augmentation, group_algebra, group_algebra.base());
}

RingHom RingHom::regular_embedding(const Ring& group_algebra) {
  if (group_algebra.kind() != RingKind::GroupAlgebra) throw Error("regular embedding requires a group algebra");
  return RingHom(HomRule::RegularEmbedding, group_algebra,
                 Ring::matrix_amplification(group_algebra.base(), group_algebra.group().order()));
}

RingHom RingHom::compose(const RingHom& first, const RingHom& second) {
  require_same_ring(first.target(), second.source(), "hom composition");
  if (is_reduction(first.rule_) && is_reduction(second.rule_)) return reduce_mod(first.source(), second.target());
  RingHom out(HomRule::Composite, first.source(), second.target());
  out.first_ = std::make_shared<const RingHom>(first);
  out.second_ = std::make_shared<const RingHom>(second);
  return out;
}

std::string RingHom::name() const {
  switch (rule_) {
    case HomRule::ReduceMod:
    case HomRule::ReduceModBetweenQuotients:
      return "mod(" + target_.modulus().get_str() + ")";
    case HomRule::IncludeIntegersInRationals:
      return "incQ";
    case HomRule::Augmentation:
      return "aug";
    case HomRule::RegularEmbedding:
      return "regemb";
    case HomRule::Composite:
      return first_->name() + ">" + second_->name();
  }
  return "?";
}

Scalar RingHom::apply(const Scalar& a) const {
  switch (rule_) {
    case HomRule::ReduceMod:
    case HomRule::ReduceModBetweenQuotients:
      return target_.from_integer(std::get<Integer>(a.rep));
    case HomRule::IncludeIntegersInRationals:
      return Scalar{Rational(std::get<Integer>(a.rep))};
    case HomRule::Augmentation: {
      Scalar sum = target_.zero();
      for (const auto& c : std::get<std::vector<Scalar>>(a.rep)) sum = target_.add(sum, c);
      return sum;
    }
    case HomRule::RegularEmbedding:
      return Scalar{regular_matrix(source_, a).entries()};
    case HomRule::Composite:
      return second_->apply(first_->apply(a));
  }
  throw Error("unreachable hom rule");
}

Matrix RingHom::apply(const Matrix& a) const {
  require_same_ring(a.ring(), source_, "hom_apply");
  std::vector<Scalar> out;
  out.reserve(a.entries().size());
  for (const auto& e : a.entries()) out.push_back(apply(e));
  return Matrix(target_, a.rows(), a.cols(), std::move(out));
}

Matrix hom_apply(const RingHom& h, const Matrix& a) { return h.apply(a); }

Matrix regular_matrix(const Ring& group_algebra, const Scalar& a) {
  const Ring& k = group_algebra.base();
  const FiniteGroup& g = group_algebra.group();
  const auto& coeffs = std::get<std::vector<Scalar>>(a.rep);
  const std::size_t n = g.order();
  Matrix out(k, n, n);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t h = 0; h < n; ++h) {
      if (k.is_zero(coeffs[h])) continue;
      auto& slot = out(row, g.mul(row, h));
      slot = k.add(slot, coeffs[h]);
    }
  }
  return out;
}

Matrix regular_rep(const Matrix& a) {
  const Ring& ring = a.ring();
  if (ring.kind() != RingKind::GroupAlgebra) throw Error("regular_rep requires a matrix over a group algebra");
  const std::size_t n = ring.group().order();
  Matrix out(ring.base(), a.rows() * n, a.cols() * n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (ring.is_zero(a(i, j))) continue;
      Matrix block = regular_matrix(ring, a(i, j));
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out(i * n + r, j * n + c) = block(r, c);
      }
    }
  }
  return out;
}

Matrix flatten(const Matrix& a) {
  const Ring& ring = a.ring();
  if (ring.kind() != RingKind::MatrixAmplification) throw Error("flatten requires a matrix over Mat(R,k)");
  const std::size_t k = ring.degree();
  Matrix out(ring.base(), a.rows() * k, a.cols() * k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& e = std::get<std::vector<Scalar>>(a(i, j).rep);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) out(i * k + r, j * k + c) = e[r * k + c];
      }
    }
  }
  return out;
}

Matrix unflatten(const Ring& amplified, const Matrix& a) {
  if (amplified.kind() != RingKind::MatrixAmplification) throw Error("unflatten requires Mat(R,k)");
  require_same_ring(amplified.base(), a.ring(), "unflatten");
  const std::size_t k = amplified.degree();
  if (a.rows() % k != 0 || a.cols() % k != 0) throw Error("unflatten: shape not divisible by k");
  Matrix out(amplified, a.rows() / k, a.cols() / k);
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      std::vector<Scalar> e(k * k);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) e[r * k + c] = a(i * k + r, j * k + c);
      }
      out(i, j) = Scalar{std::move(e)};
    }
  }
  return out;
}

}  // namespace sylrank
