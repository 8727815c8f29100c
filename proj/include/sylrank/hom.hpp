#pragma once

#include <memory>
#include <string>

#include "sylrank/matrix.hpp"

namespace sylrank {

enum class HomRule {
  ReduceMod,                  // Z -> Zmod(n) or Fp(n)
  IncludeIntegersInRationals,  // Z -> Q
  ReduceModBetweenQuotients,  // Zmod(m) -> Zmod(n) or Fp(n), n | m
  Augmentation,               // k[G] -> k, s -> 1
  RegularEmbedding,           // k[G] -> Mat(k, |G|)
  Composite,                  // first, then second
};

/// Unital ring homomorphism between supported rings, applied entrywise.
class RingHom {
 public:
  /// `target` must be Zmod(n) or Fp(n); `source` Z or Zmod(m) with n | m.
  static RingHom reduce_mod(const Ring& source, const Ring& target);
  static RingHom include_integers_in_rationals();
  static RingHom augmentation(const Ring& group_algebra);
  static RingHom regular_embedding(const Ring& group_algebra);
  /// Apply `first`, then `second`. Chains of reductions collapse to one reduction.
  static RingHom compose(const RingHom& first, const RingHom& second);

  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }
  HomRule rule() const { return rule_; }
  std::string name() const;

  Scalar apply(const Scalar& a) const;
  Matrix apply(const Matrix& a) const;

 private:
  RingHom(HomRule rule, Ring source, Ring target) : rule_(rule), source_(std::move(source)), target_(std::move(target)) {}

  HomRule rule_;
  Ring source_;
  Ring target_;
  std::shared_ptr<const RingHom> first_;
  std::shared_ptr<const RingHom> second_;
};

/// Entrywise image of A under h.
Matrix hom_apply(const RingHom& h, const Matrix& a);

/// |G| x |G| matrix over k of right multiplication by `a` on k[G]: row g holds g*a.
Matrix regular_matrix(const Ring& group_algebra, const Scalar& a);

/// (n|G|) x (m|G|) matrix over k replacing each entry by its regular_matrix.
Matrix regular_rep(const Matrix& a);

/// (nk) x (mk) matrix over R obtained by expanding entries of a Mat(R,k) matrix.
Matrix flatten(const Matrix& a);

/// Inverse of flatten: groups k x k blocks of an (nk) x (mk) R-matrix into Mat(R,k) entries.
Matrix unflatten(const Ring& amplified, const Matrix& a);

}  // namespace sylrank
