#pragma once

#include <cstddef>
#include <vector>

#include "sylrank/module.hpp"
#include "sylrank/report.hpp"
#include "sylrank/sampler.hpp"

namespace sylrank {

/// sigma[s][x] is the image of x under the permutation attached to s.
struct SoficApproximation {
  FiniteGroup group;
  std::size_t x_size = 0;
  std::vector<std::vector<std::size_t>> sigma;

  /// X = G with sigma_s(x) = x s^-1.
  static SoficApproximation regular(const FiniteGroup& g);
  /// Each sigma_s is a permutation of X.
  void validate() const;
};

struct SoficValue {
  ExtendedValue value;
  /// char k divides |G|: the value is computed but nothing is claimed about it.
  bool modular = false;
};

/// Span construction over the base field of a finite-group algebra, divided by |X|.
SoficValue sofic_bidim(const SoficApproximation& approx, const Submodule& s);

/// sofic_bidim against bidim under the von Neumann rank on sampled pairs over k[G].
VerificationReport sofic_vs_vn(const Ring& field, const FiniteGroup& group, const RandomSampler& sampler);

}  // namespace sylrank
