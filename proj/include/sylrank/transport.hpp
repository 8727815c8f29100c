#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sylrank/bivariant.hpp"
#include "sylrank/hom.hpp"
#include "sylrank/rank.hpp"
#include "sylrank/report.hpp"
#include "sylrank/sampler.hpp"

namespace sylrank {

/// Stages M_0..M_T with transitions beta_j: M_j -> M_{j+1} and a source M with
/// alpha_j: M -> M_j. The colimit is never built.
struct DirectedSystem {
  Ring ring;
  std::vector<FPModule> stages;
  std::vector<FPMap> transitions;
  FPModule source;
  std::vector<FPMap> alphas;

  /// Shapes, well-definedness, and alpha_j beta_j = alpha_{j+1} modulo relations.
  void validate() const;
  std::size_t horizon() const { return stages.empty() ? 0 : stages.size() - 1; }
};

/// R^n ->step R^n ->step ... with alpha_0 = id, stages 0..horizon.
DirectedSystem multiplication_system(const Matrix& step, std::size_t horizon);

struct LimitResult {
  std::vector<ExtendedValue> values;
  ExtendedValue inf_observed;
  /// Last `window` values agree. Heuristic only: the true limit may still be lower.
  bool stabilized = false;
};

/// values[j] = dim(im alpha_j | M_j). A value that goes up throws InvariantViolation.
LimitResult limit_relative_dim(const MatrixRankFn& rk, const DirectedSystem& d, std::size_t window = 3);

/// S presented as an R-module through pi: R -> S. Entries of an S-matrix act on
/// S_as_R by right multiplication, encoded through mult_tables.
struct RModuleStructureOnS {
  std::string name;
  RingHom pi;
  FPModule s_as_r;
  /// 1_S in the generators of s_as_r.
  Matrix unit_row;
  /// One table per entry of `s_generators`: right multiplication by it on s_as_r.
  std::vector<Matrix> mult_tables;
  std::vector<Scalar> s_generators;

  const Ring& r() const { return pi.source(); }
  const Ring& s() const { return pi.target(); }

  /// R-coefficients expressing b through s_generators.
  std::vector<Scalar> coefficients(const Scalar& b) const;
  /// Right multiplication by b as a matrix over R.
  Matrix table_of(const Scalar& b) const;
  /// Tables well defined, and right multiplication by 1_S is the identity.
  void validate() const;

  /// Z -> Zmod(n) or Fp(p).
  static RModuleStructureOnS quotient(const Ring& target);
  /// k[G] -> k.
  static RModuleStructureOnS augmentation(const Ring& group_algebra);
};

/// An S-matrix B (n x m) as the R-map (S_as_R)^n -> (S_as_R)^m.
FPMap as_r_map(const RModuleStructureOnS& st, const Matrix& b);

/// B -> ext rank over R of B divided by dim_R(S_as_R); that normalization must be in (0, inf).
MatrixRankFn pushforward(const MatrixRankFn& rk_r, const RModuleStructureOnS& st);

struct EpiRange {
  bool in_image = false;
  ExtendedValue rk_pi;
  ExtendedValue rk_id_s;
};

EpiRange epi_range_test(const MatrixRankFn& rk, const RModuleStructureOnS& st);

/// rk_S(B) against the extended rank of B over R under the pullback of rk_S.
VerificationReport pullback_restriction_check(const MatrixRankFn& rk_s, const RModuleStructureOnS& st,
                                              const RandomSampler& sampler);

/// First R-matrix (1x1, then 2x2, entries in [-bound, bound]) on which the
/// pullbacks of rk1 and rk2 disagree.
std::optional<Matrix> injectivity_witness(const MatrixRankFn& rk1, const MatrixRankFn& rk2,
                                          const RModuleStructureOnS& st, long bound = 4);

enum class Verdict { Yes, No, Inconclusive };
std::string verdict_text(Verdict v);

struct OreResult {
  Verdict in_image = Verdict::Inconclusive;
  ExtendedValue rk_pi;
  LimitResult sequence;
};

/// Inverting m in Z: the system Z ->m Z ->m ... up to `horizon`.
OreResult ore_localization_test(const MatrixRankFn& rk, const Integer& m, std::size_t horizon);
/// Q as the localization at all nonzero integers: the same test over sampled m.
OreResult rational_localization_test(const MatrixRankFn& rk, RandomSampler sampler, std::size_t horizon);

/// Rank function on R read off a rank function on Mat(R,k) through the corner e11.
MatrixRankFn morita_restrict(const MatrixRankFn& rk_amplified);

/// Pullback along first then second against pullback along the composite.
VerificationReport check_pullback_functoriality(const RingHom& first, const RingHom& second,
                                                const MatrixRankFn& rk, const RandomSampler& sampler);
/// morita_restrict(rk_morita(rk, k)) against rk.
VerificationReport check_morita_round_trip(const MatrixRankFn& rk, std::size_t k, const RandomSampler& sampler);

}  // namespace sylrank
