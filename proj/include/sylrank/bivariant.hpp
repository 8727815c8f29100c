#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sylrank/module.hpp"
#include "sylrank/rank.hpp"
#include "sylrank/report.hpp"
#include "sylrank/sampler.hpp"

namespace sylrank {

/// dim(<G> | R^m/A) = rk([A;G]) - rk(A), with the two ranks kept as a witness.
struct BivariantValue {
  ExtendedValue value;
  Rational rank_stacked;
  Rational rank_relations;
};

BivariantValue bidim(const MatrixRankFn& rk, const Submodule& s);
/// dim(im alpha | codomain) = rk([A2;F]) - rk(A2). Throws on an ill-defined map.
ExtendedValue ext_map_rank(const MatrixRankFn& rk, const FPMap& alpha);

/// Coefficients expressing the generators of `inner` through those of `outer`
/// (modulo the ambient relations); empty if inner is not contained in outer.
std::optional<Matrix> coordinates(const Submodule& inner, const Submodule& outer);
/// `inner` viewed as a submodule of the presented module <outer>.
Submodule relative_to(const Submodule& inner, const Submodule& outer);

struct EnumerationLimits {
  std::size_t max_elements = 4096;
  std::size_t max_submodules = 4096;
};

/// All submodules of a finite module, with their element sets.
struct SubmoduleLattice {
  std::size_t cardinality = 0;
  std::vector<Submodule> submodules;
  /// Bitset over the elements of the module, one per submodule.
  std::vector<std::vector<std::uint64_t>> members;
  /// Submodule j is contained in submodule i.
  bool contains(std::size_t i, std::size_t j) const;
};

/// Ring must be Zmod(n) or Fp(p). Throws when a cap is exceeded.
SubmoduleLattice submodule_lattice(const FPModule& m, const EnumerationLimits& limits = {});
std::vector<Submodule> enumerate_submodules(const FPModule& m, const EnumerationLimits& limits = {});

/// Normalization, direct sums, both continuity laws (finite rings only), additivity along quotients.
VerificationReport check_bivariant_axioms(const MatrixRankFn& rk, const RandomSampler& sampler);

enum class Property { Additivity, Submodularity, HomMonotone, Stability, Composition, Triangular, Monotone };
std::string property_name(Property p);
std::optional<Property> property_from_name(const std::string& name);
std::vector<Property> all_properties();

VerificationReport check_bivariant_properties(const MatrixRankFn& rk, const RandomSampler& sampler,
                                              const std::vector<Property>& properties);

}  // namespace sylrank
