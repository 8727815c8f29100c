#pragma once

#include "sylrank/rank.hpp"
#include "sylrank/report.hpp"
#include "sylrank/sampler.hpp"

namespace sylrank {

enum class Facet { Matrix, Module, Map };

/// Facet of `rk` obtained through the conversions (module: m - rk(A); map: via the module facet).
VerificationReport check_axioms(Facet facet, const MatrixRankFn& rk, const RandomSampler& sampler);
VerificationReport check_axioms(const ModuleRankFn& dim, const RandomSampler& sampler);
VerificationReport check_axioms(const MapRankFn& rk, const RandomSampler& sampler);

/// dim(M2) = dim(M1) + dim(M3) on sampled short exact sequences.
VerificationReport check_length_criterion(const MatrixRankFn& rk, const RandomSampler& sampler);

/// matrix -> module -> map -> matrix returns rk, and module_dim ignores the choice of presentation.
VerificationReport check_round_trips(const MatrixRankFn& rk, const RandomSampler& sampler);

}  // namespace sylrank
