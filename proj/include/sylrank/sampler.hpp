#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "sylrank/matrix.hpp"

namespace sylrank {

struct SamplerConfig {
  std::uint64_t seed = 42;
  std::size_t samples = 500;
  std::size_t max_dim = 5;
  long entry_bound = 9;
};

/// Seeded source of random ring elements and matrices. Bounded draws are done
/// by hand so the stream is identical across standard libraries.
class RandomSampler {
 public:
  explicit RandomSampler(SamplerConfig config = {});

  const SamplerConfig& config() const { return config_; }
  std::size_t samples() const { return config_.samples; }
  /// Independent stream for a named check; depends only on the seed and the salt.
  RandomSampler fork(std::uint64_t salt) const;

  std::uint64_t next() { return engine_(); }
  long uniform(long lo, long hi);
  bool coin(long num, long den) { return uniform(0, den - 1) < num; }
  /// Dimension in [lo, max_dim].
  std::size_t dim(std::size_t lo = 0);

  Scalar scalar(const Ring& ring);
  /// Element of {-2..2} * 1, used for combinations.
  Scalar small_scalar(const Ring& ring);
  /// Sparse entries, and now and then dependent rows.
  Matrix matrix(const Ring& ring, std::size_t rows, std::size_t cols);
  Matrix matrix(const Ring& ring) { return matrix(ring, dim(), dim()); }
  /// Combination matrix with entries in {-2..2}.
  Matrix small_matrix(const Ring& ring, std::size_t rows, std::size_t cols);
  /// Unit lower-triangular matrix times a permutation.
  Matrix invertible(const Ring& ring, std::size_t n);
  std::vector<std::size_t> permutation(std::size_t n);

 private:
  SamplerConfig config_;
  std::mt19937_64 engine_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace sylrank
