#include "sylrank/sampler.hpp"

#include <algorithm>

namespace sylrank {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RandomSampler::RandomSampler(SamplerConfig config) : config_(config), engine_(config.seed) {}

RandomSampler RandomSampler::fork(std::uint64_t salt) const {
  SamplerConfig c = config_;
  c.seed = mix_seed(config_.seed, salt);
  return RandomSampler(c);
}

long RandomSampler::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // rejection keeps the draw unbiased
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

std::size_t RandomSampler::dim(std::size_t lo) {
  return static_cast<std::size_t>(uniform(static_cast<long>(lo), static_cast<long>(std::max(lo, config_.max_dim))));
}

Scalar RandomSampler::scalar(const Ring& ring) {
  const long b = config_.entry_bound;
  switch (ring.kind()) {
    case RingKind::Integers:
      return ring.from_int(uniform(-b, b));
    case RingKind::Rationals: {
      Rational q(uniform(-b, b), uniform(1, 3));
      q.canonicalize();
      return Scalar{q};
    }
    case RingKind::PrimeField:
    case RingKind::IntegersMod: {
      const Integer& n = ring.modulus();
      if (n.fits_slong_p()) return ring.from_int(uniform(0, n.get_si() - 1));
      Integer acc = 0;
      for (int i = 0; i < 4; ++i) {
        acc <<= 64;
        acc += Integer(static_cast<unsigned long>(engine_()));
      }
      return ring.from_integer(acc);
    }
    case RingKind::GroupAlgebra: {
      const Ring& k = ring.base();
      std::vector<Scalar> c;
      for (std::size_t g = 0; g < ring.group().order(); ++g) {
        if (coin(1, 2)) {
          c.push_back(k.zero());
        } else if (k.kind() == RingKind::Rationals) {
          c.push_back(k.from_int(uniform(-2, 2)));
        } else {
          c.push_back(scalar(k));
        }
      }
      return Scalar{std::move(c)};
    }
    case RingKind::MatrixAmplification: {
      const Ring& base = ring.base();
      std::vector<Scalar> c;
      for (std::size_t i = 0; i < ring.degree() * ring.degree(); ++i) c.push_back(coin(1, 2) ? base.zero() : scalar(base));
      return Scalar{std::move(c)};
    }
  }
  return ring.zero();
}

Scalar RandomSampler::small_scalar(const Ring& ring) { return ring.from_int(uniform(-2, 2)); }

Matrix RandomSampler::matrix(const Ring& ring, std::size_t rows, std::size_t cols) {
  Matrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!coin(1, 3)) m(i, j) = scalar(ring);
    }
  }
  if (rows >= 2 && cols > 0 && coin(1, 3)) {
    // Make the trailing rows combinations of earlier ones.
    const auto keep = static_cast<std::size_t>(uniform(1, static_cast<long>(rows) - 1));
    for (std::size_t i = keep; i < rows; ++i) {
      const auto a = static_cast<std::size_t>(uniform(0, static_cast<long>(keep) - 1));
      const auto b = static_cast<std::size_t>(uniform(0, static_cast<long>(keep) - 1));
      Scalar ca = ring.from_int(uniform(-1, 1));
      Scalar cb = ring.from_int(uniform(-1, 1));
      bool fits = true;
      std::vector<Scalar> row(cols);
      for (std::size_t j = 0; j < cols; ++j) {
        row[j] = ring.add(ring.mul(ca, m(a, j)), ring.mul(cb, m(b, j)));
        if (ring.kind() == RingKind::Integers && abs(std::get<Integer>(row[j].rep)) > config_.entry_bound) fits = false;
      }
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = fits ? row[j] : m(a, j);
    }
  }
  return m;
}

Matrix RandomSampler::small_matrix(const Ring& ring, std::size_t rows, std::size_t cols) {
  Matrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_scalar(ring);
  }
  return m;
}

std::vector<std::size_t> RandomSampler::permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[static_cast<std::size_t>(uniform(0, static_cast<long>(i) - 1))]);
  return p;
}

Matrix RandomSampler::invertible(const Ring& ring, std::size_t n) {
  Matrix l = Matrix::identity(ring, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (coin(1, 2)) l(i, j) = small_scalar(ring);
    }
  }
  return l.select_rows(permutation(n));
}

}  // namespace sylrank
