#include "sylrank/sofic.hpp"

#include "sylrank/bivariant.hpp"
#include "sylrank/error.hpp"
#include "sylrank/hom.hpp"
#include "sylrank/normal_form.hpp"
#include "sylrank/rank.hpp"

namespace sylrank {

SoficApproximation SoficApproximation::regular(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> sigma(n, std::vector<std::size_t>(n));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t x = 0; x < n; ++x) sigma[s][x] = g.mul(x, g.inverse(s));
  }
  return SoficApproximation{g, n, std::move(sigma)};
}

void SoficApproximation::validate() const {
  if (x_size == 0) throw Error("sofic approximation over an empty set");
  if (sigma.size() != group.order()) throw Error("sofic approximation needs one permutation per group element");
  for (const auto& p : sigma) {
    if (p.size() != x_size) throw Error("sofic permutation has the wrong length");
    std::vector<bool> hit(x_size, false);
    for (std::size_t y : p) {
      if (y >= x_size || hit[y]) throw Error("sofic map is not a permutation");
      hit[y] = true;
    }
  }
}

SoficValue sofic_bidim(const SoficApproximation& approx, const Submodule& s) {
  const Ring& ring = s.ambient.ring();
  if (ring.kind() != RingKind::GroupAlgebra) throw Error("sofic_bidim needs a module over a group algebra");
  if (!(ring.group() == approx.group)) throw Error("sofic approximation is for a different group");
  approx.validate();
  const Ring& k = ring.base();
  const FiniteGroup& g = approx.group;
  const std::size_t n = g.order(), m = s.ambient.generators(), xs = approx.x_size;
  const std::size_t width = m * n;
  auto at = [&](std::size_t x, std::size_t coord) { return x * width + coord; };

  EchelonBasis basis(k, xs * width);
  auto insert_translates = [&](const Matrix& rows) {
    if (rows.rows() == 0) return;
    Matrix rep = regular_rep(rows);
    for (std::size_t x = 0; x < xs; ++x) {
      for (std::size_t r = 0; r < rep.rows(); ++r) {
        std::vector<Scalar> v(xs * width, k.zero());
        for (std::size_t c = 0; c < width; ++c) v[at(x, c)] = rep(r, c);
        basis.insert(v);
      }
    }
  };

  // relations of M2, copied into each x-slot
  insert_translates(s.ambient.relations());
  // delta_x b - delta_{sigma_s(x)} (s b), b running over the k-basis h e_j
  for (std::size_t x = 0; x < xs; ++x) {
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t y = approx.sigma[t][x];
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t h = 0; h < n; ++h) {
          const std::size_t from = at(x, j * n + h), to = at(y, j * n + g.mul(t, h));
          if (from == to) continue;
          std::vector<Scalar> v(xs * width, k.zero());
          v[from] = k.one();
          v[to] = k.neg(k.one());
          basis.insert(v);
        }
      }
    }
  }
  const std::size_t before = basis.rank();
  insert_translates(s.generators);
  const std::size_t after = basis.rank();

  SoficValue out;
  Rational q(static_cast<long>(after - before), static_cast<long>(xs));
  q.canonicalize();
  out.value = ExtendedValue(q);
  out.modular = k.kind() == RingKind::PrimeField && n % k.modulus().get_ui() == 0;
  return out;
}

VerificationReport sofic_vs_vn(const Ring& field, const FiniteGroup& group, const RandomSampler& sampler) {
  const Ring ring = Ring::group_algebra(field, group);
  VerificationReport report("sofic-vs-vn", "sofic(" + ring.name() + ")", ring.name());
  report.set_seed(sampler.config().seed);
  const bool modular = field.kind() == RingKind::PrimeField && group.order() % field.modulus().get_ui() == 0;
  if (modular) {
    const std::string note = "characteristic divides |G|; no comparison is claimed";
    report.skip("sofic.equals_vn", note);
    report.skip("sofic.bounds", note);
    report.skip("sofic.monotone", note);
    return report;
  }
  const MatrixRankFn vn = rk_group_vn(field, group);
  const SoficApproximation approx = SoficApproximation::regular(group);
  const Rational xs(static_cast<long>(approx.x_size));
  RandomSampler s = sampler.fork(70);
  for (std::size_t i = 0; i < s.samples(); ++i) {
    std::optional<Submodule> sub;
    if (i == 0) {
      sub = Submodule::full(FPModule::free(ring, 1));
    } else if (i == 1) {
      sub = Submodule::zero(FPModule::free(ring, 1));
    } else {
      const std::size_t m = static_cast<std::size_t>(s.uniform(1, 3));
      FPModule ambient(s.matrix(ring, static_cast<std::size_t>(s.uniform(0, 2)), m));
      sub = Submodule(ambient, s.matrix(ring, static_cast<std::size_t>(s.uniform(0, 3)), m));
    }
    const Submodule& x = *sub;
    ExtendedValue sofic = sofic_bidim(approx, x).value;
    ExtendedValue expected = bidim(vn, x).value;
    report.record("sofic.equals_vn", sofic == expected, [&] {
      return Json{{"ambient", module_json(x.ambient)}, {"generators", matrix_json(x.generators)}, {"sofic", sofic.text()},
                  {"vn", expected.text()}};
    });

    const std::size_t kdim = x.ambient.generators() * group.order() - field_rank(x.ambient.relations());
    const ExtendedValue cap(Rational(static_cast<long>(kdim)) / xs);
    report.record("sofic.bounds", sofic <= cap, [&] {
      return Json{{"ambient", module_json(x.ambient)}, {"sofic", sofic.text()}, {"cap", cap.text()}};
    });

    Submodule bigger(x.ambient, vstack(x.generators, s.matrix(ring, 1, x.ambient.generators())));
    ExtendedValue grown = sofic_bidim(approx, bigger).value;
    report.record("sofic.monotone", grown >= sofic, [&] {
      return Json{{"ambient", module_json(x.ambient)}, {"generators", matrix_json(bigger.generators)}, {"before", sofic.text()},
                  {"after", grown.text()}};
    });
  }
  return report;
}

}  // namespace sylrank
