#include "sylrank/transport.hpp"

#include <algorithm>

#include "sylrank/error.hpp"

namespace sylrank {

namespace {

template <class F>
auto guarded(F&& f) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const Error&) {
    return std::nullopt;
  }
}

Json side(const std::optional<Rational>& v) { return v ? Json(fraction_text(*v)) : Json("error"); }
Json side(const std::optional<ExtendedValue>& v) { return v ? Json(v->text()) : Json("error"); }

Matrix power(const Matrix& step, std::size_t j) {
  Matrix out = Matrix::identity(step.ring(), step.rows());
  for (std::size_t i = 0; i < j; ++i) out = out * step;
  return out;
}

// 0, 1, -1, 2, -2, ...
std::vector<long> search_order(long bound) {
  std::vector<long> out{0};
  for (long v = 1; v <= bound; ++v) {
    out.push_back(v);
    out.push_back(-v);
  }
  return out;
}

}  // namespace

void DirectedSystem::validate() const {
  if (stages.empty()) throw Error("directed system has no stages");
  if (alphas.size() != stages.size()) throw Error("directed system: one alpha per stage required");
  if (transitions.size() + 1 != stages.size()) throw Error("directed system: one transition between consecutive stages");
  require_same_ring(source.ring(), ring, "directed system");
  for (std::size_t j = 0; j < stages.size(); ++j) {
    require_same_ring(stages[j].ring(), ring, "directed system");
    const FPMap& a = alphas[j];
    if (!(a.domain == source) || !(a.codomain == stages[j])) throw Error("directed system: alpha_" + std::to_string(j) + " has wrong ends");
    if (!map_welldefined(a)) throw Error("directed system: alpha_" + std::to_string(j) + " is not well defined");
  }
  for (std::size_t j = 0; j + 1 < stages.size(); ++j) {
    const FPMap& b = transitions[j];
    if (!(b.domain == stages[j]) || !(b.codomain == stages[j + 1])) throw Error("directed system: beta_" + std::to_string(j) + " has wrong ends");
    if (!map_welldefined(b)) throw Error("directed system: beta_" + std::to_string(j) + " is not well defined");
    Matrix diff = compose(alphas[j], b).matrix - alphas[j + 1].matrix;
    if (!rows_in_span(stages[j + 1].relations(), diff)) {
      throw Error("directed system: alpha_" + std::to_string(j) + " beta_" + std::to_string(j) + " differs from alpha_" +
                  std::to_string(j + 1));
    }
  }
}

DirectedSystem multiplication_system(const Matrix& step, std::size_t horizon) {
  if (step.rows() != step.cols()) throw Error("transition matrix must be square");
  const Ring& ring = step.ring();
  FPModule stage = FPModule::free(ring, step.rows());
  DirectedSystem d{ring, {}, {}, stage, {}};
  for (std::size_t j = 0; j <= horizon; ++j) {
    d.stages.push_back(stage);
    d.alphas.emplace_back(stage, stage, power(step, j));
    if (j < horizon) d.transitions.emplace_back(stage, stage, step);
  }
  return d;
}

LimitResult limit_relative_dim(const MatrixRankFn& rk, const DirectedSystem& d, std::size_t window) {
  require_same_ring(rk.ring(), d.ring, "limit_relative_dim");
  d.validate();
  LimitResult out;
  for (std::size_t j = 0; j < d.alphas.size(); ++j) {
    ExtendedValue v = ext_map_rank(rk, d.alphas[j]);
    if (!out.values.empty() && v > out.values.back()) {
      throw InvariantViolation("relative dimension increased at stage " + std::to_string(j) + ": " + out.values.back().text() +
                               " -> " + v.text());
    }
    out.values.push_back(v);
  }
  out.inf_observed = out.values.back();
  if (window == 0) window = 1;
  if (out.values.size() >= window) {
    out.stabilized = true;
    for (std::size_t j = out.values.size() - window; j < out.values.size(); ++j) {
      if (!(out.values[j] == out.values.back())) out.stabilized = false;
    }
  }
  return out;
}

std::vector<Scalar> RModuleStructureOnS::coefficients(const Scalar& b) const {
  switch (pi.rule()) {
    case HomRule::ReduceMod:
      return {Scalar{std::get<Integer>(b.rep)}};
    case HomRule::Augmentation: {
      const Ring& ga = r();
      std::vector<Scalar> c(ga.group().order(), ga.base().zero());
      c[ga.group().identity()] = b;
      return {Scalar{std::move(c)}};
    }
    default:
      throw Error("no R-coordinates for " + name);
  }
}

Matrix RModuleStructureOnS::table_of(const Scalar& b) const {
  std::vector<Scalar> c = coefficients(b);
  const std::size_t g = s_as_r.generators();
  Matrix out(r(), g, g);
  for (std::size_t i = 0; i < c.size(); ++i) out = out + mult_tables[i].scaled(c[i]);
  return out;
}

void RModuleStructureOnS::validate() const {
  const std::size_t g = s_as_r.generators();
  if (mult_tables.size() != s_generators.size()) throw Error(name + ": one table per S-generator");
  if (unit_row.rows() != 1 || unit_row.cols() != g) throw Error(name + ": unit row has wrong shape");
  for (const Matrix& t : mult_tables) {
    if (t.rows() != g || t.cols() != g) throw Error(name + ": multiplication table has wrong shape");
    if (!map_welldefined(FPMap(s_as_r, s_as_r, t))) throw Error(name + ": multiplication table is not well defined");
  }
  Matrix diff = table_of(s().one()) - Matrix::identity(r(), g);
  if (!rows_in_span(s_as_r.relations(), diff)) throw Error(name + ": unit does not act as the identity");
}

RModuleStructureOnS RModuleStructureOnS::quotient(const Ring& target) {
  Ring z = Ring::integers();
  RingHom pi = RingHom::reduce_mod(z, target);
  Matrix rel(z, 1, 1);
  rel(0, 0) = Scalar{target.modulus()};
  return RModuleStructureOnS{"Z->" + target.name(), pi, FPModule(rel), Matrix::identity(z, 1), {Matrix::identity(z, 1)},
                             {target.one()}};
}

RModuleStructureOnS RModuleStructureOnS::augmentation(const Ring& group_algebra) {
  RingHom pi = RingHom::augmentation(group_algebra);
  const FiniteGroup& g = group_algebra.group();
  const Ring& k = group_algebra.base();
  Matrix rel(group_algebra, g.order() - 1, 1);
  std::size_t row = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    std::vector<Scalar> c(g.order(), k.zero());
    c[x] = k.one();
    c[g.identity()] = k.neg(k.one());
    rel(row++, 0) = Scalar{std::move(c)};
  }
  return RModuleStructureOnS{"aug:" + group_algebra.name(), pi, FPModule(rel), Matrix::identity(group_algebra, 1),
                             {Matrix::identity(group_algebra, 1)}, {k.one()}};
}

FPMap as_r_map(const RModuleStructureOnS& st, const Matrix& b) {
  require_same_ring(b.ring(), st.s(), "as_r_map");
  const std::size_t g = st.s_as_r.generators();
  FPModule dom = FPModule::free(st.r(), 0), cod = FPModule::free(st.r(), 0);
  for (std::size_t i = 0; i < b.rows(); ++i) dom = direct_sum(dom, st.s_as_r);
  for (std::size_t j = 0; j < b.cols(); ++j) cod = direct_sum(cod, st.s_as_r);
  Matrix f(st.r(), b.rows() * g, b.cols() * g);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (st.s().is_zero(b(i, j))) continue;
      Matrix t = st.table_of(b(i, j));
      for (std::size_t r = 0; r < g; ++r) {
        for (std::size_t c = 0; c < g; ++c) f(i * g + r, j * g + c) = t(r, c);
      }
    }
  }
  return FPMap(dom, cod, f);
}

MatrixRankFn pushforward(const MatrixRankFn& rk_r, const RModuleStructureOnS& st) {
  require_same_ring(rk_r.ring(), st.r(), "pushforward");
  st.validate();
  ExtendedValue norm = module_dim(rk_r, st.s_as_r);
  if (norm.is_infinite() || norm.finite() == 0) {
    throw Error("pushforward: rank of the identity of S is " + norm.text() + ", need a positive finite value");
  }
  Rational n = norm.finite();
  return MatrixRankFn(st.s(), "pushforward(" + st.name + "," + rk_r.label() + ")", [rk_r, st, n](const Matrix& b) -> Rational {
    return ext_map_rank(rk_r, as_r_map(st, b)).finite() / n;
  });
}

EpiRange epi_range_test(const MatrixRankFn& rk, const RModuleStructureOnS& st) {
  require_same_ring(rk.ring(), st.r(), "epi_range_test");
  st.validate();
  EpiRange out;
  out.rk_id_s = module_dim(rk, st.s_as_r);
  out.rk_pi = bidim(rk, Submodule(st.s_as_r, st.unit_row)).value;
  out.in_image = out.rk_id_s == ExtendedValue(1) && out.rk_pi == ExtendedValue(1);
  return out;
}

VerificationReport pullback_restriction_check(const MatrixRankFn& rk_s, const RModuleStructureOnS& st,
                                              const RandomSampler& sampler) {
  require_same_ring(rk_s.ring(), st.s(), "pullback_restriction_check");
  st.validate();
  MatrixRankFn rk_r = rk_pullback(st.pi, rk_s);
  VerificationReport report("pullback-restriction", st.name + " " + rk_s.label(), st.s().name());
  report.set_seed(sampler.config().seed);
  RandomSampler s = sampler.fork(60);
  const Ring& ring = st.s();
  for (std::size_t i = 0; i < s.samples(); ++i) {
    Matrix b = i == 0 ? Matrix::identity(ring, 1) : i == 1 ? Matrix(ring, 2, 2) : s.matrix(ring);
    auto lhs = guarded([&] { return rk_s(b); });
    auto rhs = guarded([&] { return ext_map_rank(rk_r, as_r_map(st, b)); });
    bool ok = lhs && rhs && *rhs == ExtendedValue(*lhs);
    report.record("restriction.equality", ok, [&] {
      return Json{{"matrix", matrix_json(b)}, {"rk_S", side(lhs)}, {"rk_R", side(rhs)}};
    });
  }
  return report;
}

std::optional<Matrix> injectivity_witness(const MatrixRankFn& rk1, const MatrixRankFn& rk2,
                                          const RModuleStructureOnS& st, long bound) {
  MatrixRankFn a = rk_pullback(st.pi, rk1), b = rk_pullback(st.pi, rk2);
  const Ring& ring = st.r();
  const std::vector<long> order = search_order(bound);
  for (std::size_t n = 1; n <= 2; ++n) {
    std::vector<std::size_t> idx(n * n, 0);
    while (true) {
      Matrix m(ring, n, n);
      for (std::size_t e = 0; e < idx.size(); ++e) m(e / n, e % n) = ring.from_int(order[idx[e]]);
      if (a(m) != b(m)) return m;
      std::size_t e = idx.size();
      while (e > 0 && ++idx[e - 1] == order.size()) idx[--e] = 0;
      if (e == 0) break;
    }
  }
  return std::nullopt;
}

std::string verdict_text(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "true";
    case Verdict::No:
      return "false";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

OreResult ore_localization_test(const MatrixRankFn& rk, const Integer& m, std::size_t horizon) {
  require_same_ring(rk.ring(), Ring::integers(), "ore_localization_test");
  if (m < 2) throw Error("ore test needs m >= 2");
  if (horizon < 1) throw Error("ore test needs a horizon of at least 1");
  Matrix step(rk.ring(), 1, 1);
  step(0, 0) = Scalar{m};
  OreResult out;
  out.sequence = limit_relative_dim(rk, multiplication_system(step, horizon));
  out.rk_pi = out.sequence.inf_observed;
  if (rk(step) == 1) {
    if (!(out.rk_pi == ExtendedValue(1))) throw InvariantViolation("rk(m) = 1 but the limit dropped to " + out.rk_pi.text());
    out.in_image = Verdict::Yes;
  } else if (out.rk_pi < ExtendedValue(1)) {
    out.in_image = Verdict::No;
  }
  return out;
}

OreResult rational_localization_test(const MatrixRankFn& rk, RandomSampler sampler, std::size_t horizon) {
  require_same_ring(rk.ring(), Ring::integers(), "rational_localization_test");
  if (horizon < 1) throw Error("ore test needs a horizon of at least 1");
  const long bound = std::max(2L, sampler.config().entry_bound);
  std::optional<OreResult> worst;
  bool all_full = true;
  for (std::size_t i = 0; i < sampler.samples(); ++i) {
    long m = sampler.uniform(1, bound) * (sampler.coin(1, 2) ? -1 : 1);
    Matrix step = Matrix::from_ints(rk.ring(), {{m}});
    LimitResult seq = limit_relative_dim(rk, multiplication_system(step, horizon));
    if (!(rk(step) == 1)) all_full = false;
    if (!worst || seq.inf_observed < worst->rk_pi) worst = OreResult{Verdict::Inconclusive, seq.inf_observed, seq};
  }
  if (!worst) throw Error("rational localization test needs at least one sample");
  OreResult out = *worst;
  if (all_full) {
    if (!(out.rk_pi == ExtendedValue(1))) throw InvariantViolation("full rank on samples but the limit dropped to " + out.rk_pi.text());
    out.in_image = Verdict::Yes;
  } else if (out.rk_pi < ExtendedValue(1)) {
    out.in_image = Verdict::No;
  }
  return out;
}

MatrixRankFn morita_restrict(const MatrixRankFn& rk_amplified) {
  const Ring& amp = rk_amplified.ring();
  if (amp.kind() != RingKind::MatrixAmplification) throw Error("morita_restrict needs a rank function over Mat(R,k)");
  const Ring base = amp.base();
  const std::size_t k = amp.degree();
  auto corner = [amp, base, k](const Matrix& a) {
    Matrix out(amp, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        std::vector<Scalar> e(k * k, base.zero());
        e[0] = a(i, j);
        out(i, j) = Scalar{std::move(e)};
      }
    }
    return out;
  };
  Rational norm = rk_amplified(corner(Matrix::identity(base, 1)));
  if (norm == 0) throw Error("morita_restrict: the corner e11 has rank 0");
  return MatrixRankFn(base, "corner(" + rk_amplified.label() + ")", [rk_amplified, corner, norm](const Matrix& a) -> Rational {
    return rk_amplified(corner(a)) / norm;
  });
}

VerificationReport check_pullback_functoriality(const RingHom& first, const RingHom& second, const MatrixRankFn& rk,
                                                const RandomSampler& sampler) {
  MatrixRankFn nested = rk_pullback(first, rk_pullback(second, rk));
  MatrixRankFn direct = rk_pullback(RingHom::compose(first, second), rk);
  VerificationReport report("pullback-functoriality", first.name() + ">" + second.name() + " " + rk.label(),
                            first.source().name());
  report.set_seed(sampler.config().seed);
  RandomSampler s = sampler.fork(61);
  for (std::size_t i = 0; i < s.samples(); ++i) {
    Matrix a = s.matrix(first.source());
    auto lhs = guarded([&] { return nested(a); });
    auto rhs = guarded([&] { return direct(a); });
    report.record("pullback.functoriality", lhs && rhs && *lhs == *rhs, [&] {
      return Json{{"matrix", matrix_json(a)}, {"nested", side(lhs)}, {"composite", side(rhs)}};
    });
  }
  return report;
}

VerificationReport check_morita_round_trip(const MatrixRankFn& rk, std::size_t k, const RandomSampler& sampler) {
  MatrixRankFn back = morita_restrict(rk_morita(rk, k));
  VerificationReport report("morita-round-trip", rk.label(), rk.ring().name());
  report.set_seed(sampler.config().seed);
  RandomSampler s = sampler.fork(62);
  for (std::size_t i = 0; i < s.samples(); ++i) {
    Matrix a = s.matrix(rk.ring());
    auto lhs = guarded([&] { return back(a); });
    auto rhs = guarded([&] { return rk(a); });
    report.record("morita.round_trip", lhs && rhs && *lhs == *rhs, [&] {
      return Json{{"matrix", matrix_json(a)}, {"round_trip", side(lhs)}, {"original", side(rhs)}};
    });
  }
  return report;
}

}  // namespace sylrank
