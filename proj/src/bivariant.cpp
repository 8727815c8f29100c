#include "sylrank/bivariant.hpp"

#include <algorithm>
#include <map>

#include "sylrank/error.hpp"
#include "sylrank/normal_form.hpp"

namespace sylrank {

BivariantValue bidim(const MatrixRankFn& rk, const Submodule& s) {
  const Matrix& a = s.ambient.relations();
  Rational stacked = rk(vstack(a, s.generators));
  Rational base = rk(a);
  return BivariantValue{ExtendedValue(stacked - base), stacked, base};
}

ExtendedValue ext_map_rank(const MatrixRankFn& rk, const FPMap& alpha) {
  if (!map_welldefined(alpha)) throw Error("extended rank of an ill-defined map");
  return bidim(rk, image_submodule(alpha)).value;
}

std::optional<Matrix> coordinates(const Submodule& inner, const Submodule& outer) {
  if (!(inner.ambient == outer.ambient)) throw Error("submodules of different modules");
  const Ring& ring = inner.ambient.ring();
  const std::size_t k = outer.generators.rows();
  Matrix stacked = vstack(outer.generators, outer.ambient.relations());
  Matrix out(ring, inner.generators.rows(), k);
  for (std::size_t i = 0; i < inner.generators.rows(); ++i) {
    Matrix g = inner.generators.row(i);
    if (g.is_zero()) continue;
    if (stacked.rows() == 0) return std::nullopt;
    auto u = row_membership(stacked, g);
    if (!u) return std::nullopt;
    for (std::size_t j = 0; j < k; ++j) out(i, j) = (*u)(0, j);
  }
  return out;
}

Submodule relative_to(const Submodule& inner, const Submodule& outer) {
  auto c = coordinates(inner, outer);
  if (!c) throw Error("submodule is not contained in the enclosing submodule");
  return Submodule(submodule_presentation(outer), *c);
}

// ---------------------------------------------------------------------------
// Submodule enumeration over Zmod(n) / Fp(p).

bool SubmoduleLattice::contains(std::size_t i, std::size_t j) const {
  const auto& a = members[i];
  const auto& b = members[j];
  for (std::size_t w = 0; w < a.size(); ++w) {
    if ((b[w] & ~a[w]) != 0) return false;
  }
  return true;
}

SubmoduleLattice submodule_lattice(const FPModule& m, const EnumerationLimits& limits) {
  const Ring& ring = m.ring();
  if (!ring.is_residue_ring()) throw Error("submodule enumeration needs a finite ring, got " + ring.name());
  const std::size_t gens = m.generators();
  Ring z = Ring::integers();
  Matrix lattice = lift_to_integers(m.relations());
  Matrix nI = Matrix::identity(z, gens).scaled(z.from_integer(ring.modulus()));
  SmithDecomposition s = smith(vstack(lattice, nI));

  // The module is the direct sum of Z/d_i over the divisors > 1; y = xV are the coordinates.
  std::vector<std::size_t> axes;
  std::vector<std::size_t> orders;
  std::size_t total = 1;
  for (std::size_t i = 0; i < gens; ++i) {
    const Integer& d = s.divisors[i];
    if (d == 1) continue;
    if (!d.fits_ulong_p() || d.get_ui() > limits.max_elements || total * d.get_ui() > limits.max_elements) {
      throw Error("module has more than " + std::to_string(limits.max_elements) + " elements");
    }
    axes.push_back(i);
    orders.push_back(d.get_ui());
    total *= d.get_ui();
  }
  const std::size_t k = axes.size();
  auto digits = [&](std::size_t code) {
    std::vector<std::size_t> out(k);
    for (std::size_t i = 0; i < k; ++i) {
      out[i] = code % orders[i];
      code /= orders[i];
    }
    return out;
  };
  auto add = [&](std::size_t a, std::size_t b) {
    std::size_t code = 0, scale = 1;
    for (std::size_t i = 0; i < k; ++i) {
      code += ((a % orders[i] + b % orders[i]) % orders[i]) * scale;
      scale *= orders[i];
      a /= orders[i];
      b /= orders[i];
    }
    return code;
  };
  const std::size_t words = (total + 63) / 64;
  using Bits = std::vector<std::uint64_t>;
  auto has = [](const Bits& b, std::size_t x) { return (b[x / 64] >> (x % 64)) & 1U; };
  auto set = [](Bits& b, std::size_t x) { b[x / 64] |= std::uint64_t{1} << (x % 64); };

  std::vector<Bits> found;
  std::vector<std::vector<std::size_t>> found_gens;
  std::vector<std::vector<std::size_t>> found_elems;
  std::map<Bits, std::size_t> index;
  Bits zero(words, 0);
  set(zero, 0);
  found.push_back(zero);
  found_gens.push_back({});
  found_elems.push_back({0});
  index[zero] = 0;

  for (std::size_t h = 0; h < found.size(); ++h) {
    for (std::size_t x = 1; x < total; ++x) {
      if (has(found[h], x)) continue;
      // H + <x>: translates of H by multiples of x until a multiple falls in H.
      Bits next = found[h];
      std::vector<std::size_t> elems = found_elems[h];
      std::size_t mult = x;
      while (!has(found[h], mult)) {
        for (std::size_t e : found_elems[h]) {
          std::size_t y = add(e, mult);
          if (!has(next, y)) {
            set(next, y);
            elems.push_back(y);
          }
        }
        mult = add(mult, x);
      }
      if (index.count(next)) continue;
      if (found.size() >= limits.max_submodules) {
        throw Error("module has more than " + std::to_string(limits.max_submodules) + " submodules");
      }
      index[next] = found.size();
      found.push_back(next);
      auto g = found_gens[h];
      g.push_back(x);
      found_gens.push_back(std::move(g));
      std::sort(elems.begin(), elems.end());
      found_elems.push_back(std::move(elems));
    }
  }

  SubmoduleLattice out;
  out.cardinality = total;
  for (std::size_t i = 0; i < found.size(); ++i) {
    Matrix g(ring, found_gens[i].size(), gens);
    for (std::size_t r = 0; r < found_gens[i].size(); ++r) {
      auto y = digits(found_gens[i][r]);
      // x = y V^{-1}
      for (std::size_t c = 0; c < gens; ++c) {
        Integer acc = 0;
        for (std::size_t a = 0; a < k; ++a) acc += Integer(static_cast<unsigned long>(y[a])) * std::get<Integer>(s.v_inverse(axes[a], c).rep);
        g(r, c) = ring.from_integer(acc);
      }
    }
    out.submodules.emplace_back(m, std::move(g));
    out.members.push_back(found[i]);
  }
  return out;
}

std::vector<Submodule> enumerate_submodules(const FPModule& m, const EnumerationLimits& limits) {
  return submodule_lattice(m, limits).submodules;
}

// ---------------------------------------------------------------------------
// Randomized checks.

namespace {

template <class F>
auto guarded(F&& f) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const Error&) {
    return std::nullopt;
  }
}

Json side(const std::optional<ExtendedValue>& v) { return v ? Json(v->text()) : Json("error"); }

Json sub_json(const Submodule& s) { return Json{{"ambient", module_json(s.ambient)}, {"generators", matrix_json(s.generators)}}; }

Json map_json(const FPMap& a) {
  return Json{{"domain", module_json(a.domain)}, {"codomain", module_json(a.codomain)}, {"matrix", matrix_json(a.matrix)}};
}

FPModule random_module(RandomSampler& s, const Ring& ring) { return FPModule(s.matrix(ring, s.dim(), s.dim())); }

Submodule random_sub(RandomSampler& s, const FPModule& m) { return Submodule(m, s.matrix(m.ring(), s.dim(), m.generators())); }

// Codomain whose relations contain the images of the domain relations.
FPModule codomain_for(RandomSampler& s, const FPModule& dom, const Matrix& f) {
  Matrix rel = dom.relations() * f;
  if (s.coin(1, 2)) rel = vstack(rel, s.matrix(dom.ring(), s.uniform(0, 2), f.cols()));
  return FPModule(rel.select_rows(s.permutation(rel.rows())));
}

FPMap random_map_from(RandomSampler& s, const FPModule& dom) {
  Matrix f = s.matrix(dom.ring(), dom.generators(), s.dim());
  return FPMap(dom, codomain_for(s, dom, f), f);
}

// Combination of the generator rows plus relation rows: always inside <G>.
Matrix inside(RandomSampler& s, const Matrix& g, const Matrix& rel, std::size_t rows) {
  const Ring& r = g.ring();
  Matrix out = s.small_matrix(r, rows, g.rows()) * g;
  if (rel.rows() > 0 && s.coin(1, 2)) out = out + s.small_matrix(r, rows, rel.rows()) * rel;
  return out;
}

FPModule zero_presentation(const Ring& ring, RandomSampler& s) {
  if (s.coin(1, 3)) return FPModule::zero(ring);
  const std::size_t k = s.dim(1);
  return FPModule(vstack(s.invertible(ring, k), s.matrix(ring, s.uniform(0, 2), k)));
}

FPModule rank_one_presentation(const Ring& ring, RandomSampler& s) {
  if (s.coin(1, 3)) return FPModule::free(ring, 1);
  Matrix rel(ring, 1, 2);
  rel(0, 0) = s.scalar(ring);
  rel(0, 1) = ring.one();
  if (s.coin(1, 2)) rel = vstack(rel, rel.row(0).scaled(s.small_scalar(ring)));
  return FPModule(rel);
}

// Isomorphic copy of (S in M): change of generators and of relations, redundant
// relation rows, and an extra generator tied to the others.
Submodule isomorphic_copy(RandomSampler& s, const Submodule& sub) {
  const Ring& ring = sub.ambient.ring();
  const Matrix& a = sub.ambient.relations();
  const std::size_t m = a.cols();
  Matrix q = s.invertible(ring, m);
  Matrix rel = s.invertible(ring, a.rows()) * a;
  if (a.rows() > 0 && s.coin(1, 2)) rel = vstack(rel, s.small_matrix(ring, s.uniform(1, 2), a.rows()) * a);
  Matrix g = s.invertible(ring, sub.generators.rows()) * sub.generators;
  if (a.rows() > 0 && s.coin(1, 2)) g = g + s.small_matrix(ring, g.rows(), a.rows()) * a;
  rel = rel * q;
  g = g * q;
  if (s.coin(1, 2)) {
    // new generator e with relation e - x = 0
    Matrix x = s.small_matrix(ring, 1, m);
    Matrix tie = hstack(x.negated(), Matrix::identity(ring, 1));
    rel = vstack(hstack(rel, Matrix(ring, rel.rows(), 1)), tie);
    g = hstack(g, Matrix(ring, g.rows(), 1));
  }
  return Submodule(FPModule(rel), g);
}

void continuity_clauses(VerificationReport& report, const MatrixRankFn& rk, const RandomSampler& base) {
  const Ring& ring = rk.ring();
  const std::string sup = "bivariant.continuity_sup";
  const std::string inf = "bivariant.continuity_inf";
  if (!ring.is_residue_ring()) {
    report.skip(sup, "submodules are enumerable only over finite rings");
    report.skip(inf, "submodules are enumerable only over finite rings");
    return;
  }
  RandomSampler s = base.fork(21);
  const std::size_t ambients = std::min<std::size_t>(s.samples(), 64);
  const std::size_t max_gens = std::min<std::size_t>(3, std::max<std::size_t>(1, s.config().max_dim));
  std::size_t done = 0;
  for (std::size_t t = 0; t < ambients; ++t) {
    std::optional<SubmoduleLattice> lattice;
    FPModule m = FPModule::zero(ring);
    for (int attempt = 0; attempt < 50 && !lattice; ++attempt) {
      const auto gens = static_cast<std::size_t>(s.uniform(1, static_cast<long>(max_gens)));
      m = FPModule(s.matrix(ring, static_cast<std::size_t>(s.uniform(0, 3)), gens));
      lattice = guarded([&] { return submodule_lattice(m, EnumerationLimits{4096, 512}); });
    }
    if (!lattice) continue;
    ++done;
    const std::size_t count = lattice->submodules.size();
    std::vector<std::optional<ExtendedValue>> direct(count);
    for (std::size_t j = 0; j < count; ++j) direct[j] = guarded([&] { return bidim(rk, lattice->submodules[j]).value; });
    std::vector<std::size_t> picks;
    if (count <= 24) {
      for (std::size_t i = 0; i < count; ++i) picks.push_back(i);
    } else {
      for (std::size_t i = 0; i < 24; ++i) picks.push_back(static_cast<std::size_t>(s.uniform(0, static_cast<long>(count) - 1)));
    }
    std::vector<std::optional<FPModule>> presented(count);
    for (std::size_t i : picks) {
      const Submodule& m1 = lattice->submodules[i];
      // sup over the submodules of M1
      std::optional<ExtendedValue> best;
      bool sup_ok = direct[i].has_value();
      for (std::size_t j = 0; j < count && sup_ok; ++j) {
        if (!lattice->contains(i, j)) continue;
        if (!direct[j]) {
          sup_ok = false;
        } else if (!best || *direct[j] > *best) {
          best = direct[j];
        }
      }
      sup_ok = sup_ok && best && *best == *direct[i];
      report.record(sup, sup_ok, [&] {
        return Json{{"submodule", sub_json(m1)}, {"bidim", side(direct[i])}, {"sup", side(best)},
                    {"submodules", count}};
      });
      // inf over the submodules M2' with M1 <= M2' <= M
      std::optional<ExtendedValue> low;
      bool inf_ok = direct[i].has_value();
      for (std::size_t j = 0; j < count && inf_ok; ++j) {
        if (!lattice->contains(j, i)) continue;
        auto v = guarded([&] {
          const Submodule& outer = lattice->submodules[j];
          if (!presented[j]) presented[j] = submodule_presentation(outer);
          auto c = coordinates(m1, outer);
          if (!c) throw InvariantViolation("lattice containment disagrees with membership");
          return bidim(rk, Submodule(*presented[j], *c)).value;
        });
        if (!v) {
          inf_ok = false;
        } else if (!low || *v < *low) {
          low = v;
        }
      }
      inf_ok = inf_ok && low && *low == *direct[i];
      report.record(inf, inf_ok, [&] {
        return Json{{"submodule", sub_json(m1)}, {"bidim", side(direct[i])}, {"inf", side(low)},
                    {"submodules", count}};
      });
    }
  }
  report.clause(sup).note = "ambients=" + std::to_string(done);
  report.clause(inf).note = "ambients=" + std::to_string(done);
}

}  // namespace

VerificationReport check_bivariant_axioms(const MatrixRankFn& rk, const RandomSampler& sampler) {
  VerificationReport report("check-bivariant-axioms", rk.label(), rk.ring().name());
  report.set_seed(sampler.config().seed);
  const Ring& ring = rk.ring();
  RandomSampler s = sampler.fork(20);
  auto bd = [&rk](const Submodule& x) { return bidim(rk, x).value; };
  for (std::size_t i = 0; i < s.samples(); ++i) {
    {
      Submodule sub = random_sub(s, random_module(s, ring));
      Submodule copy = isomorphic_copy(s, sub);
      auto v1 = guarded([&] { return bd(sub); });
      auto v2 = guarded([&] { return bd(copy); });
      report.record("bivariant.isomorphism_invariance", v1 && v2 && *v1 == *v2, [&] {
        return Json{{"S", sub_json(sub)}, {"S'", sub_json(copy)}, {"dim(S)", side(v1)}, {"dim(S')", side(v2)}};
      });
    }
    {
      FPModule z = zero_presentation(ring, s);
      FPModule r = rank_one_presentation(ring, s);
      auto vz = guarded([&] { return bd(Submodule::full(z)); });
      auto vr = guarded([&] { return bd(Submodule::full(r)); });
      bool zok = vz && *vz == ExtendedValue(0);
      bool rok = vr && *vr == ExtendedValue(1);
      report.record("bivariant.normalization", zok && rok, [&] {
        if (!zok) return Json{{"module", module_json(z)}, {"value", side(vz)}, {"expected", "0/1"}};
        return Json{{"module", module_json(r)}, {"value", side(vr)}, {"expected", "1/1"}};
      });
    }
    {
      Submodule s1 = random_sub(s, random_module(s, ring));
      Submodule s3 = random_sub(s, random_module(s, ring));
      Submodule sum(direct_sum(s1.ambient, s3.ambient), block_diag(s1.generators, s3.generators));
      auto v1 = guarded([&] { return bd(s1); });
      auto v3 = guarded([&] { return bd(s3); });
      auto vs = guarded([&] { return bd(sum); });
      report.record("bivariant.direct_sum", v1 && v3 && vs && *vs == *v1 + *v3, [&] {
        return Json{{"S1", sub_json(s1)}, {"S3", sub_json(s3)}, {"dim(S1+S3)", side(vs)}, {"dim(S1)", side(v1)},
                    {"dim(S3)", side(v3)}};
      });
    }
    {
      Submodule sub = random_sub(s, random_module(s, ring));
      auto whole = guarded([&] { return module_dim(rk, sub.ambient); });
      auto rel = guarded([&] { return bd(sub); });
      auto quo = guarded([&] { return module_dim(rk, quotient_by(sub.ambient, sub)); });
      report.record("bivariant.additivity", whole && rel && quo && *whole == *rel + *quo, [&] {
        return Json{{"S", sub_json(sub)}, {"dim(M2)", side(whole)}, {"dim(M1|M2)", side(rel)}, {"dim(M2/M1)", side(quo)}};
      });
    }
  }
  continuity_clauses(report, rk, sampler);
  return report;
}

std::string property_name(Property p) {
  switch (p) {
    case Property::Additivity:
      return "additivity";
    case Property::Submodularity:
      return "submodularity";
    case Property::HomMonotone:
      return "hom_monotone";
    case Property::Stability:
      return "stability";
    case Property::Composition:
      return "composition";
    case Property::Triangular:
      return "triangular";
    case Property::Monotone:
      return "monotone";
  }
  return "?";
}

std::vector<Property> all_properties() {
  return {Property::Additivity, Property::Submodularity, Property::HomMonotone, Property::Stability,
          Property::Composition, Property::Triangular,    Property::Monotone};
}

std::optional<Property> property_from_name(const std::string& name) {
  for (Property p : all_properties()) {
    if (property_name(p) == name) return p;
  }
  return std::nullopt;
}

VerificationReport check_bivariant_properties(const MatrixRankFn& rk, const RandomSampler& sampler,
                                              const std::vector<Property>& properties) {
  VerificationReport report("check-properties", rk.label(), rk.ring().name());
  report.set_seed(sampler.config().seed);
  const Ring& ring = rk.ring();
  const bool kernels = supports_kernels(ring);
  auto bd = [&rk](const Submodule& x) { return bidim(rk, x).value; };
  auto emr = [&rk](const FPMap& a) { return ext_map_rank(rk, a); };

  for (Property p : properties) {
    const std::string name = property_name(p);
    RandomSampler s = sampler.fork(30 + static_cast<std::uint64_t>(p));
    const bool needs_kernels = p == Property::Submodularity || p == Property::HomMonotone || p == Property::Stability;
    if (needs_kernels && !kernels) {
      report.skip(name, "kernels are not computable over " + ring.name());
      continue;
    }
    for (std::size_t i = 0; i < s.samples(); ++i) {
      switch (p) {
        case Property::Additivity: {
          // M1 <= M2 <= M3 built top-down
          FPModule m3 = random_module(s, ring);
          Submodule s2 = random_sub(s, m3);
          Submodule s1(m3, inside(s, s2.generators, m3.relations(), s.dim()));
          Submodule s21 = image_in_quotient(s2, s1);
          auto v23 = guarded([&] { return bd(s2); });
          auto v13 = guarded([&] { return bd(s1); });
          auto vq = guarded([&] { return bd(s21); });
          report.record(name, v23 && v13 && vq && *v23 == *v13 + *vq, [&] {
            return Json{{"M1", sub_json(s1)}, {"M2", sub_json(s2)}, {"dim(M2|M3)", side(v23)}, {"dim(M1|M3)", side(v13)},
                        {"dim(M2/M1|M3/M1)", side(vq)}};
          });
          break;
        }
        case Property::Submodularity: {
          FPModule m = random_module(s, ring);
          Submodule a = random_sub(s, m), b = random_sub(s, m);
          if (s.coin(1, 3) && a.generators.rows() > 0) b = Submodule(m, vstack(b.generators, inside(s, a.generators, m.relations(), 1)));
          auto vs = guarded([&] { return bd(submodule_sum(a, b)); });
          auto vi = guarded([&] { return bd(submodule_intersection(a, b)); });
          auto va = guarded([&] { return bd(a); });
          auto vb = guarded([&] { return bd(b); });
          report.record(name, vs && vi && va && vb && *vs + *vi <= *va + *vb, [&] {
            return Json{{"M1", sub_json(a)}, {"M2", sub_json(b)}, {"dim(M1+M2|M)", side(vs)}, {"dim(M1^M2|M)", side(vi)},
                        {"dim(M1|M)", side(va)}, {"dim(M2|M)", side(vb)}};
          });
          break;
        }
        case Property::HomMonotone: {
          // alpha: M -> N restricted to M2 = <G2>, M1 = C G2
          FPModule m = random_module(s, ring);
          FPMap alpha = random_map_from(s, m);
          Submodule s2 = random_sub(s, m);
          Matrix c = s.small_matrix(ring, s.dim(), s2.generators.rows());
          Submodule img2(alpha.codomain, s2.generators * alpha.matrix);
          auto before = guarded([&] { return bd(Submodule(submodule_presentation(s2), c)); });
          auto after = guarded([&] { return bd(Submodule(submodule_presentation(img2), c)); });
          report.record(name, before && after && *after <= *before, [&] {
            return Json{{"alpha", map_json(alpha)}, {"M2", sub_json(s2)}, {"C", matrix_json(c)},
                        {"dim((M1)a|(M2)a)", side(after)}, {"dim(M1|M2)", side(before)}};
          });
          break;
        }
        case Property::Stability: {
          // M1 <= M2 <= M3 <= M4 with M4 = R^m/A, M3 = <G3>, M2 = C3 G3, M1 = C2 M2
          FPModule m4 = random_module(s, ring);
          Submodule s3 = random_sub(s, m4);
          Matrix c3 = s.small_matrix(ring, s.dim(), s3.generators.rows());
          Matrix c2 = s.small_matrix(ring, s.dim(), c3.rows());
          auto d14 = guarded([&] { return bd(Submodule(m4, c2 * c3 * s3.generators)); });
          auto d24 = guarded([&] { return bd(Submodule(m4, c3 * s3.generators)); });
          std::optional<FPModule> p3 = guarded([&] { return submodule_presentation(s3); });
          auto in_m3 = [&](const Matrix& coords) {
            if (!p3) throw Error("no presentation for M3");
            return bd(Submodule(*p3, coords));
          };
          auto d13 = guarded([&] { return in_m3(c2 * c3); });
          auto d23 = guarded([&] { return in_m3(c3); });
          bool ok = p3 && d14 && d24 && d13 && d23 && *d13 + *d24 <= *d23 + *d14;
          report.record(name, ok, [&] {
            return Json{{"M4", module_json(m4)}, {"G3", matrix_json(s3.generators)}, {"C3", matrix_json(c3)},
                        {"C2", matrix_json(c2)}, {"dim(M1|M3)", side(d13)}, {"dim(M1|M4)", side(d14)},
                        {"dim(M2|M3)", side(d23)}, {"dim(M2|M4)", side(d24)}};
          });
          break;
        }
        case Property::Composition: {
          FPModule m1 = random_module(s, ring);
          FPMap alpha = random_map_from(s, m1);
          FPMap beta = random_map_from(s, alpha.codomain);
          auto vb = guarded([&] { return emr(beta); });
          auto vab = guarded([&] { return emr(compose(alpha, beta)); });
          auto vq = guarded([&] { return emr(induced_on_cokernels(alpha, beta)); });
          report.record(name, vb && vab && vq && *vb == *vab + *vq, [&] {
            return Json{{"alpha", map_json(alpha)}, {"beta", map_json(beta)}, {"rk(beta)", side(vb)},
                        {"rk(alpha beta)", side(vab)}, {"rk(beta/alpha)", side(vq)}};
          });
          break;
        }
        case Property::Triangular: {
          // alpha: M1 -> M3, beta: M2 -> M4, gamma: M1 -> M4
          FPModule m1 = random_module(s, ring), m2 = random_module(s, ring);
          FPMap alpha = random_map_from(s, m1);
          Matrix fb = s.matrix(ring, m2.generators(), s.dim());
          const bool diagonal = s.coin(1, 4);
          Matrix fg = diagonal ? Matrix(ring, m1.generators(), fb.cols()) : s.matrix(ring, m1.generators(), fb.cols());
          Matrix rel4 = vstack(m1.relations() * fg, m2.relations() * fb);
          if (s.coin(1, 2)) rel4 = vstack(rel4, s.matrix(ring, s.uniform(0, 2), fb.cols()));
          FPModule m4(rel4);
          FPMap beta(m2, m4, fb);
          FPMap theta = block_upper(alpha, fg, beta);
          auto va = guarded([&] { return emr(alpha); });
          auto vb = guarded([&] { return emr(beta); });
          auto vt = guarded([&] { return emr(theta); });
          bool ok = va && vb && vt && (diagonal ? *vt == *va + *vb : *vt >= *va + *vb);
          report.record(name, ok, [&] {
            return Json{{"alpha", map_json(alpha)}, {"beta", map_json(beta)}, {"gamma", matrix_json(fg)},
                        {"rk(theta)", side(vt)}, {"rk(alpha)", side(va)}, {"rk(beta)", side(vb)}};
          });
          break;
        }
        case Property::Monotone: {
          FPModule m = random_module(s, ring);
          Submodule big = random_sub(s, m);
          Submodule small(m, inside(s, big.generators, m.relations(), s.dim()));
          auto vs = guarded([&] { return bd(small); });
          auto vbig = guarded([&] { return bd(big); });
          report.record("monotone.in_M1", vs && vbig && *vs <= *vbig, [&] {
            return Json{{"M1", sub_json(small)}, {"M1'", sub_json(big)}, {"dim(M1|M2)", side(vs)},
                        {"dim(M1'|M2)", side(vbig)}};
          });
          report.record("monotone.generator_bound", vbig && *vbig <= ExtendedValue(Rational(static_cast<long>(big.generators.rows()))),
                        [&] { return Json{{"M1", sub_json(big)}, {"dim(M1|M2)", side(vbig)}}; });
          if (kernels) {
            // M1 = C G2 inside M2 = <G2> inside M
            Matrix c = s.small_matrix(ring, s.dim(), big.generators.rows());
            auto in_m = guarded([&] { return bd(Submodule(m, c * big.generators)); });
            auto in_m2 = guarded([&] { return bd(Submodule(submodule_presentation(big), c)); });
            report.record("monotone.in_M2", in_m && in_m2 && *in_m <= *in_m2, [&] {
              return Json{{"M2", sub_json(big)}, {"C", matrix_json(c)}, {"dim(M1|M)", side(in_m)},
                          {"dim(M1|M2)", side(in_m2)}};
            });
          } else if (i == 0) {
            report.skip("monotone.in_M2", "kernels are not computable over " + ring.name());
          }
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace sylrank
