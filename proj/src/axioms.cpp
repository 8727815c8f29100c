#include "sylrank/axioms.hpp"

#include <optional>

#include "sylrank/error.hpp"
#include "sylrank/normal_form.hpp"

namespace sylrank {

namespace {

using MatrixEval = std::function<ExtendedValue(const Matrix&)>;

// Evaluations that throw (negative values, mismatches) count as failures.
template <class F>
auto guarded(F&& f) -> std::optional<decltype(f())> {
  try {
    return f();
  } catch (const Error&) {
    return std::nullopt;
  }
}

Json side(const std::optional<ExtendedValue>& v) { return v ? Json(v->text()) : Json("error"); }

std::size_t nonempty_dim(RandomSampler& s) { return s.dim(1); }

// The four clauses shared by the matrix and map facets.
void matrix_like_clauses(VerificationReport& report, const std::string& prefix, const Ring& ring, const MatrixEval& rk,
                         const RandomSampler& base) {
  RandomSampler s = base.fork(1);
  const std::string norm = prefix + ".normalization";
  const std::string prod = prefix + ".product";
  const std::string diag = prefix + ".block_diagonal";
  const std::string tri = prefix + ".block_triangular";
  for (std::size_t i = 0; i < s.samples(); ++i) {
    {
      Matrix one = Matrix::identity(ring, 1);
      Matrix zero(ring, s.dim(), s.dim());
      auto v1 = guarded([&] { return rk(one); });
      auto v0 = guarded([&] { return rk(zero); });
      bool one_ok = v1 && *v1 == ExtendedValue(1);
      bool zero_ok = v0 && *v0 == ExtendedValue(0);
      report.record(norm, one_ok && zero_ok, [&] {
        Json w;
        if (!one_ok) {
          w["matrix"] = matrix_json(one);
          w["value"] = side(v1);
          w["expected"] = "1/1";
        } else {
          w["matrix"] = matrix_json(zero);
          w["value"] = side(v0);
          w["expected"] = "0/1";
        }
        return w;
      });
    }
    {
      const std::size_t n = s.dim(), k = s.dim(), m = s.dim();
      Matrix a = s.matrix(ring, n, k), b = s.matrix(ring, k, m);
      auto va = guarded([&] { return rk(a); });
      auto vb = guarded([&] { return rk(b); });
      auto vab = guarded([&] { return rk(a * b); });
      bool ok = va && vb && vab && *vab <= *va && *vab <= *vb;
      report.record(prod, ok, [&] {
        return Json{{"A", matrix_json(a)}, {"B", matrix_json(b)}, {"rk(AB)", side(vab)}, {"rk(A)", side(va)},
                    {"rk(B)", side(vb)}};
      });
    }
    {
      Matrix a = s.matrix(ring), b = s.matrix(ring);
      Matrix c = s.matrix(ring, a.rows(), b.cols());
      auto va = guarded([&] { return rk(a); });
      auto vb = guarded([&] { return rk(b); });
      auto vd = guarded([&] { return rk(block_diag(a, b)); });
      auto vt = guarded([&] { return rk(block_upper(a, c, b)); });
      bool diag_ok = va && vb && vd && *vd == *va + *vb;
      bool tri_ok = va && vb && vt && *vt >= *va + *vb;
      report.record(diag, diag_ok, [&] {
        return Json{{"A", matrix_json(a)}, {"B", matrix_json(b)}, {"lhs", side(vd)}, {"rhs", va && vb ? Json((*va + *vb).text()) : Json("error")}};
      });
      report.record(tri, tri_ok, [&] {
        return Json{{"A", matrix_json(a)}, {"B", matrix_json(b)}, {"C", matrix_json(c)}, {"lhs", side(vt)},
                    {"rhs", va && vb ? Json((*va + *vb).text()) : Json("error")}};
      });
    }
  }
}

// Presentations of the zero module and of R itself, varied by sample.
FPModule zero_presentation(const Ring& ring, RandomSampler& s) {
  switch (s.uniform(0, 2)) {
    case 0:
      return FPModule::zero(ring);
    case 1: {
      const std::size_t k = nonempty_dim(s);
      Matrix rel = s.invertible(ring, k);
      return FPModule(vstack(rel, s.matrix(ring, s.uniform(0, 2), k)));
    }
    default: {
      // R^k / R^k: identity with a few extra rows
      const std::size_t k = nonempty_dim(s);
      return FPModule(vstack(s.matrix(ring, s.uniform(0, 2), k), Matrix::identity(ring, k)));
    }
  }
}

FPModule free_rank_one_presentation(const Ring& ring, RandomSampler& s) {
  if (s.coin(1, 3)) return FPModule::free(ring, 1);
  // R^2 / R(x, 1) is R again; extra relations are zero rows or repeats.
  Matrix rel(ring, 1, 2);
  rel(0, 0) = s.scalar(ring);
  rel(0, 1) = ring.one();
  if (s.coin(1, 2)) rel = vstack(rel, Matrix(ring, 1, 2));
  if (s.coin(1, 2)) rel = vstack(rel, rel.row(0).scaled(s.small_scalar(ring)));
  std::vector<std::size_t> swap{1, 0};
  if (s.coin(1, 2)) rel = rel.transpose().select_rows(swap).transpose();
  return FPModule(rel);
}

void module_clauses(VerificationReport& report, const ModuleRankFn& dim, const RandomSampler& base) {
  const Ring& ring = dim.ring();
  RandomSampler s = base.fork(2);
  const bool kernels = supports_kernels(ring);
  for (std::size_t i = 0; i < s.samples(); ++i) {
    {
      FPModule z = zero_presentation(ring, s);
      FPModule r = free_rank_one_presentation(ring, s);
      auto vz = guarded([&] { return dim(z); });
      auto vr = guarded([&] { return dim(r); });
      bool zok = vz && *vz == ExtendedValue(0);
      bool rok = vr && *vr == ExtendedValue(1);
      report.record("module.normalization", zok && rok, [&] {
        if (!zok) return Json{{"module", module_json(z)}, {"value", side(vz)}, {"expected", "0/1"}};
        return Json{{"module", module_json(r)}, {"value", side(vr)}, {"expected", "1/1"}};
      });
    }
    {
      FPModule m(s.matrix(ring)), n(s.matrix(ring));
      auto vm = guarded([&] { return dim(m); });
      auto vn = guarded([&] { return dim(n); });
      auto vs = guarded([&] { return dim(direct_sum(m, n)); });
      bool ok = vm && vn && vs && *vs == *vm + *vn;
      report.record("module.direct_sum", ok, [&] {
        return Json{{"M", module_json(m)}, {"N", module_json(n)}, {"dim(M+N)", side(vs)}, {"dim(M)", side(vm)},
                    {"dim(N)", side(vn)}};
      });
    }
    {
      // M1 -> M2 -> M3 -> 0 with M2 = R^m/A, M3 = R^m/[A;G], M1 mapping onto <G>.
      const std::size_t m = s.dim();
      FPModule m2(s.matrix(ring, s.dim(), m));
      Matrix g = s.matrix(ring, s.dim(), m);
      FPModule m3 = quotient_by(m2, Submodule(m2, g));
      Matrix m1_rel(ring, 0, g.rows());
      if (kernels && s.coin(1, 2)) {
        Matrix full = submodule_presentation(Submodule(m2, g)).relations();
        std::vector<std::size_t> pick;
        for (std::size_t r = 0; r < full.rows(); ++r) {
          if (s.coin(2, 3)) pick.push_back(r);
        }
        m1_rel = full.select_rows(pick);
      }
      FPModule m1(m1_rel);
      auto v1 = guarded([&] { return dim(m1); });
      auto v2 = guarded([&] { return dim(m2); });
      auto v3 = guarded([&] { return dim(m3); });
      bool ok = v1 && v2 && v3 && *v3 <= *v2 && *v2 <= *v1 + *v3;
      report.record("module.exact_sequence", ok, [&] {
        return Json{{"M1", module_json(m1)}, {"M2", module_json(m2)}, {"G", matrix_json(g)}, {"M3", module_json(m3)},
                    {"dim(M1)", side(v1)}, {"dim(M2)", side(v2)}, {"dim(M3)", side(v3)}};
      });
    }
  }
}

}  // namespace

VerificationReport check_axioms(Facet facet, const MatrixRankFn& rk, const RandomSampler& sampler) {
  switch (facet) {
    case Facet::Matrix: {
      VerificationReport report("check-axioms", rk.label(), rk.ring().name());
      report.extra()["facet"] = "matrix";
      report.set_seed(sampler.config().seed);
      matrix_like_clauses(report, "matrix", rk.ring(), [&rk](const Matrix& a) { return rk.value(a); }, sampler);
      return report;
    }
    case Facet::Module: {
      VerificationReport report = check_axioms(module_rank_of(rk), sampler);
      return report;
    }
    case Facet::Map:
      return check_axioms(map_rank_of(module_rank_of(rk)), sampler);
  }
  throw Error("unknown facet");
}

VerificationReport check_axioms(const ModuleRankFn& dim, const RandomSampler& sampler) {
  VerificationReport report("check-axioms", dim.label(), dim.ring().name());
  report.extra()["facet"] = "module";
  report.set_seed(sampler.config().seed);
  module_clauses(report, dim, sampler);
  return report;
}

VerificationReport check_axioms(const MapRankFn& rk, const RandomSampler& sampler) {
  VerificationReport report("check-axioms", rk.label(), rk.ring().name());
  report.extra()["facet"] = "map";
  report.set_seed(sampler.config().seed);
  matrix_like_clauses(report, "map", rk.ring(), [&rk](const Matrix& f) { return rk(f); }, sampler);
  return report;
}

VerificationReport check_length_criterion(const MatrixRankFn& rk, const RandomSampler& sampler) {
  VerificationReport report("check-length", rk.label(), rk.ring().name());
  report.set_seed(sampler.config().seed);
  const Ring& ring = rk.ring();
  const std::string clause = "length.exact_sequence";
  if (!supports_kernels(ring)) {
    report.skip(clause, "kernels are not computable over " + ring.name());
    return report;
  }
  RandomSampler s = sampler.fork(3);
  for (std::size_t i = 0; i < s.samples(); ++i) {
    FPModule m2 = FPModule::free(ring, 1);
    Matrix g(ring, 1, 1);
    if (i == 0) {
      // 0 -> R -(2)-> R -> R/2R -> 0
      g(0, 0) = ring.from_int(2);
    } else {
      const std::size_t m = s.dim();
      m2 = FPModule(s.matrix(ring, s.dim(), m));
      g = s.matrix(ring, s.dim(), m);
    }
    Submodule sub(m2, g);
    FPModule m1 = submodule_presentation(sub);
    FPModule m3 = quotient_by(m2, sub);
    auto v1 = guarded([&] { return module_dim(rk, m1); });
    auto v2 = guarded([&] { return module_dim(rk, m2); });
    auto v3 = guarded([&] { return module_dim(rk, m3); });
    bool ok = v1 && v2 && v3 && *v2 == *v1 + *v3;
    report.record(clause, ok, [&] {
      return Json{{"M1", module_json(m1)},
                  {"M2", module_json(m2)},
                  {"G", matrix_json(g)},
                  {"M3", module_json(m3)},
                  {"dim(M2)", side(v2)},
                  {"dim(M1)+dim(M3)", v1 && v3 ? Json((*v1 + *v3).text()) : Json("error")},
                  {"dim(M1)", side(v1)},
                  {"dim(M3)", side(v3)}};
    });
  }
  return report;
}

VerificationReport check_round_trips(const MatrixRankFn& rk, const RandomSampler& sampler) {
  VerificationReport report("check-round-trips", rk.label(), rk.ring().name());
  report.set_seed(sampler.config().seed);
  const Ring& ring = rk.ring();
  MatrixRankFn back = matrix_rank_of(map_rank_of(module_rank_of(rk)));
  RandomSampler s = sampler.fork(4);
  for (std::size_t i = 0; i < s.samples(); ++i) {
    Matrix a = s.matrix(ring);
    auto direct = guarded([&] { return rk.value(a); });
    auto round = guarded([&] { return back.value(a); });
    report.record("roundtrip.matrix_module_map_matrix", direct && round && *direct == *round, [&] {
      return Json{{"A", matrix_json(a)}, {"rk(A)", side(direct)}, {"round_trip", side(round)}};
    });

    // Same module, different presentation: repeated or combined relations, shuffled rows and generators.
    FPModule m(a);
    Matrix rel = a;
    if (a.rows() > 0) {
      const std::size_t extra = s.uniform(0, 2);
      for (std::size_t e = 0; e < extra; ++e) rel = vstack(rel, s.small_matrix(ring, 1, a.rows()) * a);
    }
    if (s.coin(1, 3)) rel = vstack(rel, Matrix(ring, 1, a.cols()));
    rel = rel.select_rows(s.permutation(rel.rows()));
    rel = rel.transpose().select_rows(s.permutation(rel.cols())).transpose();
    FPModule other(rel);
    auto v1 = guarded([&] { return module_dim(rk, m); });
    auto v2 = guarded([&] { return module_dim(rk, other); });
    report.record("module.presentation_invariance", v1 && v2 && *v1 == *v2, [&] {
      return Json{{"M", module_json(m)}, {"M'", module_json(other)}, {"dim(M)", side(v1)}, {"dim(M')", side(v2)}};
    });
  }
  return report;
}

}  // namespace sylrank
