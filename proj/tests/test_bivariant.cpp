#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "oracle.hpp"
#include "sylrank/bivariant.hpp"
#include "sylrank/error.hpp"

using namespace sylrank;

namespace {

Ring Z() { return Ring::integers(); }

MatrixRankFn q_pullback() { return rk_pullback(RingHom::include_integers_in_rationals(), rk_field(Ring::rationals())); }
MatrixRankFn fp_pullback(long p) {
  return rk_pullback(RingHom::reduce_mod(Z(), Ring::prime_field(p)), rk_field(Ring::prime_field(p)));
}
MatrixRankFn zmod_pullback(long p, std::size_t k) {
  Integer n = 1;
  for (std::size_t i = 0; i < k; ++i) n *= p;
  return rk_pullback(RingHom::reduce_mod(Z(), Ring::integers_mod(n)), rk_zmod_pk(p, k));
}

ExtendedValue ev(long a, long b = 1) {
  Rational q(a, b);
  q.canonicalize();
  return ExtendedValue(q);
}

std::vector<std::vector<long>> as_rows(const Matrix& a) {
  std::vector<std::vector<long>> out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<long> r;
    for (std::size_t j = 0; j < a.cols(); ++j) r.push_back(std::get<Integer>(a(i, j).rep).get_si());
    out.push_back(r);
  }
  return out;
}

// Number of submodules of (Z/n)^m / rowspace(A) for m <= 2: every such
// submodule is generated by two elements, so spans of all pairs cover them.
std::size_t count_submodules(const Matrix& a, long n) {
  const std::size_t m = a.cols();
  std::vector<std::vector<long>> elems;
  oracle::for_each_vector(m, n, [&](const std::vector<long>& v) { elems.push_back(v); });
  std::set<std::vector<long>> seen;
  const auto base = as_rows(a);
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      auto rows = base;
      rows.push_back(x);
      rows.push_back(y);
      seen.insert(oracle::span_mod(rows, m, n));
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("bidim examples") {
  FPModule z4(Matrix::from_ints(Z(), {{4}}));
  CHECK(bidim(q_pullback(), Submodule::zero(z4)).value == ev(0));
  BivariantValue half = bidim(zmod_pullback(2, 2), Submodule(z4, Matrix::from_ints(Z(), {{2}})));
  CHECK(half.value == ev(1, 2));
  CHECK(half.rank_stacked == Rational(1, 2));
  CHECK(half.rank_relations == 0);
  CHECK(bidim(q_pullback(), Submodule::full(FPModule::free(Z(), 1))).value == ev(1));
}

TEST_CASE("extended map rank examples") {
  FPModule r = FPModule::free(Z(), 1);
  CHECK(ext_map_rank(q_pullback(), FPMap::identity(r)) == ev(1));
  CHECK(ext_map_rank(fp_pullback(2), FPMap::between_free(Matrix::from_ints(Z(), {{2}}))) == ev(0));
  CHECK(ext_map_rank(fp_pullback(3), FPMap(r, r, Matrix(Z(), 1, 1))) == ev(0));
  FPModule z2(Matrix::from_ints(Z(), {{2}})), z4(Matrix::from_ints(Z(), {{4}}));
  CHECK_THROWS_AS(ext_map_rank(q_pullback(), FPMap(z2, z4, Matrix::from_ints(Z(), {{1}}))), Error);
}

TEST_CASE("ext_map_rank agrees with the map facet between free modules") {
  testgen::Gen g(5);
  for (const auto& rk : {q_pullback(), fp_pullback(2), zmod_pullback(3, 2)}) {
    MapRankFn mrf = map_rank_of(module_rank_of(rk));
    for (int t = 0; t < 40; ++t) {
      Matrix f = g.matrix(Z(), 4);
      CHECK(ext_map_rank(rk, FPMap::between_free(f)) == mrf(f));
    }
  }
}

TEST_CASE("enumeration examples") {
  Ring z4 = Ring::integers_mod(4), f2 = Ring::prime_field(2);
  CHECK(enumerate_submodules(FPModule::free(z4, 1)).size() == 3);
  CHECK(enumerate_submodules(FPModule::free(f2, 2)).size() == 5);
  CHECK(enumerate_submodules(FPModule::zero(z4)).size() == 1);
  CHECK_THROWS_AS(enumerate_submodules(FPModule::free(Z(), 1)), Error);
  CHECK_THROWS_AS(submodule_lattice(FPModule::free(Ring::integers_mod(9), 3), EnumerationLimits{64, 4096}), Error);
}

TEST_CASE("enumeration count matches pair spans") {
  testgen::Gen g(8);
  for (long n : {2L, 4L, 6L, 8L, 9L}) {
    Ring r = n == 2 ? Ring::prime_field(2) : Ring::integers_mod(n);
    for (int t = 0; t < 6; ++t) {
      const std::size_t m = static_cast<std::size_t>(g.range(1, 2));
      Matrix a = g.matrix(r, static_cast<std::size_t>(g.range(0, 2)), m);
      SubmoduleLattice lat = submodule_lattice(FPModule(a));
      CHECK(lat.submodules.size() == count_submodules(a, n));
      long total = 1;
      for (std::size_t i = 0; i < m; ++i) total *= n;
      CHECK(lat.cardinality == static_cast<std::size_t>(total) / oracle::span_mod(as_rows(a), m, n).size());
      for (std::size_t i = 0; i < lat.submodules.size(); ++i) {
        for (std::size_t j = 0; j < lat.submodules.size(); ++j) {
          CHECK(lat.contains(i, j) == submodule_contains(lat.submodules[i], lat.submodules[j]));
        }
      }
    }
  }
}

TEST_CASE("additivity example on <2> in Z/4") {
  Ring z4 = Ring::integers_mod(4);
  MatrixRankFn rk = rk_zmod_pk(2, 2);
  FPModule m = FPModule::free(z4, 1);
  Submodule s(m, Matrix::from_ints(z4, {{2}}));
  CHECK(module_dim(rk, m) == ev(1));
  CHECK(bidim(rk, s).value == ev(1, 2));
  CHECK(module_dim(rk, quotient_by(m, s)) == ev(1, 2));
}

TEST_CASE("bivariant axioms on catalog functions") {
  SamplerConfig c;
  c.samples = 60;
  c.seed = 9;
  RandomSampler sampler(c);
  for (const auto& rk : {rk_zmod_pk(2, 2), q_pullback(), fp_pullback(5), zmod_pullback(3, 2), rk_field(Ring::prime_field(2))}) {
    VerificationReport r = check_bivariant_axioms(rk, sampler);
    CAPTURE(rk.label());
    CAPTURE(r.to_json().dump());
    CHECK(r.passed());
    const ClauseResult* sup = r.find("bivariant.continuity_sup");
    REQUIRE(sup != nullptr);
    if (rk.ring().is_residue_ring()) {
      CHECK(sup->status == Status::Pass);
      CHECK(sup->samples > 0);
    } else {
      CHECK(sup->status == Status::Skipped);
    }
  }
}

TEST_CASE("bivariant axioms catch a non-rank function") {
  // twice a rank function: dim(R) = 2 and m - 2rk(A) stops being additive
  MatrixRankFn q = q_pullback();
  MatrixRankFn twice(Z(), "twice", [q](const Matrix& a) -> Rational { return 2 * q(a); });
  SamplerConfig c;
  c.samples = 10;
  VerificationReport r = check_bivariant_axioms(twice, RandomSampler(c));
  CHECK_FALSE(r.passed());
  CHECK(r.find("bivariant.normalization")->status == Status::Fail);
  CHECK(r.find("bivariant.additivity")->status == Status::Fail);
}

TEST_CASE("theorem-level properties") {
  SamplerConfig c;
  c.samples = 40;
  c.seed = 13;
  RandomSampler sampler(c);
  for (const auto& rk : {zmod_pullback(3, 1), q_pullback(), fp_pullback(2), rk_zmod_pk(2, 2), rk_field(Ring::prime_field(2)),
                         rk_field(Ring::rationals())}) {
    VerificationReport r = check_bivariant_properties(rk, sampler, all_properties());
    CAPTURE(rk.label());
    CAPTURE(r.to_json().dump());
    CHECK(r.passed());
    for (Property p : all_properties()) {
      const ClauseResult* cl = r.find(property_name(p));
      if (p == Property::Monotone) cl = r.find("monotone.in_M1");
      REQUIRE(cl != nullptr);
      CHECK(cl->status == Status::Pass);
    }
  }
}

TEST_CASE("submodularity example") {
  FPModule z = FPModule::free(Z(), 1);
  Submodule a(z, Matrix::from_ints(Z(), {{2}})), b(z, Matrix::from_ints(Z(), {{3}}));
  MatrixRankFn rk = q_pullback();
  ExtendedValue lhs = bidim(rk, submodule_sum(a, b)).value + bidim(rk, submodule_intersection(a, b)).value;
  ExtendedValue rhs = bidim(rk, a).value + bidim(rk, b).value;
  CHECK(lhs == ev(2));
  CHECK(rhs == ev(2));
}

TEST_CASE("bidim bounds and monotonicity on samples") {
  testgen::Gen g(21);
  for (const auto& rk : {q_pullback(), fp_pullback(3), zmod_pullback(2, 2)}) {
    for (int t = 0; t < 60; ++t) {
      const std::size_t m = static_cast<std::size_t>(g.range(1, 3));
      FPModule amb(g.matrix(Z(), static_cast<std::size_t>(g.range(0, 3)), m));
      Matrix gens = g.matrix(Z(), static_cast<std::size_t>(g.range(0, 3)), m);
      ExtendedValue v = bidim(rk, Submodule(amb, gens)).value;
      CHECK(v <= ExtendedValue(Rational(static_cast<long>(gens.rows()))));
      CHECK(v <= module_dim(rk, amb));
      Matrix more = vstack(gens, g.matrix(Z(), 1, m));
      CHECK(bidim(rk, Submodule(amb, more)).value >= v);
      // a finer quotient of the ambient can only shrink the value
      FPModule finer(vstack(amb.relations(), g.matrix(Z(), 1, m)));
      CHECK(bidim(rk, Submodule(finer, gens)).value <= v);

      Matrix f1 = g.matrix(Z(), m, 3), f2 = g.matrix(Z(), 3, 2);
      FPMap a1 = FPMap::between_free(f1), a2 = FPMap::between_free(f2);
      ExtendedValue comp = ext_map_rank(rk, compose(a1, a2));
      CHECK(comp <= ext_map_rank(rk, a1));
      CHECK(comp <= ext_map_rank(rk, a2));
      CHECK(ext_map_rank(rk, direct_sum(a1, a2)) == ext_map_rank(rk, a1) + ext_map_rank(rk, a2));
    }
  }
}
