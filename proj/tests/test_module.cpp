#include <algorithm>
#include <iterator>

#include "doctest.h"
#include "gen.hpp"
#include "oracle.hpp"
#include "sylrank/bivariant.hpp"
#include "sylrank/error.hpp"
#include "sylrank/normal_form.hpp"

using namespace sylrank;

namespace {

Ring Z() { return Ring::integers(); }

Matrix ints(const Ring& r, std::vector<std::vector<long>> rows, std::size_t cols) {
  if (rows.empty()) return Matrix(r, 0, cols);
  return Matrix::from_ints(r, rows);
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

// Elements of <G> + rowspace(A) in (Z/n)^m.
std::vector<long> coset_span(const Submodule& s, long n) {
  return oracle::span_mod(as_rows(vstack(s.ambient.relations(), s.generators)), s.ambient.generators(), n);
}

long module_size(const FPModule& m, long n) {
  long total = 1;
  for (std::size_t i = 0; i < m.generators(); ++i) total *= n;
  return total / static_cast<long>(oracle::span_mod(as_rows(m.relations()), m.generators(), n).size());
}

}  // namespace

TEST_CASE("map well-definedness examples") {
  FPModule z4_over_z(ints(Z(), {{4}}, 1));
  FPModule z2_over_z(ints(Z(), {{2}}, 1));
  CHECK(map_welldefined(FPMap(z4_over_z, z4_over_z, ints(Z(), {{2}}, 1))));
  CHECK_FALSE(map_welldefined(FPMap(z2_over_z, z4_over_z, ints(Z(), {{1}}, 1))));
  testgen::Gen g(3);
  for (int i = 0; i < 20; ++i) CHECK(map_welldefined(FPMap::between_free(g.matrix(Z(), 4))));
}

TEST_CASE("direct sums and cokernels") {
  FPModule r2 = direct_sum(FPModule::free(Z(), 1), FPModule::free(Z(), 1));
  CHECK(r2 == FPModule::free(Z(), 2));
  FPModule z6 = direct_sum(FPModule(ints(Z(), {{2}}, 1)), FPModule(ints(Z(), {{3}}, 1)));
  CHECK(z6.relations() == ints(Z(), {{2, 0}, {0, 3}}, 2));
  FPModule m(ints(Z(), {{2, 4}}, 2));
  FPModule padded = direct_sum(m, FPModule::zero(Z()));
  CHECK(padded.generators() == 2);
  CHECK(padded.relations().rows() == 1);

  MatrixRankFn q = rk_pullback(RingHom::include_integers_in_rationals(), rk_field(Ring::rationals()));
  CHECK(module_dim(q, coker_presentation(FPMap::identity(m))) == ExtendedValue(0));
  FPModule z2 = coker_presentation(FPMap::between_free(ints(Z(), {{2}}, 1)));
  CHECK(z2.relations() == ints(Z(), {{2}}, 1));
  FPModule n(ints(Z(), {{3, 0}}, 2));
  FPModule c = coker_presentation(FPMap(m, n, Matrix(Z(), 2, 2)));
  CHECK(module_dim(q, c) == module_dim(q, n));
  CHECK_THROWS_AS(coker_presentation(FPMap(FPModule(ints(Z(), {{2}}, 1)), FPModule(ints(Z(), {{4}}, 1)), ints(Z(), {{1}}, 1))),
                  Error);
}

TEST_CASE("quotients") {
  FPModule z4(ints(Z(), {{4}}, 1));
  CHECK(quotient_by(z4, Submodule::zero(z4)).relations().rows() == 1);
  FPModule q = quotient_by(z4, Submodule(z4, ints(Z(), {{2}}, 1)));
  CHECK(q.relations() == ints(Z(), {{4}, {2}}, 1));
  auto d = smith(q.relations()).divisors;
  REQUIRE(d.size() == 1);
  CHECK(d[0] == 2);
  MatrixRankFn f2 = rk_pullback(RingHom::reduce_mod(Z(), Ring::prime_field(2)), rk_field(Ring::prime_field(2)));
  CHECK(module_dim(f2, quotient_by(z4, Submodule::full(z4))) == ExtendedValue(0));
}

TEST_CASE("sum and intersection examples") {
  FPModule z2m = FPModule::free(Z(), 2);
  Submodule a(z2m, ints(Z(), {{1, 0}}, 2)), b(z2m, ints(Z(), {{0, 1}}, 2));
  Submodule meet = submodule_intersection(a, b);
  CHECK(submodule_equal(meet, Submodule::zero(z2m)));
  CHECK(submodule_equal(submodule_sum(a, b), Submodule::full(z2m)));
  CHECK(submodule_equal(submodule_intersection(a, a), a));

  FPModule z = FPModule::free(Z(), 1);
  Submodule two(z, ints(Z(), {{2}}, 1)), three(z, ints(Z(), {{3}}, 1));
  CHECK(submodule_equal(submodule_intersection(two, three), Submodule(z, ints(Z(), {{6}}, 1))));
}

TEST_CASE("intersection over Z/n matches element sets") {
  testgen::Gen g(11);
  for (long n : {4L, 6L, 8L, 9L}) {
    Ring r = Ring::integers_mod(n);
    for (int t = 0; t < 25; ++t) {
      const std::size_t m = static_cast<std::size_t>(g.range(1, 2));
      FPModule amb(g.matrix(r, static_cast<std::size_t>(g.range(0, 2)), m));
      Submodule a(amb, g.matrix(r, static_cast<std::size_t>(g.range(0, 3)), m));
      Submodule b(amb, g.matrix(r, static_cast<std::size_t>(g.range(0, 3)), m));
      Submodule meet = submodule_intersection(a, b);
      std::vector<long> sa = coset_span(a, n), sb = coset_span(b, n), expected;
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(expected));
      CHECK(coset_span(meet, n) == expected);
      CHECK(submodule_contains(a, meet));
      CHECK(submodule_contains(b, meet));
      std::vector<long> sum = coset_span(submodule_sum(a, b), n);
      CHECK(std::includes(sum.begin(), sum.end(), sa.begin(), sa.end()));
    }
  }
}

TEST_CASE("submodule presentations") {
  Ring z4 = Ring::integers_mod(4);
  FPModule ambient = FPModule::free(z4, 1);
  FPModule p = submodule_presentation(Submodule(ambient, ints(z4, {{2}}, 1)));
  CHECK(p.generators() == 1);
  CHECK(module_size(p, 4) == 2);
  CHECK(smith_divisors_mod(p.relations()) == std::vector<Integer>{2});

  FPModule free = submodule_presentation(Submodule::full(FPModule::free(Z(), 2)));
  MatrixRankFn q = rk_pullback(RingHom::include_integers_in_rationals(), rk_field(Ring::rationals()));
  CHECK(module_dim(q, free) == ExtendedValue(2));
  CHECK(submodule_presentation(Submodule::zero(FPModule::free(Z(), 2))).generators() == 0);

  // cardinality oracle: |<G> mod A| = |span(G, A)| / |span(A)|
  testgen::Gen g(17);
  for (long n : {4L, 6L, 9L}) {
    Ring r = Ring::integers_mod(n);
    for (int t = 0; t < 25; ++t) {
      const std::size_t m = static_cast<std::size_t>(g.range(1, 2));
      FPModule amb(g.matrix(r, static_cast<std::size_t>(g.range(0, 2)), m));
      Submodule s(amb, g.matrix(r, static_cast<std::size_t>(g.range(0, 3)), m));
      FPModule pres = submodule_presentation(s);
      long expected = static_cast<long>(coset_span(s, n).size()) /
                      static_cast<long>(oracle::span_mod(as_rows(amb.relations()), m, n).size());
      CHECK(module_size(pres, n) == expected);
      CHECK(map_welldefined(FPMap(pres, amb, s.generators)));
    }
  }
}

TEST_CASE("module dimension laws on samples") {
  testgen::Gen g(23);
  std::vector<MatrixRankFn> fns{
      rk_pullback(RingHom::include_integers_in_rationals(), rk_field(Ring::rationals())),
      rk_pullback(RingHom::reduce_mod(Z(), Ring::prime_field(3)), rk_field(Ring::prime_field(3))),
      rk_pullback(RingHom::reduce_mod(Z(), Ring::integers_mod(4)), rk_zmod_pk(2, 2)),
  };
  for (const auto& rk : fns) {
    for (int t = 0; t < 40; ++t) {
      const std::size_t m = static_cast<std::size_t>(g.range(1, 3));
      FPModule a(g.matrix(Z(), static_cast<std::size_t>(g.range(0, 3)), m));
      FPModule b(g.matrix(Z(), static_cast<std::size_t>(g.range(0, 3)), static_cast<std::size_t>(g.range(0, 3))));
      CHECK(module_dim(rk, direct_sum(a, b)) == module_dim(rk, a) + module_dim(rk, b));
      CHECK(module_dim(rk, quotient_by(a, Submodule::zero(a))) == module_dim(rk, a));
      CHECK(module_dim(rk, quotient_by(a, Submodule::full(a))) == ExtendedValue(0));
      Submodule s(a, g.matrix(Z(), static_cast<std::size_t>(g.range(0, 3)), m));
      CHECK(module_dim(rk, submodule_presentation(s)) >= bidim(rk, s).value);
    }
  }
}
