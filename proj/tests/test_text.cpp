#include <functional>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "gen.hpp"
#include "sylrank/error.hpp"
#include "sylrank/text.hpp"

using namespace sylrank;

namespace {

// Scratch file removed at scope exit.
struct TempFile {
  std::filesystem::path path;
  TempFile(const std::string& name, const std::string& content)
      : path(std::filesystem::temp_directory_path() / name) {
    std::ofstream(path) << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

ParseError parse_error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error");
  return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("ring names round trip") {
  for (const char* text : {"Z", "Q", "Fp(2)", "Fp(101)", "Zmod(4)", "Zmod(12)", "GroupRing(Q,C3)", "GroupRing(Fp(2),S3)",
                           "Mat(Z,2)", "Mat(Zmod(4),3)"}) {
    Ring r = parse_ring(text);
    CHECK(r.name() == text);
    CHECK(parse_ring(r.name()) == r);
  }
  CHECK(parse_ring("Q[C3]") == Ring::group_algebra(Ring::rationals(), FiniteGroup::cyclic(3)));
  CHECK(parse_ring(" Fp( 3 ) ") == Ring::prime_field(3));
}

TEST_CASE("ring errors carry positions") {
  CHECK_THROWS_AS(parse_ring("Fp(4)"), Error);
  CHECK_THROWS_AS(parse_ring("Zmod(1)"), Error);
  CHECK_THROWS_AS(parse_ring("GroupRing(Z,C2)"), Error);
  ParseError e = parse_error_of([] { parse_ring("Zmod(4"); });
  CHECK(e.line() == 1);
  CHECK(e.column() == 7);
  ParseError junk = parse_error_of([] { parse_ring("Q x"); });
  CHECK(junk.column() == 3);
}

TEST_CASE("groups") {
  CHECK(parse_group("C5") == FiniteGroup::cyclic(5));
  CHECK(parse_group("S3") == FiniteGroup::symmetric3());
  TempFile f("sylrank_test_c2.txt", "2\n0 1\n1 0\n");
  CHECK(parse_group("cayley:" + f.path.string()) == FiniteGroup::cyclic(2));
  TempFile bad("sylrank_test_bad.txt", "2\n0 1\n0 1\n");
  CHECK_THROWS_AS(parse_group("cayley:" + bad.path.string()), Error);
  CHECK_THROWS_AS(parse_group("C0"), Error);
  CHECK_THROWS_AS(parse_group("D4"), Error);
}

TEST_CASE("homomorphisms") {
  Ring z = Ring::integers();
  CHECK(parse_hom("mod(5)", z).target() == Ring::prime_field(5));
  CHECK(parse_hom("mod(6)", z).target() == Ring::integers_mod(6));
  CHECK(parse_hom("incQ", z).target() == Ring::rationals());
  Ring qc3 = parse_ring("Q[C3]");
  CHECK(parse_hom("aug", qc3).target() == Ring::rationals());
  CHECK(parse_hom("regemb", qc3).target() == Ring::matrix_amplification(Ring::rationals(), 3));
  CHECK_THROWS_AS(parse_hom("aug", z), Error);
  CHECK_THROWS_AS(parse_hom("mod(4)", Ring::integers_mod(6)), Error);
  CHECK_THROWS_AS(parse_hom("frob", z), Error);
}

TEST_CASE("rank function grammar") {
  CHECK(parse_fn("rkQ").ring() == Ring::rationals());
  CHECK(parse_fn("rkFp(7)").ring() == Ring::prime_field(7));
  CHECK(parse_fn("rkZmodPk(2,3)").ring() == Ring::integers_mod(8));
  CHECK(parse_fn("vN(Q,S3)").ring() == parse_ring("Q[S3]"));
  CHECK(parse_fn("pullback(mod(2),rkFp(2))").ring() == Ring::integers());
  CHECK(parse_fn("morita(rkQ,2)").ring() == parse_ring("Mat(Q,2)"));
  CHECK(parse_fn("pullback(aug,rkQ)", parse_ring("Q[C2]")).ring() == parse_ring("Q[C2]"));

  MatrixRankFn mixed = parse_fn("convex(1/2*pullback(incQ,rkQ)+1/2*pullback(mod(2),rkFp(2)))");
  CHECK(mixed.ring() == Ring::integers());
  CHECK(mixed(Matrix::from_ints(Ring::integers(), {{2}})) == Rational(1, 2));

  // labels parse back to the same function
  testgen::Gen g(2);
  for (const char* text : {"rkFp(3)", "rkZmodPk(3,2)", "pullback(mod(4),rkZmodPk(2,2))",
                           "convex(1/3*pullback(incQ,rkQ)+2/3*pullback(mod(3),rkFp(3)))"}) {
    MatrixRankFn a = parse_fn(text);
    MatrixRankFn b = parse_fn(a.label(), a.ring());
    CHECK(a.label() == b.label());
    for (int t = 0; t < 10; ++t) {
      Matrix m = g.matrix(a.ring(), 3);
      CHECK(a(m) == b(m));
    }
  }

  CHECK_THROWS_AS(parse_fn("convex(1/2*rkQ+1/3*rkQ)"), Error);
  CHECK_THROWS_AS(parse_fn("convex(1/2*rkQ+1/2*rkFp(2))"), Error);
  CHECK_THROWS_AS(parse_fn("rkQ", Ring::integers()), Error);
  CHECK_THROWS_AS(parse_fn("rkZmodPk(4,2)"), Error);
  ParseError e = parse_error_of([] { parse_fn("pullback(mod(2) rkFp(2))"); });
  CHECK(e.column() == 17);
}

TEST_CASE("inline modules") {
  Ring z = Ring::integers();
  ModuleText t = parse_module_inline("gens 2; rels 2,0; 0,3; sub 1,1", z);
  CHECK(t.module.generators() == 2);
  CHECK(t.module.relations() == Matrix::from_ints(z, {{2, 0}, {0, 3}}));
  REQUIRE(t.sub.has_value());
  CHECK(*t.sub == Matrix::from_ints(z, {{1, 1}}));

  ModuleText bare = parse_module_inline("gens 3", z);
  CHECK(bare.module == FPModule::free(z, 3));
  CHECK_FALSE(bare.sub.has_value());
  CHECK(parse_module_inline("gens 1; rels 6", z).module.relations() == Matrix::from_ints(z, {{6}}));

  CHECK_THROWS_AS(parse_module_inline("rels 1", z), ParseError);
  CHECK_THROWS_AS(parse_module_inline("gens 2; rels 1", z), Error);
  CHECK_THROWS_AS(parse_module_inline("gens 1; rels 1; rels 2", z), ParseError);
}

TEST_CASE("module files") {
  const std::string text =
      "# Z/4 with the submodule 2Z/4\n"
      "ring Z\n"
      "generators 1\n"
      "relations\n"
      "4\n"
      "sub\n"
      "2\n";
  ModuleText t = parse_module_file(text, std::nullopt);
  CHECK(t.module.relations() == Matrix::from_ints(Ring::integers(), {{4}}));
  CHECK(*t.sub == Matrix::from_ints(Ring::integers(), {{2}}));
  CHECK_NOTHROW(parse_module_file(text, Ring::integers()));

  ParseError wrong = parse_error_of([&] { parse_module_file(text, Ring::rationals()); });
  CHECK(wrong.line() == 2);
  ParseError bad_row = parse_error_of([] { parse_module_file("ring Z\ngenerators 2\nrelations\n1,x\n", std::nullopt); });
  CHECK(bad_row.line() == 4);
  CHECK(bad_row.column() == 3);
  CHECK_THROWS_AS(parse_module_file("generators 1\n", std::nullopt), ParseError);

  TempFile f("sylrank_test_module.txt", text);
  ModuleText loaded = load_module(f.path.string(), std::nullopt);
  CHECK(loaded.module == t.module);
  CHECK_THROWS_AS(load_module("gens 1", std::nullopt), Error);
  CHECK(load_module("gens 1", Ring::integers()).module == FPModule::free(Ring::integers(), 1));
}

TEST_CASE("file names that also parse inline are refused") {
  const auto cwd = std::filesystem::current_path();
  std::filesystem::current_path(std::filesystem::temp_directory_path());
  {
    std::ofstream("2") << "5\n";
    CHECK_THROWS_WITH_AS(load_matrix("2", Ring::integers()), doctest::Contains("both a file"), Error);
    std::filesystem::remove("2");
  }
  CHECK(load_matrix("2", Ring::integers()) == Matrix::from_ints(Ring::integers(), {{2}}));
  std::filesystem::current_path(cwd);
}

TEST_CASE("matrices") {
  Ring z = Ring::integers();
  CHECK(load_matrix("1,2;3,4", z) == Matrix::from_ints(z, {{1, 2}, {3, 4}}));
  Ring q = Ring::rationals();
  Matrix half = load_matrix("1/2", q);
  Rational h(1, 2);
  CHECK(half(0, 0) == Scalar{h});
  CHECK_THROWS_AS(load_matrix("1,2;3", z), Error);
  Ring qc2 = parse_ring("Q[C2]");
  Matrix ga = load_matrix("1*g0+1*g1", qc2);
  CHECK(ga(0, 0) == Scalar{std::vector<Scalar>{Scalar{Rational(1)}, Scalar{Rational(1)}}});
}

TEST_CASE("epimorphisms and systems") {
  CHECK(parse_epi("Z->Zmod(4)").s() == Ring::integers_mod(4));
  CHECK(parse_epi("Z->Fp(3)").s() == Ring::prime_field(3));
  CHECK(parse_epi("aug:Q[C3]").r() == parse_ring("Q[C3]"));
  CHECK_THROWS_AS(parse_epi("Z->Q"), Error);
  CHECK_THROWS_AS(parse_epi("Q->Fp(2)"), Error);

  SystemText s = parse_system("Z;mul:2;T=8");
  CHECK(s.horizon == 8);
  CHECK(s.step == Matrix::from_ints(Ring::integers(), {{2}}));
  SystemText m = parse_system("Z;mul:[2,0;0,3];T=3");
  CHECK(m.step == Matrix::from_ints(Ring::integers(), {{2, 0}, {0, 3}}));
  CHECK_THROWS_AS(parse_system("Z;mul:2"), Error);
  CHECK_THROWS_AS(parse_system("Z;mul:[1,2];T=2"), Error);
}
