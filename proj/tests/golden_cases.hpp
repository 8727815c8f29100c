#pragma once
// Recorded CLI invocations shared by the CLI tests and the acceptance run.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace goldens {

struct GoldenCase {
  std::string file;
  int code;
  std::vector<std::string> args;
};

// Every verb once, with small sample counts. Set SYLRANK_UPDATE_GOLDEN=1 to rewrite.
inline const std::vector<GoldenCase>& cases() {
  static const std::vector<GoldenCase> cases{
      {"rank_f2.json", 0, {"rank", "--ring", "Z", "--fn", "pullback(mod(2),rkFp(2))", "--matrix", "2"}},
      {"dim_z6.json", 0, {"dim", "--ring", "Z", "--fn", "pullback(incQ,rkQ)", "--module", "gens 1; rels 6"}},
      {"bidim_z4.json", 0,
       {"bidim", "--ring", "Z", "--fn", "pullback(mod(4),rkZmodPk(2,2))", "--module", "gens 1; rels 4", "--sub", "2"}},
      {"maprank.json", 0,
       {"maprank", "--ring", "Z", "--fn", "pullback(mod(2),rkFp(2))", "--matrix", "2", "--domain", "gens 1",
        "--codomain", "gens 1; rels 4"}},
      {"axioms_matrix.json", 0, {"check-axioms", "--facet", "matrix", "--fn", "rkZmodPk(2,2)", "--samples", "100", "--seed", "7"}},
      {"axioms_module.tsv", 0,
       {"check-axioms", "--facet", "module", "--ring", "Z", "--fn", "pullback(incQ,rkQ)", "--samples", "30", "--format", "tsv"}},
      {"axioms_bivariant.json", 0, {"check-axioms", "--facet", "bivariant", "--fn", "rkZmodPk(2,2)", "--samples", "20"}},
      {"properties_f2.json", 0, {"check-properties", "--fn", "rkFp(2)", "--samples", "20", "--seed", "3"}},
      {"length_mixed.json", 1,
       {"check-length", "--ring", "Z", "--fn", "convex(1/2*pullback(incQ,rkQ)+1/2*pullback(mod(2),rkFp(2)))", "--samples", "20"}},
      {"length_q.json", 0, {"check-length", "--ring", "Z", "--fn", "pullback(incQ,rkQ)", "--samples", "20"}},
      {"pullback_z4.json", 0, {"pullback", "--hom", "mod(4)", "--fn", "rkZmodPk(2,2)", "--matrix", "2"}},
      {"pushforward_z4.json", 0,
       {"pushforward", "--epi", "Z->Zmod(4)", "--fn", "pullback(mod(4),rkZmodPk(2,2))", "--matrix", "2"}},
      {"epi_f2.json", 0, {"epi-range", "--epi", "Z->Fp(2)", "--fn", "pullback(mod(2),rkFp(2))"}},
      {"epi_q.json", 0, {"epi-range", "--epi", "Z->Zmod(2)", "--fn", "pullback(incQ,rkQ)"}},
      {"limit_f2.json", 0, {"limit-dim", "--fn", "pullback(mod(2),rkFp(2))", "--system", "Z;mul:2;T=8"}},
      {"ore_f3.json", 0, {"ore-test", "--fn", "pullback(mod(3),rkFp(3))", "--m", "2", "--horizon", "8"}},
      {"ore_rationals.json", 0, {"ore-test", "--fn", "pullback(incQ,rkQ)", "--rationals", "--samples", "10"}},
      {"sofic_c2.json", 0, {"sofic-dim", "--group", "C2", "--module", "gens 1", "--sub", "1*g0+1*g1"}},
      {"sofic_vs_vn_c3.json", 0, {"sofic-vs-vn", "--group", "C3", "--samples", "20"}},
  };
  return cases;
}

inline std::filesystem::path dir() { return std::filesystem::path(SYLRANK_GOLDEN_DIR); }

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace goldens
