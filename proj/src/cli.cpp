#include "sylrank/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sylrank/axioms.hpp"
#include "sylrank/bivariant.hpp"
#include "sylrank/error.hpp"
#include "sylrank/sofic.hpp"
#include "sylrank/text.hpp"
#include "sylrank/transport.hpp"

namespace sylrank::cli {

namespace {

struct Options {
  std::string ring, fn, matrix, module, sub, domain, codomain;
  std::string facet = "matrix";
  std::string properties;
  std::string hom, epi, system;
  std::string field = "Q", group;
  std::string format = "json";
  std::uint64_t seed = 42;
  std::optional<std::size_t> samples;
  std::size_t max_dim = 5;
  long entry_bound = 9;
  std::string m = "2";
  std::size_t horizon = 8;
  std::size_t window = 3;
  bool rationals = false;
};

// Parse errors inside an option value are reported with the option name.
template <class F>
auto option(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw Error(std::string(name) + ": " + e.what());
  }
}

class Output {
 public:
  Output(std::ostream& out, const std::string& format) : out_(out), tsv_(format == "tsv") {}

  void value(Json fields) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    for (auto it = fields.begin(); it != fields.end(); ++it) doc[it.key()] = it.value();
    if (!tsv_) {
      out_ << doc.dump() << '\n';
      return;
    }
    for (auto it = doc.begin(); it != doc.end(); ++it) out_ << it.key() << '\t' << cell(it.value()) << '\n';
  }

  int report(const VerificationReport& r) {
    if (tsv_) {
      out_ << r.to_tsv();
    } else {
      out_ << r.to_json().dump() << '\n';
    }
    return r.passed() ? kExitOk : kExitFailed;
  }

 private:
  static std::string cell(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_array()) {
      std::string s;
      for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + cell(j[i]);
      return s;
    }
    return j.dump();
  }

  std::ostream& out_;
  bool tsv_;
};

std::optional<Ring> ring_option(const Options& o) {
  if (o.ring.empty()) return std::nullopt;
  return option("--ring", [&] { return parse_ring(o.ring); });
}

MatrixRankFn fn_option(const Options& o) {
  std::optional<Ring> ring = ring_option(o);
  return option("--fn", [&] { return parse_fn(o.fn, ring); });
}

Matrix matrix_option(const std::string& text, const Ring& ring, const char* name) {
  return option(name, [&] { return load_matrix(text, ring); });
}

RandomSampler sampler_for(const Options& o, std::size_t default_samples) {
  SamplerConfig c;
  c.seed = o.seed;
  c.samples = o.samples.value_or(default_samples);
  c.max_dim = o.max_dim;
  c.entry_bound = o.entry_bound;
  return RandomSampler(c);
}

Json texts(const std::vector<ExtendedValue>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(v.text());
  return a;
}

FPModule module_or_free(const std::string& text, const Ring& ring, std::size_t gens, const char* name) {
  if (text.empty()) return FPModule::free(ring, gens);
  return option(name, [&] { return load_module(text, ring).module; });
}

int dispatch(const std::string& verb, const Options& o, Output& out) {
  if (verb == "rank") {
    MatrixRankFn fn = fn_option(o);
    Matrix a = matrix_option(o.matrix, fn.ring(), "--matrix");
    out.value({{"value", fn.value(a).text()}});
    return kExitOk;
  }
  if (verb == "dim") {
    MatrixRankFn fn = fn_option(o);
    ModuleText m = option("--module", [&] { return load_module(o.module, fn.ring()); });
    out.value({{"value", module_dim(fn, m.module).text()}});
    return kExitOk;
  }
  if (verb == "bidim") {
    MatrixRankFn fn = fn_option(o);
    ModuleText m = option("--module", [&] { return load_module(o.module, fn.ring()); });
    std::optional<Matrix> gens = m.sub;
    if (!o.sub.empty()) gens = matrix_option(o.sub, fn.ring(), "--sub");
    if (!gens) throw Error("bidim needs a submodule: a sub block in --module or --sub");
    BivariantValue v = bidim(fn, Submodule(m.module, *gens));
    out.value({{"value", v.value.text()},
               {"rank_stacked", fraction_text(v.rank_stacked)},
               {"rank_relations", fraction_text(v.rank_relations)}});
    return kExitOk;
  }
  if (verb == "maprank") {
    MatrixRankFn fn = fn_option(o);
    Matrix f = matrix_option(o.matrix, fn.ring(), "--matrix");
    FPModule dom = module_or_free(o.domain, fn.ring(), f.rows(), "--domain");
    FPModule cod = module_or_free(o.codomain, fn.ring(), f.cols(), "--codomain");
    out.value({{"value", ext_map_rank(fn, FPMap(dom, cod, f)).text()}});
    return kExitOk;
  }
  if (verb == "check-axioms") {
    MatrixRankFn fn = fn_option(o);
    RandomSampler s = sampler_for(o, 500);
    if (o.facet == "matrix") return out.report(check_axioms(Facet::Matrix, fn, s));
    if (o.facet == "module") return out.report(check_axioms(Facet::Module, fn, s));
    if (o.facet == "map") return out.report(check_axioms(Facet::Map, fn, s));
    if (o.facet == "bivariant") return out.report(check_bivariant_axioms(fn, s));
    return out.report(check_round_trips(fn, s));
  }
  if (verb == "check-properties") {
    MatrixRankFn fn = fn_option(o);
    std::vector<Property> props;
    if (o.properties.empty()) {
      props = all_properties();
    } else {
      std::stringstream ss(o.properties);
      std::string name;
      while (std::getline(ss, name, ',')) {
        auto p = property_from_name(name);
        if (!p) throw Error("--properties: unknown property '" + name + "'");
        props.push_back(*p);
      }
    }
    return out.report(check_bivariant_properties(fn, sampler_for(o, 200), props));
  }
  if (verb == "check-length") {
    MatrixRankFn fn = fn_option(o);
    return out.report(check_length_criterion(fn, sampler_for(o, 500)));
  }
  if (verb == "pullback") {
    Ring source = ring_option(o).value_or(Ring::integers());
    RingHom h = option("--hom", [&] { return parse_hom(o.hom, source); });
    MatrixRankFn target = option("--fn", [&] { return parse_fn(o.fn, h.target()); });
    MatrixRankFn fn = rk_pullback(h, target);
    Matrix a = matrix_option(o.matrix, source, "--matrix");
    out.value({{"fn", fn.label()}, {"value", fn.value(a).text()}});
    return kExitOk;
  }
  if (verb == "pushforward") {
    RModuleStructureOnS st = option("--epi", [&] { return parse_epi(o.epi); });
    MatrixRankFn rk = option("--fn", [&] { return parse_fn(o.fn, st.r()); });
    MatrixRankFn fn = pushforward(rk, st);
    Matrix b = matrix_option(o.matrix, st.s(), "--matrix");
    out.value({{"fn", fn.label()}, {"value", fn.value(b).text()}});
    return kExitOk;
  }
  if (verb == "epi-range") {
    RModuleStructureOnS st = option("--epi", [&] { return parse_epi(o.epi); });
    MatrixRankFn rk = option("--fn", [&] { return parse_fn(o.fn, st.r()); });
    EpiRange r = epi_range_test(rk, st);
    out.value({{"in_image", r.in_image}, {"rk_pi", r.rk_pi.text()}, {"rk_id_s", r.rk_id_s.text()}});
    return kExitOk;
  }
  if (verb == "limit-dim") {
    SystemText sys = option("--system", [&] { return parse_system(o.system); });
    MatrixRankFn fn = option("--fn", [&] { return parse_fn(o.fn, sys.step.ring()); });
    LimitResult r = limit_relative_dim(fn, multiplication_system(sys.step, sys.horizon), o.window);
    out.value({{"values", texts(r.values)}, {"inf_observed", r.inf_observed.text()}, {"stabilized", r.stabilized}});
    return kExitOk;
  }
  if (verb == "ore-test") {
    MatrixRankFn fn = option("--fn", [&] { return parse_fn(o.fn, Ring::integers()); });
    OreResult r;
    if (o.rationals) {
      r = rational_localization_test(fn, sampler_for(o, 50), o.horizon);
    } else {
      Integer m = option("--m", [&] { return std::get<Integer>(Ring::integers().parse(o.m).rep); });
      r = ore_localization_test(fn, m, o.horizon);
    }
    out.value({{"in_image", verdict_text(r.in_image)}, {"rk_pi", r.rk_pi.text()}, {"values", texts(r.sequence.values)}});
    return kExitOk;
  }
  if (verb == "sofic-dim") {
    Ring field = option("--field", [&] { return parse_ring(o.field); });
    FiniteGroup g = option("--group", [&] { return parse_group(o.group); });
    Ring ring = Ring::group_algebra(field, g);
    ModuleText m = option("--module", [&] { return load_module(o.module, ring); });
    std::optional<Matrix> gens = m.sub;
    if (!o.sub.empty()) gens = matrix_option(o.sub, ring, "--sub");
    if (!gens) throw Error("sofic-dim needs a submodule: a sub block in --module or --sub");
    SoficValue v = sofic_bidim(SoficApproximation::regular(g), Submodule(m.module, *gens));
    out.value({{"value", v.value.text()}, {"modular", v.modular}});
    return kExitOk;
  }
  if (verb == "sofic-vs-vn") {
    Ring field = option("--field", [&] { return parse_ring(o.field); });
    FiniteGroup g = option("--group", [&] { return parse_group(o.group); });
    return out.report(sofic_vs_vn(field, g, sampler_for(o, 100)));
  }
  throw Error("unknown verb " + verb);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  if (const char* env = std::getenv("SYLRANK_SEED")) {
    try {
      std::size_t used = 0;
      o.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      err << "error: SYLRANK_SEED must be a nonnegative integer\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Exact Sylvester rank functions", "sylrank"};
  app.require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> verbs;
  auto verb = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    verbs.emplace_back(name, sub);
    return sub;
  };
  auto ring_fn = [&](CLI::App* sub, bool fn_required = true) {
    sub->add_option("--ring", o.ring, "coefficient ring");
    auto* f = sub->add_option("--fn", o.fn, "rank function");
    if (fn_required) f->required();
  };
  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "random seed (default $SYLRANK_SEED or 42)");
    sub->add_option("--samples", o.samples, "number of samples");
    sub->add_option("--max-dim", o.max_dim, "largest sampled matrix dimension")->check(CLI::Range(1, 12));
    sub->add_option("--entry-bound", o.entry_bound, "integer entries lie in [-b, b]")->check(CLI::Range(1, 1000));
  };

  CLI::App* c;
  c = verb("rank", "value of a rank function on a matrix");
  ring_fn(c);
  c->add_option("--matrix", o.matrix, "matrix text or file")->required();

  c = verb("dim", "dimension of a finitely presented module");
  ring_fn(c);
  c->add_option("--module", o.module, "module text or file")->required();

  c = verb("bidim", "relative dimension of a submodule");
  ring_fn(c);
  c->add_option("--module", o.module, "module text or file")->required();
  c->add_option("--sub", o.sub, "generator rows of the submodule");

  c = verb("maprank", "extended rank of a map of presented modules");
  ring_fn(c);
  c->add_option("--matrix", o.matrix, "rows are the images of the domain generators")->required();
  c->add_option("--domain", o.domain, "domain module (free by default)");
  c->add_option("--codomain", o.codomain, "codomain module (free by default)");

  c = verb("check-axioms", "randomized axiom suite");
  ring_fn(c);
  sampling(c);
  c->add_option("--facet", o.facet, "matrix, module, map, bivariant or roundtrip")
      ->check(CLI::IsMember({"matrix", "module", "map", "bivariant", "roundtrip"}));

  c = verb("check-properties", "theorem-level laws of the relative dimension");
  ring_fn(c);
  sampling(c);
  c->add_option("--properties", o.properties, "comma separated subset (default all)");

  c = verb("check-length", "additivity on short exact sequences");
  ring_fn(c);
  sampling(c);

  c = verb("pullback", "rank of a matrix under a pulled back rank function");
  ring_fn(c);
  c->add_option("--hom", o.hom, "mod(n), incQ, aug or regemb")->required();
  c->add_option("--matrix", o.matrix, "matrix over the source ring")->required();

  c = verb("pushforward", "rank over S induced from a rank over R");
  c->add_option("--epi", o.epi, "Z->Zmod(n), Z->Fp(p) or aug:<group algebra>")->required();
  c->add_option("--fn", o.fn, "rank function over R")->required();
  c->add_option("--matrix", o.matrix, "matrix over S")->required();

  c = verb("epi-range", "whether a rank function comes from S");
  c->add_option("--epi", o.epi, "Z->Zmod(n), Z->Fp(p) or aug:<group algebra>")->required();
  c->add_option("--fn", o.fn, "rank function over R")->required();

  c = verb("limit-dim", "relative dimensions along a directed system");
  c->add_option("--fn", o.fn, "rank function")->required();
  c->add_option("--system", o.system, "ring;mul:<step>;T=<horizon>")->required();
  c->add_option("--window", o.window, "equal trailing values needed to call it stable")->check(CLI::Range(1, 4096));

  c = verb("ore-test", "whether a rank function on Z comes from Z[1/m]");
  c->add_option("--fn", o.fn, "rank function over Z")->required();
  c->add_option("--m", o.m, "the inverted integer");
  c->add_option("--horizon", o.horizon, "number of stages")->check(CLI::Range(1, 4096));
  c->add_flag("--rationals", o.rationals, "invert every nonzero integer instead (sampled)");
  sampling(c);

  c = verb("sofic-dim", "relative dimension from the sofic span construction");
  c->add_option("--field", o.field, "Q or Fp(p)");
  c->add_option("--group", o.group, "Cn, S3 or cayley:<path>")->required();
  c->add_option("--module", o.module, "module text or file")->required();
  c->add_option("--sub", o.sub, "generator rows of the submodule");

  c = verb("sofic-vs-vn", "sofic relative dimension against the von Neumann rank");
  c->add_option("--field", o.field, "Q or Fp(p)");
  c->add_option("--group", o.group, "Cn, S3 or cayley:<path>")->required();
  sampling(c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  std::string chosen;
  for (const auto& [name, sub] : verbs) {
    if (sub->parsed()) chosen = name;
  }
  Output output(out, o.format);
  try {
    return dispatch(chosen, o, output);
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace sylrank::cli
