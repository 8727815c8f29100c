#include "sylrank/text.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "cursor.hpp"
#include "sylrank/error.hpp"

namespace sylrank {

namespace {

using detail::Cursor;

std::string identifier(Cursor& cur) {
  cur.peek();
  const std::string_view t = cur.text();
  std::size_t p = cur.position(), start = p;
  while (p < t.size() && std::isalpha(static_cast<unsigned char>(t[p]))) ++p;
  cur.seek(p);
  return std::string(t.substr(start, p - start));
}

// Library errors raised while building a value become parse errors at `at`.
template <class F>
auto at_position(Cursor& cur, std::size_t at, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    cur.seek(at);
    cur.fail(e.what());
  }
}

std::size_t small_count(Cursor& cur, const char* what) {
  cur.peek();
  std::size_t at = cur.position();
  std::size_t v = cur.count();
  if (v == 0 || v > 4096) {
    cur.seek(at);
    cur.fail(std::string(what) + " must be between 1 and 4096");
  }
  return v;
}

FiniteGroup group_at(Cursor& cur) {
  cur.peek();
  const std::size_t at = cur.position();
  if (cur.accept("cayley:")) {
    std::string path(cur.balanced_until(",)]"));
    while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
    if (path.empty()) cur.fail("expected a Cayley file path");
    return at_position(cur, at, [&] { return FiniteGroup::from_cayley_file(path); });
  }
  std::string id = identifier(cur);
  if (id == "S" && cur.accept('3')) return FiniteGroup::symmetric3();
  if (id == "C") {
    std::size_t n = small_count(cur, "group order");
    return FiniteGroup::cyclic(n);
  }
  cur.seek(at);
  cur.fail("expected a group: Cn, S3 or cayley:<path>");
}

Ring ring_at(Cursor& cur) {
  cur.peek();
  const std::size_t at = cur.position();
  std::string id = identifier(cur);
  Ring out = Ring::integers();
  if (id == "Z") {
    out = Ring::integers();
  } else if (id == "Q") {
    out = Ring::rationals();
  } else if (id == "Fp" || id == "Zmod") {
    cur.expect('(');
    cur.peek();
    const std::size_t num_at = cur.position();
    Integer n = cur.integer();
    out = at_position(cur, num_at, [&] { return id == "Fp" ? Ring::prime_field(n) : Ring::integers_mod(n); });
    cur.expect(')');
  } else if (id == "GroupRing") {
    cur.expect('(');
    cur.peek();
    const std::size_t base_at = cur.position();
    Ring base = ring_at(cur);
    cur.expect(',');
    FiniteGroup g = group_at(cur);
    cur.expect(')');
    out = at_position(cur, base_at, [&] { return Ring::group_algebra(base, g); });
  } else if (id == "Mat") {
    cur.expect('(');
    Ring base = ring_at(cur);
    cur.expect(',');
    std::size_t k = small_count(cur, "matrix degree");
    cur.expect(')');
    out = Ring::matrix_amplification(base, k);
  } else {
    cur.seek(at);
    cur.fail("expected a ring: Z, Q, Fp(p), Zmod(n), GroupRing(k,G) or Mat(R,k)");
  }
  if (cur.peek() == '[') {
    cur.expect('[');
    FiniteGroup g = group_at(cur);
    cur.expect(']');
    out = at_position(cur, at, [&] { return Ring::group_algebra(out, g); });
  }
  return out;
}

Ring natural_target(const std::string& hom, const Integer& n, const Ring& source) {
  if (hom == "mod") return is_prime(n) ? Ring::prime_field(n) : Ring::integers_mod(n);
  if (hom == "incQ") return Ring::rationals();
  if (source.kind() != RingKind::GroupAlgebra) throw Error(hom + " needs a group algebra source, got " + source.name());
  if (hom == "aug") return source.base();
  return Ring::matrix_amplification(source.base(), source.group().order());
}

struct HomToken {
  std::string name;
  Integer n = 0;
  std::size_t at = 0;
};

HomToken hom_token_at(Cursor& cur) {
  cur.peek();
  HomToken tok;
  tok.at = cur.position();
  tok.name = identifier(cur);
  if (tok.name == "mod") {
    cur.expect('(');
    tok.n = cur.integer();
    cur.expect(')');
  } else if (tok.name != "incQ" && tok.name != "aug" && tok.name != "regemb") {
    cur.seek(tok.at);
    cur.fail("expected a homomorphism: mod(n), incQ, aug or regemb");
  }
  return tok;
}

RingHom build_hom(const HomToken& tok, const Ring& source, const Ring& target) {
  if (tok.name == "mod") {
    if (!target.is_residue_ring() || target.modulus() != tok.n) {
      throw Error("mod(" + tok.n.get_str() + ") cannot land in " + target.name());
    }
    return RingHom::reduce_mod(source, target);
  }
  RingHom h = tok.name == "incQ"  ? RingHom::include_integers_in_rationals()
              : tok.name == "aug" ? RingHom::augmentation(source)
                                  : RingHom::regular_embedding(source);
  require_same_ring(h.source(), source, tok.name.c_str());
  require_same_ring(h.target(), target, tok.name.c_str());
  return h;
}

MatrixRankFn fn_at(Cursor& cur, const std::optional<Ring>& ring);

MatrixRankFn fn_body(Cursor& cur, const std::optional<Ring>& ring, const std::string& id, std::size_t at) {
  if (id == "rkQ") return rk_field(Ring::rationals());
  if (id == "rkFp") {
    cur.expect('(');
    cur.peek();
    std::size_t p_at = cur.position();
    Integer p = cur.integer();
    cur.expect(')');
    return at_position(cur, p_at, [&] { return rk_field(Ring::prime_field(p)); });
  }
  if (id == "rkZmodPk") {
    cur.expect('(');
    cur.peek();
    std::size_t p_at = cur.position();
    Integer p = cur.integer();
    cur.expect(',');
    std::size_t k = small_count(cur, "exponent");
    cur.expect(')');
    if (!is_prime(p)) {
      cur.seek(p_at);
      cur.fail("rkZmodPk needs a prime, got " + p.get_str());
    }
    return rk_zmod_pk(p, k);
  }
  if (id == "vN") {
    cur.expect('(');
    cur.peek();
    std::size_t f_at = cur.position();
    Ring field = ring_at(cur);
    cur.expect(',');
    FiniteGroup g = group_at(cur);
    cur.expect(')');
    return at_position(cur, f_at, [&] { return rk_group_vn(field, g); });
  }
  if (id == "pullback") {
    cur.expect('(');
    HomToken tok = hom_token_at(cur);
    Ring source = Ring::integers();
    if (ring) {
      source = *ring;
    } else if (tok.name == "aug" || tok.name == "regemb") {
      cur.seek(tok.at);
      cur.fail(tok.name + " needs the source ring; pass --ring");
    }
    Ring hint = at_position(cur, tok.at, [&] { return natural_target(tok.name, tok.n, source); });
    cur.expect(',');
    MatrixRankFn inner = fn_at(cur, hint);
    cur.expect(')');
    RingHom h = at_position(cur, tok.at, [&] { return build_hom(tok, source, inner.ring()); });
    return rk_pullback(h, inner);
  }
  if (id == "convex") {
    cur.expect('(');
    std::vector<std::pair<Rational, MatrixRankFn>> terms;
    do {
      Rational w = cur.rational();
      cur.expect('*');
      terms.emplace_back(w, fn_at(cur, ring));
    } while (cur.accept('+'));
    cur.expect(')');
    return at_position(cur, at, [&] { return rk_convex(terms); });
  }
  if (id == "morita") {
    cur.expect('(');
    std::optional<Ring> inner_ring;
    if (ring && ring->kind() == RingKind::MatrixAmplification) inner_ring = ring->base();
    MatrixRankFn inner = fn_at(cur, inner_ring);
    cur.expect(',');
    std::size_t k = small_count(cur, "matrix degree");
    cur.expect(')');
    return rk_morita(inner, k);
  }
  cur.seek(at);
  cur.fail("unknown rank function '" + id + "'");
}

MatrixRankFn fn_at(Cursor& cur, const std::optional<Ring>& ring) {
  cur.peek();
  const std::size_t at = cur.position();
  std::string id = identifier(cur);
  MatrixRankFn fn = fn_body(cur, ring, id, at);
  if (ring && !(fn.ring() == *ring)) {
    cur.seek(at);
    cur.fail(fn.label() + " lives over " + fn.ring().name() + ", expected " + ring->name());
  }
  return fn;
}

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  if (offset) *offset += a;
  return s.substr(a, b - a);
}

bool starts_with_word(std::string_view s, std::string_view w) {
  if (s.substr(0, w.size()) != w) return false;
  return s.size() == w.size() || std::isspace(static_cast<unsigned char>(s[w.size()]));
}

// Rows collected for one block of a module description.
struct RowBlock {
  std::vector<Matrix> rows;
  bool present = false;
};

Matrix stack_rows(const Ring& ring, std::size_t cols, const RowBlock& b) {
  Matrix out(ring, 0, cols);
  for (const auto& r : b.rows) out = vstack(out, r);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_file(const std::string& arg) {
  std::error_code ec;
  return !arg.empty() && std::filesystem::is_regular_file(arg, ec);
}

}  // namespace

Ring parse_ring(std::string_view text) {
  Cursor cur(text);
  Ring r = ring_at(cur);
  cur.expect_end();
  return r;
}

FiniteGroup parse_group(std::string_view text) {
  Cursor cur(text);
  FiniteGroup g = group_at(cur);
  cur.expect_end();
  return g;
}

RingHom parse_hom(std::string_view text, const Ring& source) {
  Cursor cur(text);
  HomToken tok = hom_token_at(cur);
  cur.expect_end();
  return at_position(cur, tok.at, [&] { return build_hom(tok, source, natural_target(tok.name, tok.n, source)); });
}

MatrixRankFn parse_fn(std::string_view text, const std::optional<Ring>& ring) {
  Cursor cur(text);
  MatrixRankFn fn = fn_at(cur, ring);
  cur.expect_end();
  return fn;
}

ModuleText parse_module_inline(std::string_view text, const Ring& ring) {
  std::optional<std::size_t> gens;
  RowBlock rels, sub;
  RowBlock* current = nullptr;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::size_t col = start;
    std::string_view piece = trim(text.substr(start, end - start), &col);
    auto row = [&](std::string_view r, std::size_t c) {
      if (!current) throw ParseError("row outside a rels or sub block", 1, c + 1);
      if (!gens) throw ParseError("gens must come first", 1, c + 1);
      current->rows.push_back(Matrix::parse(ring, r, *gens, 1, c + 1));
    };
    if (starts_with_word(piece, "gens")) {
      std::size_t c = col + 4;
      std::string_view rest = trim(piece.substr(4), &c);
      Cursor cur(rest, 1, c + 1);
      gens = cur.count();
      cur.expect_end();
    } else if (starts_with_word(piece, "rels") || starts_with_word(piece, "sub")) {
      const bool is_rels = piece[0] == 'r';
      current = is_rels ? &rels : &sub;
      if (current->present) throw ParseError(std::string(is_rels ? "rels" : "sub") + " given twice", 1, col + 1);
      current->present = true;
      std::size_t c = col + (is_rels ? 4 : 3);
      std::string_view rest = trim(piece.substr(is_rels ? 4 : 3), &c);
      if (!rest.empty()) row(rest, c);
    } else if (!piece.empty()) {
      row(piece, col);
    } else if (end != text.size() || start != end) {
      throw ParseError("empty segment", 1, col + 1);
    }
    start = end + 1;
  }
  if (!gens) throw ParseError("missing gens", 1, 1);
  ModuleText out{FPModule(ring, *gens, stack_rows(ring, *gens, rels)), std::nullopt};
  if (sub.present) out.sub = stack_rows(ring, *gens, sub);
  return out;
}

ModuleText parse_module_file(std::string_view content, const std::optional<Ring>& ring) {
  std::optional<Ring> r = ring;
  std::optional<std::size_t> gens;
  RowBlock rels, sub;
  RowBlock* current = nullptr;
  std::size_t line_no = 0, start = 0;
  while (start < content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    ++line_no;
    std::size_t col = 0;
    std::string_view line = trim(content.substr(start, end - start), &col);
    start = end + 1;
    if (line.empty() || line[0] == '#') continue;
    if (starts_with_word(line, "ring")) {
      if (gens) throw ParseError("ring line must come before generators", line_no, col + 1);
      std::size_t c = col + 4;
      std::string_view rest = trim(line.substr(4), &c);
      Cursor cur(rest, line_no, c + 1);
      Ring parsed = ring_at(cur);
      cur.expect_end();
      if (r && !(*r == parsed)) throw ParseError("module is over " + parsed.name() + ", expected " + r->name(), line_no, c + 1);
      r = parsed;
    } else if (starts_with_word(line, "generators")) {
      std::size_t c = col + 10;
      std::string_view rest = trim(line.substr(10), &c);
      Cursor cur(rest, line_no, c + 1);
      gens = cur.count();
      cur.expect_end();
    } else if (line == "relations" || line == "sub") {
      current = line == "sub" ? &sub : &rels;
      if (current->present) throw ParseError(std::string(line) + " given twice", line_no, col + 1);
      current->present = true;
    } else {
      if (!r) throw ParseError("no ring given", line_no, col + 1);
      if (!gens) throw ParseError("generators must come before rows", line_no, col + 1);
      if (!current) throw ParseError("row outside a relations or sub block", line_no, col + 1);
      current->rows.push_back(Matrix::parse(*r, line, *gens, line_no, col + 1));
    }
  }
  if (!r) throw ParseError("no ring given", line_no ? line_no : 1, 1);
  if (!gens) throw ParseError("missing generators line", line_no ? line_no : 1, 1);
  ModuleText out{FPModule(*r, *gens, stack_rows(*r, *gens, rels)), std::nullopt};
  if (sub.present) out.sub = stack_rows(*r, *gens, sub);
  return out;
}

ModuleText load_module(const std::string& arg, const std::optional<Ring>& ring) {
  std::optional<ModuleText> inline_form;
  if (ring) {
    try {
      inline_form = parse_module_inline(arg, *ring);
    } catch (const Error&) {
      if (!is_file(arg)) throw;
    }
  }
  if (is_file(arg)) {
    if (inline_form) throw Error("'" + arg + "' is both a file and a valid inline module; rename the file");
    return parse_module_file(read_file(arg), ring);
  }
  if (!inline_form) throw Error("module '" + arg + "' is not a file and no ring is known for inline text");
  return *inline_form;
}

Matrix load_matrix(const std::string& arg, const Ring& ring) {
  std::optional<Matrix> inline_form;
  try {
    inline_form = Matrix::parse(ring, arg);
  } catch (const Error&) {
    if (!is_file(arg)) throw;
  }
  if (!is_file(arg)) return *inline_form;
  if (inline_form) throw Error("'" + arg + "' is both a file and a valid inline matrix; rename the file");
  const std::string content = read_file(arg);
  std::optional<Matrix> out;
  std::size_t line_no = 0, start = 0;
  while (start < content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string::npos) end = content.size();
    ++line_no;
    std::size_t col = 0;
    std::string_view line = trim(std::string_view(content).substr(start, end - start), &col);
    start = end + 1;
    if (line.empty() || line[0] == '#') continue;
    std::optional<std::size_t> cols;
    if (out) cols = out->cols();
    Matrix rows = Matrix::parse(ring, line, cols, line_no, col + 1);
    out = out ? vstack(*out, rows) : rows;
  }
  if (!out) throw ParseError("matrix file is empty", 1, 1);
  return *out;
}

RModuleStructureOnS parse_epi(std::string_view text) {
  Cursor cur(text);
  if (cur.accept("aug:")) {
    cur.peek();
    const std::size_t at = cur.position();
    Ring ga = ring_at(cur);
    cur.expect_end();
    return at_position(cur, at, [&] { return RModuleStructureOnS::augmentation(ga); });
  }
  cur.peek();
  const std::size_t at = cur.position();
  Ring source = ring_at(cur);
  if (source.kind() != RingKind::Integers) {
    cur.seek(at);
    cur.fail("quotient epimorphisms start at Z");
  }
  cur.expect('-');
  cur.expect('>');
  cur.peek();
  const std::size_t target_at = cur.position();
  Ring target = ring_at(cur);
  cur.expect_end();
  return at_position(cur, target_at, [&] { return RModuleStructureOnS::quotient(target); });
}

SystemText parse_system(std::string_view text) {
  Cursor cur(text);
  Ring ring = ring_at(cur);
  cur.expect(';');
  if (!cur.accept("mul:")) cur.fail("expected mul:<transition>");
  cur.peek();
  std::size_t at = cur.position();
  std::optional<Matrix> step;
  if (cur.accept('[')) {
    std::string_view body = cur.balanced_until("]");
    step = Matrix::parse(ring, body, std::nullopt, 1, at + 2);
    cur.expect(']');
  } else {
    std::string_view body = cur.balanced_until(";");
    step = Matrix::parse(ring, body, 1, 1, at + 1);
  }
  if (step->rows() != step->cols()) {
    cur.seek(at);
    cur.fail("transition matrix must be square");
  }
  cur.expect(';');
  if (!cur.accept("T=")) cur.fail("expected T=<horizon>");
  std::size_t horizon = cur.count();
  cur.expect_end();
  if (horizon < 1 || horizon > 4096) cur.fail("horizon must be between 1 and 4096");
  return SystemText{*step, horizon};
}

}  // namespace sylrank
