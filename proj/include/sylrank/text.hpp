#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "sylrank/rank.hpp"
#include "sylrank/transport.hpp"

namespace sylrank {

/// Z | Q | Fp(p) | Zmod(n) | GroupRing(field,group) | Mat(ring,k), plus the shorthand field[group].
Ring parse_ring(std::string_view text);
/// Cn | S3 | cayley:path
FiniteGroup parse_group(std::string_view text);
/// mod(n) | incQ | aug | regemb, starting at `source`. The target of mod(n) is
/// Fp(n) for prime n and Zmod(n) otherwise.
RingHom parse_hom(std::string_view text, const Ring& source);
/// rkQ | rkFp(p) | rkZmodPk(p,k) | vN(field,group) | pullback(hom,fn) | convex(w*fn+...) | morita(fn,k).
/// `ring` is the ring the function must live over; pullbacks default to Z without it.
MatrixRankFn parse_fn(std::string_view text, const std::optional<Ring>& ring = std::nullopt);

struct ModuleText {
  FPModule module;
  std::optional<Matrix> sub;
};

/// "gens m; rels r1; r2; sub s1; s2" (rows are comma separated entries).
ModuleText parse_module_inline(std::string_view text, const Ring& ring);
/// Line format: optional `ring <desc>`, `generators <m>`, `relations` and `sub` blocks of rows.
/// A ring line must agree with `ring` when both are present.
ModuleText parse_module_file(std::string_view content, const std::optional<Ring>& ring);

/// An argument naming an existing file is read from disk; otherwise it is inline text.
/// Both readings being valid is an error.
ModuleText load_module(const std::string& arg, const std::optional<Ring>& ring);
Matrix load_matrix(const std::string& arg, const Ring& ring);

/// "Z->Zmod(n)", "Z->Fp(p)", "aug:<group algebra>".
RModuleStructureOnS parse_epi(std::string_view text);

struct SystemText {
  Matrix step;
  std::size_t horizon;
};
/// "<ring>;mul:<scalar or [matrix]>;T=<horizon>"
SystemText parse_system(std::string_view text);

}  // namespace sylrank
