#pragma once

#include <cstddef>

#include "sylrank/matrix.hpp"

namespace sylrank {

/// R^m / R^n A. A 0 x m relation matrix gives the free module R^m.
class FPModule {
 public:
  explicit FPModule(Matrix relations);
  FPModule(Ring ring, std::size_t generators, Matrix relations);
  static FPModule free(const Ring& ring, std::size_t m);
  static FPModule zero(const Ring& ring) { return free(ring, 0); }

  const Ring& ring() const { return relations_.ring(); }
  std::size_t generators() const { return relations_.cols(); }
  const Matrix& relations() const { return relations_; }

  bool operator==(const FPModule& other) const = default;

 private:
  Matrix relations_;
};

/// Submodule generated by the rows of G (read modulo the relations of the ambient).
struct Submodule {
  FPModule ambient;
  Matrix generators;

  Submodule(FPModule ambient, Matrix generators);
  static Submodule zero(const FPModule& ambient);
  static Submodule full(const FPModule& ambient);
};

/// Map of presented modules: generator i of the domain goes to row i of F.
struct FPMap {
  FPModule domain;
  FPModule codomain;
  Matrix matrix;

  FPMap(FPModule domain, FPModule codomain, Matrix matrix);
  static FPMap identity(const FPModule& m);
  static FPMap between_free(const Matrix& f);
};

/// Rows of `v` all lie in the row space of `a` (an empty `a` admits only zero rows).
bool rows_in_span(const Matrix& a, const Matrix& v);

bool map_welldefined(const FPMap& alpha);
FPModule direct_sum(const FPModule& m, const FPModule& n);
FPModule coker_presentation(const FPMap& alpha);
FPModule quotient_by(const FPModule& m, const Submodule& s);
/// Submodule of M/S generated by the images of the rows of T.
Submodule image_in_quotient(const Submodule& t, const Submodule& s);

Submodule submodule_sum(const Submodule& a, const Submodule& b);
Submodule submodule_intersection(const Submodule& a, const Submodule& b);
/// b is contained in a.
bool submodule_contains(const Submodule& a, const Submodule& b);
bool submodule_equal(const Submodule& a, const Submodule& b);
/// Presentation of the submodule as an abstract module on the rows of G.
FPModule submodule_presentation(const Submodule& s);

Submodule image_submodule(const FPMap& alpha);
/// x -> (x)alpha -> ((x)alpha)beta.
FPMap compose(const FPMap& alpha, const FPMap& beta);
FPMap direct_sum(const FPMap& alpha, const FPMap& beta);
/// [alpha gamma; 0 beta] from dom(alpha) + dom(beta) to cod(alpha) + cod(beta).
FPMap block_upper(const FPMap& alpha, const Matrix& gamma, const FPMap& beta);
/// Map coker(alpha) -> coker(alpha beta) induced by beta.
FPMap induced_on_cokernels(const FPMap& alpha, const FPMap& beta);

}  // namespace sylrank
