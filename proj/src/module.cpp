#include "sylrank/module.hpp"

#include "sylrank/error.hpp"
#include "sylrank/normal_form.hpp"

namespace sylrank {

FPModule::FPModule(Matrix relations) : relations_(std::move(relations)) {}

FPModule::FPModule(Ring ring, std::size_t generators, Matrix relations) : relations_(std::move(relations)) {
  require_same_ring(ring, relations_.ring(), "module");
  if (relations_.cols() != generators) throw Error("relation matrix has the wrong number of columns");
}

FPModule FPModule::free(const Ring& ring, std::size_t m) { return FPModule(Matrix(ring, 0, m)); }

Submodule::Submodule(FPModule amb, Matrix gens) : ambient(std::move(amb)), generators(std::move(gens)) {
  require_same_ring(ambient.ring(), generators.ring(), "submodule");
  if (generators.cols() != ambient.generators()) throw Error("submodule generators have the wrong number of columns");
}

Submodule Submodule::zero(const FPModule& ambient) { return Submodule(ambient, Matrix(ambient.ring(), 0, ambient.generators())); }

Submodule Submodule::full(const FPModule& ambient) {
  return Submodule(ambient, Matrix::identity(ambient.ring(), ambient.generators()));
}

FPMap::FPMap(FPModule dom, FPModule cod, Matrix f) : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(f)) {
  require_same_ring(domain.ring(), codomain.ring(), "map");
  require_same_ring(domain.ring(), matrix.ring(), "map");
  if (matrix.rows() != domain.generators() || matrix.cols() != codomain.generators()) {
    throw Error("map matrix shape does not match the generator counts");
  }
}

FPMap FPMap::identity(const FPModule& m) { return FPMap(m, m, Matrix::identity(m.ring(), m.generators())); }

FPMap FPMap::between_free(const Matrix& f) {
  return FPMap(FPModule::free(f.ring(), f.rows()), FPModule::free(f.ring(), f.cols()), f);
}

bool rows_in_span(const Matrix& a, const Matrix& v) {
  require_same_ring(a.ring(), v.ring(), "row span");
  if (a.cols() != v.cols()) throw Error("row span: column counts differ");
  if (a.rows() == 0) return v.is_zero();
  for (std::size_t i = 0; i < v.rows(); ++i) {
    Matrix r = v.row(i);
    if (r.is_zero()) continue;
    if (!row_membership(a, r)) return false;
  }
  return true;
}

bool map_welldefined(const FPMap& alpha) {
  return rows_in_span(alpha.codomain.relations(), alpha.domain.relations() * alpha.matrix);
}

FPModule direct_sum(const FPModule& m, const FPModule& n) {
  require_same_ring(m.ring(), n.ring(), "direct sum");
  return FPModule(block_diag(m.relations(), n.relations()));
}

FPModule coker_presentation(const FPMap& alpha) {
  if (!map_welldefined(alpha)) throw Error("cokernel of an ill-defined map");
  return FPModule(vstack(alpha.codomain.relations(), alpha.matrix));
}

FPModule quotient_by(const FPModule& m, const Submodule& s) {
  if (!(s.ambient == m)) throw Error("quotient by a submodule of a different module");
  return FPModule(vstack(m.relations(), s.generators));
}

Submodule image_in_quotient(const Submodule& t, const Submodule& s) {
  if (!(t.ambient == s.ambient)) throw Error("submodules of different modules");
  return Submodule(quotient_by(s.ambient, s), t.generators);
}

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
  if (!(a.ambient == b.ambient)) throw Error("sum of submodules of different modules");
  return Submodule(a.ambient, vstack(a.generators, b.generators));
}

Submodule submodule_intersection(const Submodule& a, const Submodule& b) {
  if (!(a.ambient == b.ambient)) throw Error("intersection of submodules of different modules");
  // (u, v, w) with u G1 = v G2 + w A.
  Matrix stacked = vstack(vstack(a.generators, b.generators.negated()), a.ambient.relations().negated());
  Matrix kernel = left_kernel(stacked);
  Matrix u = kernel.select_cols(0, a.generators.rows());
  return Submodule(a.ambient, u * a.generators);
}

bool submodule_contains(const Submodule& a, const Submodule& b) {
  if (!(a.ambient == b.ambient)) throw Error("submodules of different modules");
  return rows_in_span(vstack(a.generators, a.ambient.relations()), b.generators);
}

bool submodule_equal(const Submodule& a, const Submodule& b) { return submodule_contains(a, b) && submodule_contains(b, a); }

FPModule submodule_presentation(const Submodule& s) {
  Matrix kernel = left_kernel(vstack(s.generators, s.ambient.relations().negated()));
  return FPModule(kernel.select_cols(0, s.generators.rows()));
}

Submodule image_submodule(const FPMap& alpha) { return Submodule(alpha.codomain, alpha.matrix); }

FPMap compose(const FPMap& alpha, const FPMap& beta) {
  if (!(alpha.codomain == beta.domain)) throw Error("composition of maps that do not meet");
  return FPMap(alpha.domain, beta.codomain, alpha.matrix * beta.matrix);
}

FPMap direct_sum(const FPMap& alpha, const FPMap& beta) {
  return FPMap(direct_sum(alpha.domain, beta.domain), direct_sum(alpha.codomain, beta.codomain),
               block_diag(alpha.matrix, beta.matrix));
}

FPMap block_upper(const FPMap& alpha, const Matrix& gamma, const FPMap& beta) {
  return FPMap(direct_sum(alpha.domain, beta.domain), direct_sum(alpha.codomain, beta.codomain),
               sylrank::block_upper(alpha.matrix, gamma, beta.matrix));
}

FPMap induced_on_cokernels(const FPMap& alpha, const FPMap& beta) {
  FPMap ab = compose(alpha, beta);
  return FPMap(coker_presentation(alpha), coker_presentation(ab), beta.matrix);
}

}  // namespace sylrank
