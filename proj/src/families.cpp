#include "pathdepth/families.hpp"

#include "pathdepth/error.hpp"

namespace pathdepth {

AlgebraPtr t_n(std::size_t n, const Field& field) {
  if (n == 0) throw ValidationError("T_n needs n >= 1");
  return path_algebra(linear_quiver(n), field);
}

SubalgebraEmbedding top_subalgebra(const AlgebraPtr& a) {
  if (!a->vertex_idempotents()) throw ValidationError("top subalgebra needs vertex idempotents");
  return subalgebra_closure(a, *a->vertex_idempotents());
}

SubalgebraEmbedding arrow_subalgebra(const AlgebraPtr& a) {
  if (!a->grading()) throw ValidationError("arrow subalgebra needs a path grading");
  std::vector<SparseVec> gens;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    if ((*a->grading())[i].length >= 1) gens.push_back(a->basis_vector(i));
  }
  return subalgebra_closure(a, gens);
}

SubalgebraEmbedding jordan_subalgebra(const AlgebraPtr& a) {
  if (!a->grading()) throw ValidationError("Jordan subalgebra needs a path grading");
  VecAccumulator shift(a->field());
  for (std::size_t i = 0; i < a->dim(); ++i) {
    if ((*a->grading())[i].length == 1) shift.add(i, Scalar(1));
  }
  return subalgebra_closure(a, {shift.finish(a->dim())});
}

SubalgebraEmbedding jordan_subalgebra(std::size_t n, const Field& field) { return jordan_subalgebra(t_n(n, field)); }

Scalar Augmentation::operator()(const SparseVec& x) const { return dot(functional, x, algebra->field()); }

std::vector<Augmentation> augmentations(const AlgebraPtr& a) {
  if (!a->vertex_idempotents()) throw ValidationError("augmentations need vertex idempotents");
  const Field& f = a->field();
  std::vector<Augmentation> out;
  const auto& idem = *a->vertex_idempotents();
  for (std::size_t v = 0; v < idem.size(); ++v) {
    const SparseVec& e = idem[v];
    const Scalar pivot = e.entries().front().value;
    SparseVec functional(a->dim());
    for (std::size_t k = 0; k < a->dim(); ++k) {
      SparseVec y = a->multiply(a->multiply(e, a->basis_vector(k)), e);
      if (y.is_zero()) continue;
      Scalar c = f.div(y.entries().front().value, pivot);
      if (!(y == scale(e, c, f))) throw ValidationError("vertex corner is not one-dimensional; no augmentation");
      functional.append(k, c);
    }
    Augmentation rho{a, v + 1, std::move(functional)};
    if (rho(a->unit()) != 1) throw ValidationError("augmentation is not unital");
    for (std::size_t i = 0; i < a->dim(); ++i) {
      for (std::size_t j = 0; j < a->dim(); ++j) {
        if (rho(a->product(i, j)) != f.mul(rho.functional.at(i), rho.functional.at(j)))
          throw ValidationError("augmentation is not multiplicative");
      }
    }
    out.push_back(std::move(rho));
  }
  return out;
}

Augmentation pullback(const Augmentation& rho, const SubalgebraEmbedding& e) {
  if (!same_algebra(rho.algebra, e.ambient())) throw ValidationError("augmentation belongs to another algebra");
  SparseVec functional(e.sub()->dim());
  for (std::size_t i = 0; i < e.images().size(); ++i) functional.append(i, rho(e.images()[i]));
  return Augmentation{e.sub(), 0, std::move(functional)};
}

Subspace augmentation_ideal(const SubalgebraEmbedding& e, const Augmentation& rho) {
  Augmentation sub = pullback(rho, e);
  const Field& f = e.ambient()->field();
  std::vector<SparseVec> kernel = kernel_basis(Mat::from_rows(e.sub()->dim(), {sub.functional}), f);
  std::vector<SparseVec> images;
  for (const auto& v : kernel) images.push_back(e.map(v));
  return Subspace(e.ambient()->dim(), images, f);
}

Bimodule simple_bimodule(const Augmentation& left, const Augmentation& right) {
  std::vector<Mat> l;
  for (std::size_t i = 0; i < left.algebra->dim(); ++i) l.push_back(Mat::from_dense({{left.functional.at(i)}}));
  std::vector<Mat> r;
  for (std::size_t j = 0; j < right.algebra->dim(); ++j) r.push_back(Mat::from_dense({{right.functional.at(j)}}));
  return Bimodule(left.algebra, right.algebra, 1, std::move(l), std::move(r));
}

Bimodule simple_bimodule(const AlgebraPtr& a, std::size_t i, std::size_t j) {
  std::vector<Augmentation> rho = augmentations(a);
  if (i == 0 || j == 0 || i > rho.size() || j > rho.size()) throw ValidationError("vertex index out of range");
  return simple_bimodule(rho[i - 1], rho[j - 1]);
}

}  // namespace pathdepth
