#pragma once

// Named algebras and subalgebras: T_n, its diagonal, constant-diagonal and
// Jordan subalgebras, top and arrow subalgebras of path algebras,
// augmentations and one-dimensional bimodules.

#include <cstddef>
#include <vector>

#include "pathdepth/algebra.hpp"
#include "pathdepth/bimodule.hpp"

namespace pathdepth {

/// Lower triangular n x n matrices, as the path algebra of linear_quiver(n).
AlgebraPtr t_n(std::size_t n, const Field& field);

/// Span of the vertex idempotents.
SubalgebraEmbedding top_subalgebra(const AlgebraPtr& a);
/// K1 plus all paths of length >= 1.
SubalgebraEmbedding arrow_subalgebra(const AlgebraPtr& a);
/// Subalgebra generated by the sum of all arrows; K[x]/(x^n) inside T_n.
SubalgebraEmbedding jordan_subalgebra(const AlgebraPtr& a);
SubalgebraEmbedding jordan_subalgebra(std::size_t n, const Field& field);

/// An algebra map to the field, stored as its values on the basis.
struct Augmentation {
  AlgebraPtr algebra;
  std::size_t index = 0;  // 1-based vertex, 0 for pullbacks without a vertex
  SparseVec functional;

  Scalar operator()(const SparseVec& x) const;
};

/// One augmentation per vertex idempotent e: rho(x) = c where e x e = c e.
/// Throws ValidationError when some corner e A e is not one-dimensional.
std::vector<Augmentation> augmentations(const AlgebraPtr& a);
/// rho composed with the inclusion of e.
Augmentation pullback(const Augmentation& rho, const SubalgebraEmbedding& e);
/// {b in B : rho(b) = 0} as a subspace of the ambient algebra.
Subspace augmentation_ideal(const SubalgebraEmbedding& e, const Augmentation& rho);

/// One-dimensional bimodule with a.1.b = left(a) right(b).
Bimodule simple_bimodule(const Augmentation& left, const Augmentation& right);
/// K_ij over an algebra with vertex idempotents (1-based vertices).
Bimodule simple_bimodule(const AlgebraPtr& a, std::size_t i, std::size_t j);

}  // namespace pathdepth
