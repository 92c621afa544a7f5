#pragma once

// Finite-dimensional unital associative algebras given by structure
// constants, with the constructions the depth engine needs.

#include <json.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pathdepth/exactlin.hpp"
#include "pathdepth/quiver.hpp"

namespace pathdepth {

class Bimodule;

/// Length and endpoints of a basis path (1-based vertices).
struct PathGrade {
  std::size_t length;
  std::size_t source;
  std::size_t target;

  friend bool operator==(const PathGrade&, const PathGrade&) = default;
};

class Algebra {
 public:
  struct Parts {
    Field field = Field::rationals();
    std::vector<std::string> labels;
    /// mult[i][j] = e_i * e_j
    std::vector<std::vector<SparseVec>> mult;
    SparseVec unit;
    std::optional<std::vector<SparseVec>> vertex_idempotents;
    std::optional<std::vector<PathGrade>> grading;
    /// Recorded e_1, e_2 of products and triangular rings.
    std::vector<SparseVec> block_idempotents;
  };

  /// Checks every invariant exhaustively (associativity over all basis
  /// triples, two-sided unit, idempotent set) and throws ValidationError.
  explicit Algebra(Parts parts);

  const Field& field() const { return p_.field; }
  std::size_t dim() const { return p_.labels.size(); }
  const std::vector<std::string>& labels() const { return p_.labels; }
  const std::string& label(std::size_t i) const { return p_.labels.at(i); }
  std::optional<std::size_t> find_label(const std::string& label) const;
  const SparseVec& product(std::size_t i, std::size_t j) const { return p_.mult[i][j]; }
  const SparseVec& unit() const { return p_.unit; }
  SparseVec basis_vector(std::size_t i) const { return SparseVec::unit(dim(), i); }
  const std::optional<std::vector<SparseVec>>& vertex_idempotents() const { return p_.vertex_idempotents; }
  const std::optional<std::vector<PathGrade>>& grading() const { return p_.grading; }
  const std::vector<SparseVec>& block_idempotents() const { return p_.block_idempotents; }
  const Parts& parts() const { return p_; }

  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  Mat left_multiplication(const SparseVec& x) const;
  Mat right_multiplication(const SparseVec& x) const;

  /// A small generating set (never containing the unit): idempotent basis
  /// elements are tried first, then the remaining basis in order, keeping
  /// each one not already generated.
  const std::vector<SparseVec>& generators() const { return generators_; }

  std::string format(const SparseVec& x) const;

 private:
  Parts p_;
  std::vector<SparseVec> generators_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Span of all words in `generators` (including the empty word 1).
Subspace generated_subalgebra(const Algebra& a, const std::vector<SparseVec>& generators);

class Ideal {
 public:
  /// Throws ValidationError unless the span is closed under left and right
  /// multiplication by every basis element of `ambient`.
  Ideal(AlgebraPtr ambient, const std::vector<SparseVec>& spanning);

  const AlgebraPtr& ambient() const { return ambient_; }
  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const std::vector<SparseVec>& basis() const { return space_.basis(); }
  bool is_nilpotent() const;

 private:
  AlgebraPtr ambient_;
  Subspace space_;
};

class SubalgebraEmbedding {
 public:
  /// `images[i]` is the image of sub basis element i. Throws ValidationError
  /// unless the map is injective, unital and multiplicative.
  SubalgebraEmbedding(AlgebraPtr ambient, AlgebraPtr sub, std::vector<SparseVec> images);

  const AlgebraPtr& ambient() const { return ambient_; }
  const AlgebraPtr& sub() const { return sub_; }
  const std::vector<SparseVec>& images() const { return images_; }
  Mat inclusion() const;
  SparseVec map(const SparseVec& sub_element) const;
  const Subspace& image_space() const { return image_space_; }
  std::optional<SparseVec> preimage(const SparseVec& ambient_element) const;

 private:
  AlgebraPtr ambient_;
  AlgebraPtr sub_;
  std::vector<SparseVec> images_;
  Subspace image_space_;
};

SubalgebraEmbedding identity_embedding(const AlgebraPtr& a);
/// Smallest unital subalgebra containing the generators; its basis is the
/// RREF basis of the generated span.
SubalgebraEmbedding subalgebra_closure(const AlgebraPtr& ambient, const std::vector<SparseVec>& generators);

AlgebraPtr path_algebra(const Quiver& q, const Field& field);

struct Quotient {
  AlgebraPtr algebra;
  /// quotient-dim x ambient-dim, a surjective algebra map.
  Mat projection;
  /// Ambient basis indices whose images form the quotient basis.
  std::vector<std::size_t> kept;
  SparseVec project(const SparseVec& x) const;
};

Quotient quotient(const Ideal& ideal);

AlgebraPtr direct_product(const AlgebraPtr& a1, const AlgebraPtr& a2);
/// R' x S' inside R x S.
SubalgebraEmbedding direct_product(const SubalgebraEmbedding& e1, const SubalgebraEmbedding& e2);

/// Lower triangular ring ( R 0 / M S ) for an (S,R)-bimodule M. Basis order
/// is R, then M, then S.
AlgebraPtr triangular_ring(const AlgebraPtr& r, const AlgebraPtr& s, const Bimodule& m);
/// R' x S' as diagonal matrices inside a triangular ring built from R and S.
SubalgebraEmbedding triangular_diagonal(const AlgebraPtr& triangular, const SubalgebraEmbedding& r_sub,
                                        const SubalgebraEmbedding& s_sub);

/// Span of basis paths of length >= 1. Throws ValidationError without grading.
Ideal graded_radical(const AlgebraPtr& a);
/// Span of basis paths of length >= k.
Ideal graded_radical_power(const AlgebraPtr& a, std::size_t k);
/// {x : tr(L_{xy}) = 0 for all y}; characteristic zero only.
Ideal dickson_radical(const AlgebraPtr& a);
bool is_local(const AlgebraPtr& a);

nlohmann::ordered_json to_json(const Algebra& a);
AlgebraPtr algebra_from_json(const nlohmann::ordered_json& j);

}  // namespace pathdepth
