#include <doctest.h>

#include "pathdepth/bimodule.hpp"
#include "pathdepth/error.hpp"
#include "pathdepth/families.hpp"
#include "pathdepth/homdiv.hpp"

using namespace pathdepth;

namespace {

const Field kQ = Field::rationals();

// Over the span of the vertex idempotents, dim A (x) A = sum_v dim(A e_v) dim(e_v A).
std::size_t tensor_square_over_top(const AlgebraPtr& a) {
  std::size_t total = 0;
  for (const auto& e : *a->vertex_idempotents()) {
    Mat right = a->right_multiplication(e);  // x -> x e
    Mat left = a->left_multiplication(e);    // x -> e x
    total += rank(right, a->field()) * rank(left, a->field());
  }
  return total;
}

}  // namespace

TEST_CASE("regular bimodule") {
  AlgebraPtr t3 = t_n(3, kQ);
  Bimodule r = regular_bimodule(t3);
  CHECK(r.dim() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(r.left_action(i) == t3->left_multiplication(t3->basis_vector(i)));
  }
}

TEST_CASE("bimodule validation rejects non-commuting actions") {
  AlgebraPtr t2 = t_n(2, kQ);
  Bimodule r = regular_bimodule(t2);
  std::vector<Mat> lefts = r.left_actions();
  std::swap(lefts[0], lefts[1]);
  CHECK_THROWS_AS(Bimodule(t2, t2, r.dim(), lefts, r.right_actions()), ValidationError);
}

TEST_CASE("tensor squares over the top subalgebra") {
  for (const Quiver& q : {linear_quiver(3), linear_quiver(4), kronecker_quiver()}) {
    AlgebraPtr a = path_algebra(q, kQ);
    TensorChain chain(top_subalgebra(a));
    CHECK(chain.dim(1) == a->dim());
    CHECK(chain.dim(2) == tensor_square_over_top(a));
  }
}

TEST_CASE("tensor over the whole algebra is the identity") {
  AlgebraPtr t3 = t_n(3, kQ);
  TensorChain chain(identity_embedding(t3));
  for (std::size_t n = 1; n <= 3; ++n) CHECK(chain.dim(n) == 6);
}

TEST_CASE("tensor projection and section") {
  AlgebraPtr t3 = t_n(3, kQ);
  Bimodule r = regular_bimodule(t3);
  SubalgebraEmbedding top = top_subalgebra(t3);
  Bimodule left = restrict(r, Side::Right, top);
  Bimodule right = restrict(r, Side::Left, top);
  TensorProduct tp = tensor_over(left, right);
  CHECK(multiply(tp.projection, tp.section, kQ) == Mat::identity(tp.module.dim()));
  // the relation x e (x) y = x (x) e y is killed by the projection
  for (std::size_t x = 0; x < 6; ++x) {
    for (std::size_t y = 0; y < 6; ++y) {
      for (const auto& e : top.images()) {
        SparseVec xe = t3->multiply(t3->basis_vector(x), e);
        SparseVec ey = t3->multiply(e, t3->basis_vector(y));
        VecAccumulator acc(kQ);
        for (const auto& [i, v] : xe) acc.add(i * 6 + y, v);
        for (const auto& [j, v] : ey) acc.add(x * 6 + j, -v);
        CHECK(apply(tp.projection, acc.finish(36), kQ).is_zero());
      }
    }
  }
}

TEST_CASE("sums, multiples and base change") {
  AlgebraPtr t2 = t_n(2, kQ);
  Bimodule k11 = simple_bimodule(t2, 1, 1);
  Bimodule k22 = simple_bimodule(t2, 2, 2);
  Bimodule s = direct_sum({&k11, &k22});
  CHECK(s.dim() == 2);
  CHECK(multiple(k11, 3).dim() == 3);
  Mat p = Mat::from_dense({{1, 1}, {0, 1}});
  Bimodule c = change_basis(s, p);
  CHECK(h_equivalent(c, s));
  CHECK_FALSE(c.left_action(0) == s.left_action(0));
}

TEST_CASE("corners of the regular bimodule") {
  AlgebraPtr t3 = t_n(3, kQ);
  Bimodule r = regular_bimodule(t3);
  const auto& idem = *t3->vertex_idempotents();
  // e_i A e_j is one-dimensional when i >= j, else zero
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(corner(r, idem[i], idem[j]).dim == (i >= j ? 1u : 0u));
  }
}

TEST_CASE("triangular ring with zero bimodule is the direct product") {
  AlgebraPtr r = t_n(2, kQ);
  AlgebraPtr s = t_n(1, kQ);
  Bimodule zero(s, r, 0, std::vector<Mat>(s->dim(), Mat(0, 0)), std::vector<Mat>(r->dim(), Mat(0, 0)));
  AlgebraPtr tri = triangular_ring(r, s, zero);
  AlgebraPtr prod = direct_product(r, s);
  REQUIRE(tri->dim() == prod->dim());
  for (std::size_t i = 0; i < tri->dim(); ++i) {
    for (std::size_t j = 0; j < tri->dim(); ++j) CHECK(tri->product(i, j) == prod->product(i, j));
  }
}

TEST_CASE("triangular ring of the Kronecker bimodule") {
  // K^2 as a K-K bimodule gives the Kronecker algebra
  AlgebraPtr k = t_n(1, kQ);
  Bimodule m = multiple(regular_bimodule(k), 2);
  AlgebraPtr tri = triangular_ring(k, k, m);
  CHECK(tri->dim() == 4);
  CHECK(rank(Mat::from_columns(4, {tri->unit()}), kQ) == 1);
  SubalgebraEmbedding diag = triangular_diagonal(tri, identity_embedding(k), identity_embedding(k));
  CHECK(diag.sub()->dim() == 2);
  TensorChain chain(diag);
  CHECK(chain.dim(2) == tensor_square_over_top(path_algebra(kronecker_quiver(), kQ)));
}

TEST_CASE("tensor chain levels") {
  AlgebraPtr t3 = t_n(3, kQ);
  TensorChain chain(top_subalgebra(t3));
  std::vector<std::size_t> dims;
  for (std::size_t n = 1; n <= 4; ++n) dims.push_back(chain.dim(n));
  CHECK(dims == std::vector<std::size_t>{6, 10, 15, 21});
  CHECK(chain.level_as(0, Structure::BB)->dim() == 3);
  CHECK_THROWS(chain.level_as(0, Structure::AA));
  CHECK(chain.level_as(2, Structure::AB)->right() == chain.embedding().sub());
  CHECK(chain.level_as(2, Structure::BA)->left() == chain.embedding().sub());
}
