#include <doctest.h>

#include "pathdepth/error.hpp"
#include "pathdepth/families.hpp"

using namespace pathdepth;

namespace {

const Field kQ = Field::rationals();

SparseVec elem(const Algebra& a, const std::string& label) { return a.basis_vector(*a.find_label(label)); }

}  // namespace

TEST_CASE("standard subalgebras of T_n") {
  for (std::size_t n = 2; n <= 5; ++n) {
    AlgebraPtr t = t_n(n, kQ);
    CHECK(top_subalgebra(t).sub()->dim() == n);
    CHECK(arrow_subalgebra(t).sub()->dim() == 1 + n * (n - 1) / 2);
    CHECK(jordan_subalgebra(t).sub()->dim() == n);
  }
}

TEST_CASE("the Jordan shift is nilpotent of index n") {
  for (std::size_t n = 2; n <= 6; ++n) {
    AlgebraPtr t = t_n(n, kQ);
    VecAccumulator acc(kQ);
    for (std::size_t i = 0; i < t->dim(); ++i) {
      if ((*t->grading())[i].length == 1) acc.add(i, Scalar(1));
    }
    SparseVec x = acc.finish(t->dim());
    SparseVec power = x;
    for (std::size_t k = 1; k < n - 1; ++k) power = t->multiply(power, x);
    CHECK_FALSE(power.is_zero());
    CHECK(t->multiply(power, x).is_zero());

    SubalgebraEmbedding j = jordan_subalgebra(n, kQ);
    CHECK(j.image_space().contains(x));
    CHECK(j.sub()->dim() == n);
    CHECK(is_local(j.sub()));
  }
}

TEST_CASE("augmentations are unital and multiplicative") {
  for (std::size_t n = 1; n <= 4; ++n) {
    AlgebraPtr t = t_n(n, kQ);
    auto rhos = augmentations(t);
    REQUIRE(rhos.size() == n);
    for (const auto& rho : rhos) {
      CHECK(rho(t->unit()) == 1);
      for (std::size_t x = 0; x < t->dim(); ++x) {
        for (std::size_t y = 0; y < t->dim(); ++y) {
          CHECK(rho(t->product(x, y)) == rho(t->basis_vector(x)) * rho(t->basis_vector(y)));
        }
      }
    }
    CHECK(rhos[0](elem(*t, "e1")) == 1);
    if (n >= 2) CHECK(rhos[0](elem(*t, "e2")) == 0);
  }
}

TEST_CASE("augmentations need one-dimensional corners") {
  // K x K with the unit as its only listed idempotent
  Algebra::Parts parts = direct_product(t_n(1, kQ), t_n(1, kQ))->parts();
  parts.vertex_idempotents = std::vector<SparseVec>{parts.unit};
  AlgebraPtr a = std::make_shared<const Algebra>(parts);
  CHECK_THROWS_AS(augmentations(a), ValidationError);
  CHECK_THROWS_AS(augmentations(jordan_subalgebra(3, kQ).sub()), ValidationError);
}

TEST_CASE("pullbacks and augmentation ideals") {
  AlgebraPtr t3 = t_n(3, kQ);
  SubalgebraEmbedding j = jordan_subalgebra(t3);
  auto rhos = augmentations(t3);
  for (const auto& rho : rhos) {
    Augmentation k = pullback(rho, j);
    CHECK(k(j.sub()->unit()) == 1);
    Subspace ideal = augmentation_ideal(j, rho);
    CHECK(ideal.dim() == j.sub()->dim() - 1);
  }
}

TEST_CASE("simple bimodules") {
  AlgebraPtr t2 = t_n(2, kQ);
  Bimodule k12 = simple_bimodule(t2, 1, 2);
  CHECK(k12.dim() == 1);
  // e1 acts as 1 on the left, e2 as 1 on the right
  CHECK(k12.left_action_of(elem(*t2, "e1")) == Mat::identity(1));
  CHECK(k12.right_action_of(elem(*t2, "e2")) == Mat::identity(1));
  CHECK(k12.left_action_of(elem(*t2, "a2")).is_zero());
}
