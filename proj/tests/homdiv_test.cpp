#include <doctest.h>

#include <random>

#include "pathdepth/bimodule.hpp"
#include "pathdepth/families.hpp"
#include "pathdepth/homdiv.hpp"

using namespace pathdepth;

namespace {

const Field kQ = Field::rationals();

}  // namespace

TEST_CASE("hom spaces between simple bimodules") {
  AlgebraPtr t2 = t_n(2, kQ);
  Bimodule k11 = simple_bimodule(t2, 1, 1);
  Bimodule k22 = simple_bimodule(t2, 2, 2);
  CHECK(hom_space(k11, k11).dim() == 1);
  CHECK(hom_space(k11, k22).dim() == 0);
  Bimodule sum = direct_sum({&k11, &k22, &k11});
  CHECK(hom_space(k11, sum).dim() == 2);
  CHECK(hom_space(sum, sum).dim() == 5);
}

TEST_CASE("generator and full basis systems agree") {
  for (std::size_t n = 2; n <= 3; ++n) {
    AlgebraPtr t = t_n(n, kQ);
    for (const SubalgebraEmbedding& e : {top_subalgebra(t), arrow_subalgebra(t), jordan_subalgebra(t)}) {
      TensorChain chain(e);
      for (Structure s : {Structure::AA, Structure::AB, Structure::BA, Structure::BB}) {
        auto c1 = chain.level_as(1, s);
        auto c2 = chain.level_as(2, s);
        HomSpace g = hom_space(*c2, *c1, GeneratorMode::Generators);
        HomSpace full = hom_space(*c2, *c1, GeneratorMode::FullBasis);
        CHECK(g.dim() == full.dim());
        for (const auto& m : g.basis) {
          auto coords = full.coordinates(m);
          // coordinates reproduce the map
          Mat back(c1->dim(), c2->dim());
          for (const auto& [k, v] : coords) back = axpy(back, v, full.basis[k], kQ);
          CHECK(back == m);
        }
      }
    }
  }
}

TEST_CASE("hom space maps commute with the actions") {
  AlgebraPtr t3 = t_n(3, kQ);
  TensorChain chain(jordan_subalgebra(t3));
  auto c1 = chain.level(1);
  auto c2 = chain.level(2);
  HomSpace h = hom_space(*c2, *c1);
  REQUIRE(h.dim() > 0);
  for (const auto& f : h.basis) {
    for (std::size_t i = 0; i < t3->dim(); ++i) {
      CHECK(multiply(f, c2->left_action(i), kQ) == multiply(c1->left_action(i), f, kQ));
      CHECK(multiply(f, c2->right_action(i), kQ) == multiply(c1->right_action(i), f, kQ));
    }
  }
}

TEST_CASE("endomorphism algebras") {
  AlgebraPtr t2 = t_n(2, kQ);
  Bimodule r = regular_bimodule(t2);
  AlgebraPtr end = end_algebra(r);
  // End of A as a bimodule is the centre of A, here the scalars
  CHECK(end->dim() == 1);
  CHECK(is_local(end));
  Bimodule k11 = simple_bimodule(t2, 1, 1);
  Bimodule k22 = simple_bimodule(t2, 2, 2);
  Bimodule sum = direct_sum({&k11, &k22});
  CHECK(end_algebra(sum)->dim() == 2);
  CHECK_FALSE(is_local(end_algebra(sum)));
}

TEST_CASE("add membership") {
  AlgebraPtr t2 = t_n(2, kQ);
  Bimodule k11 = simple_bimodule(t2, 1, 1);
  Bimodule k12 = simple_bimodule(t2, 1, 2);
  Bimodule k22 = simple_bimodule(t2, 2, 2);
  Bimodule s = direct_sum({&k11, &k22});
  CHECK(in_add(k11, s));
  CHECK(in_add(k22, s));
  CHECK_FALSE(in_add(k12, s));
  CHECK_FALSE(in_add(s, k11));
  CHECK(in_add(multiple(s, 3), s));
  CHECK(h_equivalent(multiple(k11, 2), k11));
  CHECK_FALSE(h_equivalent(s, k11));
  // the zero module lies in add of anything
  Bimodule zero(t2, t2, 0, std::vector<Mat>(t2->dim(), Mat(0, 0)), std::vector<Mat>(t2->dim(), Mat(0, 0)));
  CHECK(in_add(zero, k11));
  CHECK_FALSE(in_add(k11, zero));
  // the regular bimodule is indecomposable and not semisimple
  Bimodule r = regular_bimodule(t2);
  CHECK_FALSE(in_add(r, direct_sum({&k11, &k12, &k22})));
}

TEST_CASE("h-equivalence of multiples and base changes") {
  AlgebraPtr t3 = t_n(3, kQ);
  TensorChain chain(top_subalgebra(t3));
  auto c2 = chain.level(2);
  std::mt19937 rng(5);
  for (std::size_t copies = 1; copies <= 3; ++copies) {
    Bimodule m = multiple(*c2, copies);
    CHECK(h_equivalent(m, *c2));
    std::size_t d = m.dim();
    Mat lower = Mat::identity(d);
    for (std::size_t r = 1; r < d; ++r) {
      std::vector<Scalar> row(d, Scalar(0));
      row[r] = 1;
      row[rng() % r] = Scalar(static_cast<long>(rng() % 5) - 2);
      lower.set_row(r, SparseVec::from_dense(row));
    }
    CHECK(h_equivalent(change_basis(m, lower), *c2));
  }
}

TEST_CASE("add membership is preserved by restriction") {
  AlgebraPtr t3 = t_n(3, kQ);
  SubalgebraEmbedding e = top_subalgebra(t3);
  Bimodule r = regular_bimodule(t3);
  Bimodule r2 = multiple(r, 2);
  REQUIRE(in_add(r2, r));
  CHECK(in_add(restrict(r2, Side::Both, e), restrict(r, Side::Both, e)));
  CHECK(in_add(restrict(r2, Side::Left, e), restrict(r, Side::Left, e)));
}

TEST_CASE("add membership over F_2") {
  Field f2 = Field::prime(2);
  AlgebraPtr t2 = t_n(2, f2);
  Bimodule k11 = simple_bimodule(t2, 1, 1);
  Bimodule k12 = simple_bimodule(t2, 1, 2);
  Bimodule k22 = simple_bimodule(t2, 2, 2);
  Bimodule r = regular_bimodule(t2);
  Bimodule s = direct_sum({&k11, &k22, &r});
  CHECK(in_add(multiple(s, 4), s));
  CHECK(in_add(r, s));
  CHECK_FALSE(in_add(k12, s));
  CHECK_FALSE(in_add(s, direct_sum({&k11, &k22})));
  AlgebraPtr t3 = t_n(3, f2);
  TensorChain chain(arrow_subalgebra(t3));
  CHECK(in_add(*chain.level_as(3, Structure::AB), *chain.level_as(2, Structure::AB)));
  CHECK_FALSE(in_add(*chain.level_as(2, Structure::BB), *chain.level_as(1, Structure::BB)));
}
