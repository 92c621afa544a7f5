#include <doctest.h>

#include <random>

#include "pathdepth/algebra.hpp"
#include "pathdepth/error.hpp"
#include "pathdepth/families.hpp"

using namespace pathdepth;

namespace {

const Field kQ = Field::rationals();

SparseVec elem(const Algebra& a, const std::string& label) { return a.basis_vector(*a.find_label(label)); }

bool same_table(const Algebra& a, const Algebra& b) {
  if (a.dim() != b.dim() || a.labels() != b.labels()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (!(a.product(i, j) == b.product(i, j))) return false;
    }
  }
  return a.unit() == b.unit();
}

}  // namespace

TEST_CASE("T3 as a path algebra") {
  AlgebraPtr t3 = t_n(3, kQ);
  CHECK(t3->dim() == 6);
  CHECK(t3->multiply(elem(*t3, "a3"), elem(*t3, "a2")) == elem(*t3, "a3.a2"));
  CHECK(t3->multiply(elem(*t3, "a2"), elem(*t3, "a3")).is_zero());
  CHECK(t3->multiply(elem(*t3, "e3"), elem(*t3, "a3")) == elem(*t3, "a3"));
  CHECK(t3->multiply(elem(*t3, "a3"), elem(*t3, "e3")).is_zero());
  CHECK(t3->multiply(t3->unit(), elem(*t3, "a3.a2")) == elem(*t3, "a3.a2"));
  REQUIRE(t3->vertex_idempotents());
  CHECK(t3->vertex_idempotents()->size() == 3);
}

TEST_CASE("T_n dimension") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(t_n(n, kQ)->dim() == n * (n + 1) / 2);
}

TEST_CASE("non-associative tables are rejected") {
  AlgebraPtr t3 = t_n(3, kQ);
  Algebra::Parts parts = t3->parts();
  std::size_t e3 = *t3->find_label("e3");
  std::size_t a3 = *t3->find_label("a3");
  parts.mult[e3][a3] = scale(parts.mult[e3][a3], Scalar(-1), kQ);
  try {
    Algebra bad(parts);
    FAIL("accepted a corrupted table");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("associat") != std::string::npos);
  }
}

TEST_CASE("unit and label checks") {
  Algebra::Parts parts = t_n(2, kQ)->parts();
  Algebra::Parts no_unit = parts;
  no_unit.unit = SparseVec::unit(3, 0);
  CHECK_THROWS_AS(Algebra{no_unit}, ValidationError);
  Algebra::Parts dup = parts;
  dup.labels[1] = dup.labels[0];
  CHECK_THROWS_AS(Algebra{dup}, ValidationError);
}

TEST_CASE("generators generate") {
  for (std::size_t n = 1; n <= 5; ++n) {
    AlgebraPtr t = t_n(n, kQ);
    CHECK(generated_subalgebra(*t, t->generators()).dim() == t->dim());
    for (const auto& g : t->generators()) CHECK_FALSE(g == t->unit());
  }
}

TEST_CASE("ideals") {
  AlgebraPtr t3 = t_n(3, kQ);
  CHECK_THROWS_AS(Ideal(t3, {elem(*t3, "e1")}), ValidationError);
  Ideal rad = graded_radical(t3);
  CHECK(rad.dim() == 3);
  CHECK(rad.is_nilpotent());
  Ideal rad2 = graded_radical_power(t3, 2);
  CHECK(rad2.dim() == 1);
  CHECK(Ideal(t3, {elem(*t3, "a3.a2")}).dim() == 1);
  std::vector<SparseVec> all;
  for (std::size_t i = 0; i < t3->dim(); ++i) all.push_back(t3->basis_vector(i));
  CHECK_FALSE(Ideal(t3, all).is_nilpotent());
}

TEST_CASE("graded and Dickson radicals agree") {
  for (const Quiver& q : {linear_quiver(1), linear_quiver(4), kronecker_quiver(),
                          Quiver(4, {{"a", 2, 1}, {"b", 3, 2}, {"c", 4, 2}})}) {
    AlgebraPtr a = path_algebra(q, kQ);
    CHECK(graded_radical(a).space().contains(dickson_radical(a).space()));
    CHECK(dickson_radical(a).space().contains(graded_radical(a).space()));
  }
}

TEST_CASE("quotients") {
  AlgebraPtr t3 = t_n(3, kQ);
  Quotient q = quotient(graded_radical_power(t3, 2));
  CHECK(q.algebra->dim() == 5);
  CHECK(q.project(t3->multiply(elem(*t3, "a3"), elem(*t3, "a2"))).is_zero());
  Quotient top = quotient(graded_radical(t3));
  CHECK(top.algebra->dim() == 3);
  std::vector<SparseVec> all;
  for (std::size_t i = 0; i < t3->dim(); ++i) all.push_back(t3->basis_vector(i));
  CHECK_THROWS_AS(quotient(Ideal(t3, all)), ValidationError);
}

TEST_CASE("quotient dimensions add up") {
  for (std::size_t n = 2; n <= 5; ++n) {
    AlgebraPtr t = t_n(n, kQ);
    for (std::size_t k = 1; k < n; ++k) {
      Ideal i = graded_radical_power(t, k);
      Quotient q = quotient(i);
      CHECK(q.algebra->dim() + i.dim() == t->dim());
      // the projection is multiplicative on basis pairs
      for (std::size_t x = 0; x < t->dim(); ++x) {
        for (std::size_t y = 0; y < t->dim(); ++y) {
          CHECK(q.project(t->product(x, y)) ==
                q.algebra->multiply(q.project(t->basis_vector(x)), q.project(t->basis_vector(y))));
        }
      }
    }
  }
}

TEST_CASE("top subalgebra is isomorphic to A modulo its radical") {
  for (const Quiver& q : {linear_quiver(4), kronecker_quiver()}) {
    AlgebraPtr a = path_algebra(q, kQ);
    SubalgebraEmbedding top = top_subalgebra(a);
    Quotient qa = quotient(graded_radical(a));
    REQUIRE(top.sub()->dim() == qa.algebra->dim());
    // pi restricted to the top subalgebra is an isomorphism
    std::vector<SparseVec> cols;
    for (const auto& img : top.images()) cols.push_back(qa.project(img));
    Mat m = Mat::from_columns(qa.algebra->dim(), cols);
    CHECK(rank(m, kQ) == top.sub()->dim());
  }
}

TEST_CASE("embeddings") {
  AlgebraPtr t3 = t_n(3, kQ);
  AlgebraPtr t1 = t_n(1, kQ);
  CHECK_THROWS_AS(SubalgebraEmbedding(t3, t1, {elem(*t3, "e1")}), ValidationError);
  SubalgebraEmbedding unit(t3, t1, {t3->unit()});
  CHECK(unit.preimage(t3->unit()));
  CHECK_FALSE(unit.preimage(elem(*t3, "e1")));
  SubalgebraEmbedding id = identity_embedding(t3);
  CHECK(id.sub()->dim() == 6);
}

TEST_CASE("subalgebra closure labels") {
  AlgebraPtr t3 = t_n(3, kQ);
  SubalgebraEmbedding top = top_subalgebra(t3);
  CHECK(top.sub()->labels() == std::vector<std::string>{"e1", "e2", "e3"});
  REQUIRE(top.sub()->vertex_idempotents());
  SubalgebraEmbedding arrow = arrow_subalgebra(t3);
  CHECK(arrow.sub()->dim() == 4);
  CHECK(is_local(arrow.sub()));
  CHECK_FALSE(is_local(t3));
}

TEST_CASE("direct products") {
  AlgebraPtr a = direct_product(t_n(2, kQ), t_n(1, kQ));
  CHECK(a->dim() == 4);
  CHECK(a->block_idempotents().size() == 2);
  CHECK(a->multiply(a->block_idempotents()[0], a->block_idempotents()[1]).is_zero());
  SubalgebraEmbedding e = direct_product(top_subalgebra(t_n(2, kQ)), identity_embedding(t_n(1, kQ)));
  CHECK(e.sub()->dim() == 3);
}

TEST_CASE("json round trip") {
  for (AlgebraPtr a : {t_n(3, kQ), path_algebra(kronecker_quiver(), Field::prime(3)),
                       direct_product(t_n(2, kQ), t_n(2, kQ))}) {
    auto j = to_json(*a);
    AlgebraPtr b = algebra_from_json(j);
    CHECK(same_table(*a, *b));
    CHECK(b->field() == a->field());
    CHECK(to_json(*b) == j);
  }
  auto j = to_json(*t_n(2, kQ));
  j["format"] = "something-else";
  CHECK_THROWS(algebra_from_json(j));
}

TEST_CASE("formatting elements") {
  AlgebraPtr t2 = t_n(2, kQ);
  SparseVec x = sub(scale(elem(*t2, "a2"), Scalar(2), kQ), elem(*t2, "e1"), kQ);
  CHECK(t2->format(x) == "-e1+2*a2");
  CHECK(t2->format(SparseVec(3)) == "0");
}
