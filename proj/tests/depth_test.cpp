#include <doctest.h>

#include "pathdepth/depth.hpp"
#include "pathdepth/error.hpp"
#include "pathdepth/families.hpp"

using namespace pathdepth;

namespace {

const Field kQ = Field::rationals();

DepthValue exact(std::size_t v) { return {v, true}; }
DepthValue at_least(std::size_t v) { return {v, false}; }

}  // namespace

TEST_CASE("odd depth") {
  CHECK(odd_depth(exact(1)) == 1u);
  CHECK(odd_depth(exact(2)) == 3u);
  CHECK(odd_depth(exact(3)) == 3u);
  CHECK(odd_depth(exact(4)) == 5u);
  CHECK_FALSE(odd_depth(at_least(7)));
}

TEST_CASE("comparing depth values") {
  CHECK(depth_leq(exact(2), exact(3)) == true);
  CHECK(depth_leq(exact(4), exact(3)) == false);
  CHECK(depth_leq(exact(3), at_least(4)) == true);
  CHECK(depth_leq(at_least(5), exact(4)) == false);
  CHECK_FALSE(depth_leq(at_least(5), at_least(6)));
  CHECK_FALSE(depth_leq(exact(6), at_least(5)));
  CHECK(to_string(exact(4)) == "4");
  CHECK(to_string(at_least(7)) == ">= 7");
}

TEST_CASE("the whole algebra has depth one") {
  DepthReport r = min_depth(identity_embedding(t_n(3, kQ)), 6);
  CHECK(r.depth1);
  CHECK(r.min_depth == exact(1));
  CHECK(r.odd_depth == 1u);
  REQUIRE(r.h_depth);
  CHECK(*r.h_depth == exact(1));
}

TEST_CASE("top subalgebras of T_n have depth three") {
  for (std::size_t n = 2; n <= 4; ++n) {
    DepthReport r = min_depth(top_subalgebra(t_n(n, kQ)), 6);
    CHECK(r.min_depth == exact(3));
    CHECK(r.odd_depth == 3u);
    REQUIRE(r.h_depth);
    CHECK(*r.h_depth == exact(5));
  }
}

TEST_CASE("arrow subalgebras have depth four") {
  for (std::size_t n = 2; n <= 3; ++n) {
    DepthReport r = min_depth(arrow_subalgebra(t_n(n, kQ)), 6);
    CHECK(r.min_depth == exact(4));
    CHECK(r.odd_depth == 5u);
  }
}

TEST_CASE("unresolved runs report a lower bound") {
  DepthReport r = min_depth(arrow_subalgebra(t_n(2, kQ)), 3, false);
  CHECK(r.min_depth == at_least(4));
  CHECK_FALSE(r.odd_depth);
  CHECK_FALSE(r.h_depth);
}

TEST_CASE("engine flags obey the implications") {
  AlgebraPtr t3 = t_n(3, kQ);
  for (const SubalgebraEmbedding& e : {top_subalgebra(t3), arrow_subalgebra(t3), jordan_subalgebra(t3)}) {
    DepthEngine engine(e, {.obstruction_prefilter = false});
    for (std::size_t n = 1; n <= 2; ++n) {
      LevelFlags f = engine.level_flags(n);
      if (*f.aa) {
        CHECK(*f.ab);
        CHECK(*f.ba);
      }
      if (*f.ab || *f.ba) CHECK(*f.bb);
    }
    CHECK_NOTHROW(engine.check_invariants());
    auto obs = engine.obstruction();
    REQUIRE(obs);
    if (!obs->right_ok || !obs->left_ok) {
      LevelFlags first = engine.level_flags(1);
      CHECK_FALSE((*first.ab && *first.ba));
    }
  }
}

TEST_CASE("the depth two obstruction") {
  AlgebraPtr t2 = t_n(2, kQ);
  Depth2Obstruction top = depth2_obstruction(top_subalgebra(t2));
  CHECK_FALSE((top.right_ok && top.left_ok));
  CHECK_FALSE(top.witnesses.empty());
  Depth2Obstruction whole = depth2_obstruction(identity_embedding(t2));
  CHECK(whole.left_ok);
  CHECK(whole.right_ok);
}

TEST_CASE("report json") {
  DepthReport r = min_depth(top_subalgebra(t_n(2, kQ)), 5);
  auto j = to_json(r);
  CHECK(j["min_depth"] == 3);
  CHECK(j["odd_depth"] == 3);
  CHECK(j["h_depth"] == 5);
  CHECK(j["cutoff"] == 5);
  CHECK(to_json(min_depth(top_subalgebra(t_n(2, kQ)), 4))["h_depth"]["at_least"] == 5);
  CHECK(j["field"] == "q");
  CHECK(to_json(at_least(5))["at_least"] == 5);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys.front() == "min_depth");
}

TEST_CASE("quotient extensions") {
  AlgebraPtr t3 = t_n(3, kQ);
  SubalgebraEmbedding arrow = arrow_subalgebra(t3);
  Ideal sq = graded_radical_power(t3, 2);
  QuotientExtension qe = quotient_extension(arrow, sq);
  CHECK(qe.ambient.algebra->dim() == 5);
  CHECK(qe.embedding.sub()->dim() == 3);
  // an ideal not inside the subalgebra is refused
  CHECK_THROWS_AS(quotient_extension(top_subalgebra(t3), graded_radical(t3)), ValidationError);

  QuotientCheck c = quotient_depth_check(arrow, sq, 6);
  REQUIRE(c.monotone);
  CHECK(*c.monotone);
}

TEST_CASE("quotient chains are monotone") {
  AlgebraPtr t3 = t_n(3, kQ);
  SubalgebraEmbedding arrow = arrow_subalgebra(t3);
  ChainCheck c = quotient_chain_check(arrow, {graded_radical(t3), graded_radical_power(t3, 2)}, 6);
  CHECK(c.depths.size() == 3);
  REQUIRE(c.monotone);
  CHECK(*c.monotone);
}

TEST_CASE("results do not depend on the field for T2") {
  for (const Field& f : {Field::prime(2), Field::prime(3), Field::prime(7)}) {
    CHECK(min_depth(top_subalgebra(t_n(2, f)), 6).min_depth == exact(3));
    CHECK(min_depth(arrow_subalgebra(t_n(2, f)), 6).min_depth == exact(4));
  }
}
