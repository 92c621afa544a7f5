#include <doctest.h>

#include <random>

#include "pathdepth/error.hpp"
#include "pathdepth/quiver.hpp"

using namespace pathdepth;

namespace {

// Number of paths from i to j by dynamic programming over path length.
std::size_t count_paths(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<std::size_t>> walk(n, std::vector<std::size_t>(n, 0));
  for (std::size_t v = 0; v < n; ++v) walk[v][v] = 1;
  std::size_t total = n;
  auto current = walk;
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<std::vector<std::size_t>> next(n, std::vector<std::size_t>(n, 0));
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        if (current[s][t] == 0) continue;
        for (const auto& a : q.arrows()) {
          if (a.source == t + 1) next[s][a.target - 1] += current[s][t];
        }
      }
    }
    for (const auto& row : next) {
      for (std::size_t c : row) total += c;
    }
    current = std::move(next);
  }
  return total;
}

Quiver random_acyclic(std::mt19937& rng) {
  std::size_t n = 1 + rng() % 6;
  std::vector<Arrow> arrows;
  std::size_t m = rng() % 8;
  for (std::size_t k = 0; k < m && n > 1; ++k) {
    std::size_t s = 2 + rng() % (n - 1);
    std::size_t t = 1 + rng() % (s - 1);
    // scramble vertex names so the numbering has work to do
    arrows.push_back({"x" + std::to_string(k), s, t});
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& a : arrows) {
    a.source = perm[a.source - 1];
    a.target = perm[a.target - 1];
  }
  return Quiver(n, arrows);
}

}  // namespace

TEST_CASE("parse the linear quiver on three vertices") {
  Quiver q = parse_quiver("# A3\nvertices 3\narrow a2 2 1\narrow a3 3 2\n");
  CHECK(q == linear_quiver(3));
  auto paths = enumerate_paths(q);
  REQUIRE(paths.size() == 6);
  std::vector<std::string> labels;
  for (const auto& p : paths) labels.push_back(path_label(q, p));
  CHECK(labels == std::vector<std::string>{"e1", "e2", "e3", "a2", "a3", "a3.a2"});
}

TEST_CASE("kronecker quiver") {
  Quiver q = kronecker_quiver();
  CHECK(q.vertex_count() == 2);
  CHECK(enumerate_paths(q).size() == 4);
  auto r = validate(q);
  CHECK(r.acyclic);
  CHECK(r.connected);
}

TEST_CASE("parse errors carry the line number") {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_quiver(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("vertices 2\narrow a 2\n") == 2);
  CHECK(line_of("vertices 2\n\nfrobnicate\n") == 3);
  CHECK(line_of("vertices x\n") == 1);
  CHECK(line_of("arrow a 2 1\n") == 1);
}

TEST_CASE("invalid quivers are rejected") {
  CHECK_THROWS_AS(Quiver(2, {{"a", 3, 1}}), ValidationError);
  CHECK_THROWS_AS(Quiver(2, {{"a", 2, 1}, {"a", 2, 1}}), ValidationError);
  CHECK_THROWS_AS(Quiver(2, {{"a", 0, 1}}), ValidationError);
}

TEST_CASE("cycles and loops are reported, not enumerated") {
  Quiver loop(1, {{"l", 1, 1}});
  CHECK_FALSE(validate(loop).acyclic);
  CHECK_THROWS_AS(enumerate_paths(loop), ValidationError);
  Quiver cyc(2, {{"a", 1, 2}, {"b", 2, 1}});
  CHECK_FALSE(validate(cyc).acyclic);
  CHECK_FALSE(validate(cyc).numbering);
}

TEST_CASE("disconnected quivers") {
  Quiver q(3, {{"a", 2, 1}});
  auto r = validate(q);
  CHECK(r.acyclic);
  CHECK_FALSE(r.connected);
}

TEST_CASE("serialization round trip and numbering on random quivers") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    Quiver q = random_acyclic(rng);
    CHECK(parse_quiver(serialize(q)) == q);

    auto r = validate(q);
    REQUIRE(r.acyclic);
    REQUIRE(r.numbering);
    const auto& num = r.numbering->number;
    std::vector<bool> seen(q.vertex_count() + 1, false);
    for (std::size_t v : num) {
      REQUIRE(v >= 1);
      REQUIRE(v <= q.vertex_count());
      CHECK_FALSE(seen[v]);
      seen[v] = true;
    }
    for (const auto& a : q.arrows()) CHECK(num[a.source - 1] > num[a.target - 1]);

    CHECK(enumerate_paths(q).size() == count_paths(q));
  }
}
