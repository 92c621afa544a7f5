#include "pathdepth/suite.hpp"

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "pathdepth/algebra.hpp"
#include "pathdepth/bimodule.hpp"
#include "pathdepth/depth.hpp"
#include "pathdepth/error.hpp"
#include "pathdepth/families.hpp"
#include "pathdepth/homdiv.hpp"

namespace pathdepth {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const Field kQ = Field::rationals();

struct NamedQuiver {
  std::string name;
  Quiver quiver;
};

Quiver tree_quiver() { return Quiver(4, {{"a", 2, 1}, {"b", 3, 2}, {"c", 4, 2}}); }

std::vector<NamedQuiver> top_quivers() {
  return {{"linear2", linear_quiver(2)},
          {"linear3", linear_quiver(3)},
          {"linear4", linear_quiver(4)},
          {"kronecker", kronecker_quiver()},
          {"tree4", tree_quiver()}};
}

// Collects per-case outcomes into one verdict.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) {
      passed_ = false;
      failures_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool passed() const { return passed_; }
  std::string detail() const {
    std::string out;
    for (const auto& n : notes_) out += (out.empty() ? "" : " ") + n;
    for (const auto& f : failures_) out += (out.empty() ? "FAILED " : "; FAILED ") + f;
    return out;
  }

 private:
  bool passed_ = true;
  std::vector<std::string> notes_;
  std::vector<std::string> failures_;
};

std::string secs(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << s << "s";
  return out.str();
}

// ---------------------------------------------------------------------------
// 0: structure-constant invariants and the negative control

AlgebraPtr corrupted_t3() {
  AlgebraPtr t3 = t_n(3, kQ);
  Algebra::Parts parts = t3->parts();
  std::size_t e3 = *t3->find_label("e3");
  std::size_t a3 = *t3->find_label("a3");
  parts.mult[e3][a3] = scale(parts.mult[e3][a3], Scalar(-1), kQ);
  return std::make_shared<const Algebra>(std::move(parts));
}

void criterion_invariants(const SuiteOptions& opt, Tally& t) {
  std::size_t built = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    t_n(n, kQ);
    ++built;
  }
  for (const auto& q : top_quivers()) {
    path_algebra(q.quiver, kQ);
    ++built;
  }
  direct_product(t_n(2, kQ), t_n(3, kQ));
  ++built;
  if (opt.inject_sign_fault) {
    try {
      corrupted_t3();
      t.check(false, "corrupted T3 table was accepted");
    } catch (const ValidationError& ex) {
      t.check(false, std::string("T3 (sign fault injected): ") + ex.what());
    }
    return;
  }
  t.note(std::to_string(built) + " algebras validated;");
  try {
    corrupted_t3();
    t.check(false, "negative control: a sign-flipped T3 table was accepted");
  } catch (const ValidationError& ex) {
    std::string what = ex.what();
    t.check(what.find("associative") != std::string::npos, "negative control rejected for the wrong reason: " + what);
    t.note("sign-flipped table rejected (" + what + ")");
  }
}

// ---------------------------------------------------------------------------
// 1: top subalgebras have depth 3

void criterion_top(Tally& t, double limit) {
  for (const auto& q : top_quivers()) {
    auto t0 = Clock::now();
    DepthEngine engine(top_subalgebra(path_algebra(q.quiver, kQ)));
    DepthValue d = engine.min_depth(6, false).min_depth;
    double s = since(t0);
    t.note(q.name + "=" + to_string(d) + "(" + secs(s) + ")");
    t.check(d == DepthValue{3, true}, q.name + " depth " + to_string(d));
    t.check(s < limit, q.name + " over time limit");
  }
}

// ---------------------------------------------------------------------------
// 2: arrow subalgebras have depth 4

void criterion_arrow(Tally& t, double limit) {
  std::vector<NamedQuiver> cases = {{"linear2", linear_quiver(2)}, {"linear3", linear_quiver(3)},
                                    {"kronecker", kronecker_quiver()}};
  for (const auto& q : cases) {
    auto t0 = Clock::now();
    DepthEngine engine(arrow_subalgebra(path_algebra(q.quiver, kQ)));
    DepthValue d = engine.min_depth(6, false).min_depth;
    bool bb1 = engine.flag(1, Structure::BB);
    bool ab2 = engine.flag(2, Structure::AB);
    bool ba2 = engine.flag(2, Structure::BA);
    double s = since(t0);
    t.note(q.name + "=" + to_string(d) + "(" + secs(s) + ")");
    t.check(d == DepthValue{4, true}, q.name + " depth " + to_string(d));
    t.check(!bb1, q.name + " BB(1) true");
    t.check(ab2 && ba2, q.name + " AB(2)/BA(2) not both true");
    t.check(s < limit, q.name + " over time limit");
  }
}

// ---------------------------------------------------------------------------
// 3: diagonal and constant-diagonal subalgebras of T_n

void criterion_families(Tally& t) {
  for (std::size_t n = 2; n <= 5; ++n) {
    DepthValue d = min_depth(top_subalgebra(t_n(n, kQ)), 6, false).min_depth;
    t.note("D" + std::to_string(n) + "=" + to_string(d));
    t.check(d == DepthValue{3, true}, "D" + std::to_string(n) + " depth " + to_string(d));
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    DepthValue d = min_depth(arrow_subalgebra(t_n(n, kQ)), 6, false).min_depth;
    t.note("U" + std::to_string(n) + "=" + to_string(d));
    t.check(d == DepthValue{4, true}, "U" + std::to_string(n) + " depth " + to_string(d));
  }
}

// ---------------------------------------------------------------------------
// 4: Jordan subalgebras

void criterion_jordan(Tally& t) {
  DepthValue j2 = min_depth(jordan_subalgebra(2, kQ), 6, false).min_depth;
  t.note("J2=" + to_string(j2));
  t.check(j2 == DepthValue{4, true}, "J2 depth " + to_string(j2));

  DepthEngine engine(jordan_subalgebra(3, kQ));
  DepthValue j3 = engine.min_depth(5, false).min_depth;
  t.note("J3(cutoff 5)=" + to_string(j3));
  t.check(j3 == DepthValue{6, false}, "J3 with cutoff 5 reports " + to_string(j3) + ", expected >= 6");
  bool cube = in_add(*engine.chain().level_as(3, Structure::BB), *engine.chain().level_as(2, Structure::BB));
  t.note(std::string("C3 in add(C2) as B-B: ") + (cube ? "true" : "false"));
  t.check(!cube, "C3 lies in add(C2) as B-B bimodules");
}

// ---------------------------------------------------------------------------
// 5: tensor square of the arrow subalgebra

void criterion_tensor_square(Tally& t) {
  for (std::size_t n = 2; n <= 3; ++n) {
    SubalgebraEmbedding e = arrow_subalgebra(t_n(n, kQ));
    TensorChain chain(e);
    const std::size_t extra = n * (n - 1);
    std::size_t dim_a = e.ambient()->dim();
    std::size_t dim_c2 = chain.dim(2);
    t.check(dim_c2 == dim_a + extra, "T" + std::to_string(n) + " dim C2 = " + std::to_string(dim_c2));
    Augmentation eps = pullback(augmentations(e.ambient()).front(), e);
    Bimodule k_eps = simple_bimodule(eps, eps);
    Bimodule copies = multiple(k_eps, extra);
    BimodulePtr a_bb = chain.level_as(1, Structure::BB);
    Bimodule rhs = direct_sum({a_bb.get(), &copies});
    bool equiv = h_equivalent(*chain.level_as(2, Structure::BB), rhs);
    t.note("T" + std::to_string(n) + ": dim C2=" + std::to_string(dim_c2) + " ~A+" + std::to_string(extra) +
           "K_eps:" + (equiv ? "yes" : "no"));
    t.check(equiv, "T" + std::to_string(n) + " C2 not H-equivalent to A + n(n-1) K_eps");
  }
}

// ---------------------------------------------------------------------------
// 6: corners of C_2 for top subalgebras

std::vector<std::vector<std::size_t>> path_counts(const Quiver& q) {
  const std::size_t v = q.vertex_count();
  std::vector<std::vector<std::size_t>> adj(v, std::vector<std::size_t>(v, 0));
  for (const auto& a : q.arrows()) ++adj[a.source - 1][a.target - 1];
  std::vector<std::vector<std::size_t>> total(v, std::vector<std::size_t>(v, 0));
  std::vector<std::vector<std::size_t>> power(v, std::vector<std::size_t>(v, 0));
  for (std::size_t i = 0; i < v; ++i) power[i][i] = 1;
  for (std::size_t k = 0; k <= v; ++k) {
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = 0; j < v; ++j) total[i][j] += power[i][j];
    }
    std::vector<std::vector<std::size_t>> next(v, std::vector<std::size_t>(v, 0));
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t m = 0; m < v; ++m) {
        for (std::size_t j = 0; j < v; ++j) next[i][j] += power[i][m] * adj[m][j];
      }
    }
    power = std::move(next);
  }
  return total;
}

void criterion_corners(Tally& t) {
  for (const auto& q : top_quivers()) {
    SubalgebraEmbedding e = top_subalgebra(path_algebra(q.quiver, kQ));
    TensorChain chain(e);
    BimodulePtr c2 = chain.level(2);
    auto n = path_counts(q.quiver);
    const auto& idem = *e.ambient()->vertex_idempotents();
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < idem.size(); ++i) {
      for (std::size_t j = 0; j < idem.size(); ++j) {
        std::size_t m = 0;
        for (std::size_t k = 0; k < idem.size(); ++k) m += n[i][k] * n[k][j];
        std::size_t got = corner(*c2, idem[i], idem[j]).dim;
        t.check(got == m, q.name + " corner (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                              std::to_string(got) + ", expected " + std::to_string(m));
        ++pairs;
      }
    }
    t.note(q.name + ":" + std::to_string(pairs) + " corners");
  }
}

// ---------------------------------------------------------------------------
// 7: subalgebra of a direct product

void criterion_product(Tally& t) {
  SubalgebraEmbedding r = top_subalgebra(t_n(2, kQ));
  SubalgebraEmbedding s = arrow_subalgebra(t_n(3, kQ));
  DepthValue dr = min_depth(r, 6, false).min_depth;
  DepthValue ds = min_depth(s, 6, false).min_depth;
  DepthValue dp = min_depth(direct_product(r, s), 6, false).min_depth;
  t.note("d(D2,T2)=" + to_string(dr) + " d(U3,T3)=" + to_string(ds) + " product=" + to_string(dp));
  t.check(dr == DepthValue{3, true} && ds == DepthValue{4, true}, "component depths differ from 3 and 4");
  t.check(dp == DepthValue{4, true}, "product depth " + to_string(dp));
  t.check(dp.exact && dr.exact && ds.exact && dp.value == std::max(dr.value, ds.value),
          "product depth is not the maximum of the components");
}

// ---------------------------------------------------------------------------
// 8: corners of C_n for a triangular ring

void criterion_triangular(Tally& t) {
  AlgebraPtr k = t_n(1, kQ);
  Bimodule m(k, k, 2, {Mat::identity(2)}, {Mat::identity(2)});
  AlgebraPtr a = triangular_ring(k, k, m);
  SubalgebraEmbedding r_sub = identity_embedding(k);
  SubalgebraEmbedding s_sub = identity_embedding(k);
  SubalgebraEmbedding e = triangular_diagonal(a, r_sub, s_sub);
  t.check(a->dim() == 4, "triangular ring has dimension " + std::to_string(a->dim()));

  TensorChain chain(e);
  TensorChain chain_r(r_sub);
  TensorChain chain_s(s_sub);
  Bimodule m_sub = restrict(restrict(m, Side::Left, s_sub), Side::Right, r_sub);
  const SparseVec& e1 = a->block_idempotents()[0];
  const SparseVec& e2 = a->block_idempotents()[1];
  for (std::size_t n = 1; n <= 3; ++n) {
    BimodulePtr c = chain.level(n);
    std::size_t expected = 0;
    for (std::size_t r = 0; r < n; ++r) {
      Bimodule left = tensor_over(*chain_s.level_as(r, Structure::BB), m_sub).module;
      expected += tensor_over(left, *chain_r.level_as(n - 1 - r, Structure::BB)).module.dim();
    }
    std::size_t c21 = corner(*c, e2, e1).dim;
    std::size_t c12 = corner(*c, e1, e2).dim;
    std::size_t c11 = corner(*c, e1, e1).dim;
    std::size_t c22 = corner(*c, e2, e2).dim;
    std::string tag = "n=" + std::to_string(n);
    t.note(tag + ":e2Ce1=" + std::to_string(c21) + "/" + std::to_string(expected));
    t.check(c21 == expected, tag + " e2 C e1 has dim " + std::to_string(c21) + ", expected " + std::to_string(expected));
    t.check(c12 == 0, tag + " e1 C e2 is nonzero");
    t.check(c11 == chain_r.dim(n), tag + " e1 C e1 differs from C_n(R,R')");
    t.check(c22 == chain_s.dim(n), tag + " e2 C e2 differs from C_n(S,S')");
  }
}

// ---------------------------------------------------------------------------
// 9: quotients do not increase depth

void criterion_quotient(Tally& t) {
  for (auto [n, power] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {4, 3}}) {
    SubalgebraEmbedding e = arrow_subalgebra(t_n(n, kQ));
    Ideal ideal = graded_radical_power(e.ambient(), power);
    QuotientCheck c = quotient_depth_check(e, ideal, 6);
    std::string name = "T" + std::to_string(n) + "/rad^" + std::to_string(power);
    t.note(name + ": " + to_string(c.quotient) + "<=" + to_string(c.original));
    t.check(c.monotone == true, name + " quotient depth not bounded by the original");
  }
}

// ---------------------------------------------------------------------------
// 10: locality of End(_B A_B)

void criterion_locality(Tally& t) {
  for (std::size_t n = 2; n <= 4; ++n) {
    TensorChain arrow(arrow_subalgebra(t_n(n, kQ)));
    TensorChain top(top_subalgebra(t_n(n, kQ)));
    bool arrow_local = is_local(end_algebra(*arrow.level_as(1, Structure::BB)));
    bool top_local = is_local(end_algebra(*top.level_as(1, Structure::BB)));
    t.note("T" + std::to_string(n) + ":U " + (arrow_local ? "local" : "non-local") + ", D " +
           (top_local ? "local" : "non-local"));
    t.check(arrow_local, "T" + std::to_string(n) + " arrow subalgebra: End not local");
    t.check(!top_local, "T" + std::to_string(n) + " diagonal subalgebra: End local");
  }
}

// ---------------------------------------------------------------------------
// 11: property checks

// A e_i (left module) or e_j A (right module) as a bimodule over A and K.
Bimodule one_sided_projective(const AlgebraPtr& a, const AlgebraPtr& k, const SparseVec& idem, bool left) {
  std::vector<std::size_t> basis;
  for (std::size_t p = 0; p < a->dim(); ++p) {
    SparseVec v = a->basis_vector(p);
    if ((left ? a->multiply(v, idem) : a->multiply(idem, v)) == v) basis.push_back(p);
  }
  const std::size_t d = basis.size();
  std::vector<long> position(a->dim(), -1);
  for (std::size_t i = 0; i < d; ++i) position[basis[i]] = static_cast<long>(i);
  std::vector<Mat> actions;
  for (std::size_t x = 0; x < a->dim(); ++x) {
    std::vector<SparseVec> cols;
    for (std::size_t p : basis) {
      SparseVec img = left ? a->product(x, p) : a->product(p, x);
      SparseVec col(d);
      for (const auto& e : img) col.append(static_cast<std::size_t>(position[e.index]), e.value);
      cols.push_back(std::move(col));
    }
    actions.push_back(Mat::from_columns(d, cols));
  }
  std::vector<Mat> trivial = {Mat::identity(d)};
  if (left) return Bimodule(a, k, d, std::move(actions), std::move(trivial));
  return Bimodule(k, a, d, std::move(trivial), std::move(actions));
}

struct RandomBimodule {
  Bimodule module;
  std::vector<std::size_t> multiplicity;
  bool supported_in(const RandomBimodule& other) const {
    for (std::size_t i = 0; i < multiplicity.size(); ++i) {
      if (multiplicity[i] > 0 && other.multiplicity[i] == 0) return false;
    }
    return true;
  }
};

Mat random_unimodular(std::size_t d, std::mt19937& rng) {
  auto entry = [&]() { return Scalar(static_cast<long>(rng() % 3) - 1); };
  std::vector<std::vector<Scalar>> lower(d, std::vector<Scalar>(d));
  std::vector<std::vector<Scalar>> upper(d, std::vector<Scalar>(d));
  for (std::size_t i = 0; i < d; ++i) {
    lower[i][i] = 1;
    upper[i][i] = 1;
    for (std::size_t j = 0; j < i; ++j) {
      lower[i][j] = entry();
      upper[j][i] = entry();
    }
  }
  return multiply(Mat::from_dense(lower), Mat::from_dense(upper), kQ);
}

std::vector<RandomBimodule> random_bimodules(std::size_t count, std::uint32_t seed) {
  AlgebraPtr a = t_n(2, kQ);
  AlgebraPtr k = t_n(1, kQ);
  const auto& idem = *a->vertex_idempotents();
  auto projective = [&](std::size_t i, std::size_t j) {
    return tensor_over(one_sided_projective(a, k, idem[i - 1], true), one_sided_projective(a, k, idem[j - 1], false))
        .module;
  };
  // Pairwise non-isomorphic indecomposable T2-bimodules.
  std::vector<Bimodule> pool = {simple_bimodule(a, 1, 1), simple_bimodule(a, 1, 2), simple_bimodule(a, 2, 1),
                                simple_bimodule(a, 2, 2), projective(1, 1),        projective(1, 2),
                                projective(2, 2),         regular_bimodule(a)};
  std::mt19937 rng(seed);
  std::vector<RandomBimodule> out;
  while (out.size() < count) {
    std::vector<std::size_t> mult(pool.size(), 0);
    std::vector<const Bimodule*> parts;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      std::uint32_t roll = rng() % 10;
      mult[i] = roll < 6 ? 0 : (roll < 9 ? 1 : 2);
      for (std::size_t c = 0; c < mult[i]; ++c) parts.push_back(&pool[i]);
    }
    if (parts.empty()) continue;
    Bimodule sum = direct_sum(parts);
    if (sum.dim() > 10) continue;
    out.push_back({change_basis(sum, random_unimodular(sum.dim(), rng)), std::move(mult)});
  }
  return out;
}

struct FamilyPair {
  std::string name;
  SubalgebraEmbedding embedding;
};

std::vector<FamilyPair> family_pairs() {
  std::vector<FamilyPair> out;
  for (std::size_t n = 2; n <= 3; ++n) {
    AlgebraPtr a = t_n(n, kQ);
    out.push_back({"D" + std::to_string(n), top_subalgebra(a)});
    out.push_back({"U" + std::to_string(n), arrow_subalgebra(a)});
    out.push_back({"J" + std::to_string(n), jordan_subalgebra(a)});
  }
  out.push_back({"D4", top_subalgebra(t_n(4, kQ))});
  for (const auto& q : {NamedQuiver{"kronecker", kronecker_quiver()}, NamedQuiver{"tree4", tree_quiver()}}) {
    AlgebraPtr a = path_algebra(q.quiver, kQ);
    out.push_back({q.name + "/top", top_subalgebra(a)});
    out.push_back({q.name + "/arrow", arrow_subalgebra(a)});
  }
  return out;
}

void criterion_properties(Tally& t) {
  // in_add on random bimodules against the known summand supports.
  std::vector<RandomBimodule> sample = random_bimodules(50, 20120501u);
  const std::size_t m = sample.size();
  std::size_t checks = 0;
  for (std::size_t i = 0; i < m; ++i) {
    t.check(in_add(sample[i].module, sample[i].module), "reflexivity fails on sample " + std::to_string(i));
    ++checks;
    std::size_t j = (7 * i + 3) % m;
    bool got = in_add(sample[i].module, sample[j].module);
    t.check(got == sample[i].supported_in(sample[j]),
            "in_add(" + std::to_string(i) + "," + std::to_string(j) + ") disagrees with summand supports");
    ++checks;
  }
  for (std::size_t i = 0; i + 2 < m; ++i) {
    const Bimodule& x = sample[i].module;
    const Bimodule& y = sample[i + 1].module;
    const Bimodule& z = sample[(5 * i + 2) % m].module;
    if (in_add(x, y) && in_add(y, z)) {
      t.check(in_add(x, z), "transitivity fails at " + std::to_string(i));
      ++checks;
    }
  }
  for (std::size_t i = 0; i + 1 < m; i += 2) {
    const Bimodule& x = sample[i].module;
    const Bimodule& y = sample[i + 1].module;
    const Bimodule& target = sample[(3 * i + 1) % m].module;
    Bimodule both = direct_sum({&x, &y});
    t.check(in_add(both, target) == (in_add(x, target) && in_add(y, target)),
            "additivity fails at " + std::to_string(i));
    ++checks;
  }
  t.note(std::to_string(m) + " random bimodules, " + std::to_string(checks) + " in_add checks;");

  // Full flag tables and the obstruction cross-check.
  std::size_t runs = 0;
  for (const auto& pair : family_pairs()) {
    DepthEngine::Options options;
    options.obstruction_prefilter = false;
    DepthEngine engine(pair.embedding, options);
    engine.level_flags(1);
    engine.level_flags(2);
    engine.check_invariants();
    const auto& obs = engine.obstruction();
    t.check(obs.has_value(), pair.name + ": no augmentations");
    if (obs) {
      if (!obs->right_ok) t.check(!engine.flag(1, Structure::AB), pair.name + ": AB(1) true despite obstruction");
      if (!obs->left_ok) t.check(!engine.flag(1, Structure::BA), pair.name + ": BA(1) true despite obstruction");
    }
    ++runs;
  }
  t.note(std::to_string(runs) + " flag tables;");

  // Graded radical against the trace-form radical.
  std::vector<NamedQuiver> quivers = top_quivers();
  quivers.push_back({"linear1", linear_quiver(1)});
  quivers.push_back({"linear5", linear_quiver(5)});
  quivers.push_back({"zigzag3", Quiver(3, {{"a", 2, 1}, {"b", 2, 3}})});
  quivers.push_back({"star4", Quiver(4, {{"a", 2, 1}, {"b", 3, 1}, {"c", 4, 1}})});
  std::size_t radicals = 0;
  for (const auto& q : quivers) {
    AlgebraPtr a = path_algebra(q.quiver, kQ);
    if (a->dim() > 15) continue;
    Ideal graded = graded_radical(a);
    Ideal trace = dickson_radical(a);
    t.check(graded.basis() == trace.basis(), q.name + ": graded and trace-form radicals differ");
    ++radicals;
  }
  t.note(std::to_string(radicals) + " radical comparisons");
}

struct Criterion {
  int id;
  std::string tag;
  std::string name;
  double limit;
  bool per_case;
  std::function<void(Tally&)> body;
};

std::vector<Criterion> criteria(const SuiteOptions& opt) {
  return {
      {0, "invariants", "structure constants pass associativity and unit checks; corrupted table rejected", 60, false,
       [&opt](Tally& t) { criterion_invariants(opt, t); }},
      {1, "top", "top subalgebra has depth 3 on five connected quivers", 10, true,
       [](Tally& t) { criterion_top(t, 10); }},
      {2, "arrow", "arrow subalgebra has depth 4; BB(1) false, AB(2) and BA(2) true", 60, true,
       [](Tally& t) { criterion_arrow(t, 60); }},
      {3, "families", "d(D_n,T_n)=3 for n=2..5 and d(U_n,T_n)=4 for n=2..4", 300, false, criterion_families},
      {4, "jordan", "d(J2,T2)=4; J3 in T3 reports >= 6 at cutoff 5; C3 not in add(C2) as B-B", 600, false,
       criterion_jordan},
      {5, "arrow", "A(x)_B A ~ A + n(n-1) K_eps as B-B for U_n in T_n, n=2,3", 0, false, criterion_tensor_square},
      {6, "top", "corners of C_2 match m_ij = sum_k n_ik n_kj", 0, false, criterion_corners},
      {7, "product", "d(D2 x U3, T2 x T3) = max(3,4) = 4", 300, false, criterion_product},
      {8, "triangular", "corner dimensions of C_n for the Kronecker triangular ring, n=1..3", 0, false,
       criterion_triangular},
      {9, "quotient", "quotient depth bounded by original for T3/rad^2 and T4/rad^3", 600, false,
       criterion_quotient},
      {10, "locality", "End(_B A_B) local for U_n, non-local for D_n, n=2..4", 0, false, criterion_locality},
      {11, "properties", "in_add laws, flag implications, obstruction agreement, radical agreement", 0, false,
       criterion_properties},
  };
}

}  // namespace

std::vector<std::string> suite_tags() {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& c : criteria(SuiteOptions{})) {
    if (seen.insert(c.tag).second) out.push_back(c.tag);
  }
  return out;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options) {
  std::vector<CriterionResult> results;
  for (const auto& c : criteria(options)) {
    if (options.only && *options.only != c.tag && *options.only != std::to_string(c.id)) continue;
    CriterionResult r;
    r.id = c.id;
    r.tag = c.tag;
    r.name = c.name;
    r.limit = c.limit;
    r.limit_per_case = c.per_case;
    Tally tally;
    auto t0 = Clock::now();
    try {
      c.body(tally);
    } catch (const EngineInvariantError& ex) {
      tally.check(false, std::string("engine invariant: ") + ex.what());
    } catch (const std::exception& ex) {
      tally.check(false, std::string("error: ") + ex.what());
    }
    r.seconds = since(t0);
    if (c.limit > 0 && !c.per_case) tally.check(r.seconds < c.limit, "over time limit");
    r.passed = tally.passed();
    r.detail = tally.detail();
    if (options.on_result) options.on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << " " << std::setw(2) << r.id << " [" << r.tag << "] " << r.name << " ("
      << secs(r.seconds);
  if (r.limit > 0) out << ", limit " << r.limit << "s" << (r.limit_per_case ? " each" : "");
  out << ")";
  if (!r.detail.empty()) out << " :: " << r.detail;
  return out.str();
}

}  // namespace pathdepth
