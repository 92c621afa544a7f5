#include "pathdepth/bimodule.hpp"

#include <stdexcept>
#include <string>

#include "pathdepth/error.hpp"

namespace pathdepth {

namespace {

Mat combine(const std::vector<Mat>& actions, const SparseVec& x, std::size_t dim, const Field& f) {
  Mat out(dim, dim);
  for (const auto& e : x) out = axpy(out, e.value, actions[e.index], f);
  return out;
}

void check_actions(const std::vector<Mat>& actions, std::size_t count, std::size_t dim, const char* side) {
  if (actions.size() != count)
    throw ValidationError(std::string(side) + " action needs one matrix per algebra basis element");
  for (const auto& a : actions) {
    if (a.rows() != dim || a.cols() != dim) throw ValidationError(std::string(side) + " action matrix has wrong shape");
  }
}

}  // namespace

Bimodule::Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Mat> left_actions,
                   std::vector<Mat> right_actions)
    : left_(std::move(left)),
      right_(std::move(right)),
      dim_(dim),
      left_actions_(std::move(left_actions)),
      right_actions_(std::move(right_actions)) {
  if (!(left_->field() == right_->field())) throw ValidationError("bimodule algebras are over different fields");
  check_actions(left_actions_, left_->dim(), dim_, "left");
  check_actions(right_actions_, right_->dim(), dim_, "right");
  const Field& f = field();
  const Mat id = Mat::identity(dim_);
  if (!(left_action_of(left_->unit()) == id)) throw ValidationError("left unit does not act as the identity");
  if (!(right_action_of(right_->unit()) == id)) throw ValidationError("right unit does not act as the identity");

  // Elements satisfying these identities against every basis element form a
  // subalgebra, so checking generators against the basis covers all pairs.
  for (const auto& g : left_->generators()) {
    Mat lg = left_action_of(g);
    for (std::size_t j = 0; j < left_->dim(); ++j) {
      if (!(multiply(lg, left_actions_[j], f) == left_action_of(left_->multiply(g, left_->basis_vector(j)))))
        throw ValidationError("left action is not multiplicative at " + left_->format(g) + "*" + left_->label(j));
    }
    for (const auto& h : right_->generators()) {
      Mat rh = right_action_of(h);
      if (!(multiply(lg, rh, f) == multiply(rh, lg, f)))
        throw ValidationError("left and right actions do not commute");
    }
  }
  for (const auto& h : right_->generators()) {
    Mat rh = right_action_of(h);
    for (std::size_t j = 0; j < right_->dim(); ++j) {
      if (!(multiply(rh, right_actions_[j], f) == right_action_of(right_->multiply(right_->basis_vector(j), h))))
        throw ValidationError("right action is not multiplicative at " + right_->label(j) + "*" + right_->format(h));
    }
  }
}

Mat Bimodule::left_action_of(const SparseVec& a) const {
  if (a.nnz() == 1 && a.entries()[0].value == 1) return left_actions_[a.entries()[0].index];
  return combine(left_actions_, a, dim_, field());
}

Mat Bimodule::right_action_of(const SparseVec& b) const {
  if (b.nnz() == 1 && b.entries()[0].value == 1) return right_actions_[b.entries()[0].index];
  return combine(right_actions_, b, dim_, field());
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
  std::vector<Mat> left;
  std::vector<Mat> right;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    left.push_back(a->left_multiplication(a->basis_vector(i)));
    right.push_back(a->right_multiplication(a->basis_vector(i)));
  }
  return Bimodule(a, a, a->dim(), std::move(left), std::move(right));
}

Bimodule restrict(const Bimodule& m, Side side, const SubalgebraEmbedding& e) {
  AlgebraPtr left = m.left();
  AlgebraPtr right = m.right();
  std::vector<Mat> left_actions = m.left_actions();
  std::vector<Mat> right_actions = m.right_actions();
  if (side == Side::Left || side == Side::Both) {
    if (!same_algebra(m.left(), e.ambient())) throw ValidationError("restriction: left algebra is not the ambient");
    left = e.sub();
    left_actions.clear();
    for (const auto& v : e.images()) left_actions.push_back(m.left_action_of(v));
  }
  if (side == Side::Right || side == Side::Both) {
    if (!same_algebra(m.right(), e.ambient())) throw ValidationError("restriction: right algebra is not the ambient");
    right = e.sub();
    right_actions.clear();
    for (const auto& v : e.images()) right_actions.push_back(m.right_action_of(v));
  }
  return Bimodule(left, right, m.dim(), std::move(left_actions), std::move(right_actions));
}

TensorProduct tensor_over(const Bimodule& m, const Bimodule& n) {
  if (!same_algebra(m.right(), n.left())) throw ValidationError("tensor product: middle algebras differ");
  const Field& f = m.field();
  const std::size_t dm = m.dim();
  const std::size_t dn = n.dim();
  const std::size_t total = dm * dn;
  const Algebra& mid = *m.right();

  // (x.b) (x) y - x (x) (b.y) for generators b.
  std::vector<SparseVec> relations;
  for (const auto& g : mid.generators()) {
    std::vector<SparseVec> rm = m.right_action_of(g).columns();
    std::vector<SparseVec> ln = n.left_action_of(g).columns();
    for (std::size_t x = 0; x < dm; ++x) {
      for (std::size_t y = 0; y < dn; ++y) {
        VecAccumulator acc(f);
        for (const auto& e : rm[x]) acc.add(e.index * dn + y, e.value);
        for (const auto& e : ln[y]) acc.add(x * dn + e.index, f.neg(e.value));
        SparseVec rel = acc.finish(total);
        if (!rel.is_zero()) relations.push_back(std::move(rel));
      }
    }
  }
  Subspace rel(total, relations, f);
  std::vector<std::size_t> kept = rel.non_pivots();
  const std::size_t d = kept.size();

  std::vector<long> position(total, -1);
  for (std::size_t k = 0; k < d; ++k) position[kept[k]] = static_cast<long>(k);
  std::vector<SparseVec> proj(total, SparseVec(d));
  for (std::size_t k = 0; k < d; ++k) proj[kept[k]] = SparseVec::unit(d, k);
  for (std::size_t r = 0; r < rel.dim(); ++r) {
    SparseVec col(d);
    for (const auto& e : rel.basis()[r]) {
      if (e.index == rel.pivots()[r]) continue;
      col.append(static_cast<std::size_t>(position[e.index]), f.neg(e.value));
    }
    proj[rel.pivots()[r]] = std::move(col);
  }

  std::vector<Mat> left_actions;
  for (const auto& a : m.left_actions()) {
    std::vector<SparseVec> acols = a.columns();
    std::vector<SparseVec> cols;
    for (std::size_t c : kept) {
      VecAccumulator acc(f);
      for (const auto& e : acols[c / dn]) acc.add_scaled(proj[e.index * dn + c % dn], e.value);
      cols.push_back(acc.finish(d));
    }
    left_actions.push_back(Mat::from_columns(d, cols));
  }
  std::vector<Mat> right_actions;
  for (const auto& b : n.right_actions()) {
    std::vector<SparseVec> bcols = b.columns();
    std::vector<SparseVec> cols;
    for (std::size_t c : kept) {
      VecAccumulator acc(f);
      for (const auto& e : bcols[c % dn]) acc.add_scaled(proj[(c / dn) * dn + e.index], e.value);
      cols.push_back(acc.finish(d));
    }
    right_actions.push_back(Mat::from_columns(d, cols));
  }

  std::vector<SparseVec> section;
  for (std::size_t c : kept) section.push_back(SparseVec::unit(total, c));
  return TensorProduct{Bimodule(m.left(), n.right(), d, std::move(left_actions), std::move(right_actions)),
                       Mat::from_columns(d, proj), Mat::from_columns(total, section)};
}

Bimodule direct_sum(const std::vector<const Bimodule*>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum needs at least one summand");
  const Bimodule& first = *parts.front();
  std::size_t dim = 0;
  for (const Bimodule* p : parts) {
    if (!same_algebra(p->left(), first.left()) || !same_algebra(p->right(), first.right()))
      throw ValidationError("direct sum of bimodules over different algebra pairs");
    dim += p->dim();
  }
  std::vector<Mat> left;
  for (std::size_t i = 0; i < first.left()->dim(); ++i) {
    std::vector<const Mat*> blocks;
    for (const Bimodule* p : parts) blocks.push_back(&p->left_action(i));
    left.push_back(block_diagonal(blocks));
  }
  std::vector<Mat> right;
  for (std::size_t j = 0; j < first.right()->dim(); ++j) {
    std::vector<const Mat*> blocks;
    for (const Bimodule* p : parts) blocks.push_back(&p->right_action(j));
    right.push_back(block_diagonal(blocks));
  }
  return Bimodule(first.left(), first.right(), dim, std::move(left), std::move(right));
}

Bimodule multiple(const Bimodule& m, std::size_t copies) {
  if (copies == 0) throw std::invalid_argument("multiple needs at least one copy");
  return direct_sum(std::vector<const Bimodule*>(copies, &m));
}

Bimodule change_basis(const Bimodule& m, const Mat& p) {
  const Field& f = m.field();
  auto pinv = inverse(p, f);
  if (!pinv || p.rows() != m.dim()) throw ValidationError("change of basis matrix is not invertible");
  std::vector<Mat> left;
  for (const auto& a : m.left_actions()) left.push_back(multiply(*pinv, multiply(a, p, f), f));
  std::vector<Mat> right;
  for (const auto& b : m.right_actions()) right.push_back(multiply(*pinv, multiply(b, p, f), f));
  return Bimodule(m.left(), m.right(), m.dim(), std::move(left), std::move(right));
}

Corner corner(const Bimodule& m, const SparseVec& ei, const SparseVec& ej) {
  if (!(m.left()->multiply(ei, ei) == ei) || !(m.right()->multiply(ej, ej) == ej))
    throw ValidationError("corner needs idempotents");
  Mat proj = multiply(m.left_action_of(ei), m.right_action_of(ej), m.field());
  Subspace image(m.dim(), proj.columns(), m.field());
  return Corner{image.basis(), image.dim()};
}

const char* structure_name(Structure s) {
  switch (s) {
    case Structure::AA: return "AA";
    case Structure::AB: return "AB";
    case Structure::BA: return "BA";
    case Structure::BB: return "BB";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// TensorChain

TensorChain::TensorChain(SubalgebraEmbedding e) : e_(std::move(e)) {}

BimodulePtr TensorChain::level_locked(std::size_t n) const {
  if (levels_.empty()) levels_.push_back(std::make_shared<const Bimodule>(regular_bimodule(e_.ambient())));
  if (!left_factor_) left_factor_ = std::make_shared<const Bimodule>(restrict(*levels_.front(), Side::Left, e_));
  while (levels_.size() < n) {
    Bimodule last = restrict(*levels_.back(), Side::Right, e_);
    levels_.push_back(std::make_shared<const Bimodule>(tensor_over(last, *left_factor_).module));
  }
  return levels_[n - 1];
}

BimodulePtr TensorChain::level(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("C_0 exists only as a bimodule over the subalgebra");
  std::lock_guard<std::mutex> lock(mutex_);
  return level_locked(n);
}

BimodulePtr TensorChain::level_as(std::size_t n, Structure s) const {
  if (n == 0 && s != Structure::BB) throw std::invalid_argument("C_0 exists only as a bimodule over the subalgebra");
  std::lock_guard<std::mutex> lock(mutex_);
  auto key = std::make_pair(n, s);
  if (auto it = restricted_.find(key); it != restricted_.end()) return it->second;
  BimodulePtr out;
  if (n == 0) {
    out = std::make_shared<const Bimodule>(regular_bimodule(e_.sub()));
  } else {
    BimodulePtr full = level_locked(n);
    switch (s) {
      case Structure::AA: out = full; break;
      case Structure::AB: out = std::make_shared<const Bimodule>(restrict(*full, Side::Right, e_)); break;
      case Structure::BA: out = std::make_shared<const Bimodule>(restrict(*full, Side::Left, e_)); break;
      case Structure::BB: out = std::make_shared<const Bimodule>(restrict(*full, Side::Both, e_)); break;
    }
  }
  restricted_[key] = out;
  return out;
}

std::size_t TensorChain::dim(std::size_t n) const {
  if (n == 0) return e_.sub()->dim();
  return level(n)->dim();
}

// ---------------------------------------------------------------------------
// Triangular rings

AlgebraPtr triangular_ring(const AlgebraPtr& r, const AlgebraPtr& s, const Bimodule& m) {
  if (!same_algebra(m.left(), s) || !same_algebra(m.right(), r))
    throw ValidationError("triangular ring needs an (S,R)-bimodule");
  if (!(r->field() == s->field())) throw ValidationError("triangular ring over different fields");
  const std::size_t nr = r->dim();
  const std::size_t dm = m.dim();
  const std::size_t ns = s->dim();
  const std::size_t n = nr + dm + ns;
  const std::size_t s_off = nr + dm;

  Algebra::Parts parts;
  parts.field = r->field();
  parts.mult.assign(n, std::vector<SparseVec>(n, SparseVec(n)));
  for (std::size_t i = 0; i < nr; ++i) parts.labels.push_back("r:" + r->label(i));
  for (std::size_t k = 0; k < dm; ++k) parts.labels.push_back("m" + std::to_string(k + 1));
  for (std::size_t i = 0; i < ns; ++i) parts.labels.push_back("s:" + s->label(i));

  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nr; ++j) parts.mult[i][j] = embed(r->product(i, j), n, 0);
  }
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t j = 0; j < ns; ++j) parts.mult[s_off + i][s_off + j] = embed(s->product(i, j), n, s_off);
  }
  // m * r' = m.r' and s * m' = s.m'
  for (std::size_t j = 0; j < nr; ++j) {
    std::vector<SparseVec> cols = m.right_action(j).columns();
    for (std::size_t k = 0; k < dm; ++k) parts.mult[nr + k][j] = embed(cols[k], n, nr);
  }
  for (std::size_t i = 0; i < ns; ++i) {
    std::vector<SparseVec> cols = m.left_action(i).columns();
    for (std::size_t k = 0; k < dm; ++k) parts.mult[s_off + i][nr + k] = embed(cols[k], n, nr);
  }
  SparseVec e1 = embed(r->unit(), n, 0);
  SparseVec e2 = embed(s->unit(), n, s_off);
  parts.unit = add(e1, e2, parts.field);
  parts.block_idempotents = {e1, e2};
  if (r->vertex_idempotents() && s->vertex_idempotents()) {
    std::vector<SparseVec> idem;
    for (const auto& v : *r->vertex_idempotents()) idem.push_back(embed(v, n, 0));
    for (const auto& v : *s->vertex_idempotents()) idem.push_back(embed(v, n, s_off));
    parts.vertex_idempotents = std::move(idem);
  }
  return std::make_shared<const Algebra>(std::move(parts));
}

SubalgebraEmbedding triangular_diagonal(const AlgebraPtr& triangular, const SubalgebraEmbedding& r_sub,
                                        const SubalgebraEmbedding& s_sub) {
  const std::size_t n = triangular->dim();
  const std::size_t nr = r_sub.ambient()->dim();
  const std::size_t s_off = n - s_sub.ambient()->dim();
  if (s_off < nr) throw ValidationError("triangular ring does not contain the given blocks");
  AlgebraPtr sub = direct_product(r_sub.sub(), s_sub.sub());
  std::vector<SparseVec> images;
  for (const auto& v : r_sub.images()) images.push_back(embed(v, n, 0));
  for (const auto& v : s_sub.images()) images.push_back(embed(v, n, s_off));
  return SubalgebraEmbedding(triangular, sub, std::move(images));
}

}  // namespace pathdepth
