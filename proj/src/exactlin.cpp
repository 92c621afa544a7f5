#include "pathdepth/exactlin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pathdepth/error.hpp"

namespace pathdepth {

// ---------------------------------------------------------------------------
// Field

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  mpz_class z(std::to_string(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "q" || spec == "Q") return rationals();
  if (spec.rfind("fp:", 0) == 0) {
    std::string digits(spec.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 19)
      throw ValidationError("bad prime field spec '" + std::string(spec) + "'");
    return prime(std::stoull(digits));
  }
  throw ValidationError("unknown field spec '" + std::string(spec) + "' (expected q or fp:<p>)");
}

namespace {

inline void reduce_mod(Scalar& x, std::uint64_t p) {
  // x is an integer here; keep it in [0, p).
  mpz_class& n = x.get_num();
  if (n >= 0 && n < p) return;
  mpz_fdiv_r_ui(n.get_mpz_t(), n.get_mpz_t(), p);
}

}  // namespace

Scalar Field::normalize(const Scalar& x) const {
  if (p_ == 0) return x;
  if (x.get_den() == 1) {
    Scalar r = x;
    reduce_mod(r, p_);
    return r;
  }
  mpz_class p(std::to_string(p_));
  mpz_class num = x.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = x.get_den() % p;
  if (den == 0) throw ValidationError("denominator divisible by the field characteristic");
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * den_inv) % p;
  return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar r = a + b;
  if (p_ != 0) reduce_mod(r, p_);
  return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar r = a - b;
  if (p_ != 0) reduce_mod(r, p_);
  return r;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  Scalar r = a * b;
  if (p_ != 0) reduce_mod(r, p_);
  return r;
}

Scalar Field::neg(const Scalar& a) const {
  Scalar r = -a;
  if (p_ != 0) reduce_mod(r, p_);
  return r;
}

Scalar Field::inv(const Scalar& a) const {
  if (sgn(a) == 0) throw std::domain_error("division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class p(std::to_string(p_));
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

std::string Field::to_string() const { return p_ == 0 ? "q" : "fp:" + std::to_string(p_); }

// ---------------------------------------------------------------------------
// SparseVec

SparseVec SparseVec::unit(std::size_t dim, std::size_t i) {
  if (i >= dim) throw std::out_of_range("unit vector index out of range");
  SparseVec v(dim);
  v.entries_.push_back({i, Scalar(1)});
  return v;
}

SparseVec SparseVec::from_dense(const std::vector<Scalar>& values) {
  SparseVec v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v.append(i, values[i]);
  return v;
}

Scalar SparseVec::at(std::size_t i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.index < k; });
  if (it != entries_.end() && it->index == i) return it->value;
  return Scalar(0);
}

std::optional<std::size_t> SparseVec::leading() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.front().index;
}

std::vector<Scalar> SparseVec::to_dense() const {
  std::vector<Scalar> out(dim_);
  for (const auto& e : entries_) out[e.index] = e.value;
  return out;
}

void SparseVec::append(std::size_t i, const Scalar& v) {
  if (i >= dim_) throw std::out_of_range("sparse index out of range");
  if (!entries_.empty() && entries_.back().index >= i) throw std::logic_error("sparse append out of order");
  if (sgn(v) == 0) return;
  entries_.push_back({i, v});
}

bool operator==(const SparseVec& a, const SparseVec& b) {
  if (a.dim_ != b.dim_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    if (a.entries_[k].index != b.entries_[k].index || a.entries_[k].value != b.entries_[k].value) return false;
  }
  return true;
}

SparseVec axpy(const SparseVec& y, const Scalar& a, const SparseVec& x, const Field& f) {
  if (y.dim() != x.dim()) throw std::invalid_argument("vector length mismatch");
  SparseVec out(y.dim());
  if (sgn(a) == 0) return y;
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->index < ix->index)) {
      out.append(iy->index, iy->value);
      ++iy;
    } else if (iy == y.end() || ix->index < iy->index) {
      out.append(ix->index, f.mul(a, ix->value));
      ++ix;
    } else {
      out.append(ix->index, f.add(iy->value, f.mul(a, ix->value)));
      ++ix;
      ++iy;
    }
  }
  return out;
}

SparseVec add(const SparseVec& a, const SparseVec& b, const Field& f) { return axpy(a, Scalar(1), b, f); }
SparseVec sub(const SparseVec& a, const SparseVec& b, const Field& f) { return axpy(a, f.neg(Scalar(1)), b, f); }

SparseVec scale(const SparseVec& v, const Scalar& a, const Field& f) {
  SparseVec out(v.dim());
  if (sgn(a) == 0) return out;
  for (const auto& e : v) out.append(e.index, f.mul(a, e.value));
  return out;
}

Scalar dot(const SparseVec& a, const SparseVec& b, const Field& f) {
  Scalar s(0);
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->index < ib->index) {
      ++ia;
    } else if (ib->index < ia->index) {
      ++ib;
    } else {
      s += ia->value * ib->value;
      ++ia;
      ++ib;
    }
  }
  return f.normalize(s);
}

SparseVec concat(const SparseVec& a, const SparseVec& b) {
  SparseVec out(a.dim() + b.dim());
  for (const auto& e : a) out.append(e.index, e.value);
  for (const auto& e : b) out.append(a.dim() + e.index, e.value);
  return out;
}

SparseVec embed(const SparseVec& v, std::size_t dim, std::size_t offset) {
  if (offset + v.dim() > dim) throw std::out_of_range("embed out of range");
  SparseVec out(dim);
  for (const auto& e : v) out.append(offset + e.index, e.value);
  return out;
}

void VecAccumulator::add(std::size_t i, const Scalar& v) {
  if (sgn(v) != 0) items_.emplace_back(i, v);
}

void VecAccumulator::add_scaled(const SparseVec& v, const Scalar& a) {
  if (sgn(a) == 0) return;
  for (const auto& e : v) items_.emplace_back(e.index, field_.mul(a, e.value));
}

SparseVec VecAccumulator::finish(std::size_t dim) {
  std::sort(items_.begin(), items_.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVec out(dim);
  std::size_t k = 0;
  while (k < items_.size()) {
    std::size_t idx = items_[k].first;
    Scalar s = items_[k].second;
    ++k;
    while (k < items_.size() && items_[k].first == idx) {
      s += items_[k].second;
      ++k;
    }
    out.append(idx, field_.normalize(s));
  }
  items_.clear();
  return out;
}

// ---------------------------------------------------------------------------
// Mat

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, SparseVec(cols)) {}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i] = SparseVec::unit(n, i);
  return m;
}

Mat Mat::from_rows(std::size_t cols, std::vector<SparseVec> rows) {
  Mat m;
  m.rows_ = rows.size();
  m.cols_ = cols;
  for (const auto& r : rows) {
    if (r.dim() != cols) throw std::invalid_argument("row length mismatch");
  }
  m.data_ = std::move(rows);
  return m;
}

Mat Mat::from_columns(std::size_t rows, const std::vector<SparseVec>& columns) {
  return from_rows(rows, columns).transpose();
}

Mat Mat::from_dense(const std::vector<std::vector<Scalar>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<SparseVec> out;
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ragged dense matrix");
    out.push_back(SparseVec::from_dense(r));
  }
  return from_rows(cols, std::move(out));
}

void Mat::set_row(std::size_t r, SparseVec v) {
  if (v.dim() != cols_) throw std::invalid_argument("row length mismatch");
  data_.at(r) = std::move(v);
}

std::size_t Mat::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.nnz();
  return n;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseVec& r) { return r.is_zero(); });
}

bool Mat::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) {
      if (e.index != i) return false;
    }
  }
  return true;
}

Mat Mat::transpose() const {
  std::vector<SparseVec> cols(cols_, SparseVec(rows_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) cols[e.index].append(i, e.value);
  }
  Mat t;
  t.rows_ = cols_;
  t.cols_ = rows_;
  t.data_ = std::move(cols);
  return t;
}

SparseVec Mat::flatten() const {
  SparseVec out(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& e : data_[i]) out.append(i * cols_ + e.index, e.value);
  }
  return out;
}

Mat multiply(const Mat& a, const Mat& b, const Field& f) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  std::vector<SparseVec> rows;
  rows.reserve(a.rows());
  VecAccumulator acc(f);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const SparseVec& ar = a.row(i);
    if (ar.nnz() == 1) {
      rows.push_back(scale(b.row(ar.entries()[0].index), ar.entries()[0].value, f));
      continue;
    }
    for (const auto& e : ar) acc.add_scaled(b.row(e.index), e.value);
    rows.push_back(acc.finish(b.cols()));
  }
  return Mat::from_rows(b.cols(), std::move(rows));
}

SparseVec apply(const Mat& a, const SparseVec& x, const Field& f) {
  if (a.cols() != x.dim()) throw std::invalid_argument("matrix-vector shape mismatch");
  SparseVec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out.append(i, dot(a.row(i), x, f));
  return out;
}

Mat axpy(const Mat& y, const Scalar& a, const Mat& x, const Field& f) {
  if (y.rows() != x.rows() || y.cols() != x.cols()) throw std::invalid_argument("matrix shape mismatch");
  std::vector<SparseVec> rows;
  rows.reserve(y.rows());
  for (std::size_t i = 0; i < y.rows(); ++i) rows.push_back(axpy(y.row(i), a, x.row(i), f));
  return Mat::from_rows(y.cols(), std::move(rows));
}

Mat add(const Mat& a, const Mat& b, const Field& f) { return axpy(a, Scalar(1), b, f); }

Mat block_diagonal(const std::vector<const Mat*>& blocks) {
  std::size_t n = 0;
  for (const Mat* b : blocks) {
    if (b->rows() != b->cols()) throw std::invalid_argument("block_diagonal expects square blocks");
    n += b->rows();
  }
  std::vector<SparseVec> rows;
  rows.reserve(n);
  std::size_t offset = 0;
  for (const Mat* b : blocks) {
    for (std::size_t i = 0; i < b->rows(); ++i) rows.push_back(embed(b->row(i), n, offset));
    offset += b->rows();
  }
  return Mat::from_rows(n, std::move(rows));
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

std::size_t entry_size(const SparseVec& v) {
  std::size_t s = 0;
  for (const auto& e : v) {
    s += mpz_sizeinbase(e.value.get_num_mpz_t(), 2) + mpz_sizeinbase(e.value.get_den_mpz_t(), 2);
  }
  return s;
}

}  // namespace

RrefResult rref(const Mat& m, const Field& f) {
  const std::size_t cols = m.cols();
  std::vector<SparseVec> work;
  std::vector<std::vector<std::size_t>> bucket(cols);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.row(i).is_zero()) continue;
    bucket[*m.row(i).leading()].push_back(work.size());
    work.push_back(m.row(i));
  }

  std::vector<SparseVec> pivot_rows;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<std::size_t> candidates = std::move(bucket[c]);
    bucket[c].clear();
    if (candidates.empty()) continue;

    // Shortest row wins; ties go to the smallest coefficient bit size.
    std::size_t best = candidates.front();
    std::size_t best_nnz = work[best].nnz();
    std::size_t best_size = 0;
    bool best_size_known = false;
    for (std::size_t k = 1; k < candidates.size(); ++k) {
      std::size_t idx = candidates[k];
      std::size_t nnz = work[idx].nnz();
      if (nnz < best_nnz) {
        best = idx;
        best_nnz = nnz;
        best_size_known = false;
      } else if (nnz == best_nnz && f.is_rationals()) {
        if (!best_size_known) {
          best_size = entry_size(work[best]);
          best_size_known = true;
        }
        std::size_t s = entry_size(work[idx]);
        if (s < best_size) {
          best = idx;
          best_size = s;
        }
      }
    }

    SparseVec pivot = scale(work[best], f.inv(work[best].entries().front().value), f);
    work[best] = SparseVec();
    for (std::size_t idx : candidates) {
      if (idx == best) continue;
      Scalar coef = f.neg(work[idx].entries().front().value);
      work[idx] = axpy(work[idx], coef, pivot, f);
      if (!work[idx].is_zero()) bucket[*work[idx].leading()].push_back(idx);
    }
    pivot_rows.push_back(std::move(pivot));
    pivots.push_back(c);
  }

  // Back substitution, bottom-up; processed rows are already fully reduced.
  std::vector<long> pivot_index(cols, -1);
  VecAccumulator acc(f);
  for (std::size_t k = pivot_rows.size(); k-- > 0;) {
    SparseVec& r = pivot_rows[k];
    bool touched = false;
    for (const auto& e : r) {
      long q = pivot_index[e.index];
      if (q < 0) continue;
      if (!touched) {
        acc.add_scaled(r, Scalar(1));
        touched = true;
      }
      acc.add_scaled(pivot_rows[static_cast<std::size_t>(q)], f.neg(e.value));
    }
    if (touched) r = acc.finish(cols);
    pivot_index[pivots[k]] = static_cast<long>(k);
  }

  RrefResult out;
  out.reduced = Mat::from_rows(cols, std::move(pivot_rows));
  out.pivots = std::move(pivots);
  return out;
}

Kernel kernel(const Mat& m, const Field& f) {
  RrefResult r = rref(m, f);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  Mat t = r.reduced.transpose();  // row c of t = column c of the reduced matrix

  Kernel out;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<std::pair<std::size_t, Scalar>> items;
    items.emplace_back(c, Scalar(1));
    for (const auto& e : t.row(c)) items.emplace_back(r.pivots[e.index], f.neg(e.value));
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec v(cols);
    for (const auto& [i, val] : items) v.append(i, val);
    out.basis.push_back(std::move(v));
    out.free_columns.push_back(c);
  }
  return out;
}

std::vector<SparseVec> kernel_basis(const Mat& m, const Field& f) { return kernel(m, f).basis; }

std::size_t rank(const Mat& m, const Field& f) { return rref(m, f).rank(); }

bool in_span(const SparseVec& v, const std::vector<SparseVec>& basis, const Field& f) {
  if (v.is_zero()) return true;
  return Subspace(v.dim(), basis, f).contains(v);
}

std::optional<SparseVec> solve(const Mat& m, const SparseVec& b, const Field& f) {
  if (b.dim() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  const std::size_t n = m.cols();
  std::vector<SparseVec> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseVec r(n + 1);
    for (const auto& e : m.row(i)) r.append(e.index, e.value);
    r.append(n, b.at(i));
    rows.push_back(std::move(r));
  }
  RrefResult r = rref(Mat::from_rows(n + 1, std::move(rows)), f);
  if (!r.pivots.empty() && r.pivots.back() == n) return std::nullopt;
  SparseVec x(n);
  for (std::size_t k = 0; k < r.pivots.size(); ++k) x.append(r.pivots[k], r.reduced.row(k).at(n));
  return x;
}

std::optional<Mat> inverse(const Mat& m, const Field& f) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<SparseVec> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rows.push_back(concat(m.row(i), SparseVec::unit(n, i)));
  RrefResult r = rref(Mat::from_rows(2 * n, std::move(rows)), f);
  if (r.rank() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  std::vector<SparseVec> inv_rows;
  inv_rows.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    SparseVec row(n);
    for (const auto& e : r.reduced.row(k)) {
      if (e.index >= n) row.append(e.index - n, e.value);
    }
    inv_rows.push_back(std::move(row));
  }
  return Mat::from_rows(n, std::move(inv_rows));
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t dim, const std::vector<SparseVec>& spanning, const Field& f)
    : dim_(dim), field_(f) {
  RrefResult r = rref(Mat::from_rows(dim, spanning), f);
  for (std::size_t k = 0; k < r.rank(); ++k) basis_.push_back(r.reduced.row(k));
  pivots_ = std::move(r.pivots);
}

bool Subspace::is_pivot(std::size_t col) const {
  return std::binary_search(pivots_.begin(), pivots_.end(), col);
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < dim_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

SparseVec Subspace::reduce(const SparseVec& v) const {
  if (v.dim() != dim_) throw std::invalid_argument("subspace: vector length mismatch");
  VecAccumulator acc(field_);
  bool touched = false;
  std::size_t k = 0;
  for (const auto& e : v) {
    while (k < pivots_.size() && pivots_[k] < e.index) ++k;
    if (k < pivots_.size() && pivots_[k] == e.index) {
      if (!touched) {
        acc.add_scaled(v, Scalar(1));
        touched = true;
      }
      acc.add_scaled(basis_[k], field_.neg(e.value));
    }
  }
  return touched ? acc.finish(dim_) : v;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const SparseVec& v) { return contains(v); });
}

std::optional<SparseVec> Subspace::coordinates(const SparseVec& v) const {
  if (!contains(v)) return std::nullopt;
  SparseVec c(basis_.size());
  std::size_t k = 0;
  for (const auto& e : v) {
    while (k < pivots_.size() && pivots_[k] < e.index) ++k;
    if (k < pivots_.size() && pivots_[k] == e.index) c.append(k, e.value);
  }
  return c;
}

// ---------------------------------------------------------------------------
// EchelonBasis

SparseVec EchelonBasis::reduce(const SparseVec& v) const {
  if (v.dim() != dim_) throw std::invalid_argument("echelon: vector length mismatch");
  VecAccumulator acc(field_);
  bool touched = false;
  for (const auto& e : v) {
    auto it = std::find(pivots_.begin(), pivots_.end(), e.index);
    if (it == pivots_.end()) continue;
    if (!touched) {
      acc.add_scaled(v, Scalar(1));
      touched = true;
    }
    acc.add_scaled(rows_[static_cast<std::size_t>(it - pivots_.begin())], field_.neg(e.value));
  }
  return touched ? acc.finish(dim_) : v;
}

bool EchelonBasis::insert(const SparseVec& v) {
  SparseVec w = reduce(v);
  if (w.is_zero()) return false;
  w = scale(w, field_.inv(w.entries().front().value), field_);
  std::size_t p = w.entries().front().index;
  for (auto& row : rows_) {
    Scalar c = row.at(p);
    if (sgn(c) != 0) row = axpy(row, field_.neg(c), w, field_);
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos)
    throw std::invalid_argument("bad scalar '" + s + "'");
  if (s.front() == '+') s.erase(0, 1);
  Scalar x;
  if (x.set_str(s, 10) != 0 || x.get_den() == 0) throw std::invalid_argument("bad scalar '" + std::string(text) + "'");
  x.canonicalize();
  return x;
}

}  // namespace pathdepth
