#pragma once

// Exact sparse linear algebra over Q (GMP rationals) and prime fields.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pathdepth {

using Scalar = mpq_class;

/// Ground field: the rationals, or Z/p with every scalar kept as its
/// canonical representative in [0, p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);
  /// "q" or "fp:<p>".
  static Field parse(std::string_view spec);

  bool is_rationals() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  Scalar normalize(const Scalar& x) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Sorted coordinate vector; never stores an explicit zero.
class SparseVec {
 public:
  struct Entry {
    std::size_t index;
    Scalar value;
  };

  SparseVec() = default;
  explicit SparseVec(std::size_t dim) : dim_(dim) {}

  static SparseVec unit(std::size_t dim, std::size_t i);
  static SparseVec from_dense(const std::vector<Scalar>& values);

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Scalar at(std::size_t i) const;
  std::optional<std::size_t> leading() const;
  std::vector<Scalar> to_dense() const;

  /// Appends an entry past the current last index; zero values are skipped.
  void append(std::size_t i, const Scalar& v);

  friend bool operator==(const SparseVec& a, const SparseVec& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

SparseVec add(const SparseVec& a, const SparseVec& b, const Field& f);
SparseVec sub(const SparseVec& a, const SparseVec& b, const Field& f);
/// y + a*x
SparseVec axpy(const SparseVec& y, const Scalar& a, const SparseVec& x, const Field& f);
SparseVec scale(const SparseVec& v, const Scalar& a, const Field& f);
Scalar dot(const SparseVec& a, const SparseVec& b, const Field& f);
/// Concatenates coordinates: (a, b).
SparseVec concat(const SparseVec& a, const SparseVec& b);
/// Puts v at offset `offset` inside a vector of length `dim`.
SparseVec embed(const SparseVec& v, std::size_t dim, std::size_t offset);

/// Accumulates scattered contributions, then emits a sorted SparseVec.
class VecAccumulator {
 public:
  explicit VecAccumulator(const Field& f) : field_(f) {}
  void add(std::size_t i, const Scalar& v);
  void add_scaled(const SparseVec& v, const Scalar& a);
  SparseVec finish(std::size_t dim);

 private:
  Field field_;
  std::vector<std::pair<std::size_t, Scalar>> items_;
};

/// Row-major sparse matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);

  static Mat identity(std::size_t n);
  static Mat from_rows(std::size_t cols, std::vector<SparseVec> rows);
  static Mat from_columns(std::size_t rows, const std::vector<SparseVec>& columns);
  static Mat from_dense(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVec& row(std::size_t r) const { return data_[r]; }
  void set_row(std::size_t r, SparseVec v);
  Scalar at(std::size_t r, std::size_t c) const { return data_[r].at(c); }
  std::size_t nnz() const;
  bool is_zero() const;
  bool is_diagonal() const;
  Mat transpose() const;
  std::vector<SparseVec> columns() const { return transpose().data_; }
  SparseVec flatten() const;

  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVec> data_;
};

Mat multiply(const Mat& a, const Mat& b, const Field& f);
SparseVec apply(const Mat& a, const SparseVec& x, const Field& f);
Mat add(const Mat& a, const Mat& b, const Field& f);
/// y + a*x
Mat axpy(const Mat& y, const Scalar& a, const Mat& x, const Field& f);
Mat block_diagonal(const std::vector<const Mat*>& blocks);

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Unique reduced row-echelon form. Zero rows are dropped from `reduced`,
/// which therefore has exactly rank() rows, sorted by pivot column.
RrefResult rref(const Mat& m, const Field& f);

struct Kernel {
  std::vector<SparseVec> basis;
  /// basis[k] is 1 at free_columns[k] and 0 at every other free column.
  std::vector<std::size_t> free_columns;
};

Kernel kernel(const Mat& m, const Field& f);
std::vector<SparseVec> kernel_basis(const Mat& m, const Field& f);
std::size_t rank(const Mat& m, const Field& f);
bool in_span(const SparseVec& v, const std::vector<SparseVec>& basis, const Field& f);
/// Some x with m*x = b, or nullopt.
std::optional<SparseVec> solve(const Mat& m, const SparseVec& b, const Field& f);
std::optional<Mat> inverse(const Mat& m, const Field& f);

/// A subspace held by its RREF basis.
class Subspace {
 public:
  Subspace(std::size_t dim, const Field& f) : dim_(dim), field_(f) {}
  Subspace(std::size_t dim, const std::vector<SparseVec>& spanning, const Field& f);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dim() const { return basis_.size(); }
  const Field& field() const { return field_; }
  const std::vector<SparseVec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_pivot(std::size_t col) const;
  /// Coordinates that are not pivots, ascending; a basis of a complement.
  std::vector<std::size_t> non_pivots() const;

  /// Normal form of v modulo the subspace: zero at every pivot column.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }
  bool contains(const Subspace& other) const;
  std::optional<SparseVec> coordinates(const SparseVec& v) const;

 private:
  std::size_t dim_;
  Field field_;
  std::vector<SparseVec> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_row_;
};

/// Incrementally grown span with fully reduced rows; for streaming
/// membership tests where the rank stays small.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t dim, const Field& f) : dim_(dim), field_(f) {}

  std::size_t rank() const { return rows_.size(); }
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }
  /// Adds v; returns false when v was already in the span.
  bool insert(const SparseVec& v);

 private:
  std::size_t dim_;
  Field field_;
  std::vector<SparseVec> rows_;
  std::vector<std::size_t> pivots_;
};

std::string to_string(const Scalar& x);
Scalar parse_scalar(std::string_view text);

}  // namespace pathdepth
