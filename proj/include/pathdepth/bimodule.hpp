#pragma once

// Bimodules given by action matrices, and the relative tensor powers
// A (x)_B ... (x)_B A.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "pathdepth/algebra.hpp"
#include "pathdepth/exactlin.hpp"

namespace pathdepth {

/// Actions act on column vectors: left_action(a) * v is a.v and
/// right_action(b) * v is v.b, so right_action(yz) = right_action(z) * right_action(y).
class Bimodule {
 public:
  /// Verifies unit, multiplicativity and commutation on all basis pairs.
  Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Mat> left_actions,
           std::vector<Mat> right_actions);

  const AlgebraPtr& left() const { return left_; }
  const AlgebraPtr& right() const { return right_; }
  const Field& field() const { return left_->field(); }
  std::size_t dim() const { return dim_; }
  const Mat& left_action(std::size_t i) const { return left_actions_[i]; }
  const Mat& right_action(std::size_t j) const { return right_actions_[j]; }
  const std::vector<Mat>& left_actions() const { return left_actions_; }
  const std::vector<Mat>& right_actions() const { return right_actions_; }

  /// Action matrix of an arbitrary algebra element.
  Mat left_action_of(const SparseVec& a) const;
  Mat right_action_of(const SparseVec& b) const;

 private:
  AlgebraPtr left_;
  AlgebraPtr right_;
  std::size_t dim_;
  std::vector<Mat> left_actions_;
  std::vector<Mat> right_actions_;
};

using BimodulePtr = std::shared_ptr<const Bimodule>;

Bimodule regular_bimodule(const AlgebraPtr& a);

enum class Side { Left, Right, Both };

/// Restricts the chosen side(s) along e; e's ambient must be the acting algebra.
Bimodule restrict(const Bimodule& m, Side side, const SubalgebraEmbedding& e);

struct TensorProduct {
  Bimodule module;
  /// dim x (dim m * dim n); coordinate (x, y) of m (x)_K n sits at x * dim n + y.
  Mat projection;
  /// (dim m * dim n) x dim; projection * section = identity.
  Mat section;
};

/// m (x)_B n where B is m's right algebra and n's left algebra.
TensorProduct tensor_over(const Bimodule& m, const Bimodule& n);

Bimodule direct_sum(const std::vector<const Bimodule*>& parts);
Bimodule multiple(const Bimodule& m, std::size_t copies);
/// Same bimodule in the basis given by the columns of an invertible p.
Bimodule change_basis(const Bimodule& m, const Mat& p);

struct Corner {
  std::vector<SparseVec> basis;
  std::size_t dim = 0;
};

/// Image of left_action(ei) * right_action(ej).
Corner corner(const Bimodule& m, const SparseVec& ei, const SparseVec& ej);

/// Which algebra acts on each side: A (ambient) or B (sub).
enum class Structure { AA, AB, BA, BB };

const char* structure_name(Structure s);

/// C_n(A, B) for a fixed extension, built left-associated and cached.
/// Safe to query from several threads.
class TensorChain {
 public:
  explicit TensorChain(SubalgebraEmbedding e);

  const SubalgebraEmbedding& embedding() const { return e_; }
  /// C_n as an A-A bimodule, n >= 1.
  BimodulePtr level(std::size_t n) const;
  /// C_n with the requested structure; n = 0 is only available as BB.
  BimodulePtr level_as(std::size_t n, Structure s) const;
  std::size_t dim(std::size_t n) const;

 private:
  BimodulePtr level_locked(std::size_t n) const;

  SubalgebraEmbedding e_;
  mutable std::mutex mutex_;
  mutable std::vector<BimodulePtr> levels_;
  mutable std::map<std::pair<std::size_t, Structure>, BimodulePtr> restricted_;
  mutable BimodulePtr left_factor_;
};

}  // namespace pathdepth
