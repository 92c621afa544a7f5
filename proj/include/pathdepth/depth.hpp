#pragma once

// Depth of a subalgebra: divisibility of consecutive tensor powers in the
// four bimodule categories, and the values derived from them.

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathdepth/algebra.hpp"
#include "pathdepth/bimodule.hpp"

namespace pathdepth {

/// One level n >= 1: whether C_{n+1} lies in add(C_n) for each structure.
/// AA means the two are H-equivalent (both directions). Unset means not computed.
struct LevelFlags {
  std::size_t n = 0;
  std::optional<bool> aa;
  std::optional<bool> ab;
  std::optional<bool> ba;
  std::optional<bool> bb;
};

/// An exact value, or a lower bound when exact is false.
struct DepthValue {
  std::size_t value = 0;
  bool exact = false;

  friend bool operator==(const DepthValue&, const DepthValue&) = default;
};

std::string to_string(const DepthValue& d);

struct DepthReport {
  std::size_t cutoff = 0;
  std::string field;
  bool depth1 = false;
  bool depth1_reverse = false;
  /// depth1 holds but B is not a summand of a multiple of A.
  bool depth1_discrepancy = false;
  std::vector<LevelFlags> flags;
  DepthValue min_depth;
  std::optional<std::size_t> odd_depth;
  std::optional<DepthValue> h_depth;
};

/// Smallest odd number >= d; unknown for a lower bound.
std::optional<std::size_t> odd_depth(const DepthValue& d);

struct ObstructionWitness {
  std::size_t vertex;  // 1-based
  /// True for an element of A B_i^+ outside B_i^+ A (right side).
  bool right;
  SparseVec element;
};

struct Depth2Obstruction {
  bool left_ok = true;
  bool right_ok = true;
  std::vector<ObstructionWitness> witnesses;
};

/// Checks A B_i^+ within B_i^+ A (needed for right depth 2) and the mirror
/// inclusion (left depth 2) for every augmentation of the ambient algebra.
Depth2Obstruction depth2_obstruction(const SubalgebraEmbedding& e);

class DepthEngine {
 public:
  struct Options {
    /// Settle the n = 1 AB/BA flags from depth2_obstruction when it fails.
    bool obstruction_prefilter = true;
  };

  explicit DepthEngine(SubalgebraEmbedding e) : DepthEngine(std::move(e), Options{}) {}
  DepthEngine(SubalgebraEmbedding e, Options options);

  const TensorChain& chain() const { return chain_; }
  const SubalgebraEmbedding& embedding() const { return chain_.embedding(); }

  bool depth1();
  bool depth1_reverse();
  bool flag(std::size_t n, Structure s);
  /// Computes all four flags at level n.
  LevelFlags level_flags(std::size_t n);
  /// Flags computed so far, by level.
  std::vector<LevelFlags> known_flags() const;
  /// Obstruction result when the ambient algebra has augmentations.
  const std::optional<Depth2Obstruction>& obstruction();

  /// Tests depth values 1, 2, ..., cutoff in order and stops at the first that holds.
  DepthReport min_depth(std::size_t cutoff, bool with_h_depth = true);
  /// Least 2n-1 <= cutoff with AA(n), else a lower bound.
  DepthValue h_depth(std::size_t cutoff);

  /// Throws EngineInvariantError if the computed flags violate monotonicity
  /// or the restriction implications.
  void check_invariants();

 private:
  TensorChain chain_;
  Options options_;
  std::optional<bool> depth1_;
  std::optional<bool> depth1_reverse_;
  std::map<std::pair<std::size_t, Structure>, bool> flags_;
  bool obstruction_done_ = false;
  std::optional<Depth2Obstruction> obstruction_;
};

DepthReport min_depth(const SubalgebraEmbedding& e, std::size_t cutoff, bool with_h_depth = true);

/// a <= b where either side may be a lower bound; unknown when undecidable.
std::optional<bool> depth_leq(const DepthValue& a, const DepthValue& b);

struct QuotientExtension {
  Quotient ambient;
  SubalgebraEmbedding embedding;
};

/// B/I inside A/I for an A-ideal I contained in B.
QuotientExtension quotient_extension(const SubalgebraEmbedding& e, const Ideal& ideal);

struct QuotientCheck {
  DepthValue original;
  DepthValue quotient;
  /// quotient <= original; unset when both are lower bounds.
  std::optional<bool> monotone;
};

QuotientCheck quotient_depth_check(const SubalgebraEmbedding& e, const Ideal& ideal, std::size_t cutoff);

struct ChainCheck {
  /// Depth of the quotient by each ideal, in the given order, then of e itself.
  std::vector<DepthValue> depths;
  std::optional<bool> monotone;
};

/// For ideals listed largest first, the depths must be non-decreasing.
ChainCheck quotient_chain_check(const SubalgebraEmbedding& e, const std::vector<Ideal>& chain, std::size_t cutoff);

nlohmann::ordered_json to_json(const DepthValue& d);
nlohmann::ordered_json to_json(const DepthReport& r);

}  // namespace pathdepth
