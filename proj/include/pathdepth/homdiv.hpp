#pragma once

// Bimodule maps, endomorphism algebras and add-membership.

#include <cstddef>
#include <utility>
#include <vector>

#include "pathdepth/algebra.hpp"
#include "pathdepth/bimodule.hpp"

namespace pathdepth {

enum class GeneratorMode {
  /// Impose commutation with algebra generators only.
  Generators,
  /// Impose commutation with every basis element (cross-check).
  FullBasis,
};

struct HomSpace {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  /// target_dim x source_dim matrices.
  std::vector<Mat> basis;
  /// basis[k] has entry 1 at positions[k] and 0 at every other listed position.
  std::vector<std::pair<std::size_t, std::size_t>> positions;

  std::size_t dim() const { return basis.size(); }
  /// Coordinates of a map known to lie in the space.
  SparseVec coordinates(const Mat& f) const;
};

HomSpace hom_space(const Bimodule& m, const Bimodule& n, GeneratorMode mode = GeneratorMode::Generators);

/// Composition algebra on hom_space(m, m); basis "f0", "f1", ...; product(a, b) = f_a o f_b.
AlgebraPtr end_algebra(const Bimodule& m);

/// m is a direct summand of some multiple of n.
bool in_add(const Bimodule& m, const Bimodule& n);
bool h_equivalent(const Bimodule& m, const Bimodule& n);

}  // namespace pathdepth
