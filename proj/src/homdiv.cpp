#include "pathdepth/homdiv.hpp"

#include <map>
#include <random>

#include "pathdepth/error.hpp"

namespace pathdepth {

namespace {

struct ActionPair {
  Mat source;
  Mat target;
};

std::vector<SparseVec> acting_elements(const Algebra& a, GeneratorMode mode) {
  if (mode == GeneratorMode::Generators) return a.generators();
  std::vector<SparseVec> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.basis_vector(i));
  return out;
}

// Entry (r, c) of g * f given the rows of g and the columns of f.
Scalar product_entry(const SparseVec& g_row, const SparseVec& f_col, const Field& f) { return dot(g_row, f_col, f); }

Mat random_combination(const HomSpace& h, std::mt19937& rng, const Field& f) {
  Mat out(h.target_dim, h.source_dim);
  for (const auto& b : h.basis) {
    Scalar c(static_cast<long>(rng() % 7) - 3);
    if (c != 0) out = axpy(out, f.normalize(c), b, f);
  }
  return out;
}

// Looks for maps f_i: m -> n and g_i: n -> m with sum g_i f_i invertible,
// which makes m a summand of n^k. Finding one proves membership; failing
// proves nothing.
bool split_certificate(const HomSpace& forward, const HomSpace& backward, std::size_t dim_m, const Field& f) {
  std::mt19937 rng(0x5eed);
  Mat sum(dim_m, dim_m);
  std::size_t terms = 0;
  std::size_t next_test = 1;
  while (terms < dim_m) {
    Mat fm = random_combination(forward, rng, f);
    Mat gm = random_combination(backward, rng, f);
    sum = add(sum, multiply(gm, fm, f), f);
    ++terms;
    if (terms == next_test || terms == dim_m) {
      if (rank(sum, f) == dim_m) return true;
      next_test *= 2;
    }
  }
  return false;
}

}  // namespace

SparseVec HomSpace::coordinates(const Mat& f) const {
  SparseVec out(positions.size());
  for (std::size_t k = 0; k < positions.size(); ++k) out.append(k, f.at(positions[k].first, positions[k].second));
  return out;
}

HomSpace hom_space(const Bimodule& m, const Bimodule& n, GeneratorMode mode) {
  if (!same_algebra(m.left(), n.left()) || !same_algebra(m.right(), n.right()))
    throw ValidationError("hom space between bimodules over different algebra pairs");
  const Field& f = m.field();
  const std::size_t dm = m.dim();
  const std::size_t dn = n.dim();
  HomSpace out;
  out.source_dim = dm;
  out.target_dim = dn;
  if (dm == 0 || dn == 0) return out;

  std::vector<ActionPair> pairs;
  for (const auto& x : acting_elements(*m.left(), mode)) pairs.push_back({m.left_action_of(x), n.left_action_of(x)});
  for (const auto& y : acting_elements(*m.right(), mode)) pairs.push_back({m.right_action_of(y), n.right_action_of(y)});

  // Diagonal actions force F[r][c] = 0 unless the eigenvalues at r and c agree.
  std::vector<std::vector<Scalar>> sig_source(dm);
  std::vector<std::vector<Scalar>> sig_target(dn);
  std::vector<const ActionPair*> general;
  for (const auto& p : pairs) {
    if (p.source.is_diagonal() && p.target.is_diagonal()) {
      for (std::size_t c = 0; c < dm; ++c) sig_source[c].push_back(p.source.at(c, c));
      for (std::size_t r = 0; r < dn; ++r) sig_target[r].push_back(p.target.at(r, r));
    } else {
      general.push_back(&p);
    }
  }
  std::map<std::vector<Scalar>, std::vector<std::size_t>> by_signature;
  for (std::size_t c = 0; c < dm; ++c) by_signature[sig_source[c]].push_back(c);

  std::vector<long> var(dn * dm, -1);
  std::vector<std::pair<std::size_t, std::size_t>> cell;
  for (std::size_t r = 0; r < dn; ++r) {
    auto it = by_signature.find(sig_target[r]);
    if (it == by_signature.end()) continue;
    for (std::size_t c : it->second) {
      var[r * dm + c] = static_cast<long>(cell.size());
      cell.emplace_back(r, c);
    }
  }
  const std::size_t nvars = cell.size();
  if (nvars == 0) return out;

  // (F P_source - P_target F)[r][c] = 0
  std::vector<SparseVec> equations;
  for (const ActionPair* p : general) {
    std::vector<SparseVec> src_cols = p->source.columns();
    for (std::size_t r = 0; r < dn; ++r) {
      const SparseVec& tgt_row = p->target.row(r);
      for (std::size_t c = 0; c < dm; ++c) {
        VecAccumulator acc(f);
        for (const auto& e : src_cols[c]) {
          long v = var[r * dm + e.index];
          if (v >= 0) acc.add(static_cast<std::size_t>(v), e.value);
        }
        for (const auto& e : tgt_row) {
          long v = var[e.index * dm + c];
          if (v >= 0) acc.add(static_cast<std::size_t>(v), f.neg(e.value));
        }
        SparseVec eq = acc.finish(nvars);
        if (!eq.is_zero()) equations.push_back(std::move(eq));
      }
    }
  }

  Kernel k = kernel(Mat::from_rows(nvars, std::move(equations)), f);
  for (const auto& v : k.basis) {
    std::vector<SparseVec> rows(dn, SparseVec(dm));
    for (const auto& e : v) rows[cell[e.index].first].append(cell[e.index].second, e.value);
    out.basis.push_back(Mat::from_rows(dm, std::move(rows)));
  }
  for (std::size_t c : k.free_columns) out.positions.push_back(cell[c]);
  return out;
}

AlgebraPtr end_algebra(const Bimodule& m) {
  const Field& f = m.field();
  HomSpace h = hom_space(m, m);
  const std::size_t d = h.dim();
  if (d == 0) throw ValidationError("endomorphism algebra of the zero bimodule");
  std::vector<std::vector<SparseVec>> cols;
  for (const auto& b : h.basis) cols.push_back(b.columns());

  Algebra::Parts parts;
  parts.field = f;
  parts.mult.assign(d, std::vector<SparseVec>(d));
  for (std::size_t a = 0; a < d; ++a) {
    parts.labels.push_back("f" + std::to_string(a));
    for (std::size_t b = 0; b < d; ++b) {
      SparseVec coords(d);
      for (std::size_t k = 0; k < d; ++k) {
        const auto& [r, c] = h.positions[k];
        coords.append(k, product_entry(h.basis[a].row(r), cols[b][c], f));
      }
      parts.mult[a][b] = std::move(coords);
    }
  }
  parts.unit = h.coordinates(Mat::identity(m.dim()));
  return std::make_shared<const Algebra>(std::move(parts));
}

bool in_add(const Bimodule& m, const Bimodule& n) {
  if (m.dim() == 0) return true;
  if (n.dim() == 0) return false;
  const Field& f = m.field();
  HomSpace forward = hom_space(m, n);
  if (forward.dim() == 0) return false;
  HomSpace backward = hom_space(n, m);
  if (backward.dim() == 0) return false;
  if (split_certificate(forward, backward, m.dim(), f)) return true;
  HomSpace end = hom_space(m, m);

  SparseVec identity(end.dim());
  for (std::size_t k = 0; k < end.dim(); ++k) {
    if (end.positions[k].first == end.positions[k].second) identity.append(k, Scalar(1));
  }

  // id_m lies in the span of g o f exactly when some finite sum of such
  // composites equals it, since composition is bilinear.
  EchelonBasis span(end.dim(), f);
  for (const auto& fm : forward.basis) {
    std::vector<SparseVec> fcols = fm.columns();
    for (const auto& g : backward.basis) {
      SparseVec coords(end.dim());
      for (std::size_t k = 0; k < end.dim(); ++k) {
        const auto& [r, c] = end.positions[k];
        coords.append(k, product_entry(g.row(r), fcols[c], f));
      }
      span.insert(coords);
      if (span.rank() == end.dim()) return true;
    }
    if (span.contains(identity)) return true;
  }
  return span.contains(identity);
}

bool h_equivalent(const Bimodule& m, const Bimodule& n) { return in_add(m, n) && in_add(n, m); }

}  // namespace pathdepth
