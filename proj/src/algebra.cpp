#include "pathdepth/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "pathdepth/error.hpp"

namespace pathdepth {

namespace {

SparseVec vec_from_json(const nlohmann::ordered_json& j, std::size_t dim) {
  SparseVec v(dim);
  for (const auto& item : j) v.append(item.at(0).get<std::size_t>(), parse_scalar(item.at(1).get<std::string>()));
  return v;
}

nlohmann::ordered_json vec_to_json(const SparseVec& v) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& e : v) out.push_back({e.index, to_string(e.value)});
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(Parts parts) : p_(std::move(parts)) {
  const std::size_t n = p_.labels.size();
  if (n == 0) throw ValidationError("algebra must have positive dimension");
  if (p_.mult.size() != n) throw ValidationError("structure table has wrong number of rows");
  for (const auto& row : p_.mult) {
    if (row.size() != n) throw ValidationError("structure table has wrong number of columns");
    for (const auto& v : row) {
      if (v.dim() != n) throw ValidationError("structure constant vector has wrong length");
    }
  }
  if (p_.unit.dim() != n) throw ValidationError("unit vector has wrong length");
  if (std::set<std::string>(p_.labels.begin(), p_.labels.end()).size() != n)
    throw ValidationError("basis labels are not unique");

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVec& ij = p_.mult[i][j];
      for (std::size_t k = 0; k < n; ++k) {
        SparseVec lhs = multiply(ij, basis_vector(k));
        SparseVec rhs = multiply(basis_vector(i), p_.mult[j][k]);
        if (!(lhs == rhs)) {
          throw ValidationError("structure constants are not associative at (" + p_.labels[i] + "*" + p_.labels[j] +
                                ")*" + p_.labels[k]);
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    SparseVec e = basis_vector(i);
    if (!(multiply(p_.unit, e) == e) || !(multiply(e, p_.unit) == e))
      throw ValidationError("unit is not a two-sided identity on basis element " + p_.labels[i]);
  }

  if (p_.vertex_idempotents) {
    const auto& idem = *p_.vertex_idempotents;
    VecAccumulator sum(p_.field);
    for (std::size_t a = 0; a < idem.size(); ++a) {
      if (idem[a].dim() != n) throw ValidationError("vertex idempotent has wrong length");
      for (std::size_t b = 0; b < idem.size(); ++b) {
        SparseVec prod = multiply(idem[a], idem[b]);
        bool ok = a == b ? prod == idem[a] : prod.is_zero();
        if (!ok) throw ValidationError("vertex idempotents are not orthogonal idempotents");
      }
      sum.add_scaled(idem[a], Scalar(1));
    }
    if (!(sum.finish(n) == p_.unit)) throw ValidationError("vertex idempotents do not sum to the unit");
  }
  if (p_.grading && p_.grading->size() != n) throw ValidationError("grading has wrong length");
  for (const auto& e : p_.block_idempotents) {
    if (e.dim() != n || !(multiply(e, e) == e)) throw ValidationError("block idempotent is not idempotent");
  }

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec e = basis_vector(i);
    if (multiply(e, e) == e && !(e == p_.unit)) order.push_back(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);
  }
  Subspace span = generated_subalgebra(*this, {});
  for (std::size_t i : order) {
    if (span.dim() == n) break;
    SparseVec e = basis_vector(i);
    if (span.contains(e)) continue;
    generators_.push_back(e);
    span = generated_subalgebra(*this, generators_);
  }
}

std::optional<std::size_t> Algebra::find_label(const std::string& label) const {
  auto it = std::find(p_.labels.begin(), p_.labels.end(), label);
  if (it == p_.labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - p_.labels.begin());
}

SparseVec Algebra::multiply(const SparseVec& x, const SparseVec& y) const {
  const std::size_t n = dim();
  if (x.dim() != n || y.dim() != n) throw std::invalid_argument("multiply: element has wrong length");
  if (x.nnz() == 1 && y.nnz() == 1) {
    const auto& ex = x.entries()[0];
    const auto& ey = y.entries()[0];
    return scale(p_.mult[ex.index][ey.index], p_.field.mul(ex.value, ey.value), p_.field);
  }
  VecAccumulator acc(p_.field);
  for (const auto& ex : x) {
    for (const auto& ey : y) acc.add_scaled(p_.mult[ex.index][ey.index], p_.field.mul(ex.value, ey.value));
  }
  return acc.finish(n);
}

Mat Algebra::left_multiplication(const SparseVec& x) const {
  std::vector<SparseVec> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(x, basis_vector(j)));
  return Mat::from_columns(dim(), cols);
}

Mat Algebra::right_multiplication(const SparseVec& x) const {
  std::vector<SparseVec> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(basis_vector(j), x));
  return Mat::from_columns(dim(), cols);
}

std::string Algebra::format(const SparseVec& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& e : x) {
    Scalar v = e.value;
    bool negative = sgn(v) < 0 && field().is_rationals();
    if (negative) v = -v;
    if (!out.empty() || negative) out += negative ? "-" : "+";
    if (v != 1) out += to_string(v) + "*";
    out += label(e.index);
  }
  return out;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  const auto& pa = a->parts();
  const auto& pb = b->parts();
  return pa.field == pb.field && pa.labels == pb.labels && pa.unit == pb.unit && pa.mult == pb.mult;
}

Subspace generated_subalgebra(const Algebra& a, const std::vector<SparseVec>& generators) {
  const std::size_t n = a.dim();
  EchelonBasis echelon(n, a.field());
  std::vector<SparseVec> found;
  std::deque<SparseVec> queue;
  auto push = [&](const SparseVec& v) {
    if (echelon.insert(v)) {
      found.push_back(v);
      queue.push_back(v);
    }
  };
  push(a.unit());
  for (const auto& g : generators) push(g);
  // Words are closed under right multiplication by generators.
  while (!queue.empty() && echelon.rank() < n) {
    SparseVec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) push(a.multiply(v, g));
  }
  return Subspace(n, found, a.field());
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(AlgebraPtr ambient, const std::vector<SparseVec>& spanning)
    : ambient_(std::move(ambient)), space_(ambient_->dim(), spanning, ambient_->field()) {
  for (const auto& v : space_.basis()) {
    for (std::size_t i = 0; i < ambient_->dim(); ++i) {
      SparseVec e = ambient_->basis_vector(i);
      if (!space_.contains(ambient_->multiply(e, v)) || !space_.contains(ambient_->multiply(v, e)))
        throw ValidationError("subspace is not a two-sided ideal (fails at " + ambient_->label(i) + ")");
    }
  }
}

bool Ideal::is_nilpotent() const {
  Subspace power = space_;
  for (std::size_t step = 0; step <= ambient_->dim() + 1; ++step) {
    if (power.dim() == 0) return true;
    std::vector<SparseVec> products;
    for (const auto& p : power.basis()) {
      for (const auto& v : space_.basis()) products.push_back(ambient_->multiply(p, v));
    }
    Subspace next(ambient_->dim(), products, ambient_->field());
    if (next.dim() == power.dim()) return false;
    power = std::move(next);
  }
  return power.dim() == 0;
}

// ---------------------------------------------------------------------------
// SubalgebraEmbedding

SubalgebraEmbedding::SubalgebraEmbedding(AlgebraPtr ambient, AlgebraPtr sub, std::vector<SparseVec> images)
    : ambient_(std::move(ambient)),
      sub_(std::move(sub)),
      images_(std::move(images)),
      image_space_(ambient_->dim(), images_, ambient_->field()) {
  if (!(ambient_->field() == sub_->field())) throw ValidationError("embedding between algebras over different fields");
  if (images_.size() != sub_->dim()) throw ValidationError("embedding needs one image per sub basis element");
  for (const auto& v : images_) {
    if (v.dim() != ambient_->dim()) throw ValidationError("embedding image has wrong length");
  }
  if (image_space_.dim() != images_.size()) throw ValidationError("inclusion map is not injective");
  if (!(map(sub_->unit()) == ambient_->unit())) throw ValidationError("inclusion does not preserve the unit");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = 0; j < images_.size(); ++j) {
      if (!(map(sub_->product(i, j)) == ambient_->multiply(images_[i], images_[j])))
        throw ValidationError("inclusion is not multiplicative at (" + sub_->label(i) + ", " + sub_->label(j) + ")");
    }
  }
}

Mat SubalgebraEmbedding::inclusion() const { return Mat::from_columns(ambient_->dim(), images_); }

SparseVec SubalgebraEmbedding::map(const SparseVec& sub_element) const {
  VecAccumulator acc(ambient_->field());
  for (const auto& e : sub_element) acc.add_scaled(images_[e.index], e.value);
  return acc.finish(ambient_->dim());
}

std::optional<SparseVec> SubalgebraEmbedding::preimage(const SparseVec& ambient_element) const {
  if (images_ == image_space_.basis()) return image_space_.coordinates(ambient_element);
  return solve(inclusion(), ambient_element, ambient_->field());
}

SubalgebraEmbedding identity_embedding(const AlgebraPtr& a) {
  std::vector<SparseVec> images;
  for (std::size_t i = 0; i < a->dim(); ++i) images.push_back(a->basis_vector(i));
  return SubalgebraEmbedding(a, a, std::move(images));
}

SubalgebraEmbedding subalgebra_closure(const AlgebraPtr& ambient, const std::vector<SparseVec>& generators) {
  const Algebra& a = *ambient;
  Subspace span = generated_subalgebra(a, generators);
  const auto& basis = span.basis();
  const std::size_t m = basis.size();

  Algebra::Parts parts;
  parts.field = a.field();
  for (const auto& b : basis) {
    if (b.nnz() == 1 && b.entries()[0].value == 1) {
      parts.labels.push_back(a.label(b.entries()[0].index));
    } else {
      parts.labels.push_back(a.format(b));
    }
  }
  parts.mult.assign(m, std::vector<SparseVec>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) parts.mult[i][j] = *span.coordinates(a.multiply(basis[i], basis[j]));
  }
  parts.unit = *span.coordinates(a.unit());
  if (a.vertex_idempotents()) {
    std::vector<SparseVec> idem;
    for (const auto& e : *a.vertex_idempotents()) {
      auto c = span.coordinates(e);
      if (!c) break;
      idem.push_back(*c);
    }
    if (idem.size() == a.vertex_idempotents()->size()) parts.vertex_idempotents = std::move(idem);
  }
  for (const auto& e : a.block_idempotents()) {
    if (auto c = span.coordinates(e)) parts.block_idempotents.push_back(*c);
  }
  auto sub = std::make_shared<const Algebra>(std::move(parts));
  return SubalgebraEmbedding(ambient, sub, basis);
}

// ---------------------------------------------------------------------------
// Path algebras

AlgebraPtr path_algebra(const Quiver& q, const Field& field) {
  std::vector<Path> paths = enumerate_paths(q);
  const std::size_t n = paths.size();
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[{paths[i].source, paths[i].arrows}] = i;

  Algebra::Parts parts;
  parts.field = field;
  parts.mult.assign(n, std::vector<SparseVec>(n, SparseVec(n)));
  std::vector<PathGrade> grading;
  for (std::size_t i = 0; i < n; ++i) {
    parts.labels.push_back(path_label(q, paths[i]));
    grading.push_back({paths[i].length(), paths[i].source, paths[i].target});
    for (std::size_t j = 0; j < n; ++j) {
      if (paths[i].target != paths[j].source) continue;
      std::vector<std::size_t> joined = paths[i].arrows;
      joined.insert(joined.end(), paths[j].arrows.begin(), paths[j].arrows.end());
      parts.mult[i][j] = SparseVec::unit(n, index.at({paths[i].source, joined}));
    }
  }
  std::vector<SparseVec> idem;
  VecAccumulator unit(field);
  for (std::size_t v = 1; v <= q.vertex_count(); ++v) {
    std::size_t i = index.at({v, {}});
    idem.push_back(SparseVec::unit(n, i));
    unit.add(i, Scalar(1));
  }
  parts.unit = unit.finish(n);
  parts.vertex_idempotents = std::move(idem);
  parts.grading = std::move(grading);
  return std::make_shared<const Algebra>(std::move(parts));
}

// ---------------------------------------------------------------------------
// Quotients and products

SparseVec Quotient::project(const SparseVec& x) const { return apply(projection, x, algebra->field()); }

Quotient quotient(const Ideal& ideal) {
  const Algebra& a = *ideal.ambient();
  const Field& f = a.field();
  const Subspace& space = ideal.space();
  const std::size_t n = a.dim();
  std::vector<std::size_t> kept = space.non_pivots();
  const std::size_t m = kept.size();
  if (m == 0) throw ValidationError("quotient by the whole algebra is the zero ring");

  std::vector<long> position(n, -1);
  for (std::size_t k = 0; k < m; ++k) position[kept[k]] = static_cast<long>(k);
  std::vector<SparseVec> columns(n, SparseVec(m));
  for (std::size_t k = 0; k < m; ++k) columns[kept[k]] = SparseVec::unit(m, k);
  for (std::size_t r = 0; r < space.dim(); ++r) {
    SparseVec col(m);
    for (const auto& e : space.basis()[r]) {
      if (e.index == space.pivots()[r]) continue;
      col.append(static_cast<std::size_t>(position[e.index]), f.neg(e.value));
    }
    columns[space.pivots()[r]] = std::move(col);
  }

  auto project = [&](const SparseVec& v) {
    VecAccumulator acc(f);
    for (const auto& e : v) acc.add_scaled(columns[e.index], e.value);
    return acc.finish(m);
  };

  Algebra::Parts parts;
  parts.field = f;
  parts.mult.assign(m, std::vector<SparseVec>(m));
  for (std::size_t i = 0; i < m; ++i) {
    parts.labels.push_back(a.label(kept[i]));
    for (std::size_t j = 0; j < m; ++j) parts.mult[i][j] = project(a.product(kept[i], kept[j]));
  }
  parts.unit = project(a.unit());
  if (a.vertex_idempotents()) {
    std::vector<SparseVec> idem;
    for (const auto& e : *a.vertex_idempotents()) idem.push_back(project(e));
    parts.vertex_idempotents = std::move(idem);
  }
  for (const auto& e : a.block_idempotents()) parts.block_idempotents.push_back(project(e));
  if (a.grading()) {
    // Grading survives when every ideal basis vector is homogeneous.
    const auto& g = *a.grading();
    bool homogeneous = std::all_of(space.basis().begin(), space.basis().end(), [&](const SparseVec& v) {
      return std::all_of(v.begin(), v.end(), [&](const auto& e) { return g[e.index] == g[v.entries()[0].index]; });
    });
    if (homogeneous) {
      std::vector<PathGrade> kept_grades;
      for (std::size_t i : kept) kept_grades.push_back(g[i]);
      parts.grading = std::move(kept_grades);
    }
  }

  Quotient out;
  out.algebra = std::make_shared<const Algebra>(std::move(parts));
  out.projection = Mat::from_columns(m, columns);
  out.kept = std::move(kept);
  return out;
}

AlgebraPtr direct_product(const AlgebraPtr& a1, const AlgebraPtr& a2) {
  if (!(a1->field() == a2->field())) throw ValidationError("direct product of algebras over different fields");
  const std::size_t n1 = a1->dim();
  const std::size_t n2 = a2->dim();
  const std::size_t n = n1 + n2;
  Algebra::Parts parts;
  parts.field = a1->field();
  parts.mult.assign(n, std::vector<SparseVec>(n, SparseVec(n)));
  for (std::size_t i = 0; i < n1; ++i) {
    parts.labels.push_back("1:" + a1->label(i));
    for (std::size_t j = 0; j < n1; ++j) parts.mult[i][j] = embed(a1->product(i, j), n, 0);
  }
  for (std::size_t i = 0; i < n2; ++i) {
    parts.labels.push_back("2:" + a2->label(i));
    for (std::size_t j = 0; j < n2; ++j) parts.mult[n1 + i][n1 + j] = embed(a2->product(i, j), n, n1);
  }
  parts.unit = concat(a1->unit(), a2->unit());
  parts.block_idempotents = {embed(a1->unit(), n, 0), embed(a2->unit(), n, n1)};
  if (a1->vertex_idempotents() && a2->vertex_idempotents()) {
    std::vector<SparseVec> idem;
    for (const auto& e : *a1->vertex_idempotents()) idem.push_back(embed(e, n, 0));
    for (const auto& e : *a2->vertex_idempotents()) idem.push_back(embed(e, n, n1));
    parts.vertex_idempotents = std::move(idem);
    if (a1->grading() && a2->grading()) {
      const std::size_t shift = a1->vertex_idempotents()->size();
      std::vector<PathGrade> g = *a1->grading();
      for (PathGrade pg : *a2->grading()) {
        pg.source += shift;
        pg.target += shift;
        g.push_back(pg);
      }
      parts.grading = std::move(g);
    }
  }
  return std::make_shared<const Algebra>(std::move(parts));
}

SubalgebraEmbedding direct_product(const SubalgebraEmbedding& e1, const SubalgebraEmbedding& e2) {
  AlgebraPtr ambient = direct_product(e1.ambient(), e2.ambient());
  AlgebraPtr sub = direct_product(e1.sub(), e2.sub());
  const std::size_t n = ambient->dim();
  const std::size_t n1 = e1.ambient()->dim();
  std::vector<SparseVec> images;
  for (const auto& v : e1.images()) images.push_back(embed(v, n, 0));
  for (const auto& v : e2.images()) images.push_back(embed(v, n, n1));
  return SubalgebraEmbedding(ambient, sub, std::move(images));
}

// ---------------------------------------------------------------------------
// Radicals

Ideal graded_radical_power(const AlgebraPtr& a, std::size_t k) {
  if (!a->grading()) throw ValidationError("algebra carries no path grading; use dickson_radical");
  std::vector<SparseVec> spanning;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    if ((*a->grading())[i].length >= k) spanning.push_back(a->basis_vector(i));
  }
  return Ideal(a, spanning);
}

Ideal graded_radical(const AlgebraPtr& a) { return graded_radical_power(a, 1); }

Ideal dickson_radical(const AlgebraPtr& a) {
  if (!a->field().is_rationals())
    throw ValidationError("the trace-form radical criterion needs characteristic zero");
  const std::size_t n = a->dim();
  const Field& f = a->field();
  std::vector<Scalar> trace(n);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t i = 0; i < n; ++i) trace[l] += a->product(l, i).at(i);
  }
  // Row y, column x: tr(L_{e_x e_y}).
  std::vector<SparseVec> rows;
  for (std::size_t y = 0; y < n; ++y) {
    SparseVec row(n);
    for (std::size_t x = 0; x < n; ++x) {
      Scalar t(0);
      for (const auto& e : a->product(x, y)) t += e.value * trace[e.index];
      row.append(x, f.normalize(t));
    }
    rows.push_back(std::move(row));
  }
  return Ideal(a, kernel_basis(Mat::from_rows(n, std::move(rows)), f));
}

bool is_local(const AlgebraPtr& a) { return a->dim() - dickson_radical(a).dim() == 1; }

// ---------------------------------------------------------------------------
// Serialization

nlohmann::ordered_json to_json(const Algebra& a) {
  nlohmann::ordered_json j;
  j["format"] = "pathdepth-algebra";
  j["version"] = 1;
  j["field"] = a.field().to_string();
  j["labels"] = a.labels();
  j["unit"] = vec_to_json(a.unit());
  auto mult = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (!a.product(i, k).is_zero()) mult.push_back({i, k, vec_to_json(a.product(i, k))});
    }
  }
  j["mult"] = std::move(mult);
  if (a.vertex_idempotents()) {
    auto idem = nlohmann::ordered_json::array();
    for (const auto& e : *a.vertex_idempotents()) idem.push_back(vec_to_json(e));
    j["vertex_idempotents"] = std::move(idem);
  }
  if (a.grading()) {
    auto g = nlohmann::ordered_json::array();
    for (const auto& pg : *a.grading()) g.push_back({pg.length, pg.source, pg.target});
    j["grading"] = std::move(g);
  }
  auto blocks = nlohmann::ordered_json::array();
  for (const auto& e : a.block_idempotents()) blocks.push_back(vec_to_json(e));
  j["block_idempotents"] = std::move(blocks);
  return j;
}

AlgebraPtr algebra_from_json(const nlohmann::ordered_json& j) {
  try {
    if (j.at("format") != "pathdepth-algebra") throw ValidationError("not a serialized algebra");
    if (j.at("version") != 1) throw ValidationError("unsupported algebra format version");
    Algebra::Parts parts;
    parts.field = Field::parse(j.at("field").get<std::string>());
    parts.labels = j.at("labels").get<std::vector<std::string>>();
    const std::size_t n = parts.labels.size();
    parts.unit = vec_from_json(j.at("unit"), n);
    parts.mult.assign(n, std::vector<SparseVec>(n, SparseVec(n)));
    for (const auto& item : j.at("mult")) {
      parts.mult.at(item.at(0).get<std::size_t>()).at(item.at(1).get<std::size_t>()) = vec_from_json(item.at(2), n);
    }
    if (j.contains("vertex_idempotents")) {
      std::vector<SparseVec> idem;
      for (const auto& e : j.at("vertex_idempotents")) idem.push_back(vec_from_json(e, n));
      parts.vertex_idempotents = std::move(idem);
    }
    if (j.contains("grading")) {
      std::vector<PathGrade> g;
      for (const auto& pg : j.at("grading")) {
        g.push_back({pg.at(0).get<std::size_t>(), pg.at(1).get<std::size_t>(), pg.at(2).get<std::size_t>()});
      }
      parts.grading = std::move(g);
    }
    if (j.contains("block_idempotents")) {
      for (const auto& e : j.at("block_idempotents")) parts.block_idempotents.push_back(vec_from_json(e, n));
    }
    return std::make_shared<const Algebra>(std::move(parts));
  } catch (const nlohmann::json::exception& ex) {
    throw ValidationError(std::string("malformed algebra JSON: ") + ex.what());
  } catch (const std::out_of_range& ex) {
    throw ValidationError(std::string("malformed algebra JSON: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ValidationError(std::string("malformed algebra JSON: ") + ex.what());
  }
}

}  // namespace pathdepth
