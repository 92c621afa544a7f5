#include "pathdepth/depth.hpp"

#include "pathdepth/error.hpp"
#include "pathdepth/families.hpp"
#include "pathdepth/homdiv.hpp"

namespace pathdepth {

std::string to_string(const DepthValue& d) {
  return d.exact ? std::to_string(d.value) : ">= " + std::to_string(d.value);
}

std::optional<std::size_t> odd_depth(const DepthValue& d) {
  if (!d.exact) return std::nullopt;
  return d.value % 2 == 1 ? d.value : d.value + 1;
}

Depth2Obstruction depth2_obstruction(const SubalgebraEmbedding& e) {
  const Algebra& a = *e.ambient();
  const Field& f = a.field();
  Depth2Obstruction out;
  for (const Augmentation& rho : augmentations(e.ambient())) {
    Subspace plus = augmentation_ideal(e, rho);
    std::vector<SparseVec> a_plus;
    std::vector<SparseVec> plus_a;
    for (std::size_t k = 0; k < a.dim(); ++k) {
      for (const auto& p : plus.basis()) {
        a_plus.push_back(a.multiply(a.basis_vector(k), p));
        plus_a.push_back(a.multiply(p, a.basis_vector(k)));
      }
    }
    Subspace a_plus_space(a.dim(), a_plus, f);
    Subspace plus_a_space(a.dim(), plus_a, f);
    for (const auto& v : a_plus_space.basis()) {
      if (!plus_a_space.contains(v)) {
        out.right_ok = false;
        out.witnesses.push_back({rho.index, true, v});
        break;
      }
    }
    for (const auto& v : plus_a_space.basis()) {
      if (!a_plus_space.contains(v)) {
        out.left_ok = false;
        out.witnesses.push_back({rho.index, false, v});
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// DepthEngine

DepthEngine::DepthEngine(SubalgebraEmbedding e, Options options) : chain_(std::move(e)), options_(options) {}

bool DepthEngine::depth1() {
  if (!depth1_) depth1_ = in_add(*chain_.level_as(1, Structure::BB), *chain_.level_as(0, Structure::BB));
  return *depth1_;
}

bool DepthEngine::depth1_reverse() {
  if (!depth1_reverse_)
    depth1_reverse_ = in_add(*chain_.level_as(0, Structure::BB), *chain_.level_as(1, Structure::BB));
  return *depth1_reverse_;
}

const std::optional<Depth2Obstruction>& DepthEngine::obstruction() {
  if (!obstruction_done_) {
    obstruction_done_ = true;
    try {
      obstruction_ = depth2_obstruction(embedding());
    } catch (const ValidationError&) {
      obstruction_.reset();
    }
  }
  return obstruction_;
}

bool DepthEngine::flag(std::size_t n, Structure s) {
  if (n == 0) throw std::invalid_argument("depth flags start at level 1");
  auto key = std::make_pair(n, s);
  if (auto it = flags_.find(key); it != flags_.end()) return it->second;
  bool value;
  if (n == 1 && options_.obstruction_prefilter && (s == Structure::AB || s == Structure::BA) && obstruction() &&
      !(s == Structure::AB ? obstruction()->right_ok : obstruction()->left_ok)) {
    value = false;
  } else if (s == Structure::AA) {
    value = h_equivalent(*chain_.level(n + 1), *chain_.level(n));
  } else {
    value = in_add(*chain_.level_as(n + 1, s), *chain_.level_as(n, s));
  }
  flags_[key] = value;
  check_invariants();
  return value;
}

LevelFlags DepthEngine::level_flags(std::size_t n) {
  LevelFlags out;
  out.n = n;
  out.bb = flag(n, Structure::BB);
  out.ab = flag(n, Structure::AB);
  out.ba = flag(n, Structure::BA);
  out.aa = flag(n, Structure::AA);
  return out;
}

std::vector<LevelFlags> DepthEngine::known_flags() const {
  std::map<std::size_t, LevelFlags> levels;
  for (const auto& [key, value] : flags_) {
    LevelFlags& lf = levels[key.first];
    lf.n = key.first;
    switch (key.second) {
      case Structure::AA: lf.aa = value; break;
      case Structure::AB: lf.ab = value; break;
      case Structure::BA: lf.ba = value; break;
      case Structure::BB: lf.bb = value; break;
    }
  }
  std::vector<LevelFlags> out;
  for (auto& [n, lf] : levels) out.push_back(lf);
  return out;
}

void DepthEngine::check_invariants() {
  auto known = [&](std::size_t n, Structure s) -> std::optional<bool> {
    auto it = flags_.find({n, s});
    if (it == flags_.end()) return std::nullopt;
    return it->second;
  };
  auto fail = [](const std::string& what) { throw EngineInvariantError(what); };
  for (const auto& [key, value] : flags_) {
    if (!value) continue;
    const auto [n, s] = key;
    if (known(n + 1, s) == false) fail(std::string(structure_name(s)) + " flag true at level " + std::to_string(n) +
                                       " but false at level " + std::to_string(n + 1));
    if ((s == Structure::AB || s == Structure::BA) && known(n, Structure::BB) == false)
      fail(std::string(structure_name(s)) + " flag true without BB at level " + std::to_string(n));
    if (s == Structure::AA && (known(n, Structure::AB) == false || known(n, Structure::BA) == false))
      fail("AA flag true without AB and BA at level " + std::to_string(n));
  }
  if (depth1_ == true && known(1, Structure::BB) == false) fail("depth one holds but BB fails at level 1");
  if (obstruction_) {
    if (!obstruction_->right_ok && known(1, Structure::AB) == true)
      fail("AB flag true at level 1 despite the augmentation obstruction");
    if (!obstruction_->left_ok && known(1, Structure::BA) == true)
      fail("BA flag true at level 1 despite the augmentation obstruction");
  }
}

DepthValue DepthEngine::h_depth(std::size_t cutoff) {
  for (std::size_t n = 1; 2 * n - 1 <= cutoff; ++n) {
    if (flag(n, Structure::AA)) return {2 * n - 1, true};
  }
  return {cutoff % 2 == 1 ? cutoff + 2 : cutoff + 1, false};
}

DepthReport DepthEngine::min_depth(std::size_t cutoff, bool with_h_depth) {
  if (cutoff == 0) throw std::invalid_argument("cutoff must be at least 1");
  DepthReport report;
  report.cutoff = cutoff;
  report.field = embedding().ambient()->field().to_string();
  report.depth1 = depth1();
  report.depth1_reverse = depth1_reverse();
  report.depth1_discrepancy = report.depth1 && !report.depth1_reverse;
  report.min_depth = {cutoff + 1, false};
  if (report.depth1) {
    report.min_depth = {1, true};
  } else {
    for (std::size_t n = 1; 2 * n <= cutoff; ++n) {
      bool ab = flag(n, Structure::AB);
      bool ba = flag(n, Structure::BA);
      if (ab || ba) {
        flag(n, Structure::BB);
        report.min_depth = {2 * n, true};
        break;
      }
      if (2 * n + 1 > cutoff) break;
      if (flag(n, Structure::BB)) {
        report.min_depth = {2 * n + 1, true};
        break;
      }
    }
  }
  report.odd_depth = odd_depth(report.min_depth);
  if (with_h_depth) {
    DepthValue h = h_depth(cutoff);
    if (h.exact && report.min_depth.exact && report.min_depth.value > h.value + 1)
      throw EngineInvariantError("H-depth " + std::to_string(h.value) + " below minimum depth " +
                                 std::to_string(report.min_depth.value) + " minus one");
    report.h_depth = h;
  }
  check_invariants();
  report.flags = known_flags();
  return report;
}

DepthReport min_depth(const SubalgebraEmbedding& e, std::size_t cutoff, bool with_h_depth) {
  DepthEngine engine(e);
  return engine.min_depth(cutoff, with_h_depth);
}

std::optional<bool> depth_leq(const DepthValue& a, const DepthValue& b) {
  if (a.exact) return b.exact ? a.value <= b.value : (a.value <= b.value ? std::optional<bool>(true) : std::nullopt);
  if (b.exact) return b.value < a.value ? std::optional<bool>(false) : std::nullopt;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Quotients

QuotientExtension quotient_extension(const SubalgebraEmbedding& e, const Ideal& ideal) {
  if (!same_algebra(ideal.ambient(), e.ambient())) throw ValidationError("ideal lives in another algebra");
  for (const auto& v : ideal.basis()) {
    if (!e.image_space().contains(v)) throw ValidationError("ideal is not contained in the subalgebra");
  }
  Quotient q = quotient(ideal);
  std::vector<SparseVec> gens;
  for (const auto& v : e.images()) gens.push_back(q.project(v));
  SubalgebraEmbedding sub = subalgebra_closure(q.algebra, gens);
  return QuotientExtension{std::move(q), std::move(sub)};
}

QuotientCheck quotient_depth_check(const SubalgebraEmbedding& e, const Ideal& ideal, std::size_t cutoff) {
  QuotientExtension ext = quotient_extension(e, ideal);
  QuotientCheck out;
  out.original = min_depth(e, cutoff, false).min_depth;
  out.quotient = min_depth(ext.embedding, cutoff, false).min_depth;
  out.monotone = depth_leq(out.quotient, out.original);
  return out;
}

ChainCheck quotient_chain_check(const SubalgebraEmbedding& e, const std::vector<Ideal>& chain, std::size_t cutoff) {
  ChainCheck out;
  for (const Ideal& ideal : chain) {
    QuotientExtension ext = quotient_extension(e, ideal);
    out.depths.push_back(min_depth(ext.embedding, cutoff, false).min_depth);
  }
  out.depths.push_back(min_depth(e, cutoff, false).min_depth);
  out.monotone = true;
  for (std::size_t i = 0; i + 1 < out.depths.size(); ++i) {
    std::optional<bool> step = depth_leq(out.depths[i], out.depths[i + 1]);
    if (!step) {
      out.monotone.reset();
    } else if (!*step) {
      out.monotone = false;
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::ordered_json to_json(const DepthValue& d) {
  if (d.exact) return d.value;
  nlohmann::ordered_json j;
  j["at_least"] = d.value;
  return j;
}

nlohmann::ordered_json to_json(const DepthReport& r) {
  auto opt = [](const std::optional<bool>& b) -> nlohmann::ordered_json {
    if (!b) return nullptr;
    return *b;
  };
  nlohmann::ordered_json j;
  j["min_depth"] = to_json(r.min_depth);
  j["odd_depth"] = r.odd_depth ? nlohmann::ordered_json(*r.odd_depth) : nlohmann::ordered_json(nullptr);
  j["h_depth"] = r.h_depth ? to_json(*r.h_depth) : nlohmann::ordered_json(nullptr);
  j["depth1"] = r.depth1;
  j["depth1_reverse"] = r.depth1_reverse;
  j["depth1_discrepancy"] = r.depth1_discrepancy;
  auto flags = nlohmann::ordered_json::array();
  for (const auto& lf : r.flags) {
    nlohmann::ordered_json f;
    f["n"] = lf.n;
    f["AA"] = opt(lf.aa);
    f["AB"] = opt(lf.ab);
    f["BA"] = opt(lf.ba);
    f["BB"] = opt(lf.bb);
    flags.push_back(std::move(f));
  }
  j["flags"] = std::move(flags);
  j["cutoff"] = r.cutoff;
  j["field"] = r.field;
  return j;
}

}  // namespace pathdepth
