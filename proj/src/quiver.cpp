#include "pathdepth/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "pathdepth/error.hpp"

namespace pathdepth {

namespace {

bool is_reserved_label(const std::string& label) {
  // "e<digits>" names stationary paths.
  return label.size() > 1 && label[0] == 'e' &&
         label.find_first_not_of("0123456789", 1) == std::string::npos;
}

bool is_valid_label(const std::string& label) {
  if (label.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(label[0])) || label[0] == '_')) return false;
  return std::all_of(label.begin(), label.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

std::optional<std::size_t> parse_count(const std::string& tok) {
  if (tok.empty() || tok.size() > 9 || tok.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  return static_cast<std::size_t>(std::stoul(tok));
}

}  // namespace

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  if (vertex_count_ == 0) throw ValidationError("a quiver needs at least one vertex");
  std::set<std::string> seen;
  for (const auto& a : arrows_) {
    if (!is_valid_label(a.label)) throw ValidationError("invalid arrow label '" + a.label + "'");
    if (is_reserved_label(a.label))
      throw ValidationError("arrow label '" + a.label + "' collides with a stationary path name");
    if (!seen.insert(a.label).second) throw ValidationError("duplicate arrow label '" + a.label + "'");
    if (a.source < 1 || a.source > vertex_count_ || a.target < 1 || a.target > vertex_count_)
      throw ValidationError("arrow '" + a.label + "' has a vertex outside 1.." + std::to_string(vertex_count_));
  }
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view label) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].label == label) return i;
  }
  return std::nullopt;
}

Quiver parse_quiver(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> vertices;
  std::vector<Arrow> arrows;
  std::set<std::string> labels;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "vertices") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'vertices <n>'");
      if (vertices) throw ParseError(lineno, "duplicate 'vertices' line");
      auto n = parse_count(tok[1]);
      if (!n || *n == 0) throw ParseError(lineno, "vertex count must be a positive integer");
      vertices = n;
    } else if (tok[0] == "arrow") {
      if (tok.size() != 4) throw ParseError(lineno, "expected 'arrow <label> <source> <target>'");
      if (!vertices) throw ParseError(lineno, "'arrow' before 'vertices'");
      const std::string& label = tok[1];
      if (!is_valid_label(label) || is_reserved_label(label)) throw ParseError(lineno, "invalid arrow label '" + label + "'");
      if (!labels.insert(label).second) throw ParseError(lineno, "duplicate arrow label '" + label + "'");
      auto s = parse_count(tok[2]);
      auto t = parse_count(tok[3]);
      if (!s || !t) throw ParseError(lineno, "vertex indices must be positive integers");
      if (*s < 1 || *s > *vertices || *t < 1 || *t > *vertices)
        throw ParseError(lineno, "vertex out of range 1.." + std::to_string(*vertices));
      arrows.push_back({label, *s, *t});
    } else {
      throw ParseError(lineno, "unknown keyword '" + tok[0] + "'");
    }
  }
  if (!vertices) throw ParseError(lineno, "missing 'vertices' line");
  return Quiver(*vertices, std::move(arrows));
}

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open quiver file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_quiver(buf.str());
}

std::string serialize(const Quiver& q) {
  std::ostringstream out;
  out << "vertices " << q.vertex_count() << "\n";
  for (const auto& a : q.arrows()) out << "arrow " << a.label << " " << a.source << " " << a.target << "\n";
  return out.str();
}

Quiver linear_quiver(std::size_t n) {
  std::vector<Arrow> arrows;
  for (std::size_t i = 2; i <= n; ++i) arrows.push_back({"a" + std::to_string(i), i, i - 1});
  return Quiver(n, std::move(arrows));
}

Quiver kronecker_quiver() { return Quiver(2, {{"alpha", 2, 1}, {"beta", 2, 1}}); }

QuiverReport validate(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<std::size_t>> out(n + 1);
  for (const auto& a : q.arrows()) out[a.source].push_back(a.target);

  QuiverReport r;

  // Directed cycle search; a loop is a cycle of length one.
  std::vector<int> color(n + 1, 0);
  bool cyclic = false;
  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    color[v] = 1;
    for (std::size_t w : out[v]) {
      if (color[w] == 1) cyclic = true;
      if (color[w] == 0) dfs(w);
    }
    color[v] = 2;
  };
  for (std::size_t v = 1; v <= n; ++v) {
    if (color[v] == 0) dfs(v);
  }
  r.acyclic = !cyclic;

  std::vector<std::size_t> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& a : q.arrows()) parent[find(a.source)] = find(a.target);
  std::set<std::size_t> roots;
  for (std::size_t v = 1; v <= n; ++v) roots.insert(find(v));
  r.connected = roots.size() == 1;

  if (r.acyclic) {
    // Repeatedly number the smallest vertex whose arrows all point into
    // already-numbered vertices.
    VertexNumbering num;
    num.number.assign(n, 0);
    std::size_t next = 1;
    while (next <= n) {
      for (std::size_t v = 1; v <= n; ++v) {
        if (num.number[v - 1] != 0) continue;
        bool ready = std::all_of(out[v].begin(), out[v].end(), [&](std::size_t w) { return num.number[w - 1] != 0; });
        if (ready) {
          num.number[v - 1] = next++;
          break;
        }
      }
    }
    r.numbering = std::move(num);
  }
  return r;
}

std::vector<Path> enumerate_paths(const Quiver& q) {
  if (!validate(q).acyclic) throw ValidationError("quiver has an oriented cycle; its path algebra is infinite-dimensional");
  std::vector<Path> stationary;
  std::vector<Path> longer;
  for (std::size_t v = 1; v <= q.vertex_count(); ++v) stationary.push_back({v, v, {}});

  std::function<void(Path&)> extend = [&](Path& p) {
    for (std::size_t i = 0; i < q.arrows().size(); ++i) {
      if (q.arrows()[i].source != p.target) continue;
      Path next = p;
      next.arrows.push_back(i);
      next.target = q.arrows()[i].target;
      longer.push_back(next);
      extend(next);
    }
  };
  for (std::size_t v = 1; v <= q.vertex_count(); ++v) {
    Path p{v, v, {}};
    extend(p);
  }

  std::sort(longer.begin(), longer.end(), [&](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.source != b.source) return a.source < b.source;
    for (std::size_t k = 0; k < a.length(); ++k) {
      const std::string& la = q.arrows()[a.arrows[k]].label;
      const std::string& lb = q.arrows()[b.arrows[k]].label;
      if (la != lb) return la < lb;
    }
    return false;
  });
  stationary.insert(stationary.end(), longer.begin(), longer.end());
  return stationary;
}

std::string path_label(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + std::to_string(p.source);
  std::string out;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) out += '.';
    out += q.arrows()[p.arrows[k]].label;
  }
  return out;
}

}  // namespace pathdepth
