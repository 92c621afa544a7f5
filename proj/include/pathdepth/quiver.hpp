#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pathdepth {

/// Vertices are 1-based everywhere in this API.
struct Arrow {
  std::string label;
  std::size_t source;
  std::size_t target;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;
  /// Throws ValidationError on out-of-range vertices, duplicate or reserved
  /// labels. Loops and cycles are accepted here and reported by validate().
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::optional<std::size_t> find_arrow(std::string_view label) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Arrow> arrows_;
};

/// Line format: "vertices <n>", "arrow <label> <source> <target>", '#' comments.
Quiver parse_quiver(std::string_view text);
Quiver load_quiver(const std::string& path);
std::string serialize(const Quiver& q);

/// n -> n-1 -> ... -> 1 with arrow "a<i>" from i to i-1.
Quiver linear_quiver(std::size_t n);
/// Two parallel arrows alpha, beta: 2 -> 1.
Quiver kronecker_quiver();

/// number[v-1] is the new 1-based index of vertex v; every arrow goes from a
/// larger to a smaller number (sinks first).
struct VertexNumbering {
  std::vector<std::size_t> number;
};

struct QuiverReport {
  bool acyclic = false;
  bool connected = false;
  std::optional<VertexNumbering> numbering;
};

QuiverReport validate(const Quiver& q);

struct Path {
  std::size_t source;
  std::size_t target;
  std::vector<std::size_t> arrows;  // indices into Quiver::arrows(), in travel order
  std::size_t length() const { return arrows.size(); }
};

/// Stationary paths in vertex order, then by (length, source, arrow labels).
/// Throws ValidationError on a cyclic quiver.
std::vector<Path> enumerate_paths(const Quiver& q);

/// "e<v>" for stationary paths, otherwise arrow labels joined by '.'.
std::string path_label(const Quiver& q, const Path& p);

}  // namespace pathdepth
