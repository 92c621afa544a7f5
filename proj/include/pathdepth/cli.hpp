#pragma once

// Job description and command implementations behind the pathdepth tool.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pathdepth/algebra.hpp"
#include "pathdepth/exactlin.hpp"

namespace pathdepth {

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_format(std::string_view name);

namespace exit_code {
inline constexpr int resolved = 0;
inline constexpr int usage = 1;
inline constexpr int invalid_input = 2;
inline constexpr int unresolved = 3;
inline constexpr int suite_failed = 4;
}  // namespace exit_code

struct JobSpec {
  /// "T<n>"; exclusive with quiver_file.
  std::optional<std::string> family;
  std::optional<std::string> quiver_file;
  /// top | arrow | diagonal | jordan | custom
  std::string sub = "top";
  std::optional<std::string> custom_file;
  Field field = Field::rationals();
  std::size_t cutoff = 6;
  OutputFormat format = OutputFormat::Json;
  bool h_depth = true;
};

struct Extension {
  std::string ambient_name;
  SubalgebraEmbedding embedding;
};

/// Builds the ambient algebra and the selected subalgebra; throws
/// ValidationError or ParseError on bad input.
Extension build_extension(const JobSpec& job);

/// One generator per non-empty line, written as a sum of "<coeff>*<label>"
/// terms ("e1 + e2", "2*a2 - 1/2*e1"); '#' starts a comment.
std::vector<SparseVec> parse_generators(std::string_view text, const Algebra& a);

int cmd_depth(const JobSpec& job, std::ostream& out);
int cmd_tensor_dims(const JobSpec& job, std::size_t max_n, std::ostream& out);
int cmd_explore_jordan(std::size_t from, std::size_t to, std::size_t cutoff, const Field& field, OutputFormat format,
                       std::ostream& out);

}  // namespace pathdepth
