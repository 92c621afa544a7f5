#include "pathdepth/cli.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pathdepth/depth.hpp"
#include "pathdepth/error.hpp"
#include "pathdepth/families.hpp"

namespace pathdepth {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t parse_family(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'T' && name[0] != 't') ||
      name.find_first_not_of("0123456789", 1) != std::string::npos || name.size() > 4)
    throw ValidationError("unknown family '" + name + "' (expected T<n>)");
  std::size_t n = std::stoul(name.substr(1));
  if (n == 0) throw ValidationError("family T0 is empty");
  return n;
}

std::string value_text(const DepthValue& d) { return d.exact ? std::to_string(d.value) : ">=" + std::to_string(d.value); }

std::string flag_text(const std::optional<bool>& b) {
  if (!b) return "-";
  return *b ? "yes" : "no";
}

std::string csv_flag(const std::optional<bool>& b) {
  if (!b) return "";
  return *b ? "true" : "false";
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw ValidationError("unknown output format '" + std::string(name) + "'");
}

std::vector<SparseVec> parse_generators(std::string_view text, const Algebra& a) {
  std::vector<SparseVec> out;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string body = trim(line);
    if (body.empty()) continue;

    VecAccumulator acc(a.field());
    std::size_t pos = 0;
    bool first = true;
    while (pos < body.size()) {
      Scalar sign(1);
      while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t')) ++pos;
      if (pos < body.size() && (body[pos] == '+' || body[pos] == '-')) {
        if (body[pos] == '-') sign = -1;
        ++pos;
      } else if (!first) {
        throw ParseError(line_no, "expected '+' or '-' between terms");
      }
      std::size_t end = body.find_first_of("+-", pos);
      std::string term = trim(body.substr(pos, end == std::string::npos ? std::string::npos : end - pos));
      pos = end == std::string::npos ? body.size() : end;
      first = false;
      if (term.empty()) throw ParseError(line_no, "empty term");

      Scalar coeff(1);
      std::string label = term;
      if (auto star = term.find('*'); star != std::string::npos) {
        try {
          coeff = parse_scalar(trim(term.substr(0, star)));
        } catch (const std::invalid_argument&) {
          throw ParseError(line_no, "bad coefficient '" + trim(term.substr(0, star)) + "'");
        }
        label = trim(term.substr(star + 1));
      }
      auto idx = a.find_label(label);
      if (!idx) throw ParseError(line_no, "unknown basis label '" + label + "'");
      acc.add(*idx, a.field().normalize(sign * coeff));
    }
    out.push_back(acc.finish(a.dim()));
  }
  return out;
}

Extension build_extension(const JobSpec& job) {
  if (job.family.has_value() == job.quiver_file.has_value())
    throw ValidationError("give exactly one of --family and --quiver");
  AlgebraPtr ambient;
  std::string name;
  if (job.family) {
    std::size_t n = parse_family(*job.family);
    ambient = t_n(n, job.field);
    name = "T" + std::to_string(n);
  } else {
    Quiver q = load_quiver(*job.quiver_file);
    QuiverReport report = validate(q);
    if (!report.acyclic) throw ValidationError("quiver '" + *job.quiver_file + "' has a directed cycle");
    ambient = path_algebra(q, job.field);
    name = *job.quiver_file;
  }

  const std::string& sub = job.sub;
  if (sub == "top" || sub == "diagonal") return {name, top_subalgebra(ambient)};
  if (sub == "arrow") return {name, arrow_subalgebra(ambient)};
  if (sub == "jordan") {
    if (!job.family) throw ValidationError("--sub jordan is only defined for the T<n> family");
    return {name, jordan_subalgebra(ambient)};
  }
  if (sub == "custom") {
    if (!job.custom_file) throw ValidationError("--sub custom needs a generator file");
    return {name, subalgebra_closure(ambient, parse_generators(read_file(*job.custom_file), *ambient))};
  }
  throw ValidationError("unknown subalgebra selector '" + sub + "'");
}

int cmd_depth(const JobSpec& job, std::ostream& out) {
  Extension ext = build_extension(job);
  DepthEngine engine(ext.embedding);
  DepthReport report = engine.min_depth(job.cutoff, job.h_depth);
  const std::size_t dim_a = ext.embedding.ambient()->dim();
  const std::size_t dim_b = ext.embedding.sub()->dim();

  switch (job.format) {
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["ambient"] = ext.ambient_name;
      j["subalgebra"] = job.sub;
      j["ambient_dim"] = dim_a;
      j["sub_dim"] = dim_b;
      nlohmann::ordered_json body = to_json(report);
      for (auto& [key, value] : body.items()) j[key] = value;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv: {
      out << "ambient,subalgebra,field,cutoff,min_depth,exact,odd_depth,h_depth,h_exact\n";
      out << ext.ambient_name << "," << job.sub << "," << report.field << "," << report.cutoff << ","
          << report.min_depth.value << "," << (report.min_depth.exact ? "true" : "false") << ","
          << (report.odd_depth ? std::to_string(*report.odd_depth) : "") << ","
          << (report.h_depth ? std::to_string(report.h_depth->value) : "") << ","
          << (report.h_depth ? (report.h_depth->exact ? "true" : "false") : "") << "\n";
      out << "n,AA,AB,BA,BB\n";
      for (const auto& lf : report.flags) {
        out << lf.n << "," << csv_flag(lf.aa) << "," << csv_flag(lf.ab) << "," << csv_flag(lf.ba) << ","
            << csv_flag(lf.bb) << "\n";
      }
      break;
    }
    case OutputFormat::Text: {
      out << "ambient     " << ext.ambient_name << " (dim " << dim_a << ")\n";
      out << "subalgebra  " << job.sub << " (dim " << dim_b << ")\n";
      out << "field       " << report.field << "\n";
      out << "cutoff      " << report.cutoff << "\n";
      out << "depth one   " << (report.depth1 ? "yes" : "no") << " (B in add(A): "
          << (report.depth1_reverse ? "yes" : "no") << ")\n";
      out << "level  AA   AB   BA   BB\n";
      for (const auto& lf : report.flags) {
        out << lf.n << "      " << flag_text(lf.aa) << std::string(5 - flag_text(lf.aa).size(), ' ')
            << flag_text(lf.ab) << std::string(5 - flag_text(lf.ab).size(), ' ') << flag_text(lf.ba)
            << std::string(5 - flag_text(lf.ba).size(), ' ') << flag_text(lf.bb) << "\n";
      }
      out << "min depth   " << value_text(report.min_depth) << "\n";
      out << "odd depth   " << (report.odd_depth ? std::to_string(*report.odd_depth) : "unknown") << "\n";
      out << "H-depth     " << (report.h_depth ? value_text(*report.h_depth) : "not computed") << "\n";
      break;
    }
  }
  return report.min_depth.exact ? exit_code::resolved : exit_code::unresolved;
}

int cmd_tensor_dims(const JobSpec& job, std::size_t max_n, std::ostream& out) {
  Extension ext = build_extension(job);
  TensorChain chain(ext.embedding);
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= max_n; ++n) dims.push_back(chain.dim(n));
  switch (job.format) {
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["ambient"] = ext.ambient_name;
      j["subalgebra"] = job.sub;
      j["field"] = job.field.to_string();
      auto rows = nlohmann::ordered_json::array();
      for (std::size_t n = 0; n < dims.size(); ++n) rows.push_back({{"n", n}, {"dim", dims[n]}});
      j["dims"] = std::move(rows);
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "n,dim\n";
      for (std::size_t n = 0; n < dims.size(); ++n) out << n << "," << dims[n] << "\n";
      break;
    case OutputFormat::Text:
      for (std::size_t n = 0; n < dims.size(); ++n) out << "dim C_" << n << " = " << dims[n] << "\n";
      break;
  }
  return exit_code::resolved;
}

int cmd_explore_jordan(std::size_t from, std::size_t to, std::size_t cutoff, const Field& field, OutputFormat format,
                       std::ostream& out) {
  if (from < 2 || to < from) throw ValidationError("explore-jordan needs 2 <= from <= to");
  struct Row {
    std::size_t n;
    DepthValue depth;
  };
  std::vector<Row> rows;
  bool all_resolved = true;
  for (std::size_t n = from; n <= to; ++n) {
    DepthValue d = min_depth(jordan_subalgebra(n, field), cutoff, false).min_depth;
    all_resolved = all_resolved && d.exact;
    rows.push_back({n, d});
  }
  const char* status = "exploratory; no published value";
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["status"] = status;
      j["cutoff"] = cutoff;
      j["field"] = field.to_string();
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) arr.push_back({{"n", r.n}, {"min_depth", to_json(r.depth)}});
      j["rows"] = std::move(arr);
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "n,min_depth,exact,status\n";
      for (const auto& r : rows)
        out << r.n << "," << r.depth.value << "," << (r.depth.exact ? "true" : "false") << "," << status << "\n";
      break;
    case OutputFormat::Text:
      out << "# " << status << "\n";
      for (const auto& r : rows) out << "J" << r.n << " in T" << r.n << ": " << value_text(r.depth) << "\n";
      break;
  }
  return all_resolved ? exit_code::resolved : exit_code::unresolved;
}

}  // namespace pathdepth
