#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "pathdepth/cli.hpp"
#include "pathdepth/error.hpp"
#include "pathdepth/suite.hpp"

using namespace pathdepth;

namespace {

struct JobFlags {
  std::string family;
  std::string quiver;
  std::vector<std::string> sub;
  std::string field = "q";
  std::size_t cutoff = 6;
  std::string format = "json";
  bool no_h_depth = false;
};

void add_job_flags(CLI::App* cmd, JobFlags& f) {
  auto* fam = cmd->add_option("--family", f.family, "named family, T<n>");
  auto* quiv = cmd->add_option("--quiver", f.quiver, "quiver file");
  fam->excludes(quiv);
  cmd->add_option("--sub", f.sub, "top | arrow | diagonal | jordan | custom <file>")->expected(1, 2);
  cmd->add_option("--field", f.field, "q or fp:<p>");
  cmd->add_option("--cutoff", f.cutoff, "largest depth value to test")->check(CLI::PositiveNumber);
  cmd->add_option("--format", f.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
}

JobSpec make_job(const JobFlags& f) {
  JobSpec job;
  if (!f.family.empty()) job.family = f.family;
  if (!f.quiver.empty()) job.quiver_file = f.quiver;
  if (!f.sub.empty()) job.sub = f.sub[0];
  if (f.sub.size() == 2) {
    if (job.sub != "custom") throw ValidationError("only --sub custom takes a file argument");
    job.custom_file = f.sub[1];
  }
  job.field = Field::parse(f.field);
  job.cutoff = f.cutoff;
  job.format = parse_format(f.format);
  job.h_depth = !f.no_h_depth;
  return job;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subring depth of subalgebras of path algebras, in exact arithmetic"};
  app.require_subcommand(1);

  JobFlags depth_flags;
  auto* depth = app.add_subcommand("depth", "minimum, odd and H-depth of a subalgebra");
  add_job_flags(depth, depth_flags);
  depth->add_flag("--no-h-depth", depth_flags.no_h_depth, "skip the A-A conditions");

  JobFlags dims_flags;
  std::size_t max_n = 4;
  auto* dims = app.add_subcommand("tensor-dims", "dimensions of the tensor powers C_n");
  add_job_flags(dims, dims_flags);
  dims->add_option("--max-n", max_n, "largest n");

  std::string only;
  bool inject = false;
  auto* suite = app.add_subcommand("suite", "run the reproduction suite");
  suite->add_option("--only", only, "run one tag or criterion id");
  suite->add_flag("--inject-sign-fault", inject, "corrupt one structure constant (negative control)");

  std::size_t from = 2;
  std::size_t to = 4;
  std::size_t explore_cutoff = 6;
  std::string explore_field = "q";
  std::string explore_format = "csv";
  auto* explore = app.add_subcommand("explore-jordan", "sweep Jordan subalgebras J_n in T_n (exploratory)");
  explore->add_option("--from", from, "first n")->check(CLI::Range(2, 64));
  explore->add_option("--to", to, "last n")->check(CLI::Range(2, 64));
  explore->add_option("--cutoff", explore_cutoff, "largest depth value to test")->check(CLI::PositiveNumber);
  explore->add_option("--field", explore_field, "q or fp:<p>");
  explore->add_option("--format", explore_format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_code::usage;
  }

  try {
    if (*depth) return cmd_depth(make_job(depth_flags), std::cout);
    if (*dims) return cmd_tensor_dims(make_job(dims_flags), max_n, std::cout);
    if (*explore) {
      return cmd_explore_jordan(from, to, explore_cutoff, Field::parse(explore_field), parse_format(explore_format),
                                std::cout);
    }
    if (*suite) {
      SuiteOptions options;
      if (!only.empty()) {
        options.only = only;
        bool known = false;
        for (const auto& t : suite_tags()) known = known || t == only;
        if (!known && only.find_first_not_of("0123456789") != std::string::npos) {
          std::cerr << "unknown suite tag '" << only << "'\n";
          return exit_code::usage;
        }
      }
      options.inject_sign_fault = inject;
      options.on_result = [](const CriterionResult& r) { std::cout << format_result(r) << std::endl; };
      auto results = run_suite(options);
      std::size_t failed = 0;
      for (const auto& r : results) failed += r.passed ? 0 : 1;
      std::cout << (results.size() - failed) << "/" << results.size() << " passed\n";
      return failed == 0 ? exit_code::resolved : exit_code::suite_failed;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_code::invalid_input;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return exit_code::invalid_input;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return exit_code::invalid_input;
  }
  return exit_code::usage;
}
