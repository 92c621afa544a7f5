#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "pathdepth/cli.hpp"
#include "pathdepth/error.hpp"
#include "pathdepth/families.hpp"

using namespace pathdepth;

namespace {

std::string data(const std::string& rel) { return std::string(PATHDEPTH_DATA_DIR) + "/" + rel; }

int run_tool(const std::string& args, std::string* out = nullptr) {
  std::string file = (std::filesystem::temp_directory_path() / "pathdepth_cli_test_out.txt").string();
  std::string cmd = std::string(PATHDEPTH_TOOL) + " " + args + " > " + file + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  if (out) {
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    *out = ss.str();
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

JobSpec family_job(const std::string& family, const std::string& sub) {
  JobSpec job;
  job.family = family;
  job.sub = sub;
  return job;
}

}  // namespace

TEST_CASE("generator files") {
  AlgebraPtr t3 = t_n(3, Field::rationals());
  auto gens = parse_generators("# comment\ne1 + e2\n\n2*a2 - 1/2*e1  # trailing\n", *t3);
  REQUIRE(gens.size() == 2);
  CHECK(t3->format(gens[0]) == "e1+e2");
  CHECK(gens[1].at(*t3->find_label("a2")) == 2);
  CHECK(gens[1].at(*t3->find_label("e1")) == Scalar(-1, 2));

  auto line_of = [&](std::string_view text) -> std::size_t {
    try {
      parse_generators(text, *t3);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("e1\nx9\n") == 2);
  CHECK(line_of("e1 e2\n") == 1);
  CHECK(line_of("\n\nq*e1\n") == 3);
  CHECK(line_of("e1 +\n") == 1);
}

TEST_CASE("building extensions") {
  Extension top = build_extension(family_job("T3", "top"));
  CHECK(top.embedding.sub()->dim() == 3);
  CHECK(build_extension(family_job("T3", "diagonal")).embedding.sub()->dim() == 3);
  CHECK(build_extension(family_job("T3", "arrow")).embedding.sub()->dim() == 4);
  CHECK(build_extension(family_job("T4", "jordan")).embedding.sub()->dim() == 4);
  CHECK_THROWS_AS(build_extension(family_job("X3", "top")), ValidationError);
  CHECK_THROWS_AS(build_extension(family_job("T3", "nope")), ValidationError);

  JobSpec q;
  q.quiver_file = data("quivers/kronecker.quiver");
  q.sub = "top";
  CHECK(build_extension(q).embedding.ambient()->dim() == 4);
  q.sub = "jordan";
  CHECK_THROWS_AS(build_extension(q), ValidationError);
  q.sub = "top";
  q.quiver_file = data("quivers/cycle2.quiver");
  CHECK_THROWS_AS(build_extension(q), ValidationError);

  JobSpec custom = family_job("T3", "custom");
  custom.custom_file = data("generators/t3_corner.gen");
  CHECK(build_extension(custom).embedding.sub()->dim() == 2);
}

TEST_CASE("depth command output") {
  JobSpec job = family_job("T2", "top");
  std::ostringstream out;
  CHECK(cmd_depth(job, out) == exit_code::resolved);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["min_depth"] == 3);
  CHECK(j["h_depth"] == 5);
  CHECK(j["ambient_dim"] == 3);

  job.cutoff = 2;
  job.h_depth = false;
  std::ostringstream bound;
  CHECK(cmd_depth(job, bound) == exit_code::unresolved);
  CHECK(nlohmann::json::parse(bound.str())["min_depth"]["at_least"] == 3);

  job.cutoff = 6;
  job.format = OutputFormat::Csv;
  std::ostringstream csv;
  cmd_depth(job, csv);
  CHECK(csv.str().find("min_depth") != std::string::npos);
}

TEST_CASE("tensor dimensions command") {
  auto dims = [](const std::string& family, const std::string& sub, std::size_t max_n) {
    JobSpec job = family_job(family, sub);
    std::ostringstream out;
    CHECK(cmd_tensor_dims(job, max_n, out) == exit_code::resolved);
    auto j = nlohmann::json::parse(out.str());
    std::vector<std::size_t> result;
    for (const auto& row : j["dims"]) result.push_back(row["dim"]);
    return result;
  };
  CHECK(dims("T2", "top", 3) == std::vector<std::size_t>{2, 3, 4, 5});
  CHECK(dims("T2", "arrow", 2)[2] == 5);
  // over the whole algebra every tensor power is A itself
  JobSpec whole = family_job("T3", "custom");
  whole.custom_file = data("generators/t3_all.gen");
  std::ostringstream out;
  cmd_tensor_dims(whole, 3, out);
  auto j = nlohmann::json::parse(out.str());
  for (const auto& row : j["dims"]) CHECK(row["dim"] == 6);
}

TEST_CASE("exit codes of the tool") {
  CHECK(run_tool("depth --family T2 --sub top") == exit_code::resolved);
  CHECK(run_tool("depth --family T2 --sub arrow --cutoff 3 --no-h-depth") == exit_code::unresolved);
  CHECK(run_tool("depth --family T2 --frobnicate") == exit_code::usage);
  CHECK(run_tool("") == exit_code::usage);
  CHECK(run_tool("depth --family T2 --sub sideways") == exit_code::invalid_input);
  CHECK(run_tool("depth --quiver " + data("quivers/cycle2.quiver")) == exit_code::invalid_input);
  CHECK(run_tool("depth --family T2 --field fp:4") == exit_code::invalid_input);
  CHECK(run_tool("depth --family T3 --sub custom /nonexistent.gen") == exit_code::invalid_input);
  CHECK(run_tool("suite --only nosuchtag") == exit_code::usage);
}

TEST_CASE("output is deterministic") {
  std::string first;
  std::string second;
  run_tool("depth --quiver " + data("quivers/kronecker.quiver") + " --sub arrow --format csv", &first);
  run_tool("depth --quiver " + data("quivers/kronecker.quiver") + " --sub arrow --format csv", &second);
  CHECK_FALSE(first.empty());
  CHECK(first == second);
}
