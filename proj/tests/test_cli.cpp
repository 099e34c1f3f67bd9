// End-to-end checks of the eincausal binary: exit codes, artifact
// determinism, and the wire formats. The binary path arrives in
// EINCAUSAL_CLI (set by CTest).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "eincausal/json_io.hpp"
#include "eincausal/maximality.hpp"
#include "support/test_util.hpp"

using nlohmann::json;

namespace {

std::string cli_path() {
  const char* env = std::getenv("EINCAUSAL_CLI");
  REQUIRE_MESSAGE(env != nullptr, "EINCAUSAL_CLI is not set");
  return env;
}

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run(const std::string& args) {
  static int counter = 0;
  const std::string capture =
      (std::filesystem::temp_directory_path() /
       ("eincausal_cli_out_" + std::to_string(counter++) + ".txt"))
          .string();
  const std::string command =
      cli_path() + " " + args + " > " + capture + " 2>/dev/null";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(capture);
  std::stringstream buf;
  buf << in.rdbuf();
  result.stdout_text = buf.str();
  std::filesystem::remove(capture);
  return result;
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path =
      (std::filesystem::temp_directory_path() / name).string();
  eincausal::write_file(path, contents);
  return path;
}

}  // namespace

TEST_CASE("classify prints the relation and q_form") {
  const std::string p = temp_file("cli_p.json", R"({"x":[1,0],"t":0})");
  const std::string q = temp_file("cli_q.json", R"({"x":[0,1],"t":0})");
  const RunResult result = run("classify " + p + " " + q);
  CHECK(result.exit_code == 0);
  const json report = json::parse(result.stdout_text);
  CHECK(report["verdicts"]["relation"] == "unrelated");
  CHECK(report["verdicts"]["q_form"].get<double>() == doctest::Approx(-1.0));
}

TEST_CASE("maximalize fixes the minkowski chart and flags de sitter") {
  const auto grid = eincausal::testing::circle_grid(64);
  const std::string chart = temp_file(
      "cli_chart.json",
      eincausal::to_json(eincausal::testing::minkowski_chart(grid, 0)));
  const std::string extended =
      (std::filesystem::temp_directory_path() / "cli_chart_max.json").string();
  const RunResult max_run = run("maximalize " + chart + " -o " + extended);
  CHECK(max_run.exit_code == 0);
  CHECK(eincausal::read_file(extended) == eincausal::read_file(chart));

  const std::string desitter = temp_file(
      "cli_desitter.json",
      eincausal::to_json(eincausal::testing::band_domain(grid, 0.0, M_PI)));
  CHECK(run("is-maximal " + desitter).exit_code == 3);
  CHECK(run("maximalize " + desitter).exit_code == 3);
  CHECK(run("validate " + chart).exit_code == 0);
}

TEST_CASE("emitted domains re-validate and reload equal") {
  const auto grid = eincausal::testing::circle_grid(64);
  eincausal::Rng rng(171);
  const eincausal::CausalDomain dom =
      eincausal::testing::random_validated_domain(grid, rng);
  const std::string in = temp_file("cli_dom.json", eincausal::to_json(dom));
  const std::string out =
      (std::filesystem::temp_directory_path() / "cli_dom_max.json").string();
  REQUIRE(run("maximalize " + in + " -o " + out).exit_code == 0);
  CHECK(run("validate " + out).exit_code == 0);
  const eincausal::CausalDomain reloaded =
      eincausal::domain_from_json(eincausal::read_file(out));
  CHECK(eincausal::maximalize(dom).domain == reloaded);
}

TEST_CASE("plot-data emits a monotone angle column") {
  const auto grid = eincausal::testing::circle_grid(64);
  eincausal::Rng rng(173);
  const eincausal::CausalDomain dom =
      eincausal::testing::random_validated_domain(grid, rng);
  const std::string in = temp_file("cli_plot.json", eincausal::to_json(dom));
  const std::string out =
      (std::filesystem::temp_directory_path() / "cli_plot.csv").string();
  REQUIRE(run("plot-data " + in + " -o " + out).exit_code == 0);
  std::ifstream csv(out);
  std::string header;
  std::getline(csv, header);
  CHECK(header == "node_index,angle,f_minus,f_plus,g_minus,g_plus");
  double last_angle = -1.0;
  int rows = 0;
  for (std::string line; std::getline(csv, line);) {
    ++rows;
    const auto first_comma = line.find(',');
    const auto second_comma = line.find(',', first_comma + 1);
    const double angle =
        std::stod(line.substr(first_comma + 1, second_comma - first_comma - 1));
    CHECK(angle > last_angle);
    last_angle = angle;
  }
  CHECK(rows == static_cast<int>(dom.region().interior().size() +
                                 dom.region().boundary().size()));
}

TEST_CASE("oracle artifacts are deterministic for a fixed seed") {
  const auto grid = eincausal::testing::circle_grid(64);
  const std::string dual_set = temp_file(
      "cli_set.json",
      R"({"grid":{"kind":"circle","n":64},"sites":[[0,0.0],[20,0.1],[40,-0.2]]})");
  const std::string dual_a =
      (std::filesystem::temp_directory_path() / "cli_dual_a.json").string();
  const std::string dual_b =
      (std::filesystem::temp_directory_path() / "cli_dual_b.json").string();
  REQUIRE(run("dual --achronal-set " + dual_set + " -o " + dual_a).exit_code ==
          0);
  REQUIRE(run("dual --achronal-set " + dual_set + " -o " + dual_b).exit_code ==
          0);
  CHECK(eincausal::read_file(dual_a) == eincausal::read_file(dual_b));

  const RunResult first =
      run("oracle causal-convexity " + dual_a + " --samples 50 --seed 9");
  const RunResult second =
      run("oracle causal-convexity " + dual_b + " --samples 50 --seed 9");
  CHECK(first.exit_code == 0);
  const json ra = json::parse(first.stdout_text);
  const json rb = json::parse(second.stdout_text);
  CHECK(ra["verdicts"] == rb["verdicts"]);
  CHECK(ra["witnesses"] == rb["witnesses"]);
}

TEST_CASE("cauchy-dev, shadow, certify and env run end to end") {
  const auto grid = eincausal::testing::circle_grid(64);
  const std::string surface = temp_file(
      "cli_surface.json",
      eincausal::to_json(eincausal::testing::half_circle_surface(grid)));
  const std::string dev =
      (std::filesystem::temp_directory_path() / "cli_dev.json").string();
  REQUIRE(run("cauchy-dev " + surface + " -o " + dev).exit_code == 0);
  CHECK(run("validate " + dev).exit_code == 0);
  CHECK(run("certify " + dev + " --node 0").exit_code == 0);

  const std::string point = temp_file("cli_point.json", R"({"x":[1,0],"t":0.3})");
  const RunResult shadow_run =
      run("shadow --point " + point + " --surface " + surface);
  CHECK(shadow_run.exit_code == 0);
  CHECK(json::parse(shadow_run.stdout_text)["verdicts"]["size"].get<int>() > 0);

  const std::string grid_file =
      temp_file("cli_grid.json", R"({"kind":"circle","n":64})");
  const std::string base =
      (std::filesystem::temp_directory_path() / "cli_base.json").string();
  REQUIRE(run("env make-base --kind sphere_minus_node --grid " + grid_file +
              " --node 32 -o " + base)
              .exit_code == 0);
  const RunResult env_classify =
      run("env classify --base " + base + " '{\"node\":0,\"t\":0}' "
          "'{\"node\":1,\"t\":1}'");
  CHECK(env_classify.exit_code == 0);
}

TEST_CASE("malformed input is a usage error") {
  const std::string bad = temp_file("cli_bad.json", "this is not json");
  CHECK(run("validate " + bad).exit_code == 64);
  CHECK(run("validate /nonexistent/file.json").exit_code == 64);
  CHECK(run("frobnicate").exit_code == 64);
}
