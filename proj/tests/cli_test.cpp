// End-to-end checks of the credal binary: exit codes, schema-valid JSON,
// reproducible outputs.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "schema_check.hpp"

namespace {

using credal::testing::check_schema;
using credal::testing::load_schema;
using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string temp_path(const std::string& name) {
  return std::string("cli_test_") + name;
}

RunResult run_cli(const std::string& args) {
  const std::string out = temp_path("stdout.txt");
  const std::string cmd = std::string(CREDAL_CLI_PATH) + " " + args + " > " +
                          out + " 2> " + temp_path("stderr.txt");
  const int status = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WEXITSTATUS(status);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  res.output = ss.str();
  return res;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("volume subcommand: json output and exit codes") {
  const std::string set = temp_path("simplex3.json");
  write_file(set, "{\"d\": 3, \"vertices\": [[1,0,0],[0,1,0],[0,0,1]]}");

  const auto ok = run_cli("volume --input " + set);
  REQUIRE(ok.exit_code == 0);
  const json parsed = json::parse(ok.output);
  CHECK(check_schema(parsed, load_schema("volume.schema.json")) == "");
  CHECK(parsed.at("value").get<double>() ==
        doctest::Approx(0.8660254037844386).epsilon(1e-12));

  const std::string bad = temp_path("bad.json");
  write_file(bad, "{\"d\": 2, \"vertices\": [[0.9, 0.4]]}");
  CHECK(run_cli("volume --input " + bad).exit_code == 1);

  const std::string malformed = temp_path("malformed.json");
  write_file(malformed, "{not json");
  CHECK(run_cli("volume --input " + malformed).exit_code == 1);

  CHECK(run_cli("volume --input /does/not/exist.json").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
}

TEST_CASE("byte-identical reproducibility of seeded runs") {
  const std::string set = temp_path("simplex3.json");
  write_file(set, "{\"d\": 3, \"vertices\": [[1,0,0],[0,1,0],[0,0,1]]}");
  const auto a =
      run_cli("volume --input " + set + " --mc --samples 200000 --seed 11");
  const auto b =
      run_cli("volume --input " + set + " --mc --samples 200000 --seed 11");
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);

  // Thread cap must not change the estimate.
  const auto c = run_cli("volume --input " + set +
                         " --mc --samples 200000 --seed 11 --threads 1");
  CHECK(json::parse(c.output).at("value") ==
        json::parse(a.output).at("value"));
}

TEST_CASE("measures and axioms subcommands validate against schemas") {
  const std::string set = temp_path("interval.json");
  write_file(set, "{\"d\": 2, \"vertices\": [[0.2,0.8],[0.5,0.5]]}");

  const auto meas = run_cli("measures --input " + set);
  REQUIRE(meas.exit_code == 0);
  const json mj = json::parse(meas.output);
  CHECK(check_schema(mj, load_schema("measures.schema.json")) == "");
  CHECK(mj.at("width").get<double>() == doctest::Approx(0.3));

  const std::string inner = temp_path("inner.json");
  write_file(inner, "{\"d\": 2, \"vertices\": [[0.3,0.7],[0.4,0.6]]}");
  const auto ax = run_cli("axioms --input " + set + " --nested " + inner +
                          " --measure volume");
  REQUIRE(ax.exit_code == 0);
  const json aj = json::parse(ax.output);
  CHECK(check_schema(aj, load_schema("axioms.schema.json")) == "");
  for (const auto& report : aj.at("reports")) {
    CHECK(report.at("verdict") != "fail");
  }

  // Grouping route emits A5/A6.
  const std::string grouping = temp_path("grouping.json");
  write_file(grouping, "{\"d1\": 2, \"d2\": 2, \"assign\": [[0,0],[1,1]]}");
  const auto sub = run_cli("axioms --input " + set + " --grouping " + grouping);
  REQUIRE(sub.exit_code == 0);
  const json sj = json::parse(sub.output);
  CHECK(check_schema(sj, load_schema("axioms.schema.json")) == "");
  CHECK(sj.at("reports").size() == 2);
}

TEST_CASE("packing, carl-pajor, and lift subcommands") {
  const auto pe =
      run_cli("packing-experiment --d 3 --eps 0.05 --r 0.15 --restarts 2");
  REQUIRE(pe.exit_code == 0);
  CHECK(check_schema(json::parse(pe.output),
                     load_schema("packing_experiment.schema.json")) == "");

  CHECK(run_cli("packing-experiment --d 3 --eps 0.2 --r 0.1").exit_code == 1);

  const auto cp = run_cli("carl-pajor --d 3 --m 8 --samples 20000 --seed 4");
  REQUIRE(cp.exit_code == 0);
  CHECK(check_schema(json::parse(cp.output),
                     load_schema("carl_pajor.schema.json")) == "");

  const std::string seg = temp_path("segment.json");
  write_file(seg,
             "{\"d\": 2, \"vertices\": "
             "[[0.32322330470336313,0.67677669529663687],"
             "[0.67677669529663687,0.32322330470336313]]}");
  const auto lift = run_cli("lift --input " + seg + " --target-d 3");
  REQUIRE(lift.exit_code == 0);
  const json lj = json::parse(lift.output);
  CHECK(check_schema(lj, load_schema("lift.schema.json")) == "");
  CHECK(lj.at("gap").get<double>() <= 1e-8);
}

TEST_CASE("csv subcommands carry config comment and headers") {
  const auto idm = run_cli("idm-sim --p 0.2,0.3,0.5 --n 5 --s 1 --seed 7");
  REQUIRE(idm.exit_code == 0);
  std::istringstream lines(idm.output);
  std::string first, second;
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(first.rfind("# config:", 0) == 0);
  CHECK(second == "n,volume,width,max_entropy,dh_prev");

  const auto ps = run_cli("prior-shrinkage --eps 0.1 --c-range 2:6");
  REQUIRE(ps.exit_code == 0);
  CHECK(ps.output.find("c,eps,scale,vol_ratio") != std::string::npos);

  const auto ex1 = run_cli("axioms example1 --base 0.5 --n 6");
  REQUIRE(ex1.exit_code == 0);
  CHECK(ex1.output.find("n,h,vol2,width") != std::string::npos);
  CHECK(ex1.output.find("sequence verdict = fail") != std::string::npos);

  const auto sweep = run_cli(
      "carl-pajor --sweep-d 2:3 --samples 5000 --seed 1");
  REQUIRE(sweep.exit_code == 0);
  CHECK(sweep.output.find("d,m,samples,seed,bound,ratio,stderr,hull_dim") !=
        std::string::npos);
}
