#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "comfteam/generators.hpp"
#include "comfteam/graph.hpp"

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "comfteam_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path write_fixture(const std::string& name, const std::string& content) {
  const fs::path path = scratch_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out_path = scratch_dir() / ("out" + std::to_string(counter));
  const fs::path err_path = scratch_dir() / ("err" + std::to_string(counter));
  ++counter;
  const std::string command = std::string(COMFTEAM_CLI_PATH) + " " + args +
                              " > " + out_path.string() + " 2> " +
                              err_path.string();
  const int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli: ecc") {
  const auto p6 = write_fixture("p6.graph", comfteam::serialize_graph(comfteam::gen_path(6)));
  const auto r = run_cli("ecc " + p6.string());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "ecc 5 4 3 3 4 5"));
  CHECK(contains(r.out, "radius 3"));
  CHECK(contains(r.out, "diameter 5"));
  CHECK(contains(r.out, "self-centered no"));

  const auto disconnected = write_fixture("disc.graph", "graph 4 2\n0 1\n2 3\n");
  CHECK(run_cli("ecc " + disconnected.string()).exit_code == 2);
  CHECK(run_cli("ecc " + (scratch_dir() / "missing.graph").string()).exit_code == 2);
  const auto malformed = write_fixture("bad.graph", "graph 2 1\n0 0\n");
  CHECK(run_cli("ecc " + malformed.string()).exit_code == 2);
}

TEST_CASE("cli: team diagnosis and minimum teams") {
  const auto p6 = write_fixture("p6.graph", comfteam::serialize_graph(comfteam::gen_path(6)));
  const auto c5 = write_fixture("c5.graph", comfteam::serialize_graph(comfteam::gen_cycle(5)));

  SUBCASE("--set on the comfortable interior") {
    const auto r = run_cli("team " + p6.string() + " --set 1,2,3,4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "comfortable yes"));
    CHECK(contains(r.out, "member 1 team-ecc 3 < graph-ecc 4"));
    CHECK(contains(r.out, "member 2 team-ecc 2 < graph-ecc 3"));
  }
  SUBCASE("--set on a failing team exits 1 and explains why") {
    const auto r = run_cli("team " + c5.string() + " --set 0,1");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "dominating no"));
    CHECK(contains(r.out, "less-dispersive yes"));
  }
  SUBCASE("bad set ids exit 2") {
    CHECK(run_cli("team " + p6.string() + " --set 1,9").exit_code == 2);
    CHECK(run_cli("team " + p6.string() + " --set 1,x").exit_code == 2);
  }
  SUBCASE("--min comfortable") {
    const auto hit = run_cli("team " + p6.string() + " --min comfortable");
    CHECK(hit.exit_code == 0);
    CHECK(contains(hit.out, "gamma_comf 4"));
    CHECK(contains(hit.out, "team {1,2,3,4}"));
    const auto miss = run_cli("team " + c5.string() + " --min comfortable");
    CHECK(miss.exit_code == 1);
    CHECK(contains(miss.out, "no comfortable team (exhausted n=5)"));
  }
  SUBCASE("--min cds and --min dominating") {
    const auto cds = run_cli("team " + p6.string() + " --min cds");
    CHECK(cds.exit_code == 0);
    CHECK(contains(cds.out, "gamma_c 4"));
    CHECK(contains(cds.out, "witness {1,2,3,4}"));
    const auto dom = run_cli("team " + p6.string() + " --min dominating");
    CHECK(dom.exit_code == 0);
    CHECK(contains(dom.out, "gamma 2"));
  }
  SUBCASE("exactly one of --set / --min") {
    CHECK(run_cli("team " + p6.string()).exit_code == 2);
    CHECK(run_cli("team " + p6.string() + " --set 1 --min cds").exit_code == 2);
  }
}

TEST_CASE("cli: records mode round-trips a witness") {
  const auto p6 = write_fixture("p6.graph", comfteam::serialize_graph(comfteam::gen_path(6)));
  const auto r = run_cli("--format records team " + p6.string() + " --min comfortable");
  CHECK(r.exit_code == 0);
  const auto record = nlohmann::json::parse(r.out);
  CHECK(record["exists"] == true);
  CHECK(record["gamma_comf"] == 4);
  std::string csv;
  for (const auto& v : record["team"]) {
    if (!csv.empty()) csv += ',';
    csv += std::to_string(v.get<int>());
  }
  const auto back = run_cli("--format records team " + p6.string() + " --set " + csv);
  CHECK(back.exit_code == 0);
  CHECK(nlohmann::json::parse(back.out)["comfortable"] == true);

  // The global flag also works after the subcommand.
  const auto trailing = run_cli("ecc " + p6.string() + " --format records");
  CHECK(trailing.exit_code == 0);
  const auto ecc_record = nlohmann::json::parse(trailing.out);
  CHECK(ecc_record["radius"] == 3);
  CHECK(ecc_record["ecc"] == nlohmann::json({5, 4, 3, 3, 4, 5}));

  const auto verify = run_cli("--format records verify T1 --exhaustive 2");
  CHECK(verify.exit_code == 0);
  std::istringstream lines(verify.out);
  std::string first_line;
  REQUIRE(std::getline(lines, first_line));
  const auto summary = nlohmann::json::parse(first_line);
  CHECK(summary["passed"] == true);
  CHECK(summary["instances"] == 4);
}

TEST_CASE("cli: product") {
  const auto k2 = write_fixture("k2.graph", comfteam::serialize_graph(comfteam::gen_complete(2)));
  const fs::path out = scratch_dir() / "k2k2.graph";
  const auto r = run_cli("product strong " + k2.string() + " " + k2.string() +
                         " --out " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "vertices 4"));
  CHECK(contains(r.out, "edges 6"));
  const std::string text = slurp(out);
  CHECK(contains(text, "# product strong n=2 m=2"));
  CHECK(comfteam::parse_graph(text) == comfteam::gen_complete(4));

  CHECK(run_cli("product cartesian " + k2.string() + " " + k2.string()).exit_code == 2);

  // Without --out the graph text goes to stdout.
  const auto piped = run_cli("product lex " + k2.string() + " " + k2.string());
  CHECK(piped.exit_code == 0);
  CHECK(comfteam::parse_graph(piped.out) == comfteam::gen_complete(4));
}

TEST_CASE("cli: verify") {
  const auto pass = run_cli("verify T1 --exhaustive 3");
  CHECK(pass.exit_code == 0);
  CHECK(contains(pass.out, "check T1"));
  CHECK(contains(pass.out, "instances 36"));
  CHECK(contains(pass.out, "result PASS"));

  const auto t4 = run_cli("verify T4 --exhaustive 4");
  CHECK(t4.exit_code == 0);
  CHECK(contains(t4.out, "applicable 660"));  // left factors with gamma_c >= 2

  CHECK(run_cli("verify T9 --exhaustive 3").exit_code == 2);
  CHECK(run_cli("verify T1").exit_code == 2);
  CHECK(run_cli("verify T1 --exhaustive 3 --random 5").exit_code == 2);
  CHECK(run_cli("verify T1 --exhaustive 9").exit_code == 2);

  const auto rand_run = run_cli("verify T3 --random 20 --nmin 3 --nmax 5 --p 0.6 --seed 7");
  CHECK(rand_run.exit_code == 0);
  CHECK(contains(rand_run.out, "corpus random count=20 n=3..5 p=0.6 seed=7"));
}

TEST_CASE("cli: failures") {
  const auto r = run_cli("failures --exhaustive 5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "failure-mode survey"));
  CHECK(contains(r.out, "graphs 772"));
  CHECK(contains(r.out, "does not dominate"));
  CHECK(contains(r.out, "is not less dispersive"));
}

TEST_CASE("cli: gen") {
  const fs::path out = scratch_dir() / "gen.graph";
  const auto path_run = run_cli("gen --out " + out.string() + " path --n 6");
  CHECK(path_run.exit_code == 0);
  CHECK(comfteam::parse_graph(slurp(out)) == comfteam::gen_path(6));

  CHECK(run_cli("gen cycle --n 2").exit_code == 2);
  CHECK(run_cli("gen star --n 1").exit_code == 2);

  const auto r1 = run_cli("gen random --n 6 --p 0.4 --seed 42");
  const auto r2 = run_cli("gen random --n 6 --p 0.4 --seed 42");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  CHECK(comfteam::parse_graph(r1.out) ==
        comfteam::random_connected(6, 0.4, 42));
}
