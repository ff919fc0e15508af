#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "process.hpp"
#include "safeset/graph_io.hpp"
#include "test_helpers.hpp"

using json = nlohmann::json;
using namespace safeset;
using testutil::run_command;

namespace {

const std::string kCli = SAFESET_CLI_PATH;

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / "safeset_cli_test") {
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_file(const std::string& file, const std::string& contents) {
  std::ofstream out(file);
  out << contents;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve reports the figure instance") {
  TempDir dir;
  write_file(dir.file("p7.edges"), "7 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n");
  write_file(dir.file("fig1.w"), "5\n5\n3\n6\n6\n12\n12\n");

  auto safe = run_command(kCli + " solve --graph " + dir.file("p7.edges") +
                          " --weights " + dir.file("fig1.w") + " --mode safe");
  REQUIRE(safe.exit_code == 0);
  json rep = json::parse(safe.output);
  CHECK(rep["schema"] == 1);
  CHECK(rep["config"]["cap"] == 24);
  CHECK(rep["safe"]["optimum"] == "23");
  CHECK(rep["safe"]["witness"] == json::array({1, 3, 5}));
  CHECK(rep["safe"]["witness_components"] == 3);

  auto connected = run_command(kCli + " solve --graph " + dir.file("p7.edges") +
                               " --weights " + dir.file("fig1.w") + " --mode connected");
  REQUIRE(connected.exit_code == 0);
  CHECK(json::parse(connected.output)["connected"]["optimum"] == "24");
}

TEST_CASE("disconnected input exits 2 with a clear message") {
  TempDir dir;
  write_file(dir.file("split.edges"), "4 2\n0 1\n2 3\n");
  write_file(dir.file("w.txt"), "1\n1\n1\n1\n");
  auto r = run_command(kCli + " solve --graph " + dir.file("split.edges") +
                       " --weights " + dir.file("w.txt") + " 2>&1");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("graph not connected") != std::string::npos);
}

TEST_CASE("malformed files exit 2 with the line number") {
  TempDir dir;
  write_file(dir.file("bad.edges"), "3 2\n0 1\nnonsense\n");
  write_file(dir.file("w.txt"), "1\n1\n1\n");
  auto r = run_command(kCli + " solve --graph " + dir.file("bad.edges") +
                       " --weights " + dir.file("w.txt") + " 2>&1");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("line 3") != std::string::npos);
}

TEST_CASE("generated files re-parse to the same instance") {
  TempDir dir;
  auto gen = run_command(kCli + " gen odd-path --n 3 --a 3 --b 5 --graph-out " +
                         dir.file("g.edges") + " --weights-out " + dir.file("g.w"));
  REQUIRE(gen.exit_code == 0);
  WeightedGraph loaded = load_weighted_graph(dir.file("g.edges"), dir.file("g.w"));
  CHECK(loaded == testutil::figure_path());

  // lifting the generated pair produces files that also round-trip
  auto lift = run_command(kCli + " gen lift --graph " + dir.file("g.edges") +
                          " --weights " + dir.file("g.w") + " --edge 3,4 --graph-out " +
                          dir.file("l.edges") + " --weights-out " + dir.file("l.w"));
  REQUIRE(lift.exit_code == 0);
  json rep = json::parse(lift.output);
  CHECK(rep["epsilon"] == "1/4");
  WeightedGraph lifted = load_weighted_graph(dir.file("l.edges"), dir.file("l.w"));
  CHECK(lifted.order() == 8);
  CHECK(lifted.total_weight() == Rational(49));
}

TEST_CASE("identical config and seed give byte-identical reports") {
  auto a = run_command(kCli + " verify --theorem cycle --n 6 --trials 20 --seed 42");
  auto b = run_command(kCli + " verify --theorem cycle --n 6 --trials 20 --seed 42");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  auto c = run_command(kCli + " crosscheck --n 5 --trials 2 --seed 9");
  auto d = run_command(kCli + " crosscheck --n 5 --trials 2 --seed 9");
  CHECK(c.exit_code == 0);
  CHECK(c.output == d.output);
}

TEST_CASE("poly emits the dense coefficient rows") {
  TempDir dir;
  write_file(dir.file("p3.edges"), "3 2\n0 1\n1 2\n");
  auto r = run_command(kCli + " poly --graph " + dir.file("p3.edges"));
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.output);
  CHECK(rep["order"] == 3);
  CHECK(rep["rows"] == json::array({{3, 0, 0}, {2, 1, 0}, {1, 0, 0}}));
}

TEST_CASE("classify disagreement-free verdicts exit 0, missing seed exits 2") {
  TempDir dir;
  write_file(dir.file("c5.edges"), "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  auto r = run_command(kCli + " classify --graph " + dir.file("c5.edges"));
  CHECK(r.exit_code == 0);
  auto missing = run_command(kCli + " verify --theorem cycle --n 5 --trials 3 2>&1");
  CHECK(missing.exit_code == 2);
  CHECK(missing.output.find("--seed") != std::string::npos);
}

TEST_CASE("cycle subcommand reads the implicit cycle") {
  TempDir dir;
  write_file(dir.file("w.txt"), "1\n2\n1\n2\n");
  auto r = run_command(kCli + " cycle --weights " + dir.file("w.txt"));
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.output);
  CHECK(rep["value"] == "3");
  CHECK(rep["arc"]["start"] == 0);
  CHECK(rep["arc"]["length"] == 2);
}

}  // TEST_SUITE
