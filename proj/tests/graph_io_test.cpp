#include <doctest.h>

#include <random>
#include <sstream>

#include "safeset/graph_io.hpp"
#include "test_helpers.hpp"

using namespace safeset;

TEST_SUITE("graph_io") {

TEST_CASE("graph files round-trip") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) edges.push_back({u, v});
    Graph g(n, edges);
    std::stringstream buf;
    write_graph(buf, g);
    CHECK(read_graph(buf) == g);
  }
}

TEST_CASE("weight files round-trip bit-exactly") {
  std::mt19937_64 rng(101);
  std::vector<Rational> w;
  for (int i = 0; i < 40; ++i)
    w.push_back(Rational(static_cast<long>(1 + rng() % 10000),
                         static_cast<long>(1 + rng() % 97)));
  std::stringstream buf;
  write_weights(buf, w);
  CHECK(read_weights(buf) == w);
  // writing again produces identical bytes
  std::stringstream again;
  write_weights(again, w);
  std::stringstream first;
  write_weights(first, w);
  CHECK(again.str() == first.str());
}

TEST_CASE("weights accept decimals and fractions") {
  std::istringstream in("5\n0.25\n7/3\n");
  std::vector<Rational> w = read_weights(in);
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Rational(5));
  CHECK(w[1] == Rational(1, 4));
  CHECK(w[2] == Rational(7, 3));
}

TEST_CASE("parse errors carry line numbers") {
  std::istringstream missing_header("");
  CHECK_THROWS_AS(read_graph(missing_header), ParseError);

  std::istringstream bad_edge("3 2\n0 1\n0 x\n");
  try {
    read_graph(bad_edge);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }

  std::istringstream truncated("3 2\n0 1\n");
  try {
    read_graph(truncated);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }

  std::istringstream bad_weight("1\nbogus\n");
  try {
    read_weights(bad_weight);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("self-loops and bad indices are rejected with the line number") {
  std::istringstream loop("2 1\n1 1\n");
  CHECK_THROWS_AS(read_graph(loop), ParseError);
  std::istringstream range("2 1\n0 5\n");
  CHECK_THROWS_AS(read_graph(range), ParseError);
}

TEST_CASE("weighted pair loader checks the count") {
  auto dir = std::filesystem::temp_directory_path() / "safeset_io_test";
  std::filesystem::create_directories(dir);
  save_graph(dir / "g.edges", path_graph(3));
  save_weights(dir / "w.txt", testutil::weights({1, 2, 3}));
  WeightedGraph wg = load_weighted_graph(dir / "g.edges", dir / "w.txt");
  CHECK(wg.order() == 3);
  CHECK(wg.total_weight() == Rational(6));

  save_weights(dir / "short.txt", testutil::weights({1, 2}));
  CHECK_THROWS_AS(load_weighted_graph(dir / "g.edges", dir / "short.txt"),
                  std::runtime_error);
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
