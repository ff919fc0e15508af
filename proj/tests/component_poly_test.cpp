#include <doctest.h>

#include <random>

#include "safeset/component_poly.hpp"
#include "test_helpers.hpp"

using namespace safeset;

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Graph complete_bipartite_2_3() {
  std::vector<Edge> edges;
  for (int u = 0; u < 2; ++u)
    for (int v = 2; v < 5; ++v) edges.push_back({u, v});
  return Graph(5, edges);
}

}  // namespace

TEST_SUITE("component_poly") {

TEST_CASE("triangle coefficients") {
  CoefficientTable t = coefficient_table(complete_graph(3));
  CHECK(t.at(1, 1) == 3);
  CHECK(t.at(2, 1) == 3);
  CHECK(t.at(3, 1) == 1);
  CHECK(t.at(2, 2) == 0);
  CHECK(t.at(3, 2) == 0);
  CHECK(t.at(3, 3) == 0);
}

TEST_CASE("three-vertex path coefficients") {
  CoefficientTable t = coefficient_table(path_graph(3));
  CHECK(t.at(1, 1) == 3);
  CHECK(t.at(2, 1) == 2);
  CHECK(t.at(2, 2) == 1);
  CHECK(t.at(3, 1) == 1);
}

TEST_CASE("low rows and row sums on random graphs") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) edges.push_back({u, v});
    Graph g(n, edges);
    CoefficientTable t = coefficient_table(g);
    CHECK(t.at(1, 1) == static_cast<std::uint64_t>(n));
    if (n >= 2) {
      CHECK(t.at(2, 1) == static_cast<std::uint64_t>(g.edge_count()));
      CHECK(t.at(2, 2) == binomial(n, 2) - g.edge_count());
    }
    for (int i = 1; i <= n; ++i) {
      std::uint64_t row_sum = 0;
      for (int j = 1; j <= i; ++j) row_sum += t.at(i, j);
      CHECK(row_sum == binomial(n, i));
    }
    // q(n,1) witnesses connectivity of the whole graph
    CHECK((t.at(n, 1) == 1) == g.is_connected());
  }
}

TEST_CASE("coefficient cap") {
  CHECK_THROWS_AS(coefficient_table(path_graph(21)), EnumerationCapExceededError);
  CHECK_NOTHROW(coefficient_table(path_graph(21), 21));
}

TEST_CASE("coefficient 2-connectivity test") {
  CHECK(is_two_connected_by_coefficients(coefficient_table(cycle_graph(5))));
  CHECK(is_two_connected_by_coefficients(coefficient_table(complete_graph(4))));
  CoefficientTable p4 = coefficient_table(path_graph(4));
  CHECK(p4.at(3, 1) == 2);  // only the two leaf removals stay connected
  CHECK(!is_two_connected_by_coefficients(p4));
}

TEST_CASE("coefficient criterion matches the direct cut-vertex search") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = testutil::random_connected_graph(n, rng);
    CHECK(is_two_connected_by_coefficients(coefficient_table(g)) ==
          !has_cut_vertex(g));
  }
}

TEST_CASE("structural recognition") {
  CHECK(condition_complete_or_cycle(cycle_graph(9)));
  CHECK(condition_complete_or_cycle(complete_graph(7)));
  CHECK(condition_complete_or_cycle(complete_graph(2)));
  std::vector<Edge> chorded{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}};
  CHECK(!condition_complete_or_cycle(Graph(6, chorded)));
  CHECK(!condition_complete_or_cycle(path_graph(4)));
}

TEST_CASE("cut-pair condition") {
  CHECK(condition_cut_pair(cycle_graph(6)));
  CHECK(condition_cut_pair(complete_graph(5)));  // vacuous
  CHECK(!condition_cut_pair(path_graph(5)));     // drop both leaves
}

TEST_CASE("coefficient identities condition") {
  CHECK(condition_coefficients(coefficient_table(cycle_graph(6))));
  CHECK(condition_coefficients(coefficient_table(complete_graph(6))));
  CHECK(!condition_coefficients(coefficient_table(complete_bipartite_2_3())));
}

TEST_CASE("strong variants") {
  StrongVariantFlags c5 = strong_variants(cycle_graph(5));
  CHECK(c5.pair_symmetry);
  CHECK(c5.subset_symmetry);
  CHECK(c5.full_palindrome);

  StrongVariantFlags k4 = strong_variants(complete_graph(4));
  CHECK(k4.pair_symmetry);
  CHECK(k4.subset_symmetry);
  CHECK(k4.full_palindrome);

  StrongVariantFlags p4 = strong_variants(path_graph(4));
  CHECK(!p4.pair_symmetry);  // the two leaves: k(G[S]) = 2, k(G-S) = 1
}

TEST_CASE("classify") {
  ClassifierVerdict cycle = classify(cycle_graph(6), true);
  CHECK(cycle.complete_or_cycle);
  CHECK(cycle.agreement);
  REQUIRE(cycle.strong.has_value());
  CHECK(cycle.strong->subset_symmetry);

  ClassifierVerdict path = classify(path_graph(6));
  CHECK(!path.complete_or_cycle);
  CHECK(!path.cut_pair);
  CHECK(!path.coefficients);
  CHECK(path.agreement);  // all false together is still agreement
}

TEST_CASE("ratio gadget refutes a 1/2 bound on P5") {
  RatioGadgetReport rep = ratio_lemma_gadget(path_graph(5), {2}, 1, 1);
  CHECK(rep.inside_components == 1);
  CHECK(rep.outside_components == 2);
  CHECK(rep.subset_ratio == Rational(1, 3));
  CHECK(rep.bound == Rational(1, 2));
  CHECK(rep.safe_under_witness);
  CHECK(rep.refutes_bound);
}

TEST_CASE("ratio gadget finds no refutation on cycles and cliques") {
  RatioGadgetReport c6 = ratio_lemma_gadget(cycle_graph(6), {0, 2, 4}, 1, 1);
  CHECK(c6.inside_components == 3);
  CHECK(c6.outside_components == 3);
  CHECK(c6.subset_ratio == Rational(1, 2));
  CHECK(!c6.refutes_bound);

  RatioGadgetReport k4 = ratio_lemma_gadget(complete_graph(4), {0}, 1, 1);
  CHECK(k4.subset_ratio == Rational(1, 2));
  CHECK(!k4.refutes_bound);
}

TEST_CASE("ratio gadget preconditions") {
  CHECK_THROWS_AS(ratio_lemma_gadget(path_graph(5), {2}, 1, 2),
                  std::invalid_argument);  // p < q
  // k(G[S])/k(G-S) = 2/1 > 1/1
  CHECK_THROWS_AS(ratio_lemma_gadget(path_graph(5), {0, 4}, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("coefficient identities match direct connected-removal counts") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 5 + static_cast<int>(rng() % 4);
    Graph g = testutil::random_connected_graph(n, rng);
    CoefficientTable t = coefficient_table(g);

    std::uint64_t vertex_removals = 0, pair_removals = 0;
    for (int v = 0; v < n; ++v) {
      VertexSet rest;
      for (int u = 0; u < n; ++u)
        if (u != v) rest.push_back(u);
      if (components(g, rest).size() == 1) ++vertex_removals;
    }
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        VertexSet rest;
        for (int x = 0; x < n; ++x)
          if (x != u && x != v) rest.push_back(x);
        if (components(g, rest).size() == 1) ++pair_removals;
      }
    CHECK(t.at(n - 1, 1) == vertex_removals);
    CHECK(t.at(n - 2, 1) == pair_removals);
    CHECK(condition_coefficients(t) ==
          (vertex_removals == static_cast<std::uint64_t>(n) &&
           pair_removals == static_cast<std::uint64_t>(g.edge_count())));
  }
}

TEST_CASE("complete graphs and cycles keep s >= w/2 under sampled weights") {
  std::mt19937_64 rng(103);
  for (int n = 3; n <= 10; ++n)
    for (const Graph& g : {complete_graph(n), cycle_graph(n)})
      for (int trial = 0; trial < 100; ++trial) {
        WeightedGraph wg(g, testutil::random_weights(n, rng));
        Rational s = safe_number(wg).optimum;
        CHECK(s + s >= wg.total_weight());
      }
}

TEST_CASE("corpus crosscheck rejects unsupported orders") {
  CHECK_THROWS_AS(corpus_crosscheck(4, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(corpus_crosscheck(8, 0, 1), std::invalid_argument);
}

TEST_CASE("corpus crosscheck at order 5") {
  CorpusReport rep = corpus_crosscheck(5, 5, 7);
  CHECK(rep.labeled_graphs == 1024);
  CHECK(rep.connected_graphs == 728);
  CHECK(rep.disagreements.empty());
  // labeled 5-cycles (4!/2) plus the complete graph
  CHECK(rep.condition_holders == 13);
  CHECK(rep.sampled_instances == 13 * 5);
  CHECK(rep.sampled_half_bound_violations == 0);
}

}  // TEST_SUITE
