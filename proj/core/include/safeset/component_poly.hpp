#pragma once

#include <cstdint>
#include <optional>

#include "safeset/safe_set.hpp"

namespace safeset {

/// Coefficients of the subgraph component polynomial: q(i, j) counts the
/// i-vertex subsets inducing exactly j components, 1 <= j <= i <= n. The
/// empty subset is excluded.
class CoefficientTable {
 public:
  explicit CoefficientTable(int order)
      : order_(order), q_(order + 1, std::vector<std::uint64_t>(order + 1, 0)) {}

  int order() const { return order_; }
  std::uint64_t at(int i, int j) const { return q_.at(i).at(j); }
  void add(int i, int j) { ++q_.at(i).at(j); }

  /// Row i as a dense vector over j = 1..n.
  std::vector<std::uint64_t> row(int i) const {
    return {q_.at(i).begin() + 1, q_.at(i).end()};
  }

 private:
  int order_;
  std::vector<std::vector<std::uint64_t>> q_;
};

/// Exact counts by scanning all 2^n subsets. Default cap 20.
CoefficientTable coefficient_table(const Graph& g, int cap = 20);

/// q(1,1) = q(n-1,1): the coefficient test for 2-connectedness.
bool is_two_connected_by_coefficients(const CoefficientTable& table);

/// Direct search: some vertex whose removal disconnects the rest.
bool has_cut_vertex(const Graph& g);

/// Structural recognition: complete graph, or cycle (connected, all degrees 2).
bool condition_complete_or_cycle(const Graph& g);

/// Removing any two nonadjacent vertices disconnects the graph (vacuous for
/// complete graphs).
bool condition_cut_pair(const Graph& g);

/// q(1,1) = q(n-1,1) and q(2,1) = q(n-2,1).
bool condition_coefficients(const CoefficientTable& table);

/// The stronger variants: component-count symmetry k(G-S) = k(G[S]) over all
/// 2-subsets / all nonempty proper subsets, and the full palindrome
/// q(k,1) = q(n-k,1) for 1 <= k <= n-1.
struct StrongVariantFlags {
  bool pair_symmetry = false;      // |S| = 2
  bool subset_symmetry = false;    // all nonempty proper S (exponential)
  bool full_palindrome = false;    // q(k,1) = q(n-k,1)
};
StrongVariantFlags strong_variants(const Graph& g, int cap = 20);

struct ClassifierVerdict {
  bool complete_or_cycle = false;
  bool cut_pair = false;
  bool coefficients = false;
  std::optional<StrongVariantFlags> strong;
  bool agreement = false;  // all evaluated flags coincide
};

ClassifierVerdict classify(const Graph& g, bool with_strong = false, int cap = 20);

/// Lemma-style gadget: equalize all component weights across the cut defined
/// by s and see whether the resulting safe set beats the q/(p+q) fraction of
/// the total weight. Requires p >= q >= 1 and k(g[s])/k(g-s) <= q/p.
struct RatioGadgetReport {
  int inside_components = 0;   // t = k(g[s])
  int outside_components = 0;  // r = k(g-s)
  Rational subset_ratio;       // w(s)/w(G) = t/(t+r) under the witness weights
  Rational bound;              // q/(p+q)
  bool safe_under_witness = false;
  bool refutes_bound = false;  // subset_ratio < bound
};
RatioGadgetReport ratio_lemma_gadget(const Graph& g, const VertexSet& s,
                                     int p, int q);

/// One disagreement found by the corpus sweep.
struct CorpusDisagreement {
  std::vector<Edge> edges;
  bool complete_or_cycle = false;
  bool cut_pair = false;
  bool coefficients = false;
};

struct CorpusReport {
  int order = 0;
  std::uint64_t labeled_graphs = 0;
  std::uint64_t connected_graphs = 0;
  std::uint64_t condition_holders = 0;
  std::vector<CorpusDisagreement> disagreements;
  // Sampled corroboration of the half-total bound on condition holders;
  // one-sided evidence only, never part of the equivalence check.
  int weight_trials = 0;
  std::uint64_t sampled_instances = 0;
  std::uint64_t sampled_half_bound_violations = 0;
  std::uint64_t seed = 0;
};

/// Exhausts every labeled graph of the given order (5 <= n <= 7), filters to
/// connected, and cross-checks the three decidable classifier conditions.
/// Graphs where they hold additionally get weight_trials random weight
/// vectors checking s >= w(G)/2.
CorpusReport corpus_crosscheck(int order, int weight_trials, std::uint64_t seed);

}  // namespace safeset
