#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "safeset/bitmask.hpp"
#include "safeset/graph.hpp"

namespace safeset {

/// Knobs for the exhaustive subset solvers.
struct SolverOptions {
  /// Largest graph order the 2^n subset scan will accept.
  int max_vertices = 24;
};

/// The subset scan was asked to enumerate a graph above the configured cap.
/// Callers can raise the cap or switch to a specialized solver.
struct EnumerationCapExceededError : std::runtime_error {
  explicit EnumerationCapExceededError(int order, int cap)
      : std::runtime_error("graph order " + std::to_string(order) +
                           " exceeds enumeration cap " + std::to_string(cap)) {}
};

/// Outcome of an exact minimization over safe sets.
///
/// The witness is deterministic: among equal-weight optima the solver picks
/// the one with fewest induced components, then the lexicographically
/// smallest sorted index sequence.
struct SafeSetSolution {
  Rational optimum;
  VertexSet witness;
  int witness_components = 0;
  bool connected_required = false;
};

/// Safe-set predicate: every component C of g[s] outweighs (>=) every
/// component D of g - s that it touches. s = V(g) is vacuously safe.
/// Requires s nonempty, s within range, g connected.
bool is_safe_set(const WeightedGraph& g, const VertexSet& s);

/// Minimum-weight safe set by exhaustive enumeration of all nonempty subsets.
SafeSetSolution safe_number(const WeightedGraph& g, const SolverOptions& opt = {});

/// Same minimization restricted to subsets inducing a connected subgraph.
SafeSetSolution connected_safe_number(const WeightedGraph& g, const SolverOptions& opt = {});

/// min { k(g[S]) : S a minimum-weight safe set }, with every optimum
/// enumerated rather than just the tie-broken witness.
int min_components_of_min_safe_sets(const WeightedGraph& g, const SolverOptions& opt = {});

/// Weight function under which s is a safe set with every boundary comparison
/// an exact tie: each component of g[s] and of g - s gets total weight 1,
/// spread uniformly over its vertices. Requires s nonempty and proper.
std::vector<Rational> witness_weight(const Graph& g, const VertexSet& s);

struct RatioBoundReport {
  Rational safe;
  Rational connected_safe;
  Rational total;
  bool safe_le_connected = false;       // s <= cs
  bool connected_lt_twice_safe = false; // cs < 2s
  bool safe_ge_half_total = false;      // s >= w(G)/2
};

/// Solves both numbers and evaluates the s <= cs < 2s chain plus the
/// half-total lower bound that characterizes complete graphs and cycles.
RatioBoundReport verify_ratio_bound(const WeightedGraph& g, const SolverOptions& opt = {});

/// Invokes fn(S, k(g[S]), w(S)) for every safe set S of g, as a bitmask.
/// Enumeration order is ascending mask value.
void for_each_safe_set(const WeightedGraph& g,
                       const std::function<void(Mask, int, const Rational&)>& fn,
                       const SolverOptions& opt = {});

/// Integer weights drawn uniformly from [lo, hi], reproducible from the seed.
/// This is the weight vector sampler used by all randomized verification.
std::vector<Rational> random_integer_weights(int n, std::uint64_t seed,
                                             long lo = 1, long hi = 1000);

}  // namespace safeset
