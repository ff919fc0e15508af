#pragma once

#include <optional>

#include "safeset/safe_set.hpp"

namespace safeset {

/// Parameters of the odd-order path family whose minimum safe set is forced
/// to have one component per weight doubling. The path has 2n+1 vertices;
/// a and b must satisfy 2b > 3a and 2a > b > a.
struct PathWeightSpec {
  int n = 2;
  Rational a;
  Rational b;
};

/// Weighted path on 2n+1 vertices: the two leftmost vertices weigh b, the
/// third weighs a, and every following pair weighs twice the previous pair
/// (w(v_{2i}) = w(v_{2i+1}) = 2^{i-1} a in 1-based labels). Throws naming the
/// violated parameter inequality.
WeightedGraph odd_path_weights(const PathWeightSpec& spec);

struct UniqueMinimumReport {
  Rational optimum;
  /// Every minimum-weight safe set, sorted.
  std::vector<VertexSet> optima;
  /// The alternating set {v_2, v_4, ..., v_2n} in 0-based labels.
  VertexSet expected;
  /// 2^n a - 2a + b.
  Rational expected_weight;
  bool unique_expected_minimum = false;
};

/// Enumerates every safe set of odd_path_weights(spec) and checks that the
/// alternating even-position set is the one and only minimum, at the
/// closed-form weight.
UniqueMinimumReport verify_unique_minimum(const PathWeightSpec& spec,
                                          const SolverOptions& opt = {});

/// Removes the degree-2 vertex v and joins its two neighbors. v must not lie
/// on a triangle. Vertices above v shift down by one.
Graph suppress(const Graph& g, int v);
WeightedGraph suppress(const WeightedGraph& g, int v);

/// Replaces edge e = xy by a new vertex (index n) adjacent to exactly x and y.
Graph subdivide(const Graph& g, Edge e);

/// Bounds for a weight-preserving subdivision lift. beta is the least
/// positive gap w(D) - w(C) over components C of g[T], D of g - T across all
/// non-safe sets T; nullopt means no non-safe set exists (+infinity).
struct EpsilonBounds {
  Rational alpha;
  std::optional<Rational> beta;
};

/// alpha = min(cs - s, w(x), w(y)) for the edge xy to be subdivided;
/// beta as above (exhaustive scan, so the solver cap applies).
EpsilonBounds compute_epsilon_bounds(const WeightedGraph& g, Edge edge,
                                     const SolverOptions& opt = {});

struct LiftParameters {
  /// Edge to subdivide; the weight of edge.u is the one reduced by epsilon.
  Edge edge;
  Rational epsilon;
  Rational alpha;
  std::optional<Rational> beta;  // nullopt = +infinity
};

/// Computes the bounds for the given edge and picks epsilon = min(alpha,
/// beta)/4 unless one is supplied. Throws when no positive epsilon fits
/// (e.g. s = cs makes alpha 0).
LiftParameters make_lift_parameters(const WeightedGraph& g, Edge edge,
                                    std::optional<Rational> epsilon = {},
                                    const SolverOptions& opt = {});

/// The subdivided graph with the lifted weights: the new vertex gets epsilon,
/// edge.u loses epsilon, everything else is unchanged. Total weight is
/// preserved exactly. Requires 0 < epsilon < min(alpha, beta)/2 and a
/// positive remaining weight on edge.u.
WeightedGraph lift_weights(const WeightedGraph& g, const LiftParameters& lift);

/// Iterates the lift from the 2n+1 base path, subdividing the rightmost path
/// edge each step, until the path has target_order vertices; the result is
/// relabeled into path order. Every intermediate instance keeps s < cs.
WeightedGraph lifted_path_weights(const PathWeightSpec& spec, int target_order,
                                  const SolverOptions& opt = {});

}  // namespace safeset
