#pragma once

#include <span>

#include "safeset/safe_set.hpp"

namespace safeset {

/// Consecutive cyclic segment {v_start, v_start+1, ..., v_start+length-1}
/// (indices mod n) of a cycle's vertex ring.
struct Arc {
  int start = 0;
  int length = 0;
  Rational weight;
};

struct CycleSolution {
  Rational value;
  Arc arc;
  /// Total advancement of the window's right endpoint during the scan.
  /// Bounded by 2n; asserted by tests as the linearity certificate.
  long right_pointer_advances = 0;
};

/// Safe number of the cycle C_n under the given weights (n = weights.size()),
/// which equals its connected safe number. Computed by a single two-pointer
/// pass: for each start k the window grows to the shortest arc of weight
/// >= w(V)/2, and the lightest such window over all starts is the answer.
/// The right pointer never retreats, so the whole scan is O(n) arithmetic
/// operations. Among equal-weight arcs the smallest start wins, then the
/// smallest length. Requires n >= 3 and positive weights.
CycleSolution cycle_safe_number(std::span<const Rational> weights);

/// Closed interval of path vertices, 0-based inclusive endpoints.
struct PathInterval {
  int first = 0;
  int last = 0;
};

struct PathSolution {
  Rational value;
  PathInterval interval;
};

/// Connected safe number of the path P_n under the given weights. Connected
/// safe sets of a path are exactly the intervals whose weight dominates both
/// the left and the right remainder, so a two-pointer sweep over prefix sums
/// finds the minimum in O(n). Ties: smallest left endpoint, then smallest
/// length. Requires n >= 1 and positive weights.
PathSolution path_connected_safe_number(std::span<const Rational> weights);

struct CycleMembershipReport {
  Rational fast_value;
  Rational brute_safe;
  Rational brute_connected_safe;
  bool all_equal = false;
};

/// Checks on one instance that the linear cycle solver, the exhaustive safe
/// number, and the exhaustive connected safe number all coincide.
CycleMembershipReport verify_cycle_membership(std::span<const Rational> weights,
                                              const SolverOptions& opt = {});

}  // namespace safeset
