#include "safeset/fast_solvers.hpp"

#include <stdexcept>
#include <vector>

namespace safeset {

namespace {

void check_positive(std::span<const Rational> weights) {
  for (const Rational& w : weights)
    if (!w.is_positive())
      throw std::invalid_argument("weights must be strictly positive");
}

}  // namespace

CycleSolution cycle_safe_number(std::span<const Rational> weights) {
  const int n = static_cast<int>(weights.size());
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  check_positive(weights);

  Rational total;
  for (const Rational& w : weights) total += w;
  const Rational half = total / Rational(2);

  CycleSolution out;
  out.value = total;
  out.arc = {0, n, total};

  // Window is {v_k, ..., v_ell} with running weight `window`; ell only moves
  // forward (tracked as an absolute position, indexed mod n). Removing v_k
  // afterwards keeps the invariant exact, including the empty-window case.
  Rational window = weights[0];
  long ell = 0;
  for (int k = 0; k < n; ++k) {
    while (window < half) {
      ++ell;
      window += weights[ell % n];
      ++out.right_pointer_advances;
    }
    // Shortest qualifying arc from k; positive weights make it also the
    // lightest one from k, so a strict improvement check realizes the
    // smallest-start, smallest-length tie-break.
    if (window < out.value) {
      out.value = window;
      out.arc = {k, static_cast<int>(ell - k + 1), window};
    }
    window -= weights[k];
  }
  return out;
}

PathSolution path_connected_safe_number(std::span<const Rational> weights) {
  const int n = static_cast<int>(weights.size());
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  check_positive(weights);

  // prefix[i] = weight of v_0..v_{i-1}. Interval [i..j] is feasible iff
  //   prefix[j+1] >= 2*prefix[i]            (covers the left remainder)
  //   2*prefix[j+1] >= total + prefix[i]    (covers the right remainder)
  // Both right-hand sides grow with i, so the minimal feasible j+1 is
  // monotone in i and one forward pointer suffices.
  std::vector<Rational> prefix(n + 1);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + weights[i];
  const Rational& total = prefix[n];

  PathSolution out;
  out.value = total;
  out.interval = {0, n - 1};

  int end = 1;  // candidate j+1
  for (int i = 0; i < n; ++i) {
    if (end < i + 1) end = i + 1;
    while (end <= n && (prefix[end] < prefix[i] + prefix[i] ||
                        prefix[end] + prefix[end] < total + prefix[i]))
      ++end;
    if (end > n) break;  // no feasible interval starts at i or later
    Rational w = prefix[end] - prefix[i];
    if (w < out.value) {
      out.value = w;
      out.interval = {i, end - 1};
    }
  }
  return out;
}

CycleMembershipReport verify_cycle_membership(std::span<const Rational> weights,
                                              const SolverOptions& opt) {
  const int n = static_cast<int>(weights.size());
  WeightedGraph cycle(cycle_graph(n), std::vector<Rational>(weights.begin(), weights.end()));

  CycleMembershipReport rep;
  rep.fast_value = cycle_safe_number(weights).value;
  rep.brute_safe = safe_number(cycle, opt).optimum;
  rep.brute_connected_safe = connected_safe_number(cycle, opt).optimum;
  rep.all_equal = rep.fast_value == rep.brute_safe &&
                  rep.brute_safe == rep.brute_connected_safe;
  return rep;
}

}  // namespace safeset
