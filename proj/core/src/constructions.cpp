#include "safeset/constructions.hpp"

#include <algorithm>

namespace safeset {

namespace {

void check_spec(const PathWeightSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("path spec requires n >= 2");
  if (!spec.a.is_positive() || !spec.b.is_positive())
    throw std::invalid_argument("path spec requires positive a and b");
  const Rational two(2), three(3);
  if (!(two * spec.b > three * spec.a))
    throw std::invalid_argument("path spec: 2b > 3a violated");
  if (!(two * spec.a > spec.b))
    throw std::invalid_argument("path spec: 2a > b violated");
  if (!(spec.b > spec.a))
    throw std::invalid_argument("path spec: b > a violated");
}

// Path order of a tree that is a path: vertex ids from one endpoint to the
// other, starting at the lower-indexed endpoint.
std::vector<int> path_order(const Graph& g) {
  int start = -1;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) { start = v; break; }
  if (g.order() == 1) return {0};
  if (start < 0) throw std::invalid_argument("graph is not a path");
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (static_cast<int>(order.size()) < g.order()) {
    int next = -1;
    for (int u : g.neighbors(cur))
      if (u != prev) { next = u; break; }
    if (next < 0) throw std::invalid_argument("graph is not a path");
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace

WeightedGraph odd_path_weights(const PathWeightSpec& spec) {
  check_spec(spec);
  const int order = 2 * spec.n + 1;
  std::vector<Rational> w(order);
  w[0] = spec.b;          // v_1
  w[1] = spec.b;          // v_2
  w[2] = spec.a;          // v_3 (the i = 1 pair contributes only j = 3)
  Rational pair_weight = spec.a;
  for (int i = 2; i <= spec.n; ++i) {
    pair_weight *= Rational(2);  // 2^{i-1} a
    w[2 * i - 1] = pair_weight;  // v_{2i}
    w[2 * i] = pair_weight;      // v_{2i+1}
  }
  return WeightedGraph(path_graph(order), std::move(w));
}

UniqueMinimumReport verify_unique_minimum(const PathWeightSpec& spec,
                                          const SolverOptions& opt) {
  WeightedGraph path = odd_path_weights(spec);

  UniqueMinimumReport rep;
  for (int i = 1; i <= spec.n; ++i) rep.expected.push_back(2 * i - 1);  // v_{2i}

  // 2^n a - 2a + b
  Rational pow = spec.a;
  for (int i = 0; i < spec.n; ++i) pow *= Rational(2);
  rep.expected_weight = pow - Rational(2) * spec.a + spec.b;

  bool first = true;
  std::vector<Mask> optima_masks;
  for_each_safe_set(path, [&](Mask s, int, const Rational& w) {
    if (first || w < rep.optimum) {
      rep.optimum = w;
      optima_masks.assign(1, s);
      first = false;
    } else if (w == rep.optimum) {
      optima_masks.push_back(s);
    }
  }, opt);

  for (Mask m : optima_masks) rep.optima.push_back(mask_to_set(m));
  rep.unique_expected_minimum = rep.optima.size() == 1 &&
                                rep.optima.front() == rep.expected &&
                                rep.optimum == rep.expected_weight;
  return rep;
}

Graph suppress(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex index out of range");
  if (g.degree(v) != 2)
    throw std::invalid_argument("suppression requires a degree-2 vertex");
  int x = g.neighbors(v)[0], y = g.neighbors(v)[1];
  if (g.has_edge(x, y))
    throw std::invalid_argument("cannot suppress a vertex on a triangle");

  auto relabel = [v](int u) { return u > v ? u - 1 : u; };
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.u == v || e.v == v) continue;
    edges.push_back({relabel(e.u), relabel(e.v)});
  }
  edges.push_back({relabel(x), relabel(y)});
  return Graph(g.order() - 1, edges);
}

WeightedGraph suppress(const WeightedGraph& g, int v) {
  Graph reduced = suppress(g.structure(), v);
  std::vector<Rational> w;
  w.reserve(g.order() - 1);
  for (int u = 0; u < g.order(); ++u)
    if (u != v) w.push_back(g.weight(u));
  return WeightedGraph(std::move(reduced), std::move(w));
}

Graph subdivide(const Graph& g, Edge e) {
  if (e.u < 0 || e.u >= g.order() || e.v < 0 || e.v >= g.order() ||
      !g.has_edge(e.u, e.v))
    throw std::invalid_argument("subdivide: edge not in graph");
  const int star = g.order();  // the new vertex
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    if ((f.u == e.u && f.v == e.v) || (f.u == e.v && f.v == e.u)) continue;
    edges.push_back(f);
  }
  edges.push_back({e.u, star});
  edges.push_back({star, e.v});
  return Graph(star + 1, edges);
}

EpsilonBounds compute_epsilon_bounds(const WeightedGraph& g, Edge edge,
                                     const SolverOptions& opt) {
  if (!g.structure().has_edge(edge.u, edge.v))
    throw std::invalid_argument("epsilon bounds: edge not in graph");

  SafeSetSolution s = safe_number(g, opt);
  SafeSetSolution cs = connected_safe_number(g, opt);

  EpsilonBounds out;
  out.alpha = min(cs.optimum - s.optimum, min(g.weight(edge.u), g.weight(edge.v)));

  // Least positive gap w(D) - w(C) over all component pairs of all non-safe
  // sets, scanned exhaustively.
  std::vector<Mask> adj = adjacency_masks(g.structure());
  const Mask all = (Mask{1} << g.order()) - 1;
  auto mask_weight = [&](Mask m) {
    Rational sum;
    for (; m; m &= m - 1) sum += g.weight(lowest_bit(m));
    return sum;
  };
  for (Mask t = 1; t < all; ++t) {
    std::vector<Mask> t_comps = mask_components(adj, t);
    std::vector<Mask> d_comps = mask_components(adj, all & ~t);
    std::vector<Rational> tw, dw;
    for (Mask c : t_comps) tw.push_back(mask_weight(c));
    for (Mask d : d_comps) dw.push_back(mask_weight(d));

    bool safe = true;
    for (std::size_t i = 0; i < t_comps.size() && safe; ++i) {
      Mask nb = neighborhood(adj, t_comps[i]);
      for (std::size_t j = 0; j < d_comps.size(); ++j)
        if ((nb & d_comps[j]) && tw[i] < dw[j]) { safe = false; break; }
    }
    if (safe) continue;

    for (const Rational& wc : tw)
      for (const Rational& wd : dw) {
        Rational gap = wd - wc;
        if (gap.is_positive() && (!out.beta || gap < *out.beta)) out.beta = gap;
      }
  }
  return out;
}

LiftParameters make_lift_parameters(const WeightedGraph& g, Edge edge,
                                    std::optional<Rational> epsilon,
                                    const SolverOptions& opt) {
  EpsilonBounds bounds = compute_epsilon_bounds(g, edge, opt);
  LiftParameters lift;
  lift.edge = edge;
  lift.alpha = bounds.alpha;
  lift.beta = bounds.beta;
  Rational cap = bounds.beta ? min(bounds.alpha, *bounds.beta) : bounds.alpha;
  if (!cap.is_positive())
    throw std::invalid_argument("no valid epsilon: min(alpha, beta) is not positive");
  lift.epsilon = epsilon ? *epsilon : cap / Rational(4);
  return lift;
}

WeightedGraph lift_weights(const WeightedGraph& g, const LiftParameters& lift) {
  Rational cap = lift.beta ? min(lift.alpha, *lift.beta) : lift.alpha;
  if (!lift.epsilon.is_positive() || !(lift.epsilon + lift.epsilon < cap))
    throw std::invalid_argument("epsilon out of bounds: need 0 < epsilon < min(alpha, beta)/2");
  Rational reduced = g.weight(lift.edge.u) - lift.epsilon;
  if (!reduced.is_positive())
    throw std::invalid_argument("epsilon exhausts the weight of the reduced endpoint");

  Graph lifted = subdivide(g.structure(), lift.edge);
  std::vector<Rational> w(g.weights().begin(), g.weights().end());
  w[lift.edge.u] = reduced;
  w.push_back(lift.epsilon);  // the new vertex
  return WeightedGraph(std::move(lifted), std::move(w));
}

WeightedGraph lifted_path_weights(const PathWeightSpec& spec, int target_order,
                                  const SolverOptions& opt) {
  WeightedGraph current = odd_path_weights(spec);
  if (target_order <= current.order())
    throw std::invalid_argument("target order must exceed the base path order");

  while (current.order() < target_order) {
    std::vector<int> order = path_order(current.structure());
    Edge rightmost{order[order.size() - 2], order.back()};
    WeightedGraph lifted =
        lift_weights(current, make_lift_parameters(current, rightmost, {}, opt));

    // Relabel into path order so the result is a plain 0..m-1 path again.
    std::vector<int> new_order = path_order(lifted.structure());
    std::vector<Rational> w(new_order.size());
    for (std::size_t pos = 0; pos < new_order.size(); ++pos)
      w[pos] = lifted.weight(new_order[pos]);
    current = WeightedGraph(path_graph(lifted.order()), std::move(w));
  }
  return current;
}

}  // namespace safeset
