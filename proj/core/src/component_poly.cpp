#include "safeset/component_poly.hpp"

#include <algorithm>
#include <random>

namespace safeset {

namespace {

CoefficientTable table_from_masks(const std::vector<Mask>& adj, int n) {
  CoefficientTable table(n);
  const Mask all = (Mask{1} << n) - 1;
  for (Mask sub = 1; sub <= all; ++sub)
    table.add(popcount(sub), count_mask_components(adj, sub));
  return table;
}

void require_connected(const Graph& g) {
  if (!g.is_connected()) throw DisconnectedGraphError();
}

}  // namespace

CoefficientTable coefficient_table(const Graph& g, int cap) {
  if (g.order() > cap)
    throw EnumerationCapExceededError(g.order(), cap);
  if (g.order() == 0) return CoefficientTable(0);
  return table_from_masks(adjacency_masks(g), g.order());
}

bool is_two_connected_by_coefficients(const CoefficientTable& table) {
  int n = table.order();
  if (n < 2) return false;
  return table.at(1, 1) == table.at(n - 1, 1);
}

bool has_cut_vertex(const Graph& g) {
  require_connected(g);
  const int n = g.order();
  if (n <= 2) return false;
  std::vector<Mask> adj = adjacency_masks(g);
  const Mask all = (Mask{1} << n) - 1;
  for (int v = 0; v < n; ++v)
    if (!mask_connected(adj, all & ~(Mask{1} << v))) return true;
  return false;
}

bool condition_complete_or_cycle(const Graph& g) {
  require_connected(g);
  const int n = g.order();
  if (g.edge_count() == n * (n - 1) / 2) return true;  // complete
  if (n < 3) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  return true;  // connected and 2-regular: a single cycle
}

bool condition_cut_pair(const Graph& g) {
  require_connected(g);
  const int n = g.order();
  std::vector<Mask> adj = adjacency_masks(g);
  const Mask all = (Mask{1} << n) - 1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      if (mask_connected(adj, all & ~((Mask{1} << u) | (Mask{1} << v))))
        return false;
    }
  return true;
}

bool condition_coefficients(const CoefficientTable& table) {
  int n = table.order();
  if (n < 3) return false;
  return table.at(1, 1) == table.at(n - 1, 1) &&
         table.at(2, 1) == table.at(n - 2, 1);
}

StrongVariantFlags strong_variants(const Graph& g, int cap) {
  require_connected(g);
  const int n = g.order();
  if (n > cap) throw EnumerationCapExceededError(n, cap);
  std::vector<Mask> adj = adjacency_masks(g);
  const Mask all = (Mask{1} << n) - 1;

  StrongVariantFlags flags;
  flags.pair_symmetry = true;
  for (int u = 0; u < n && flags.pair_symmetry; ++u)
    for (int v = u + 1; v < n; ++v) {
      Mask s = (Mask{1} << u) | (Mask{1} << v);
      if (count_mask_components(adj, s) != count_mask_components(adj, all & ~s)) {
        flags.pair_symmetry = false;
        break;
      }
    }

  flags.subset_symmetry = true;
  for (Mask s = 1; s < all && flags.subset_symmetry; ++s)
    if (count_mask_components(adj, s) != count_mask_components(adj, all & ~s))
      flags.subset_symmetry = false;

  CoefficientTable table = table_from_masks(adj, n);
  flags.full_palindrome = true;
  for (int k = 1; k < n; ++k)
    if (table.at(k, 1) != table.at(n - k, 1)) {
      flags.full_palindrome = false;
      break;
    }
  return flags;
}

ClassifierVerdict classify(const Graph& g, bool with_strong, int cap) {
  ClassifierVerdict verdict;
  verdict.complete_or_cycle = condition_complete_or_cycle(g);
  verdict.cut_pair = condition_cut_pair(g);
  verdict.coefficients = condition_coefficients(coefficient_table(g, cap));
  verdict.agreement = verdict.complete_or_cycle == verdict.cut_pair &&
                      verdict.cut_pair == verdict.coefficients;
  if (with_strong) {
    verdict.strong = strong_variants(g, cap);
    bool s = verdict.complete_or_cycle;
    verdict.agreement = verdict.agreement &&
                        verdict.strong->pair_symmetry == s &&
                        verdict.strong->subset_symmetry == s &&
                        verdict.strong->full_palindrome == s;
  }
  return verdict;
}

RatioGadgetReport ratio_lemma_gadget(const Graph& g, const VertexSet& s,
                                     int p, int q) {
  if (q < 1 || p < q)
    throw std::invalid_argument("ratio gadget requires p >= q >= 1");
  require_connected(g);

  std::vector<Rational> w = witness_weight(g, s);  // validates s proper nonempty
  VertexSet rest;
  std::vector<char> in_s(g.order(), 0);
  for (int v : s) in_s[v] = 1;
  for (int v = 0; v < g.order(); ++v)
    if (!in_s[v]) rest.push_back(v);

  RatioGadgetReport rep;
  rep.inside_components = static_cast<int>(components(g, s).size());
  rep.outside_components = static_cast<int>(components(g, rest).size());
  // t/r <= q/p, cross-multiplied
  if (rep.inside_components * p > q * rep.outside_components)
    throw std::invalid_argument("ratio gadget requires k(g[s])/k(g-s) <= q/p");

  WeightedGraph wg(g, std::move(w));
  rep.safe_under_witness = is_safe_set(wg, s);
  rep.subset_ratio = subset_weight(wg, s) / wg.total_weight();
  rep.bound = Rational(q, p + q);
  rep.refutes_bound = rep.subset_ratio < rep.bound;
  return rep;
}

CorpusReport corpus_crosscheck(int order, int weight_trials, std::uint64_t seed) {
  if (order < 5 || order > 7)
    throw std::invalid_argument("corpus crosscheck supports orders 5..7");
  if (weight_trials < 0)
    throw std::invalid_argument("negative trial count");

  const int n = order;
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
  const int num_slots = static_cast<int>(slots.size());

  CorpusReport rep;
  rep.order = n;
  rep.labeled_graphs = Mask{1} << num_slots;
  rep.weight_trials = weight_trials;
  rep.seed = seed;

  std::mt19937_64 rng(seed);
  const Mask all = (Mask{1} << n) - 1;
  std::vector<Mask> adj(n);

  for (Mask gm = 0; gm < (Mask{1} << num_slots); ++gm) {
    std::fill(adj.begin(), adj.end(), 0);
    int m = 0;
    for (Mask rest = gm; rest; rest &= rest - 1) {
      const Edge& e = slots[lowest_bit(rest)];
      adj[e.u] |= Mask{1} << e.v;
      adj[e.v] |= Mask{1} << e.u;
      ++m;
    }
    if (!mask_connected(adj, all)) continue;
    ++rep.connected_graphs;

    // (i) complete or cycle, structurally.
    bool complete = m == num_slots;
    bool cycle = m == n;
    if (cycle)
      for (int v = 0; v < n; ++v)
        if (popcount(adj[v]) != 2) { cycle = false; break; }
    bool cond_structure = complete || cycle;

    // Single-vertex removals: q(n-1, 1) counts the connected ones.
    int connected_vertex_removals = 0;
    for (int v = 0; v < n; ++v)
      if (mask_connected(adj, all & ~(Mask{1} << v))) ++connected_vertex_removals;

    // Pair removals feed both the cut-pair condition (iii) and q(n-2, 1).
    bool cond_cut_pair = true;
    int connected_pair_removals = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        bool conn = mask_connected(
            adj, all & ~((Mask{1} << u) | (Mask{1} << v)));
        if (conn) {
          ++connected_pair_removals;
          if (!(adj[u] >> v & 1)) cond_cut_pair = false;  // nonadjacent pair
        }
      }

    // (iv): q(1,1) = n = q(n-1,1) and q(2,1) = m = q(n-2,1).
    bool cond_coeff = connected_vertex_removals == n &&
                      connected_pair_removals == m;

    if (cond_structure != cond_cut_pair || cond_cut_pair != cond_coeff) {
      CorpusDisagreement d;
      for (Mask rest = gm; rest; rest &= rest - 1)
        d.edges.push_back(slots[lowest_bit(rest)]);
      d.complete_or_cycle = cond_structure;
      d.cut_pair = cond_cut_pair;
      d.coefficients = cond_coeff;
      rep.disagreements.push_back(std::move(d));
      continue;
    }
    if (!cond_structure) continue;
    ++rep.condition_holders;

    // Sampled corroboration of the half-total bound on this graph.
    std::vector<Edge> edges;
    for (Mask rest = gm; rest; rest &= rest - 1)
      edges.push_back(slots[lowest_bit(rest)]);
    Graph graph(n, edges);
    for (int t = 0; t < weight_trials; ++t) {
      std::vector<Rational> w;
      w.reserve(n);
      for (int v = 0; v < n; ++v)
        w.emplace_back(static_cast<long>(1 + rng() % 1000));
      WeightedGraph wg(graph, std::move(w));
      SafeSetSolution sol = safe_number(wg);
      ++rep.sampled_instances;
      if (sol.optimum + sol.optimum < wg.total_weight())
        ++rep.sampled_half_bound_violations;
    }
  }
  return rep;
}

}  // namespace safeset
