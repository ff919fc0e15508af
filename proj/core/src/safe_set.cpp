#include "safeset/safe_set.hpp"

#include <algorithm>
#include <random>

namespace safeset {

namespace {

struct ScanContext {
  const WeightedGraph* g = nullptr;
  std::vector<Mask> adj;
  int n = 0;
  Mask all = 0;

  explicit ScanContext(const WeightedGraph& wg)
      : g(&wg), adj(adjacency_masks(wg.structure())), n(wg.order()),
        all(n == 64 ? ~Mask{0} : (Mask{1} << n) - 1) {}

  Rational mask_weight(Mask m) const {
    Rational sum;
    for (; m; m &= m - 1) sum += g->weight(lowest_bit(m));
    return sum;
  }

  // Predicate over masks; comps of s are passed in to avoid re-decomposing.
  bool is_safe(Mask s, const std::vector<Mask>& s_comps) const {
    Mask rest = all & ~s;
    if (rest == 0) return true;  // s = V(g), vacuously safe
    std::vector<Mask> d_comps = mask_components(adj, rest);
    std::vector<Rational> d_weights(d_comps.size());
    std::vector<char> d_weight_known(d_comps.size(), 0);
    for (Mask c : s_comps) {
      Mask nb = neighborhood(adj, c);
      Rational wc;
      bool wc_known = false;
      for (std::size_t j = 0; j < d_comps.size(); ++j) {
        if (!(nb & d_comps[j])) continue;
        if (!wc_known) { wc = mask_weight(c); wc_known = true; }
        if (!d_weight_known[j]) { d_weights[j] = mask_weight(d_comps[j]); d_weight_known[j] = 1; }
        if (wc < d_weights[j]) return false;
      }
    }
    return true;
  }

  void require_solvable(const SolverOptions& opt) const {
    if (!g->structure().is_connected()) throw DisconnectedGraphError();
    if (n > opt.max_vertices) throw EnumerationCapExceededError(n, opt.max_vertices);
    if (n > 63) throw std::invalid_argument("subset scan limited to 63 vertices");
  }
};

struct ScanResult {
  Rational best;
  Mask witness = 0;
  int witness_k = 0;
  int min_k = 0;  // min component count over all optima, not just the witness
};

// Exhaustive minimum over safe sets. S = V(g) seeds the scan (it is always
// safe), so the running best is a valid prune bound throughout.
ScanResult scan_minimum(const WeightedGraph& g, bool connected_only,
                        const SolverOptions& opt) {
  ScanContext ctx(g);
  ctx.require_solvable(opt);

  ScanResult r;
  r.best = g.total_weight();
  r.witness = ctx.all;
  r.witness_k = 1;  // g is connected
  r.min_k = 1;

  for (Mask s = 1; s < ctx.all; ++s) {
    std::vector<Mask> comps = mask_components(ctx.adj, s);
    int k = static_cast<int>(comps.size());
    if (connected_only && k != 1) continue;

    Rational w = ctx.mask_weight(s);
    if (w > r.best) continue;
    if (!ctx.is_safe(s, comps)) continue;

    if (w < r.best) {
      r.best = w;
      r.witness = s;
      r.witness_k = k;
      r.min_k = k;
    } else {  // w == r.best
      r.min_k = std::min(r.min_k, k);
      if (k < r.witness_k ||
          (k == r.witness_k && mask_lex_less(s, r.witness))) {
        r.witness = s;
        r.witness_k = k;
      }
    }
  }
  return r;
}

}  // namespace

bool is_safe_set(const WeightedGraph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("safe set must be nonempty");
  if (!g.structure().is_connected()) throw DisconnectedGraphError();

  const Graph& structure = g.structure();
  std::vector<char> in_s(g.order(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.order())
      throw std::out_of_range("vertex index out of range");
    in_s[v] = 1;
  }
  VertexSet rest;
  for (int v = 0; v < g.order(); ++v)
    if (!in_s[v]) rest.push_back(v);
  if (rest.empty()) return true;  // s = V(g)

  ComponentList s_comps = components(structure, s);
  ComponentList d_comps = components(structure, rest);
  std::vector<Rational> d_weights;
  d_weights.reserve(d_comps.size());
  for (const VertexSet& d : d_comps) d_weights.push_back(subset_weight(g, d));

  for (const VertexSet& c : s_comps) {
    Rational wc = subset_weight(g, c);
    for (std::size_t j = 0; j < d_comps.size(); ++j)
      if (wc < d_weights[j] && edge_between(structure, c, d_comps[j]))
        return false;
  }
  return true;
}

SafeSetSolution safe_number(const WeightedGraph& g, const SolverOptions& opt) {
  ScanResult r = scan_minimum(g, /*connected_only=*/false, opt);
  return {r.best, mask_to_set(r.witness), r.witness_k, false};
}

SafeSetSolution connected_safe_number(const WeightedGraph& g, const SolverOptions& opt) {
  ScanResult r = scan_minimum(g, /*connected_only=*/true, opt);
  return {r.best, mask_to_set(r.witness), r.witness_k, true};
}

int min_components_of_min_safe_sets(const WeightedGraph& g, const SolverOptions& opt) {
  return scan_minimum(g, /*connected_only=*/false, opt).min_k;
}

std::vector<Rational> witness_weight(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("witness_weight: set must be nonempty");
  std::vector<char> in_s(g.order(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.order())
      throw std::out_of_range("vertex index out of range");
    in_s[v] = 1;
  }
  VertexSet rest;
  for (int v = 0; v < g.order(); ++v)
    if (!in_s[v]) rest.push_back(v);
  if (rest.empty())
    throw std::invalid_argument("witness_weight: set must be a proper subset");

  std::vector<Rational> w(g.order());
  for (const VertexSet& comp : components(g, s))
    for (int v : comp) w[v] = Rational(1, static_cast<long>(comp.size()));
  for (const VertexSet& comp : components(g, rest))
    for (int v : comp) w[v] = Rational(1, static_cast<long>(comp.size()));
  return w;
}

RatioBoundReport verify_ratio_bound(const WeightedGraph& g, const SolverOptions& opt) {
  SafeSetSolution s = safe_number(g, opt);
  SafeSetSolution cs = connected_safe_number(g, opt);
  RatioBoundReport rep;
  rep.safe = s.optimum;
  rep.connected_safe = cs.optimum;
  rep.total = g.total_weight();
  rep.safe_le_connected = s.optimum <= cs.optimum;
  rep.connected_lt_twice_safe = cs.optimum < s.optimum + s.optimum;
  rep.safe_ge_half_total = s.optimum + s.optimum >= rep.total;
  return rep;
}

void for_each_safe_set(const WeightedGraph& g,
                       const std::function<void(Mask, int, const Rational&)>& fn,
                       const SolverOptions& opt) {
  ScanContext ctx(g);
  ctx.require_solvable(opt);
  for (Mask s = 1; s <= ctx.all; ++s) {
    std::vector<Mask> comps = mask_components(ctx.adj, s);
    if (!ctx.is_safe(s, comps)) continue;
    fn(s, static_cast<int>(comps.size()), ctx.mask_weight(s));
  }
}

std::vector<Rational> random_integer_weights(int n, std::uint64_t seed,
                                             long lo, long hi) {
  if (n < 0 || hi < lo || lo < 1)
    throw std::invalid_argument("random_integer_weights: bad range");
  std::mt19937_64 rng(seed);
  std::vector<Rational> w;
  w.reserve(n);
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  for (int i = 0; i < n; ++i)
    w.emplace_back(static_cast<long>(lo + static_cast<long>(rng() % span)));
  return w;
}

}  // namespace safeset
