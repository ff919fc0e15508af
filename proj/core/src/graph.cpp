#include "safeset/graph.hpp"

#include <algorithm>
#include <string>

namespace safeset {

namespace {

void check_vertex(int v, int n) {
  if (v < 0 || v >= n)
    throw std::out_of_range("vertex index " + std::to_string(v) +
                            " out of range [0," + std::to_string(n) + ")");
}

void check_subset(const VertexSet& s, int n) {
  for (int v : s) check_vertex(v, n);
}

}  // namespace

Graph::Graph(int order, std::span<const Edge> edges) {
  if (order < 0) throw std::invalid_argument("negative graph order");
  adj_.resize(order);
  for (const Edge& e : edges) {
    check_vertex(e.u, order);
    check_vertex(e.v, order);
    if (e.u == e.v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw std::invalid_argument("parallel edge in input");
    edge_count_ += static_cast<int>(nbrs.size());
  }
  edge_count_ /= 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u, order());
  check_vertex(v, order());
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

bool Graph::is_connected() const {
  if (order() == 0) return false;
  VertexSet all(order());
  for (int v = 0; v < order(); ++v) all[v] = v;
  return components(*this, all).size() == 1;
}

WeightedGraph::WeightedGraph(Graph structure, std::vector<Rational> weights)
    : g_(std::move(structure)), w_(std::move(weights)) {
  if (static_cast<int>(w_.size()) != g_.order())
    throw std::invalid_argument("weight count does not match graph order");
  for (std::size_t v = 0; v < w_.size(); ++v) {
    if (!w_[v].is_positive())
      throw std::invalid_argument("weight of vertex " + std::to_string(v) +
                                  " is not positive");
    total_ += w_[v];
  }
}

ComponentList components(const Graph& g, const VertexSet& s) {
  check_subset(s, g.order());
  std::vector<char> in_s(g.order(), 0), seen(g.order(), 0);
  for (int v : s) in_s[v] = 1;

  ComponentList out;
  std::vector<int> stack;
  // Scanning seeds in ascending index order keys each component by its
  // minimum vertex.
  VertexSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  for (int seed : sorted) {
    if (seen[seed]) continue;
    VertexSet comp;
    stack.push_back(seed);
    seen[seed] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.neighbors(v)) {
        if (in_s[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

ComponentList components(const Graph& g) {
  VertexSet all(g.order());
  for (int v = 0; v < g.order(); ++v) all[v] = v;
  return components(g, all);
}

Rational subset_weight(const WeightedGraph& g, const VertexSet& s) {
  check_subset(s, g.order());
  Rational sum;
  for (int v : s) sum += g.weight(v);
  return sum;
}

bool edge_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  check_subset(a, g.order());
  check_subset(b, g.order());
  std::vector<char> in_b(g.order(), 0);
  for (int v : b) in_b[v] = 1;
  for (int v : a)
    if (in_b[v]) throw std::invalid_argument("edge_between requires disjoint sets");
  for (int v : a)
    for (int u : g.neighbors(v))
      if (in_b[u]) return true;
  return false;
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph(n, es);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return Graph(n, es);
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({u, v});
  return Graph(n, es);
}

}  // namespace safeset
