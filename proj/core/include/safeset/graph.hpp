#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "safeset/rational.hpp"

namespace safeset {

/// Vertex subset as a sorted list of distinct 0-based indices.
using VertexSet = std::vector<int>;

/// Disjoint vertex subsets, each inducing a connected subgraph, ordered by
/// their minimum vertex index.
using ComponentList = std::vector<VertexSet>;

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Thrown by solver entry points that require a connected input graph.
struct DisconnectedGraphError : std::invalid_argument {
  DisconnectedGraphError() : std::invalid_argument("graph not connected") {}
};

/// Finite simple undirected graph on vertices 0..n-1. Immutable after
/// construction; adjacency lists are kept sorted, so everything derived from
/// them is independent of the order edges were supplied in.
class Graph {
 public:
  explicit Graph(int order, std::span<const Edge> edges = {});

  int order() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }

  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  std::span<const int> neighbors(int v) const { return adj_.at(v); }

  /// All edges with u < v, sorted.
  std::vector<Edge> edges() const;

  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

/// A graph together with a strictly positive exact rational weight per vertex.
class WeightedGraph {
 public:
  WeightedGraph(Graph structure, std::vector<Rational> weights);

  const Graph& structure() const { return g_; }
  int order() const { return g_.order(); }
  const Rational& weight(int v) const { return w_.at(v); }
  std::span<const Rational> weights() const { return w_; }
  const Rational& total_weight() const { return total_; }

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  Graph g_;
  std::vector<Rational> w_;
  Rational total_;
};

/// Maximal connected pieces of the subgraph induced by s, keyed by minimum
/// vertex index, ascending. Vertices inside each piece are sorted.
ComponentList components(const Graph& g, const VertexSet& s);

/// Components of the whole graph.
ComponentList components(const Graph& g);

/// Exact sum of the weights of s; 0 for the empty set.
Rational subset_weight(const WeightedGraph& g, const VertexSet& s);

/// True iff some edge joins a vertex of a to a vertex of b.
/// a and b must be disjoint.
bool edge_between(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Convenience builders for the graph families used throughout.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

}  // namespace safeset
