#pragma once

#include <initializer_list>
#include <vector>

#include "safeset/graph.hpp"

namespace testutil {

using safeset::Graph;
using safeset::Rational;
using safeset::WeightedGraph;

inline std::vector<Rational> weights(std::initializer_list<long> values) {
  std::vector<Rational> w;
  for (long v : values) w.emplace_back(v);
  return w;
}

inline WeightedGraph uniform(Graph g) {
  std::vector<Rational> w(g.order(), Rational(1));
  return WeightedGraph(std::move(g), std::move(w));
}

/// The running example: P7 with weights (5, 5, 3, 6, 6, 12, 12).
inline WeightedGraph figure_path() {
  return WeightedGraph(safeset::path_graph(7), weights({5, 5, 3, 6, 6, 12, 12}));
}

/// Random connected graph on n vertices (edge probability ~1/2, resampled
/// until connected).
template <class Rng>
Graph random_connected_graph(int n, Rng& rng) {
  for (;;) {
    std::vector<safeset::Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) edges.push_back({u, v});
    Graph g(n, edges);
    if (g.is_connected()) return g;
  }
}

template <class Rng>
std::vector<Rational> random_weights(int n, Rng& rng, long hi = 1000) {
  std::vector<Rational> w;
  for (int i = 0; i < n; ++i) w.emplace_back(static_cast<long>(1 + rng() % hi));
  return w;
}

}  // namespace testutil
