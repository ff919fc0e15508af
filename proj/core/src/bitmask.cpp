#include "safeset/bitmask.hpp"

namespace safeset {

std::vector<Mask> adjacency_masks(const Graph& g) {
  if (g.order() > 64)
    throw std::invalid_argument("bitmask operations support at most 64 vertices");
  std::vector<Mask> adj(g.order(), 0);
  for (int v = 0; v < g.order(); ++v)
    for (int u : g.neighbors(v)) adj[v] |= Mask{1} << u;
  return adj;
}

std::vector<Mask> mask_components(const std::vector<Mask>& adj, Mask m) {
  std::vector<Mask> comps;
  while (m) {
    Mask comp = Mask{1} << lowest_bit(m);
    Mask frontier = comp;
    while (frontier) {
      Mask grown = neighborhood(adj, frontier) & m & ~comp;
      comp |= grown;
      frontier = grown;
    }
    comps.push_back(comp);
    m &= ~comp;
  }
  return comps;
}

int count_mask_components(const std::vector<Mask>& adj, Mask m) {
  int k = 0;
  while (m) {
    Mask comp = Mask{1} << lowest_bit(m);
    Mask frontier = comp;
    while (frontier) {
      Mask grown = neighborhood(adj, frontier) & m & ~comp;
      comp |= grown;
      frontier = grown;
    }
    ++k;
    m &= ~comp;
  }
  return k;
}

VertexSet mask_to_set(Mask m) {
  VertexSet s;
  for (; m; m &= m - 1) s.push_back(lowest_bit(m));
  return s;
}

Mask set_to_mask(const VertexSet& s) {
  Mask m = 0;
  for (int v : s) m |= Mask{1} << v;
  return m;
}

}  // namespace safeset
