#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "safeset/graph.hpp"

namespace safeset {

/// Vertex subsets of graphs small enough for exhaustive scans, one bit per
/// vertex. All brute-force enumeration in this library runs on these.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }

/// adjacency[v] = bitmask of neighbors of v. Requires order <= 64.
std::vector<Mask> adjacency_masks(const Graph& g);

/// Union of neighborhoods of the vertices in m (may overlap m itself).
inline Mask neighborhood(const std::vector<Mask>& adj, Mask m) {
  Mask nb = 0;
  for (Mask rest = m; rest; rest &= rest - 1) nb |= adj[lowest_bit(rest)];
  return nb;
}

/// Connected components of the subgraph induced by m, as masks, keyed by
/// minimum vertex index ascending.
std::vector<Mask> mask_components(const std::vector<Mask>& adj, Mask m);

int count_mask_components(const std::vector<Mask>& adj, Mask m);

inline bool mask_connected(const std::vector<Mask>& adj, Mask m) {
  if (m == 0) return false;
  Mask comp = Mask{1} << lowest_bit(m);
  for (;;) {
    Mask grown = (comp | (neighborhood(adj, comp) & m));
    if (grown == comp) break;
    comp = grown;
  }
  return comp == m;
}

VertexSet mask_to_set(Mask m);
Mask set_to_mask(const VertexSet& s);

/// Lexicographic order on the sorted index sequences of two masks, e.g.
/// {0,2} < {0,3} < {1}; a strict prefix precedes its extensions.
inline bool mask_lex_less(Mask a, Mask b) {
  if (a == b) return false;
  int i = lowest_bit(a ^ b);  // sequences agree strictly below index i
  if ((a >> i) & 1) return (b >> i) != 0;  // a < b unless b is a strict prefix of a
  return (a >> i) == 0;                    // b owns bit i; a < b only as a strict prefix
}

}  // namespace safeset
