#pragma once

#include <span>
#include <vector>

#include "odrc/graph.hpp"

namespace odrc {

// 1 + d_{G-e}(u, v), or kInf when e is a bridge.
int shortest_cycle_through_edge(const Graph& g, EdgeId e);

// Vertex sequence of a shortest cycle through e starting u, v, ... (the
// closing vertex is not repeated); empty when e is a bridge.
std::vector<Vertex> shortest_cycle_witness(const Graph& g, EdgeId e);

struct CycleCoverReport {
  int eta = kInf;              // kInf iff some edge is a bridge
  std::vector<int> per_edge;   // indexed by edge id
  std::vector<std::vector<Vertex>> witnesses;  // only when requested
};

CycleCoverReport cycle_cover(const Graph& g, bool with_witnesses = false,
                             int threads = 1);

// Smallest integer such that every edge lies on a cycle of at most that
// length. 0 for the edgeless graph.
int eta(const Graph& g, int threads = 1);

// `cycle` lists distinct vertices in cyclic order (a repeated first vertex at
// the end is accepted). Throws Error when it is not a cycle of g.
bool is_isometric_cycle(const Graph& g, std::span<const Vertex> cycle);

// Length of a longest isometric cycle (0 when acyclic) by exhaustive search.
// Throws PreconditionError("too large for exact zeta") when n > max_n.
int zeta_bruteforce(const Graph& g, int max_n = 14);

// Same search, also returning one longest isometric cycle.
std::vector<Vertex> longest_isometric_cycle(const Graph& g, int max_n = 14);

}  // namespace odrc
