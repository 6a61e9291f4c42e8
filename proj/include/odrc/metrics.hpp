#pragma once

#include <vector>

#include "odrc/graph.hpp"

namespace odrc {

struct DistanceProfile {
  Vertex source = 0;
  std::vector<int> dist;       // kInf when unreachable
  std::vector<Vertex> parent;  // -1 for the source and unreachable vertices
};

DistanceProfile bfs(const Graph& g, Vertex s);

bool is_connected(const Graph& g);

// Eccentricity of every vertex; kInf entries when g is disconnected.
// `threads` > 1 splits the all-source sweep by source vertex.
std::vector<int> eccentricities(const Graph& g, int threads = 1);

struct RadiusDiameter {
  int radius = 0;
  int diameter = 0;
  std::vector<Vertex> centers;  // ascending
};

// Throws PreconditionError("not connected") on disconnected input.
RadiusDiameter radius_diameter_centers(const Graph& g, int threads = 1);

// Vertices at distance exactly k (open) or at most k (closed), ascending.
std::vector<Vertex> k_step_neighborhood(const Graph& g, Vertex u, int k,
                                        bool closed);

// Cut edges, ascending by id.
std::vector<EdgeId> bridges(const Graph& g);

// Shortest cycle length, kInf for forests.
int girth(const Graph& g);

int min_degree(const Graph& g);

struct Bipartition {
  bool bipartite = false;
  std::vector<Vertex> left;       // side of the lowest vertex of each component
  std::vector<Vertex> right;
  std::vector<Vertex> odd_cycle;  // odd cycle, first vertex repeated at the end
};

Bipartition bipartition(const Graph& g);

}  // namespace odrc
