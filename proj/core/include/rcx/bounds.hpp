#pragma once

#include "rcx/lattice_set.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rcx {

/// Graph on candidate outside points; two points are adjacent when the
/// segment between them meets the hull of the base set. Cliques are hiding
/// sets, and both the clique number and the chromatic number bound the
/// separation number from below.
struct HidingGraph {
  std::vector<LatticePoint> vertices;       // sorted, deterministic order
  std::vector<std::vector<uint8_t>> adj;    // symmetric, no self loops

  std::size_t size() const { return vertices.size(); }
  std::size_t edge_count() const;
  bool has_edge(std::size_t u, std::size_t v) const { return adj[u][v] != 0; }
};

/// Builds the graph over y \ x. Pair tests are independent LPs; jobs > 1
/// distributes them over threads (the result does not depend on jobs).
HidingGraph hiding_graph(const LatticeSet& x, const LatticeSet& y, int jobs = 1);

/// Variant with arbitrary rational inner points as the base body.
HidingGraph hiding_graph_over(const std::vector<RatPoint>& inner,
                              const std::vector<LatticePoint>& candidates, int jobs = 1);

struct CliqueResult {
  int size = 0;
  std::vector<int> members;  // vertex indices, a hiding set witness
};

/// Exact maximum clique, branch and bound with greedy-coloring bounds.
CliqueResult max_clique(const HidingGraph& g);

struct ColoringResult {
  int chi = 0;
  std::vector<int> colors;  // proper coloring with chi colors, values 0..chi-1
};

/// Exact chromatic number: k-colorability tested for ascending k starting
/// from the clique number, DSATUR vertex order with backtracking, first
/// vertex pinned to color 0.
ColoringResult chromatic_number(const HidingGraph& g);

std::vector<std::pair<LatticePoint, LatticePoint>> hiding_pairs(const LatticeSet& x,
                                                                const LatticeSet& y);

std::string to_dot(const HidingGraph& g);

/// Edge list (by fixture index) of the certifying subgraph shipped with
/// delta3_certificate(): 54 edges, triangle-free, chromatic number 4.
const std::vector<std::pair<int, int>>& delta3_certificate_edges();

}  // namespace rcx
