#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lambdamap/maps.hpp"

namespace lambdamap {

// Undirected multigraph with loops. When derived from a map, each edge keeps
// the two darts it was built from.
struct UndirectedGraph {
  struct Edge {
    std::size_t u = 0;
    std::size_t w = 0;
    Dart first_dart = 0;
    Dart second_dart = 0;

    bool is_loop() const noexcept { return u == w; }
  };

  std::size_t vertex_count = 0;
  std::vector<Edge> edges;

  std::size_t add_edge(std::size_t u, std::size_t w);
  std::size_t degree(std::size_t vertex) const;  // a loop counts twice
  bool is_connected() const;
};

// Vertices are v-orbits numbered by their smallest dart; one edge per
// 2-element e-orbit. Boundary darts contribute no edge.
UndirectedGraph underlying_graph(const RootedTrivalentMap& m);
UndirectedGraph underlying_graph(const ClassicalMap& m);

// Indices of the cut edges, ascending. Loops are never bridges and parallel
// edges never are either. Throws DisconnectedGraph on disconnected input.
std::vector<std::size_t> bridges(const UndirectedGraph& g);

// True iff the underlying graph has no bridge other than the root edge.
// Throws InvalidArgument if the map has boundary.
bool is_bridgeless(const RootedTrivalentMap& m);

// Exact isomorphism test for small multigraphs (backtracking over vertex
// bijections, pruned by degree).
bool graph_isomorphic(const UndirectedGraph& a, const UndirectedGraph& b);

UndirectedGraph petersen_graph();

}  // namespace lambdamap
