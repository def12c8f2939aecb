#ifndef ASSUR_DECOMPOSITION_HPP
#define ASSUR_DECOMPOSITION_HPP

#include <set>
#include <utility>

#include "assur/pinned_graph.hpp"

namespace assur {

// One strongly connected component of the ground-condensed digraph together
// with all edges directed out of it (ground edges included).
struct ExtendedComponent {
  std::vector<VertexId> inner_vertices;  // sorted
  std::vector<EdgeId> edges;             // graph edge order
};

struct Decomposition {
  std::vector<ExtendedComponent> components;  // sorted by smallest inner vertex
  // (upper, lower): upper has an edge into lower; ground edges tracked via
  // touches_ground, multiplicities kept in a side map
  std::set<std::pair<int, int>> dag_edges;
  std::map<std::pair<int, int>, int> dag_multiplicity;
  std::vector<char> touches_ground;
  std::vector<int> linear_order;  // bottom-up, deterministic
};

// Tarjan; components are reported with sorted vertex lists, ordered by
// smallest vertex.
std::vector<std::vector<int>> strongly_connected_components(
    int n, const std::vector<std::pair<int, int>>& arcs);

// Pairwise-reachability oracle, test use only.
std::vector<std::vector<int>> brute_force_scc(int n,
                                              const std::vector<std::pair<int, int>>& arcs,
                                              int cap = 12);

Decomposition scc_decompose(const PinnedGraph& g, const Orientation& o);

std::vector<std::vector<int>> linear_extensions(const Decomposition& d, int limit);

PinnedGraph component_subgraph(const PinnedGraph& g, const Decomposition& d, int comp);

// Condensation DAG as DOT; pass the orientation to additionally emit the
// full directed graph with components as clusters.
std::string decomposition_to_dot(const PinnedGraph& g, const Decomposition& d,
                                 const Orientation* full = nullptr);

}  // namespace assur

#endif
