#ifndef ASSUR_COUNTS_HPP
#define ASSUR_COUNTS_HPP

#include "assur/orientation.hpp"
#include "assur/pinned_graph.hpp"

namespace assur {

struct CountViolation {
  std::vector<VertexId> inner;  // I' of the violating subgraph
  std::vector<VertexId> pins;   // P' actually included
  int edge_count = 0;
  int bound = 0;
  int pin_count = 0;
  std::string clause;  // "(i)" for k >= d, "(ii) k=..." below
};

bool top_count(const PinnedGraph& g);

// Deficit realizable on |I'| inner vertices with k pins fixed:
// C(max(d+1-k,0),2) - C(max(d+1-k-|I'|,0),2).
int count_deficit(int dimension, int pin_count, int inner_count);

// Enumerates every inner subset; for each, all inner-inner edges plus the
// k highest-multiplicity pins for k = 0..#touched pins. Reports the worst
// violation per inner subset. Exponential oracle, capped.
std::vector<CountViolation> subgraph_counts_bruteforce(const PinnedGraph& g, int cap = 16);
std::vector<CountViolation> subgraph_counts_bruteforce_serial(const PinnedGraph& g,
                                                              int cap = 16);

// Pinned Plane Framework Conditions, decided in polynomial time: ground the
// pins with an isostatic fan and run the (2,3) pebble game.
bool pinned_laman_check_2d(const PinnedGraph& g);

// (2,3)-sparsity of the grounded graph alone (no |E| = 2|I| clause).
bool pinned_sparsity_2d(const PinnedGraph& g);

// Delegates to find_d_orientation once the counts hold; a failure then is
// an internal error, not a user error.
OrientationResult counts_imply_orientation(const PinnedGraph& g, int cap = 16);

}  // namespace assur

#endif
