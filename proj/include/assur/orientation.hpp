#ifndef ASSUR_ORIENTATION_HPP
#define ASSUR_ORIENTATION_HPP

#include <optional>

#include "assur/configuration.hpp"
#include "assur/pinned_graph.hpp"

namespace assur {

// Requested out-degree per vertex; the standard spec asks d at every inner
// vertex and 0 at every pin.
using OutDegreeSpec = std::map<VertexId, int>;

OutDegreeSpec d_out_degree_spec(const PinnedGraph& g);

struct OrientationResult {
  std::optional<Orientation> orientation;
  // on failure: inner vertices whose incident edge count exceeds capacity
  std::vector<VertexId> infeasible_witness;
  bool ok() const { return orientation.has_value(); }
};

// Augmenting-path assignment of a tail to every edge subject to the
// out-degree capacities. Deterministic: edges in edge-id order, endpoints in
// vertex-id order.
OrientationResult realize_out_degrees(const PinnedGraph& g, const OutDegreeSpec& spec);

// d-directed orientation via the flow formulation. When the graph has
// parallel edges the result is additionally steered away from orientations
// whose Laplace term vanishes (two parallel edges sharing a tail), as far
// as cycle reversals allow.
OrientationResult find_d_orientation(const PinnedGraph& g);

// Exponential reference oracle: enumerates all assignments of d incident
// edges to each inner vertex and keeps those whose product of d x d block
// determinants at `config` is nonzero. Exact arithmetic.
std::vector<Orientation> laplace_orientation_oracle(const PinnedGraph& g,
                                                    const Configuration& config,
                                                    int size_cap = 6);
std::vector<Orientation> laplace_orientation_oracle_serial(const PinnedGraph& g,
                                                           const Configuration& config,
                                                           int size_cap = 6);

// Nonzero Laplace term test for a single orientation.
bool laplace_term_nonzero(const PinnedGraph& g, const Configuration& config,
                          const Orientation& o);

bool is_equivalent(const PinnedGraph& g, const Orientation& a, const Orientation& b);

using CycleReversalTrace = std::vector<std::vector<EdgeId>>;

// Cycles whose sequential reversal transforms `from` into `to`.
CycleReversalTrace cycle_reversal_path(const PinnedGraph& g, const Orientation& from,
                                       const Orientation& to);

Orientation apply_reversals(const PinnedGraph& g, const Orientation& o,
                            const CycleReversalTrace& trace);

}  // namespace assur

#endif
