#ifndef ASSUR_ASSUR_ANALYSIS_HPP
#define ASSUR_ASSUR_ANALYSIS_HPP

#include <optional>
#include <set>

#include "assur/decomposition.hpp"
#include "assur/rigidity.hpp"

namespace assur {

struct AssurRoutes {
  bool scc_single = false;  // route (2): one strongly connected component
  bool btf_single = false;  // route (3): one diagonal block in the finest BTF
  // route (1): brute-force subgraph search, absent above the size cap
  std::optional<bool> no_proper_isostatic_subgraph;
  bool agree() const;
};

struct AssurVerdict {
  bool is_isostatic = false;
  bool is_assur = false;
  // only set by the strong classification entry points
  std::optional<bool> is_strongly_assur;
  AssurRoutes routes;
  int scc_component_count = 0;
  int btf_component_count = 0;
  std::optional<int> minimal_subgraph_component_count;
};

// Inner vertex sets of proper pinned isostatic subgraphs, smallest first.
std::optional<std::vector<VertexId>> find_proper_isostatic_subgraph(const PinnedGraph& g,
                                                                    uint64_t seed,
                                                                    int cap = 10);

// Route (1) decomposition: repeatedly ground a minimal pinned isostatic
// subgraph. Returns the component inner sets in discovery order.
std::vector<std::vector<VertexId>> assur_decompose_minimal(const PinnedGraph& g,
                                                           uint64_t seed, int cap = 10);

AssurVerdict is_d_assur(const PinnedGraph& g, uint64_t seed, int subgraph_cap = 10);

struct MovingSet {
  std::set<VertexId> moving;
  bool trials_disagree = false;
  int kernel_dim = 0;  // certified kernel dimension (min over trials)
};

MovingSet moving_set_on_edge_removal(const PinnedGraph& g, const EdgeId& edge, int trials,
                                     uint64_t seed);

MovingSet vertex_removal_moving_set(const PinnedGraph& g, const VertexId& v, uint64_t seed,
                                    int trials = 3);

bool is_strongly_d_assur(const PinnedGraph& g, uint64_t seed);
AssurVerdict classify_assur(const PinnedGraph& g, uint64_t seed, bool with_strong,
                            int subgraph_cap = 10);

struct DriverClass {
  EdgeId edge;
  std::set<VertexId> moving_set;
  bool regular = false;
};

struct DriverReport {
  std::vector<DriverClass> drivers;  // graph edge order
  // strict moving-set inclusions among weak drivers
  std::vector<std::pair<EdgeId, EdgeId>> weak_order;
  bool trials_disagree = false;
};

DriverReport classify_drivers(const PinnedGraph& g, uint64_t seed, int trials = 3);
DriverReport classify_drivers_serial(const PinnedGraph& g, uint64_t seed, int trials = 3);

// Prescribed velocities for pinned vertices; unlisted pins are at rest.
using DriveSpec = std::map<VertexId, std::vector<Rat>>;

MotionQ drive_solve(const PinnedGraph& g, const Configuration& config, const DriveSpec& r);
MotionF drive_solve_float(const PinnedGraph& g, const Configuration& config,
                          const DriveSpec& r, double tol = 1e-9);

// Removes `driver` from its bottom component, scales the one-dimensional
// kernel so the removed edge's length rate equals `rate`, then walks the
// linear order upward treating solved vertices as moving pins. Exact; the
// result is checked against the monolithic solve.
MotionQ drive_propagate(const PinnedGraph& g, const Decomposition& d,
                        const Configuration& config, const EdgeId& driver, const Rat& rate);

// Monolithic reference: kernel of the whole graph minus the driver edge,
// scaled to the same rate.
MotionQ drive_monolithic(const PinnedGraph& g, const Configuration& config,
                         const EdgeId& driver, const Rat& rate);

}  // namespace assur

#endif
