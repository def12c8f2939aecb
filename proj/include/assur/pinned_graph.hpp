#ifndef ASSUR_PINNED_GRAPH_HPP
#define ASSUR_PINNED_GRAPH_HPP

#include <map>
#include <string>
#include <vector>

namespace assur {

using VertexId = std::string;
using EdgeId = std::string;

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;
};

struct Violation {
  enum class Kind {
    pin_pin_edge,
    self_loop,
    unknown_endpoint,
    duplicate_edge_id,
    duplicate_vertex,
    bad_dimension,
  };
  Kind kind;
  EdgeId edge;        // empty when not edge-related
  std::string detail;
};

std::string violation_to_string(const Violation& v);

// Pinned multigraph (I, P; E). Immutable after construction; the surgery
// operations return new graphs.
class PinnedGraph {
 public:
  PinnedGraph() = default;
  PinnedGraph(int dimension, std::vector<VertexId> inner, std::vector<VertexId> pinned,
              std::vector<Edge> edges);

  int dimension() const { return dim_; }
  const std::vector<VertexId>& inner() const { return inner_; }    // sorted
  const std::vector<VertexId>& pinned() const { return pinned_; }  // sorted
  const std::vector<Edge>& edges() const { return edges_; }        // input order

  int inner_count() const { return static_cast<int>(inner_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool is_inner(const VertexId& v) const;
  bool is_pinned(const VertexId& v) const;
  bool has_vertex(const VertexId& v) const { return is_inner(v) || is_pinned(v); }

  // dense index of an inner vertex in sorted order, -1 if not inner
  int inner_index(const VertexId& v) const;
  int edge_index(const EdgeId& e) const;  // -1 if unknown

  int valence(const VertexId& v) const;

 private:
  int dim_ = 0;
  std::vector<VertexId> inner_;
  std::vector<VertexId> pinned_;
  std::vector<Edge> edges_;
  std::map<VertexId, int> inner_idx_;
  std::map<EdgeId, int> edge_idx_;
};

std::vector<Violation> validate(const PinnedGraph& g);

// Per-edge tail assignment; head is the other endpoint.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::map<EdgeId, VertexId> tails) : tails_(std::move(tails)) {}

  const std::map<EdgeId, VertexId>& tails() const { return tails_; }
  const VertexId& tail(const EdgeId& e) const;
  bool covers(const PinnedGraph& g) const;

  static VertexId head_of(const Edge& e, const VertexId& tail);

  bool operator==(const Orientation& o) const { return tails_ == o.tails_; }

 private:
  std::map<EdgeId, VertexId> tails_;
};

std::map<VertexId, int> out_degrees(const PinnedGraph& g, const Orientation& o);
bool is_d_directed(const PinnedGraph& g, const Orientation& o);

// Directed multigraph after identifying all pins with a single ground node.
struct CondensedDigraph {
  std::vector<std::string> nodes;  // inner ids in sorted order, then "ground"
  int ground = -1;
  struct Arc {
    EdgeId edge;
    int from;
    int to;
  };
  std::vector<Arc> arcs;
};

CondensedDigraph condense_to_ground(const PinnedGraph& g, const Orientation& o);

PinnedGraph release_pin(const PinnedGraph& g, const VertexId& pin,
                        const std::vector<VertexId>& anchors);

struct RepinResult {
  PinnedGraph graph;
  std::vector<Edge> removed_edges;
};
RepinResult repin_vertex(const PinnedGraph& g, const VertexId& v);

}  // namespace assur

#endif
