#include "assur/pinned_graph.hpp"

#include <algorithm>
#include <set>

#include "assur/error.hpp"

namespace assur {

std::string violation_to_string(const Violation& v) {
  switch (v.kind) {
    case Violation::Kind::pin_pin_edge: return "PinPinEdge(" + v.detail + ")";
    case Violation::Kind::self_loop: return "SelfLoop(" + v.detail + ")";
    case Violation::Kind::unknown_endpoint: return "UnknownEndpoint(" + v.detail + ")";
    case Violation::Kind::duplicate_edge_id: return "DuplicateEdgeId(" + v.detail + ")";
    case Violation::Kind::duplicate_vertex: return "DuplicateVertex(" + v.detail + ")";
    case Violation::Kind::bad_dimension: return "BadDimension(" + v.detail + ")";
  }
  return "Violation";
}

PinnedGraph::PinnedGraph(int dimension, std::vector<VertexId> inner,
                         std::vector<VertexId> pinned, std::vector<Edge> edges)
    : dim_(dimension), inner_(std::move(inner)), pinned_(std::move(pinned)),
      edges_(std::move(edges)) {
  std::sort(inner_.begin(), inner_.end());
  inner_.erase(std::unique(inner_.begin(), inner_.end()), inner_.end());
  std::sort(pinned_.begin(), pinned_.end());
  pinned_.erase(std::unique(pinned_.begin(), pinned_.end()), pinned_.end());
  for (size_t i = 0; i < inner_.size(); ++i) inner_idx_[inner_[i]] = static_cast<int>(i);
  for (size_t i = 0; i < edges_.size(); ++i)
    edge_idx_.emplace(edges_[i].id, static_cast<int>(i));  // first wins on duplicates
}

bool PinnedGraph::is_inner(const VertexId& v) const { return inner_idx_.count(v) != 0; }

bool PinnedGraph::is_pinned(const VertexId& v) const {
  return std::binary_search(pinned_.begin(), pinned_.end(), v);
}

int PinnedGraph::inner_index(const VertexId& v) const {
  auto it = inner_idx_.find(v);
  return it == inner_idx_.end() ? -1 : it->second;
}

int PinnedGraph::edge_index(const EdgeId& e) const {
  auto it = edge_idx_.find(e);
  return it == edge_idx_.end() ? -1 : it->second;
}

int PinnedGraph::valence(const VertexId& v) const {
  int n = 0;
  for (const Edge& e : edges_) n += (e.u == v) + (e.v == v);
  return n;
}

std::vector<Violation> validate(const PinnedGraph& g) {
  std::vector<Violation> out;
  if (g.dimension() < 1)
    out.push_back({Violation::Kind::bad_dimension, "", std::to_string(g.dimension())});
  {
    std::vector<VertexId> both;
    std::set_intersection(g.inner().begin(), g.inner().end(), g.pinned().begin(),
                          g.pinned().end(), std::back_inserter(both));
    for (const auto& v : both)
      out.push_back({Violation::Kind::duplicate_vertex, "", v});
  }
  std::set<EdgeId> seen;
  for (const Edge& e : g.edges()) {
    if (!seen.insert(e.id).second)
      out.push_back({Violation::Kind::duplicate_edge_id, e.id, e.id});
    if (e.u == e.v) {
      out.push_back({Violation::Kind::self_loop, e.id, e.u});
      continue;
    }
    bool bad_endpoint = false;
    for (const VertexId* w : {&e.u, &e.v}) {
      if (!g.has_vertex(*w)) {
        out.push_back({Violation::Kind::unknown_endpoint, e.id, *w});
        bad_endpoint = true;
      }
    }
    if (!bad_endpoint && g.is_pinned(e.u) && g.is_pinned(e.v))
      out.push_back({Violation::Kind::pin_pin_edge, e.id, e.u + "," + e.v});
  }
  return out;
}

const VertexId& Orientation::tail(const EdgeId& e) const {
  auto it = tails_.find(e);
  if (it == tails_.end()) raise(Errc::orientation_mismatch, "no tail for edge " + e);
  return it->second;
}

bool Orientation::covers(const PinnedGraph& g) const {
  if (tails_.size() != g.edges().size()) return false;
  for (const Edge& e : g.edges()) {
    auto it = tails_.find(e.id);
    if (it == tails_.end()) return false;
    if (it->second != e.u && it->second != e.v) return false;
  }
  return true;
}

VertexId Orientation::head_of(const Edge& e, const VertexId& tail) {
  return tail == e.u ? e.v : e.u;
}

std::map<VertexId, int> out_degrees(const PinnedGraph& g, const Orientation& o) {
  if (!o.covers(g)) raise(Errc::orientation_mismatch, "orientation does not match graph");
  std::map<VertexId, int> deg;
  for (const auto& v : g.inner()) deg[v] = 0;
  for (const auto& v : g.pinned()) deg[v] = 0;
  for (const Edge& e : g.edges()) ++deg[o.tail(e.id)];
  return deg;
}

bool is_d_directed(const PinnedGraph& g, const Orientation& o) {
  auto deg = out_degrees(g, o);
  for (const auto& v : g.inner())
    if (deg[v] != g.dimension()) return false;
  for (const auto& v : g.pinned())
    if (deg[v] != 0) return false;
  return true;
}

CondensedDigraph condense_to_ground(const PinnedGraph& g, const Orientation& o) {
  if (!o.covers(g)) raise(Errc::orientation_mismatch, "orientation does not match graph");
  CondensedDigraph d;
  d.nodes = g.inner();
  d.nodes.push_back("ground");
  d.ground = static_cast<int>(d.nodes.size()) - 1;
  auto node_of = [&](const VertexId& v) {
    int i = g.inner_index(v);
    return i >= 0 ? i : d.ground;
  };
  for (const Edge& e : g.edges()) {
    const VertexId& t = o.tail(e.id);
    d.arcs.push_back({e.id, node_of(t), node_of(Orientation::head_of(e, t))});
  }
  return d;
}

PinnedGraph release_pin(const PinnedGraph& g, const VertexId& pin,
                        const std::vector<VertexId>& anchors) {
  if (!g.is_pinned(pin)) raise(Errc::unknown_vertex, pin + " is not a pinned vertex");
  if (static_cast<int>(anchors.size()) != g.dimension())
    raise(Errc::wrong_anchor_count,
          "need " + std::to_string(g.dimension()) + " anchors, got " +
              std::to_string(anchors.size()));
  std::vector<VertexId> inner = g.inner();
  inner.push_back(pin);
  std::vector<VertexId> pinned;
  for (const auto& p : g.pinned())
    if (p != pin) pinned.push_back(p);
  for (const auto& a : anchors) {
    if (g.is_inner(a) || a == pin)
      raise(Errc::unknown_vertex, "anchor " + a + " must be a pinned vertex");
    pinned.push_back(a);
  }
  std::vector<Edge> edges = g.edges();
  int n = 0;
  for (const auto& a : anchors) {
    EdgeId id = "rel:" + pin + ":" + std::to_string(n++);
    while (g.edge_index(id) >= 0) id += "'";
    edges.push_back({id, pin, a});
  }
  return PinnedGraph(g.dimension(), std::move(inner), std::move(pinned), std::move(edges));
}

RepinResult repin_vertex(const PinnedGraph& g, const VertexId& v) {
  if (!g.is_inner(v)) raise(Errc::unknown_vertex, v + " is not an inner vertex");
  std::vector<VertexId> inner;
  for (const auto& w : g.inner())
    if (w != v) inner.push_back(w);
  std::vector<VertexId> pinned = g.pinned();
  pinned.push_back(v);
  RepinResult out;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const bool u_pinned = g.is_pinned(e.u) || e.u == v;
    const bool v_pinned = g.is_pinned(e.v) || e.v == v;
    if (u_pinned && v_pinned)
      out.removed_edges.push_back(e);
    else
      edges.push_back(e);
  }
  out.graph = PinnedGraph(g.dimension(), std::move(inner), std::move(pinned), std::move(edges));
  return out;
}

}  // namespace assur
