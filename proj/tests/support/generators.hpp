#ifndef ASSUR_TESTS_GENERATORS_HPP
#define ASSUR_TESTS_GENERATORS_HPP

// Randomized instance generators shared by the unit tests, the acceptance
// suite and the kernel benchmark.

#include <set>
#include <string>
#include <vector>

#include "assur/numeric.hpp"
#include "assur/orientation.hpp"
#include "assur/pinned_graph.hpp"

namespace assur::testing {

inline std::string vname(const char* prefix, int i) {
  return std::string(prefix) + std::to_string(i);
}

// Random pinned 2-isostatic graph grown by vertex additions and edge
// splits, both of which preserve generic pinned isostaticity.
inline PinnedGraph random_pinned_isostatic_2d(SplitMix64& rng, int inner_target) {
  const int npins = 2 + static_cast<int>(rng.below(3));
  std::vector<VertexId> pins, inner;
  for (int i = 0; i < npins; ++i) pins.push_back(vname("p", i));
  std::vector<Edge> edges;
  int next_edge = 0;
  auto add_edge = [&](const VertexId& u, const VertexId& v) {
    edges.push_back({vname("e", next_edge++), u, v});
  };
  auto any_vertex = [&](const VertexId& exclude1, const VertexId& exclude2) {
    for (;;) {
      size_t total = pins.size() + inner.size();
      size_t pick = rng.below(total);
      const VertexId& v = pick < pins.size() ? pins[pick] : inner[pick - pins.size()];
      if (v != exclude1 && v != exclude2) return v;
    }
  };

  // seed dyad
  inner.push_back(vname("v", 0));
  add_edge(inner[0], pins[0]);
  add_edge(inner[0], pins[1]);

  while (static_cast<int>(inner.size()) < inner_target) {
    VertexId w = vname("v", static_cast<int>(inner.size()));
    if (rng.below(2) == 0 || edges.empty()) {
      // vertex addition: new inner vertex on two distinct existing vertices
      VertexId a = any_vertex("", "");
      VertexId b = any_vertex(a, "");
      inner.push_back(w);
      add_edge(w, a);
      add_edge(w, b);
    } else {
      // edge split: subdivide an existing edge and brace with a third vertex
      size_t ei = rng.below(edges.size());
      Edge old = edges[ei];
      VertexId c = any_vertex(old.u, old.v);
      edges.erase(edges.begin() + ei);
      inner.push_back(w);
      add_edge(w, old.u);
      add_edge(w, old.v);
      add_edge(w, c);
    }
  }
  return PinnedGraph(2, inner, pins, edges);
}

// Random graph with |E| = d|I|; isostatic only by luck. `allow_parallel`
// admits repeated endpoint pairs.
inline PinnedGraph random_top_count_graph(SplitMix64& rng, int dim, int inner_count,
                                          bool allow_parallel = true) {
  const int npins = dim + static_cast<int>(rng.below(3));
  std::vector<VertexId> pins, inner;
  for (int i = 0; i < npins; ++i) pins.push_back(vname("p", i));
  for (int i = 0; i < inner_count; ++i) inner.push_back(vname("v", i));
  std::vector<Edge> edges;
  std::set<std::pair<VertexId, VertexId>> used;
  int guard = 0;
  while (static_cast<int>(edges.size()) < dim * inner_count && guard++ < 10000) {
    VertexId u = inner[rng.below(inner.size())];
    size_t pick = rng.below(inner.size() + pins.size());
    VertexId v = pick < inner.size() ? inner[pick] : pins[pick - inner.size()];
    if (u == v) continue;
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    if (!allow_parallel && used.count(key)) continue;
    if (allow_parallel && used.count(key) && rng.below(8) != 0) continue;  // rare parallels
    used.insert(key);
    edges.push_back({vname("e", static_cast<int>(edges.size())), u, v});
  }
  return PinnedGraph(dim, inner, pins, edges);
}

struct RandomDigraph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;
};

inline RandomDigraph random_digraph(SplitMix64& rng, int max_n) {
  RandomDigraph d;
  d.n = 1 + static_cast<int>(rng.below(max_n));
  const int m = static_cast<int>(rng.below(static_cast<uint64_t>(3 * d.n) + 1));
  for (int i = 0; i < m; ++i) {
    int a = static_cast<int>(rng.below(d.n));
    int b = static_cast<int>(rng.below(d.n));
    if (a != b) d.arcs.emplace_back(a, b);
  }
  return d;
}

// A d-directed orientation made equivalent by reversing directed cycles
// found by random walks among inner vertices. Returns the number of
// reversals actually applied.
inline int perturb_by_cycle_reversals(const PinnedGraph& g, Orientation& o, SplitMix64& rng,
                                      int want) {
  int done = 0;
  for (int attempt = 0; attempt < 40 * want && done < want; ++attempt) {
    // random walk over arcs whose head is inner
    std::map<EdgeId, VertexId> tails = o.tails();
    std::vector<std::pair<VertexId, EdgeId>> path;
    std::map<VertexId, size_t> seen;
    VertexId at = g.inner()[rng.below(g.inner().size())];
    bool cycle_found = false;
    std::vector<EdgeId> cycle;
    for (int step = 0; step < 4 * g.edge_count(); ++step) {
      std::vector<const Edge*> outs;
      for (const Edge& e : g.edges()) {
        if (tails[e.id] != at) continue;
        if (g.is_inner(Orientation::head_of(e, at))) outs.push_back(&e);
      }
      if (outs.empty()) break;
      const Edge* e = outs[rng.below(outs.size())];
      path.emplace_back(at, e->id);
      seen.emplace(at, path.size() - 1);
      VertexId next = Orientation::head_of(*e, at);
      auto hit = seen.find(next);
      if (hit != seen.end()) {
        for (size_t i = hit->second; i < path.size(); ++i) cycle.push_back(path[i].second);
        cycle_found = true;
        break;
      }
      at = next;
    }
    if (!cycle_found) continue;
    for (const EdgeId& id : cycle) {
      const Edge& e = g.edges()[g.edge_index(id)];
      tails[id] = Orientation::head_of(e, tails[id]);
    }
    o = Orientation(std::move(tails));
    ++done;
  }
  return done;
}

}  // namespace assur::testing

#endif
