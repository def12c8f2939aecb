#include "assur/orientation.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "assur/error.hpp"
#include "assur/linalg.hpp"

namespace assur {

OutDegreeSpec d_out_degree_spec(const PinnedGraph& g) {
  OutDegreeSpec spec;
  for (const auto& v : g.inner()) spec[v] = g.dimension();
  for (const auto& v : g.pinned()) spec[v] = 0;
  return spec;
}

namespace {

struct FlowState {
  const PinnedGraph& g;
  std::map<VertexId, int> cap;
  std::map<VertexId, std::vector<int>> assigned;  // vertex -> edge indices
  std::vector<VertexId> tail;                     // per edge index, empty = none

  explicit FlowState(const PinnedGraph& graph) : g(graph), tail(graph.edges().size()) {}

  bool augment(int e, std::set<VertexId>& visited) {
    const Edge& ed = g.edges()[e];
    VertexId a = std::min(ed.u, ed.v), b = std::max(ed.u, ed.v);
    for (const VertexId& w : {a, b}) {
      auto it = cap.find(w);
      if (it == cap.end() || it->second == 0) continue;
      if (visited.count(w)) continue;
      visited.insert(w);
      auto& occ = assigned[w];
      if (static_cast<int>(occ.size()) < it->second) {
        occ.push_back(e);
        tail[e] = w;
        return true;
      }
      for (size_t i = 0; i < occ.size(); ++i) {
        int e2 = occ[i];
        if (augment(e2, visited)) {
          occ[i] = e;  // e2 moved to another vertex
          tail[e] = w;
          return true;
        }
      }
    }
    return false;
  }
};

}  // namespace

OrientationResult realize_out_degrees(const PinnedGraph& g, const OutDegreeSpec& spec) {
  FlowState st(g);
  st.cap = spec;
  std::vector<int> order(g.edges().size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.edges()[a].id < g.edges()[b].id;
  });
  for (int e : order) {
    std::set<VertexId> visited;
    if (!st.augment(e, visited)) {
      OrientationResult r;
      for (const auto& v : visited)
        if (g.is_inner(v)) r.infeasible_witness.push_back(v);
      if (r.infeasible_witness.empty()) r.infeasible_witness = g.inner();
      return r;
    }
  }
  std::map<EdgeId, VertexId> tails;
  for (size_t i = 0; i < g.edges().size(); ++i) tails[g.edges()[i].id] = st.tail[i];
  OrientationResult r;
  r.orientation = Orientation(std::move(tails));
  return r;
}

namespace {

// Edges parallel to e that share its tail make the tail's Laplace block
// singular. Returns one such conflicted edge pair, if any.
std::optional<std::pair<int, int>> find_parallel_conflict(const PinnedGraph& g,
                                                          const Orientation& o) {
  std::map<std::pair<VertexId, std::pair<VertexId, VertexId>>, int> seen;
  for (size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    VertexId a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    auto key = std::make_pair(o.tail(e.id), std::make_pair(a, b));
    auto [it, fresh] = seen.emplace(key, static_cast<int>(i));
    if (!fresh) return std::make_pair(it->second, static_cast<int>(i));
  }
  return std::nullopt;
}

// Reverse a directed cycle through `edge` so its tail moves to the other
// endpoint while all out-degrees stay fixed.
bool reverse_through(const PinnedGraph& g, Orientation& o, int edge) {
  const Edge& ed = g.edges()[edge];
  const VertexId from = o.tail(ed.id);
  const VertexId target = Orientation::head_of(ed, from);
  if (!g.is_inner(target)) return false;
  // BFS over orientation arcs from `target` back to `from`
  std::map<VertexId, int> via;  // vertex -> edge index used to reach it
  std::vector<VertexId> queue{target};
  std::set<VertexId> seen{target};
  size_t qi = 0;
  bool found = false;
  while (qi < queue.size() && !found) {
    VertexId cur = queue[qi++];
    for (size_t i = 0; i < g.edges().size(); ++i) {
      if (static_cast<int>(i) == edge) continue;
      const Edge& f = g.edges()[i];
      if (o.tail(f.id) != cur) continue;
      VertexId h = Orientation::head_of(f, cur);
      if (!g.is_inner(h) && h != from) continue;
      if (seen.count(h)) continue;
      seen.insert(h);
      via[h] = static_cast<int>(i);
      if (h == from) {
        found = true;
        break;
      }
      queue.push_back(h);
    }
  }
  if (!found) return false;
  std::map<EdgeId, VertexId> tails = o.tails();
  tails[ed.id] = target;
  VertexId cur = from;
  while (cur != target) {
    const Edge& f = g.edges()[via[cur]];
    VertexId prev = Orientation::head_of(f, o.tail(f.id));  // == cur
    (void)prev;
    VertexId t = o.tail(f.id);
    tails[f.id] = cur;
    cur = t;
  }
  o = Orientation(std::move(tails));
  return true;
}

}  // namespace

OrientationResult find_d_orientation(const PinnedGraph& g) {
  // out-degree exactly d everywhere forces |E| = d|I|; with fewer edges the
  // flow would succeed under-saturated
  if (g.edge_count() < g.dimension() * g.inner_count()) return {};
  OrientationResult r = realize_out_degrees(g, d_out_degree_spec(g));
  if (!r.ok()) return r;
  bool has_parallel = false;
  {
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (const Edge& e : g.edges()) {
      auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
      if (!pairs.insert(key).second) has_parallel = true;
    }
  }
  if (!has_parallel) return r;
  Orientation o = *r.orientation;
  int budget = 2 * g.edge_count();
  while (budget-- > 0) {
    auto conflict = find_parallel_conflict(g, o);
    if (!conflict) break;
    if (!reverse_through(g, o, conflict->second) && !reverse_through(g, o, conflict->first))
      break;  // no nonzero-term orientation reachable (e.g. doubled pin edges)
  }
  r.orientation = std::move(o);
  return r;
}

namespace {

struct BlockDetCheck {
  const PinnedGraph& g;
  const Configuration& cfg;
  RationalField f;

  // determinant of vertex v's block given the edges assigned to it
  bool block_nonsingular(const VertexId& v, const std::vector<int>& rows) const {
    const int d = g.dimension();
    Mat<Rat> m(d, d);
    const auto& pv = cfg.at(v);
    for (int i = 0; i < d; ++i) {
      const Edge& e = g.edges()[rows[i]];
      const auto& pw = cfg.at(e.u == v ? e.v : e.u);
      for (int c = 0; c < d; ++c) m.at(i, c) = pv[c] - pw[c];
    }
    return !f.is_zero(det_of(f, std::move(m)));
  }
};

void enumerate_assignments(const PinnedGraph& g, size_t edge_pos,
                           std::vector<int>& remaining, std::vector<VertexId>& tails,
                           const std::function<void(const std::vector<VertexId>&)>& emit) {
  if (edge_pos == g.edges().size()) {
    emit(tails);
    return;
  }
  const Edge& e = g.edges()[edge_pos];
  const VertexId a = std::min(e.u, e.v), b = std::max(e.u, e.v);
  for (const VertexId& w : {a, b}) {
    if (w == b && b == a) break;  // self-loop guard
    int idx = g.inner_index(w);
    if (idx < 0 || remaining[idx] == 0) continue;
    --remaining[idx];
    tails[edge_pos] = w;
    enumerate_assignments(g, edge_pos + 1, remaining, tails, emit);
    ++remaining[idx];
  }
}

std::vector<Orientation> oracle_impl(const PinnedGraph& g, const Configuration& config,
                                     int size_cap, bool parallel) {
  if (g.inner_count() > size_cap)
    raise(Errc::size_cap_exceeded, "oracle capped at " + std::to_string(size_cap) +
                                       " inner vertices");
  if (g.edge_count() != g.dimension() * g.inner_count())
    raise(Errc::graph_mismatch, "oracle requires |E| = d|I|");
  if (!config.covers(g)) raise(Errc::missing_coordinates, "configuration incomplete");

  BlockDetCheck check{g, config, {}};
  auto survives = [&](const std::vector<VertexId>& tails) {
    std::map<VertexId, std::vector<int>> rows;
    for (size_t i = 0; i < tails.size(); ++i) rows[tails[i]].push_back(static_cast<int>(i));
    for (const auto& [v, rr] : rows)
      if (!check.block_nonsingular(v, rr)) return false;
    return true;
  };
  auto to_orientation = [&](const std::vector<VertexId>& tails) {
    std::map<EdgeId, VertexId> m;
    for (size_t i = 0; i < tails.size(); ++i) m[g.edges()[i].id] = tails[i];
    return Orientation(std::move(m));
  };

  std::vector<Orientation> out;
  if (!parallel) {
    std::vector<int> remaining(g.inner_count(), g.dimension());
    std::vector<VertexId> tails(g.edges().size());
    enumerate_assignments(g, 0, remaining, tails, [&](const std::vector<VertexId>& t) {
      if (survives(t)) out.push_back(to_orientation(t));
    });
  } else {
    // split the search on a short prefix of edges, then finish each branch
    // independently
    const size_t prefix_len = std::min<size_t>(g.edges().size(), 8);
    struct Prefix {
      std::vector<int> remaining;
      std::vector<VertexId> tails;
    };
    std::vector<Prefix> prefixes;
    {
      std::vector<int> remaining(g.inner_count(), g.dimension());
      std::vector<VertexId> tails(g.edges().size());
      std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == prefix_len) {
          prefixes.push_back({remaining, tails});
          return;
        }
        const Edge& e = g.edges()[pos];
        VertexId a = std::min(e.u, e.v), b = std::max(e.u, e.v);
        for (const VertexId& w : {a, b}) {
          if (w == a && a == b) continue;
          int idx = g.inner_index(w);
          if (idx < 0 || remaining[idx] == 0) continue;
          --remaining[idx];
          tails[pos] = w;
          rec(pos + 1);
          ++remaining[idx];
        }
      };
      rec(0);
    }
    std::vector<std::vector<Orientation>> partial(prefixes.size());
#pragma omp parallel for schedule(dynamic)
    for (long long pi = 0; pi < static_cast<long long>(prefixes.size()); ++pi) {
      Prefix p = prefixes[pi];
      enumerate_assignments(g, prefix_len, p.remaining, p.tails,
                            [&](const std::vector<VertexId>& t) {
                              if (survives(t)) partial[pi].push_back(to_orientation(t));
                            });
    }
    for (auto& part : partial)
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
  }
  std::sort(out.begin(), out.end(),
            [](const Orientation& x, const Orientation& y) { return x.tails() < y.tails(); });
  return out;
}

}  // namespace

std::vector<Orientation> laplace_orientation_oracle(const PinnedGraph& g,
                                                    const Configuration& config,
                                                    int size_cap) {
  return oracle_impl(g, config, size_cap, true);
}

std::vector<Orientation> laplace_orientation_oracle_serial(const PinnedGraph& g,
                                                           const Configuration& config,
                                                           int size_cap) {
  return oracle_impl(g, config, size_cap, false);
}

bool laplace_term_nonzero(const PinnedGraph& g, const Configuration& config,
                          const Orientation& o) {
  if (!o.covers(g)) raise(Errc::orientation_mismatch, "orientation does not match graph");
  BlockDetCheck check{g, config, {}};
  std::map<VertexId, std::vector<int>> rows;
  for (size_t i = 0; i < g.edges().size(); ++i) {
    const VertexId& t = o.tail(g.edges()[i].id);
    if (!g.is_inner(t)) return false;
    rows[t].push_back(static_cast<int>(i));
  }
  for (const auto& v : g.inner()) {
    auto it = rows.find(v);
    if (it == rows.end() || static_cast<int>(it->second.size()) != g.dimension())
      return false;
    if (!check.block_nonsingular(v, it->second)) return false;
  }
  return true;
}

bool is_equivalent(const PinnedGraph& g, const Orientation& a, const Orientation& b) {
  if (!a.covers(g) || !b.covers(g))
    raise(Errc::graph_mismatch, "orientations are not over this graph");
  return out_degrees(g, a) == out_degrees(g, b);
}

CycleReversalTrace cycle_reversal_path(const PinnedGraph& g, const Orientation& from,
                                       const Orientation& to) {
  if (!is_equivalent(g, from, to))
    raise(Errc::not_equivalent, "orientations have different out-degree vectors");
  Orientation cur = from;
  CycleReversalTrace trace;
  for (;;) {
    // edges still oppositely directed, by id for determinism
    std::set<EdgeId> disagree;
    for (const Edge& e : g.edges())
      if (cur.tail(e.id) != to.tail(e.id)) disagree.insert(e.id);
    if (disagree.empty()) break;

    // out-edges of the disagreement subgraph under `cur`
    std::map<VertexId, std::vector<EdgeId>> outs;
    for (const EdgeId& id : disagree) outs[cur.tail(id)].push_back(id);
    for (auto& [v, es] : outs) std::sort(es.begin(), es.end());

    // walk until a vertex repeats; every visited vertex has an unused
    // out-edge by the out/in balance of the disagreement subgraph
    VertexId start = cur.tail(*disagree.begin());
    std::vector<std::pair<VertexId, EdgeId>> path;
    std::map<VertexId, size_t> pos_of;
    std::set<EdgeId> used;
    VertexId at = start;
    std::vector<EdgeId> cycle;
    for (;;) {
      auto it = pos_of.find(at);
      if (it != pos_of.end()) {
        for (size_t i = it->second; i < path.size(); ++i) cycle.push_back(path[i].second);
        break;
      }
      pos_of[at] = path.size();
      const auto& cands = outs[at];
      EdgeId chosen;
      bool found = false;
      for (const EdgeId& id : cands) {
        if (!used.count(id)) {
          chosen = id;
          found = true;
          break;
        }
      }
      if (!found)
        raise(Errc::internal_check_failed, "disagreement subgraph lost out/in balance");
      used.insert(chosen);
      path.emplace_back(at, chosen);
      const Edge& e = g.edges()[g.edge_index(chosen)];
      at = Orientation::head_of(e, cur.tail(chosen));
    }

    std::map<EdgeId, VertexId> tails = cur.tails();
    for (const EdgeId& id : cycle) {
      const Edge& e = g.edges()[g.edge_index(id)];
      tails[id] = Orientation::head_of(e, tails[id]);
    }
    cur = Orientation(std::move(tails));
    trace.push_back(std::move(cycle));
  }
  return trace;
}

Orientation apply_reversals(const PinnedGraph& g, const Orientation& o,
                            const CycleReversalTrace& trace) {
  std::map<EdgeId, VertexId> tails = o.tails();
  for (const auto& cycle : trace) {
    for (const EdgeId& id : cycle) {
      int idx = g.edge_index(id);
      if (idx < 0) raise(Errc::unknown_edge, id);
      tails[id] = Orientation::head_of(g.edges()[idx], tails[id]);
    }
  }
  return Orientation(std::move(tails));
}

}  // namespace assur
