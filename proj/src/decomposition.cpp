#include "assur/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "assur/error.hpp"

namespace assur {

std::vector<std::vector<int>> strongly_connected_components(
    int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : arcs) adj[a].push_back(b);

  std::vector<int> index(n, -1), low(n, 0), comp_of(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0, comp_count = 0;

  // iterative Tarjan
  struct Frame {
    int v;
    size_t child;
  };
  std::vector<Frame> call;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, child] = call.back();
      if (child == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (child < adj[v].size()) {
        int w = adj[v][child++];
        if (index[w] == -1) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        for (;;) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp_of[w] = comp_count;
          if (w == v) break;
        }
        ++comp_count;
      }
      int finished = v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[finished]);
    }
  }

  std::vector<std::vector<int>> comps(comp_count);
  for (int v = 0; v < n; ++v) comps[comp_of[v]].push_back(v);
  for (auto& c : comps) std::sort(c.begin(), c.end());
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

std::vector<std::vector<int>> brute_force_scc(int n,
                                              const std::vector<std::pair<int, int>>& arcs,
                                              int cap) {
  if (n > cap)
    raise(Errc::size_cap_exceeded,
          "brute-force SCC capped at " + std::to_string(cap) + " vertices");
  std::vector<uint32_t> reach(n, 0);
  for (int v = 0; v < n; ++v) reach[v] |= 1u << v;
  for (auto [a, b] : arcs) reach[a] |= 1u << b;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (reach[i] >> k & 1) reach[i] |= reach[k];
  std::vector<std::vector<int>> comps;
  std::vector<bool> placed(n, false);
  for (int v = 0; v < n; ++v) {
    if (placed[v]) continue;
    std::vector<int> c;
    for (int w = v; w < n; ++w) {
      if (!placed[w] && (reach[v] >> w & 1) && (reach[w] >> v & 1)) {
        c.push_back(w);
        placed[w] = true;
      }
    }
    comps.push_back(std::move(c));
  }
  return comps;  // already ordered by smallest vertex
}

Decomposition scc_decompose(const PinnedGraph& g, const Orientation& o) {
  auto deg = out_degrees(g, o);  // also validates coverage
  for (const auto& p : g.pinned())
    if (deg[p] != 0)
      raise(Errc::not_d_directed, "pinned vertex " + p + " has positive out-degree");

  CondensedDigraph cd = condense_to_ground(g, o);
  std::vector<std::pair<int, int>> arcs;
  for (const auto& a : cd.arcs) arcs.emplace_back(a.from, a.to);
  auto sccs = strongly_connected_components(static_cast<int>(cd.nodes.size()), arcs);

  Decomposition d;
  std::vector<int> comp_of_node(cd.nodes.size(), -1);
  for (const auto& scc : sccs) {
    if (scc.size() == 1 && scc[0] == cd.ground) continue;
    ExtendedComponent ec;
    for (int v : scc) ec.inner_vertices.push_back(cd.nodes[v]);
    d.components.push_back(std::move(ec));
  }
  std::sort(d.components.begin(), d.components.end(), [](const auto& a, const auto& b) {
    return a.inner_vertices.front() < b.inner_vertices.front();
  });
  for (size_t ci = 0; ci < d.components.size(); ++ci)
    for (const auto& v : d.components[ci].inner_vertices)
      comp_of_node[g.inner_index(v)] = static_cast<int>(ci);

  d.touches_ground.assign(d.components.size(), 0);
  for (const auto& a : cd.arcs) {
    int cf = comp_of_node[a.from];
    if (cf < 0) raise(Errc::internal_check_failed, "edge tail outside all components");
    d.components[cf].edges.push_back(a.edge);
    if (a.to == cd.ground) {
      d.touches_ground[cf] = 1;
      continue;
    }
    int ct = comp_of_node[a.to];
    if (ct != cf) {
      d.dag_edges.insert({cf, ct});
      ++d.dag_multiplicity[{cf, ct}];
    }
  }

  // bottom-up Kahn order, smallest component index first
  const int nc = static_cast<int>(d.components.size());
  std::vector<int> unmet(nc, 0);
  std::vector<std::vector<int>> above(nc);  // lower -> uppers waiting on it
  for (auto [up, lo] : d.dag_edges) {
    ++unmet[up];
    above[lo].push_back(up);
  }
  std::set<int> ready;
  for (int c = 0; c < nc; ++c)
    if (unmet[c] == 0) ready.insert(c);
  while (!ready.empty()) {
    int c = *ready.begin();
    ready.erase(ready.begin());
    d.linear_order.push_back(c);
    for (int up : above[c])
      if (--unmet[up] == 0) ready.insert(up);
  }
  if (static_cast<int>(d.linear_order.size()) != nc)
    raise(Errc::internal_check_failed, "component DAG has a cycle");
  return d;
}

std::vector<std::vector<int>> linear_extensions(const Decomposition& d, int limit) {
  const int nc = static_cast<int>(d.components.size());
  std::vector<std::vector<int>> below(nc);  // upper -> lowers it depends on
  for (auto [up, lo] : d.dag_edges) below[up].push_back(lo);

  std::vector<std::vector<int>> out;
  std::vector<int> order;
  std::vector<bool> placed(nc, false);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(out.size()) >= limit) return;
    if (static_cast<int>(order.size()) == nc) {
      out.push_back(order);
      return;
    }
    for (int c = 0; c < nc; ++c) {
      if (placed[c]) continue;
      bool ok = true;
      for (int lo : below[c])
        if (!placed[lo]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      placed[c] = true;
      order.push_back(c);
      rec();
      order.pop_back();
      placed[c] = false;
      if (static_cast<int>(out.size()) >= limit) return;
    }
  };
  rec();
  return out;
}

PinnedGraph component_subgraph(const PinnedGraph& g, const Decomposition& d, int comp) {
  if (comp < 0 || comp >= static_cast<int>(d.components.size()))
    raise(Errc::decomposition_mismatch, "no such component");
  const ExtendedComponent& ec = d.components[comp];
  std::set<VertexId> inner(ec.inner_vertices.begin(), ec.inner_vertices.end());
  std::set<VertexId> pins;
  std::vector<Edge> edges;
  for (const EdgeId& id : ec.edges) {
    int idx = g.edge_index(id);
    if (idx < 0) raise(Errc::decomposition_mismatch, "unknown edge " + id);
    const Edge& e = g.edges()[idx];
    for (const VertexId* w : {&e.u, &e.v})
      if (!inner.count(*w)) pins.insert(*w);
    edges.push_back(e);
  }
  return PinnedGraph(g.dimension(), ec.inner_vertices,
                     std::vector<VertexId>(pins.begin(), pins.end()), std::move(edges));
}

namespace {

std::string dot_label(const std::vector<VertexId>& vs) {
  std::string s;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) s += " ";
    s += vs[i];
  }
  return s;
}

}  // namespace

std::string decomposition_to_dot(const PinnedGraph& g, const Decomposition& d,
                                 const Orientation* full) {
  std::ostringstream os;
  os << "digraph assur {\n  rankdir=BT;\n  node [shape=box];\n";
  os << "  ground [peripheries=2];\n";
  for (size_t c = 0; c < d.components.size(); ++c)
    os << "  c" << c << " [label=\"" << dot_label(d.components[c].inner_vertices)
       << "\"];\n";
  for (auto [up, lo] : d.dag_edges) os << "  c" << up << " -> c" << lo << ";\n";
  for (size_t c = 0; c < d.components.size(); ++c)
    if (d.touches_ground[c]) os << "  c" << c << " -> ground;\n";
  if (full) {
    os << "  // full directed graph\n";
    for (size_t c = 0; c < d.components.size(); ++c) {
      os << "  subgraph cluster_" << c << " {\n    label=\"c" << c << "\";\n";
      for (const auto& v : d.components[c].inner_vertices)
        os << "    \"" << v << "\" [shape=ellipse];\n";
      os << "  }\n";
    }
    for (const auto& p : g.pinned()) os << "  \"" << p << "\" [shape=triangle];\n";
    for (const Edge& e : g.edges()) {
      const VertexId& t = full->tail(e.id);
      os << "  \"" << t << "\" -> \"" << Orientation::head_of(e, t) << "\" [label=\""
         << e.id << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace assur
