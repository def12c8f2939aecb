#include "assur/counts.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <optional>

#include "assur/error.hpp"

namespace assur {

bool top_count(const PinnedGraph& g) {
  return g.edge_count() == g.dimension() * g.inner_count();
}

namespace {

int choose2(int m) { return m <= 1 ? 0 : m * (m - 1) / 2; }

}  // namespace

int count_deficit(int dimension, int pin_count, int inner_count) {
  const int a = std::max(dimension + 1 - pin_count, 0);
  const int b = std::max(dimension + 1 - pin_count - inner_count, 0);
  return choose2(a) - choose2(b);
}

namespace {

struct SubsetScanContext {
  const PinnedGraph& g;
  int d;
  int ni;
  // per-edge inner endpoint indices (-1 for a pin endpoint)
  std::vector<std::pair<int, int>> edge_inner;
  // per-edge pin id ("" when inner-inner)
  std::vector<VertexId> edge_pin;

  explicit SubsetScanContext(const PinnedGraph& graph)
      : g(graph), d(graph.dimension()), ni(graph.inner_count()) {
    for (const Edge& e : g.edges()) {
      edge_inner.emplace_back(g.inner_index(e.u), g.inner_index(e.v));
      if (g.inner_index(e.u) < 0)
        edge_pin.push_back(e.u);
      else if (g.inner_index(e.v) < 0)
        edge_pin.push_back(e.v);
      else
        edge_pin.emplace_back();
    }
  }

  // Worst violation over pin-prefix sizes for one inner subset, if any.
  std::optional<CountViolation> scan_subset(uint32_t mask) const {
    int inner_inner = 0;
    std::map<VertexId, int> pin_mult;
    for (size_t i = 0; i < edge_inner.size(); ++i) {
      auto [a, b] = edge_inner[i];
      const bool a_in = a >= 0 && (mask >> a & 1);
      const bool b_in = b >= 0 && (mask >> b & 1);
      if (a >= 0 && b >= 0) {
        if (a_in && b_in) ++inner_inner;
      } else if (a_in || b_in) {
        ++pin_mult[edge_pin[i]];
      }
    }
    const int n = __builtin_popcount(mask);
    std::vector<std::pair<int, VertexId>> pins;
    for (const auto& [p, m] : pin_mult) pins.emplace_back(m, p);
    std::sort(pins.begin(), pins.end(), [](const auto& x, const auto& y) {
      return x.first != y.first ? x.first > y.first : x.second < y.second;
    });

    std::optional<CountViolation> worst;
    int edges = inner_inner;
    for (int k = 0; k <= static_cast<int>(pins.size()); ++k) {
      if (k > 0) edges += pins[k - 1].first;
      const int bound = d * n - count_deficit(d, k, n);
      if (edges > bound) {
        int excess = edges - bound;
        if (!worst || excess > worst->edge_count - worst->bound) {
          CountViolation v;
          for (int i = 0; i < ni; ++i)
            if (mask >> i & 1) v.inner.push_back(g.inner()[i]);
          for (int j = 0; j < k; ++j) v.pins.push_back(pins[j].second);
          std::sort(v.pins.begin(), v.pins.end());
          v.edge_count = edges;
          v.bound = bound;
          v.pin_count = k;
          v.clause = k >= d ? "(i)" : "(ii) k=" + std::to_string(k);
          worst = std::move(v);
        }
      }
    }
    return worst;
  }
};

std::vector<CountViolation> scan_all(const PinnedGraph& g, int cap, bool parallel) {
  if (g.inner_count() > cap)
    raise(Errc::size_cap_exceeded,
          "subgraph scan capped at " + std::to_string(cap) + " inner vertices");
  SubsetScanContext ctx(g);
  const uint32_t total = g.inner_count() >= 31 ? 0 : (1u << g.inner_count());
  std::vector<CountViolation> out;
  if (!parallel) {
    for (uint32_t mask = 1; mask < total; ++mask) {
      auto v = ctx.scan_subset(mask);
      if (v) out.push_back(std::move(*v));
    }
    return out;
  }
  const int nthreads = std::max(1, omp_get_max_threads());
  std::vector<std::vector<CountViolation>> partial(nthreads);
#pragma omp parallel num_threads(nthreads)
  {
    const int tid = omp_get_thread_num();
#pragma omp for schedule(static)
    for (long long mask = 1; mask < static_cast<long long>(total); ++mask) {
      auto v = ctx.scan_subset(static_cast<uint32_t>(mask));
      if (v) partial[tid].push_back(std::move(*v));
    }
  }
  for (auto& part : partial)
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  std::sort(out.begin(), out.end(), [](const CountViolation& a, const CountViolation& b) {
    if (a.inner.size() != b.inner.size()) return a.inner.size() < b.inner.size();
    return a.inner < b.inner;
  });
  return out;
}

}  // namespace

std::vector<CountViolation> subgraph_counts_bruteforce(const PinnedGraph& g, int cap) {
  return scan_all(g, cap, true);
}

std::vector<CountViolation> subgraph_counts_bruteforce_serial(const PinnedGraph& g, int cap) {
  auto out = scan_all(g, cap, false);
  std::sort(out.begin(), out.end(), [](const CountViolation& a, const CountViolation& b) {
    if (a.inner.size() != b.inner.size()) return a.inner.size() < b.inner.size();
    return a.inner < b.inner;
  });
  return out;
}

namespace {

// Lee-Streinu (2,3) pebble game on a multigraph given by vertex count and
// an edge list. Returns false as soon as an edge cannot be inserted.
class PebbleGame23 {
 public:
  explicit PebbleGame23(int n) : pebbles_(n, 2), out_(n) {}

  bool insert(int u, int v) {
    if (u == v) return false;
    while (pebbles_[u] + pebbles_[v] < 4) {
      if (!collect(u, v) && !collect(v, u)) return false;
    }
    int tail = pebbles_[u] > 0 ? u : v;
    --pebbles_[tail];
    out_[tail].push_back({tail == u ? v : u, true});
    return true;
  }

 private:
  struct Arc {
    int to;
    bool alive;
  };

  // move one pebble to `target`; searches may not take pebbles off
  // `target` or `other`
  bool collect(int target, int other, int limit = 2) {
    if (pebbles_[target] >= limit) return false;
    std::vector<int> parent_vertex(pebbles_.size(), -1);
    std::vector<int> parent_arc(pebbles_.size(), -1);
    std::vector<bool> seen(pebbles_.size(), false);
    std::vector<int> stack{target};
    seen[target] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (size_t ai = 0; ai < out_[v].size(); ++ai) {
        if (!out_[v][ai].alive) continue;
        int w = out_[v][ai].to;
        if (seen[w]) continue;
        seen[w] = true;
        parent_vertex[w] = v;
        parent_arc[w] = static_cast<int>(ai);
        if (pebbles_[w] > 0 && w != target && w != other) {
          // reverse the path target..w and carry the pebble back
          --pebbles_[w];
          ++pebbles_[target];
          int cur = w;
          while (cur != target) {
            int pv = parent_vertex[cur];
            out_[pv][parent_arc[cur]].alive = false;
            out_[cur].push_back({pv, true});
            cur = pv;
          }
          return true;
        }
        stack.push_back(w);
      }
    }
    return false;
  }

  std::vector<int> pebbles_;
  std::vector<std::vector<Arc>> out_;
};

}  // namespace

bool pinned_sparsity_2d(const PinnedGraph& g) {
  if (g.dimension() != 2) raise(Errc::wrong_dimension, "pebble check is 2D only");
  // grounded graph: inner vertices, pins, and an isostatic fan on the pins
  const int ni = g.inner_count();
  const int np = static_cast<int>(g.pinned().size());
  std::map<VertexId, int> pin_idx;
  for (int i = 0; i < np; ++i) pin_idx[g.pinned()[i]] = ni + i;
  PebbleGame23 game(ni + np);
  if (np >= 2) {
    if (!game.insert(ni, ni + 1))
      raise(Errc::internal_check_failed, "fan edge rejected");
    for (int i = 2; i < np; ++i) {
      if (!game.insert(ni + i, ni) || !game.insert(ni + i, ni + 1))
        raise(Errc::internal_check_failed, "fan edge rejected");
    }
  }
  auto index_of = [&](const VertexId& v) {
    int i = g.inner_index(v);
    if (i >= 0) return i;
    auto it = pin_idx.find(v);
    if (it == pin_idx.end()) raise(Errc::unknown_vertex, v);
    return it->second;
  };
  for (const Edge& e : g.edges())
    if (!game.insert(index_of(e.u), index_of(e.v))) return false;
  return true;
}

bool pinned_laman_check_2d(const PinnedGraph& g) {
  return top_count(g) && pinned_sparsity_2d(g);
}

OrientationResult counts_imply_orientation(const PinnedGraph& g, int cap) {
  bool counts_ok = top_count(g);
  if (counts_ok) {
    if (g.dimension() == 2)
      counts_ok = pinned_sparsity_2d(g);
    else
      counts_ok = subgraph_counts_bruteforce(g, cap).empty();
  }
  OrientationResult r = find_d_orientation(g);
  if (counts_ok && !r.ok())
    raise(Errc::internal_check_failed,
          "counts hold but no d-directed orientation was found");
  return r;
}

}  // namespace assur
