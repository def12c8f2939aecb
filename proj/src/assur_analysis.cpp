#include "assur/assur_analysis.hpp"

#include <omp.h>

#include <Eigen/Dense>
#include <algorithm>
#include <functional>

#include "assur/error.hpp"
#include "assur/orientation.hpp"

namespace assur {

bool AssurRoutes::agree() const {
  if (scc_single != btf_single) return false;
  return !no_proper_isostatic_subgraph || *no_proper_isostatic_subgraph == scc_single;
}

namespace {

PinnedGraph without_edge(const PinnedGraph& g, const EdgeId& id) {
  if (g.edge_index(id) < 0) raise(Errc::unknown_edge, id);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (e.id != id) edges.push_back(e);
  return PinnedGraph(g.dimension(), g.inner(), g.pinned(), std::move(edges));
}

PinnedGraph without_vertex(const PinnedGraph& g, const VertexId& v) {
  std::vector<VertexId> inner;
  for (const auto& w : g.inner())
    if (w != v) inner.push_back(w);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (e.u != v && e.v != v) edges.push_back(e);
  return PinnedGraph(g.dimension(), std::move(inner), g.pinned(), std::move(edges));
}

PinnedGraph subgraph_on(const PinnedGraph& g, uint32_t mask) {
  std::vector<VertexId> inner;
  for (int i = 0; i < g.inner_count(); ++i)
    if (mask >> i & 1) inner.push_back(g.inner()[i]);
  std::set<VertexId> chosen(inner.begin(), inner.end());
  std::vector<Edge> edges;
  std::set<VertexId> pins;
  for (const Edge& e : g.edges()) {
    const bool u_in = chosen.count(e.u), v_in = chosen.count(e.v);
    const bool u_inner = g.is_inner(e.u), v_inner = g.is_inner(e.v);
    if ((u_inner && !u_in) || (v_inner && !v_in)) continue;
    if (!u_inner) pins.insert(e.u);
    if (!v_inner) pins.insert(e.v);
    edges.push_back(e);
  }
  return PinnedGraph(g.dimension(), std::move(inner),
                     std::vector<VertexId>(pins.begin(), pins.end()), std::move(edges));
}

std::vector<uint32_t> masks_by_size(int n, bool proper_only) {
  std::vector<uint32_t> masks;
  const uint32_t total = 1u << n;
  for (uint32_t m = 1; m < total; ++m)
    if (!(proper_only && m == total - 1)) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return masks;
}

}  // namespace

std::optional<std::vector<VertexId>> find_proper_isostatic_subgraph(const PinnedGraph& g,
                                                                    uint64_t seed, int cap) {
  if (g.inner_count() > cap)
    raise(Errc::size_cap_exceeded,
          "subgraph search capped at " + std::to_string(cap) + " inner vertices");
  const int d = g.dimension();
  for (uint32_t mask : masks_by_size(g.inner_count(), true)) {
    PinnedGraph sub = subgraph_on(g, mask);
    if (sub.edge_count() != d * sub.inner_count()) continue;
    if (is_pinned_isostatic(sub, mix_seed(seed, mask)).isostatic) {
      std::vector<VertexId> out = sub.inner();
      return out;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<VertexId>> assur_decompose_minimal(const PinnedGraph& g,
                                                           uint64_t seed, int cap) {
  if (g.inner_count() > cap)
    raise(Errc::size_cap_exceeded,
          "minimal decomposition capped at " + std::to_string(cap) + " inner vertices");
  std::vector<std::vector<VertexId>> components;
  PinnedGraph cur = g;
  while (cur.inner_count() > 0) {
    const int d = cur.dimension();
    std::optional<std::vector<VertexId>> found;
    for (uint32_t mask : masks_by_size(cur.inner_count(), false)) {
      PinnedGraph sub = subgraph_on(cur, mask);
      if (sub.edge_count() != d * sub.inner_count()) continue;
      if (is_pinned_isostatic(sub, mix_seed(seed, mask)).isostatic) {
        found = sub.inner();
        break;
      }
    }
    if (!found)
      raise(Errc::not_isostatic, "no pinned isostatic subgraph left to ground");
    components.push_back(*found);
    for (const auto& v : *found) cur = repin_vertex(cur, v).graph;
  }
  return components;
}

AssurVerdict is_d_assur(const PinnedGraph& g, uint64_t seed, int subgraph_cap) {
  AssurVerdict verdict;
  IsostaticCertificate cert = is_pinned_isostatic(g, seed);
  verdict.is_isostatic = cert.isostatic;
  if (!cert.isostatic) return verdict;

  OrientationResult orr = find_d_orientation(g);
  if (!orr.ok())
    raise(Errc::internal_check_failed, "isostatic graph with no d-directed orientation");
  Decomposition decomp = scc_decompose(g, *orr.orientation);
  verdict.scc_component_count = static_cast<int>(decomp.components.size());
  verdict.routes.scc_single = verdict.scc_component_count == 1;

  Configuration cfg =
      sample_generic_configuration(g, mix_seed(seed, 0xb7f), ScalarMode::prime_field);
  auto btf = btf_block_count(g, cfg);
  if (!btf)
    raise(Errc::internal_check_failed, "isostatic graph with structurally singular pattern");
  verdict.btf_component_count = *btf;
  verdict.routes.btf_single = *btf == 1;

  if (g.inner_count() <= subgraph_cap) {
    auto witness = find_proper_isostatic_subgraph(g, seed, subgraph_cap);
    verdict.routes.no_proper_isostatic_subgraph = !witness.has_value();
    verdict.minimal_subgraph_component_count =
        static_cast<int>(assur_decompose_minimal(g, seed, subgraph_cap).size());
  }

  verdict.is_assur = verdict.routes.scc_single && verdict.routes.btf_single &&
                     (!verdict.routes.no_proper_isostatic_subgraph ||
                      *verdict.routes.no_proper_isostatic_subgraph);
  return verdict;
}

namespace {

struct KernelTrial {
  Configuration cfg;
  PrimeField field;
};

std::vector<KernelTrial> make_trials(const PinnedGraph& g, int trials, uint64_t seed) {
  std::vector<KernelTrial> out;
  for (int t = 0; t < trials; ++t)
    out.push_back({sample_generic_configuration(g, mix_seed(seed, 5000 + t),
                                                ScalarMode::prime_field),
                   PrimeField(random_prime62(seed, 6000 + t))});
  return out;
}

// union of per-vertex nonzero blocks over the kernel basis
std::set<VertexId> kernel_support(const PinnedGraph& g,
                                  const std::vector<std::vector<uint64_t>>& basis) {
  std::set<VertexId> moving;
  const int d = g.dimension();
  for (const auto& vec : basis) {
    for (int b = 0; b < g.inner_count(); ++b) {
      for (int c = 0; c < d; ++c) {
        if (vec[b * d + c] != 0) {
          moving.insert(g.inner()[b]);
          break;
        }
      }
    }
  }
  return moving;
}

MovingSet moving_set_of_graph(const PinnedGraph& g_minus,
                              const std::vector<KernelTrial>& trials) {
  MovingSet out;
  int min_dim = -1;
  std::vector<std::set<VertexId>> patterns;
  std::vector<int> dims;
  for (const auto& tr : trials) {
    auto basis = kernel_basis(tr.field, build_matrix_fp(g_minus, tr.cfg, tr.field));
    dims.push_back(static_cast<int>(basis.size()));
    patterns.push_back(kernel_support(g_minus, basis));
    if (min_dim < 0 || dims.back() < min_dim) min_dim = dims.back();
  }
  out.kernel_dim = std::max(min_dim, 0);
  for (size_t t = 0; t < trials.size(); ++t) {
    if (dims[t] != min_dim) {
      out.trials_disagree = true;
      continue;
    }
    if (!out.moving.empty() && patterns[t] != out.moving) out.trials_disagree = true;
    out.moving.insert(patterns[t].begin(), patterns[t].end());
  }
  return out;
}

std::vector<MovingSet> edge_moving_sets(const PinnedGraph& g, int trials, uint64_t seed,
                                        bool parallel) {
  auto tr = make_trials(g, std::max(trials, 3), seed);
  std::vector<MovingSet> out(g.edge_count());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int e = 0; e < g.edge_count(); ++e)
      out[e] = moving_set_of_graph(without_edge(g, g.edges()[e].id), tr);
  } else {
    for (int e = 0; e < g.edge_count(); ++e)
      out[e] = moving_set_of_graph(without_edge(g, g.edges()[e].id), tr);
  }
  return out;
}

void require_isostatic(const PinnedGraph& g, uint64_t seed) {
  if (!is_pinned_isostatic(g, seed).isostatic)
    raise(Errc::not_isostatic, "graph is not pinned d-isostatic");
}

}  // namespace

MovingSet moving_set_on_edge_removal(const PinnedGraph& g, const EdgeId& edge, int trials,
                                     uint64_t seed) {
  if (g.edge_index(edge) < 0) raise(Errc::unknown_edge, edge);
  require_isostatic(g, seed);
  return moving_set_of_graph(without_edge(g, edge), make_trials(g, std::max(trials, 3), seed));
}

MovingSet vertex_removal_moving_set(const PinnedGraph& g, const VertexId& v, uint64_t seed,
                                    int trials) {
  if (!g.is_inner(v)) raise(Errc::unknown_vertex, v);
  require_isostatic(g, seed);
  return moving_set_of_graph(without_vertex(g, v), make_trials(g, std::max(trials, 3), seed));
}

bool is_strongly_d_assur(const PinnedGraph& g, uint64_t seed) {
  AssurVerdict verdict = is_d_assur(g, seed);
  if (!verdict.is_assur) return false;
  if (g.inner_count() >= 2) {
    // necessary valence filter before the kernel scans
    for (const auto& v : g.inner())
      if (g.valence(v) < g.dimension() + 1) return false;
  }
  const std::set<VertexId> all(g.inner().begin(), g.inner().end());
  auto sets = edge_moving_sets(g, 3, seed, true);
  for (const auto& ms : sets)
    if (ms.moving != all) return false;
  return true;
}

AssurVerdict classify_assur(const PinnedGraph& g, uint64_t seed, bool with_strong,
                            int subgraph_cap) {
  AssurVerdict verdict = is_d_assur(g, seed, subgraph_cap);
  if (with_strong)
    verdict.is_strongly_assur = verdict.is_assur && is_strongly_d_assur(g, seed);
  return verdict;
}

namespace {

DriverReport classify_drivers_impl(const PinnedGraph& g, uint64_t seed, int trials,
                                   bool parallel) {
  require_isostatic(g, seed);
  DriverReport rep;
  const std::set<VertexId> all(g.inner().begin(), g.inner().end());
  auto sets = edge_moving_sets(g, trials, seed, parallel);
  for (int e = 0; e < g.edge_count(); ++e) {
    DriverClass dc;
    dc.edge = g.edges()[e].id;
    dc.moving_set = sets[e].moving;
    dc.regular = sets[e].moving == all;
    rep.trials_disagree = rep.trials_disagree || sets[e].trials_disagree;
    rep.drivers.push_back(std::move(dc));
  }
  for (const auto& a : rep.drivers) {
    if (a.regular) continue;
    for (const auto& b : rep.drivers) {
      if (b.regular || a.edge == b.edge) continue;
      if (a.moving_set != b.moving_set &&
          std::includes(b.moving_set.begin(), b.moving_set.end(), a.moving_set.begin(),
                        a.moving_set.end()))
        rep.weak_order.emplace_back(a.edge, b.edge);
    }
  }
  return rep;
}

}  // namespace

DriverReport classify_drivers(const PinnedGraph& g, uint64_t seed, int trials) {
  return classify_drivers_impl(g, seed, trials, true);
}

DriverReport classify_drivers_serial(const PinnedGraph& g, uint64_t seed, int trials) {
  return classify_drivers_impl(g, seed, trials, false);
}

namespace {

std::vector<Rat> drive_rhs(const PinnedGraph& g, const Configuration& config,
                           const DriveSpec& r) {
  std::vector<Rat> rhs(g.edge_count(), Rat(0));
  for (int row = 0; row < g.edge_count(); ++row) {
    const Edge& e = g.edges()[row];
    const bool u_pinned = !g.is_inner(e.u);
    const bool v_pinned = !g.is_inner(e.v);
    if (!u_pinned && !v_pinned) continue;
    const VertexId& i = u_pinned ? e.v : e.u;
    const VertexId& k = u_pinned ? e.u : e.v;
    auto it = r.find(k);
    if (it == r.end()) continue;
    const auto& pi = config.at(i);
    const auto& pk = config.at(k);
    Rat dot(0);
    for (int c = 0; c < g.dimension(); ++c) dot += (pi[c] - pk[c]) * it->second[c];
    rhs[row] = dot;
  }
  return rhs;
}

}  // namespace

MotionQ drive_solve(const PinnedGraph& g, const Configuration& config, const DriveSpec& r) {
  for (const auto& [k, vel] : r) {
    if (!g.is_pinned(k)) raise(Errc::unknown_vertex, "drive velocity on non-pin " + k);
    if (static_cast<int>(vel.size()) != g.dimension())
      raise(Errc::wrong_dimension, "drive velocity arity at " + k);
  }
  if (g.edge_count() != g.dimension() * g.inner_count())
    raise(Errc::not_isostatic, "drive equation needs a square pinned rigidity matrix");
  RigidityMatrix rm = build_matrix(g, config);
  RationalField f;
  auto x = solve_square(f, rm.m, drive_rhs(g, config, r));
  if (!x) raise(Errc::singular_configuration, "pinned rigidity matrix is singular here");
  MotionQ motion;
  const int d = g.dimension();
  for (int b = 0; b < g.inner_count(); ++b) {
    std::vector<Rat> u(d);
    for (int c = 0; c < d; ++c) u[c] = (*x)[b * d + c];
    motion[rm.col_vertices[b]] = std::move(u);
  }
  return motion;
}

MotionF drive_solve_float(const PinnedGraph& g, const Configuration& config,
                          const DriveSpec& r, double tol) {
  for (const auto& [k, vel] : r) {
    if (!g.is_pinned(k)) raise(Errc::unknown_vertex, "drive velocity on non-pin " + k);
    if (static_cast<int>(vel.size()) != g.dimension())
      raise(Errc::wrong_dimension, "drive velocity arity at " + k);
  }
  if (g.edge_count() != g.dimension() * g.inner_count())
    raise(Errc::not_isostatic, "drive equation needs a square pinned rigidity matrix");
  RigidityMatrix rm = build_matrix(g, config);
  const int n = rm.m.rows;
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = rat_to_double(rm.m.at(i, j));
  auto rhs = drive_rhs(g, config, r);
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) b(i) = rat_to_double(rhs[i]);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  if (!lu.isInvertible()) raise(Errc::singular_configuration, "matrix numerically singular");
  Eigen::VectorXd x = lu.solve(b);
  const double resid = (A * x - b).norm();
  if (resid > tol * std::max(1.0, b.norm()))
    raise(Errc::singular_configuration, "drive solve residual too large");
  MotionF motion;
  const int d = g.dimension();
  for (int blk = 0; blk < g.inner_count(); ++blk) {
    std::vector<double> u(d);
    for (int c = 0; c < d; ++c) u[c] = x(blk * d + c);
    motion[rm.col_vertices[blk]] = std::move(u);
  }
  return motion;
}

namespace {

// kernel of the graph-minus-driver matrix scaled so the driver row rate is
// `rate`; requires a one-dimensional kernel
MotionQ scaled_kernel_motion(const PinnedGraph& g_minus, const PinnedGraph& g_full,
                             const Configuration& config, const EdgeId& driver,
                             const Rat& rate) {
  auto basis = nullspace_exact(g_minus, config);
  if (basis.size() != 1)
    raise(Errc::singular_configuration,
          "kernel dimension " + std::to_string(basis.size()) + " after removing driver");
  const MotionQ& u0 = basis[0];
  const Edge& e = g_full.edges()[g_full.edge_index(driver)];
  const auto& pu = config.at(e.u);
  const auto& pv = config.at(e.v);
  Rat s(0);
  for (int c = 0; c < g_full.dimension(); ++c) {
    Rat du = u0.count(e.u) ? u0.at(e.u)[c] : Rat(0);
    Rat dv = u0.count(e.v) ? u0.at(e.v)[c] : Rat(0);
    s += (pu[c] - pv[c]) * (du - dv);
  }
  if (s == 0)
    raise(Errc::singular_configuration, "driver row vanishes on the kernel");
  const Rat scale = rate / s;
  MotionQ out;
  for (const auto& [v, vel] : u0) {
    std::vector<Rat> w(vel.size());
    for (size_t c = 0; c < vel.size(); ++c) w[c] = vel[c] * scale;
    out[v] = std::move(w);
  }
  return out;
}

}  // namespace

MotionQ drive_monolithic(const PinnedGraph& g, const Configuration& config,
                         const EdgeId& driver, const Rat& rate) {
  return scaled_kernel_motion(without_edge(g, driver), g, config, driver, rate);
}

MotionQ drive_propagate(const PinnedGraph& g, const Decomposition& d,
                        const Configuration& config, const EdgeId& driver, const Rat& rate) {
  if (g.edge_index(driver) < 0) raise(Errc::unknown_edge, driver);
  int home = -1;
  for (size_t c = 0; c < d.components.size(); ++c) {
    const auto& es = d.components[c].edges;
    if (std::find(es.begin(), es.end(), driver) != es.end()) home = static_cast<int>(c);
  }
  if (home < 0) raise(Errc::decomposition_mismatch, "driver edge not in any component");
  for (auto [up, lo] : d.dag_edges)
    if (up == home)
      raise(Errc::not_bottom_component,
            "driver component depends on component " + std::to_string(lo));

  MotionQ solved;
  for (int c : d.linear_order) {
    PinnedGraph comp = component_subgraph(g, d, c);
    if (c == home) {
      MotionQ local =
          scaled_kernel_motion(without_edge(comp, driver), comp, config, driver, rate);
      for (auto& [v, vel] : local) solved[v] = std::move(vel);
      continue;
    }
    DriveSpec spec;
    for (const auto& p : comp.pinned()) {
      auto it = solved.find(p);
      if (it != solved.end()) spec[p] = it->second;  // moving pin from below
    }
    MotionQ local = drive_solve(comp, config, spec);
    for (auto& [v, vel] : local) solved[v] = std::move(vel);
  }

  MotionQ reference = drive_monolithic(g, config, driver, rate);
  if (reference != solved)
    raise(Errc::internal_check_failed,
          "propagated drive disagrees with the monolithic solve");
  return solved;
}

}  // namespace assur
