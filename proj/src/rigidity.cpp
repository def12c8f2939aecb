#include "assur/rigidity.hpp"

#include <omp.h>

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <functional>
#include <sstream>

#include "assur/error.hpp"

namespace assur {

namespace {

void require_coverage(const PinnedGraph& g, const Configuration& config) {
  if (config.dimension != g.dimension())
    raise(Errc::wrong_dimension, "configuration dimension mismatch");
  if (!config.covers(g)) raise(Errc::missing_coordinates, "configuration incomplete");
}

}  // namespace

RigidityMatrix build_matrix(const PinnedGraph& g, const Configuration& config) {
  require_coverage(g, config);
  const int d = g.dimension();
  RigidityMatrix rm;
  rm.dimension = d;
  rm.col_vertices = g.inner();
  rm.m = Mat<Rat>(g.edge_count(), d * g.inner_count());
  for (int r = 0; r < g.edge_count(); ++r) {
    const Edge& e = g.edges()[r];
    rm.row_edges.push_back(e.id);
    const auto& pu = config.at(e.u);
    const auto& pv = config.at(e.v);
    const int iu = g.inner_index(e.u);
    const int iv = g.inner_index(e.v);
    if (iu >= 0)
      for (int c = 0; c < d; ++c) rm.m.at(r, rm.col_of(iu, c)) = pu[c] - pv[c];
    if (iv >= 0)
      for (int c = 0; c < d; ++c) rm.m.at(r, rm.col_of(iv, c)) = pv[c] - pu[c];
  }
  return rm;
}

Mat<uint64_t> build_matrix_fp(const PinnedGraph& g, const Configuration& config,
                              const PrimeField& f) {
  require_coverage(g, config);
  const int d = g.dimension();
  Mat<uint64_t> m(g.edge_count(), d * g.inner_count());
  for (int r = 0; r < g.edge_count(); ++r) {
    const Edge& e = g.edges()[r];
    const auto& pu = config.at(e.u);
    const auto& pv = config.at(e.v);
    const int iu = g.inner_index(e.u);
    const int iv = g.inner_index(e.v);
    for (int c = 0; c < d; ++c) {
      uint64_t diff = f.from_rat(pu[c] - pv[c]);
      if (iu >= 0) m.at(r, iu * d + c) = diff;
      if (iv >= 0) m.at(r, iv * d + c) = f.neg(diff);
    }
  }
  return m;
}

namespace {

int rank_one_trial(const PinnedGraph& g, uint64_t seed, int trial) {
  Configuration cfg = sample_generic_configuration(g, mix_seed(seed, 1000 + trial),
                                                   ScalarMode::prime_field);
  PrimeField f(random_prime62(seed, 2000 + trial));
  int r = rank_of(f, build_matrix_fp(g, cfg, f));
  const int full = std::min(g.edge_count(), g.dimension() * g.inner_count());
  if (r < full) {
    // a second prime guards against unlucky reductions of this configuration
    PrimeField f2(random_prime62(seed, 3000 + trial));
    r = std::max(r, rank_of(f2, build_matrix_fp(g, cfg, f2)));
  }
  return r;
}

}  // namespace

int generic_rank_serial(const PinnedGraph& g, int trials, uint64_t seed) {
  if (trials < 1) trials = 1;
  int best = 0;
  for (int t = 0; t < trials; ++t) best = std::max(best, rank_one_trial(g, seed, t));
  return best;
}

int generic_rank(const PinnedGraph& g, int trials, uint64_t seed) {
  if (trials < 1) trials = 1;
  int best = 0;
#pragma omp parallel for reduction(max : best) schedule(static)
  for (int t = 0; t < trials; ++t) {
    int r = rank_one_trial(g, seed, t);
    if (r > best) best = r;
  }
  return best;
}

int rank_at(const PinnedGraph& g, const Configuration& config) {
  RationalField f;
  return rank_of(f, build_matrix(g, config).m);
}

namespace {

Eigen::MatrixXd to_eigen(const RigidityMatrix& rm) {
  Eigen::MatrixXd m(rm.m.rows, rm.m.cols);
  for (int r = 0; r < rm.m.rows; ++r)
    for (int c = 0; c < rm.m.cols; ++c) m(r, c) = rat_to_double(rm.m.at(r, c));
  return m;
}

}  // namespace

int rank_at_float(const PinnedGraph& g, const Configuration& config, double tol) {
  RigidityMatrix rm = build_matrix(g, config);
  if (rm.m.rows == 0 || rm.m.cols == 0) return 0;
  Eigen::MatrixXd m = to_eigen(rm);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cutoff = tol * sv(0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

IsostaticCertificate is_pinned_isostatic(const PinnedGraph& g, uint64_t seed,
                                         bool rational_certificate) {
  IsostaticCertificate cert;
  cert.expected_rank = g.dimension() * g.inner_count();
  cert.top_count = g.edge_count() == cert.expected_rank;
  const int trials = 3;
  if (!cert.top_count) {
    cert.rank = generic_rank_serial(g, trials, seed);
    return cert;
  }
  for (int t = 0; t < trials; ++t) {
    uint64_t cfg_seed = mix_seed(seed, 1000 + t);
    Configuration cfg = sample_generic_configuration(g, cfg_seed, ScalarMode::prime_field);
    PrimeField f(random_prime62(seed, 2000 + t));
    uint64_t det = det_of(f, build_matrix_fp(g, cfg, f));
    if (det != 0) {
      cert.isostatic = true;
      cert.rank = cert.expected_rank;
      cert.witness_seed = cfg_seed;
      cert.prime = f.p();
      cert.det_mod_p = det;
      if (rational_certificate) {
        RationalField rf;
        cert.det_rational = det_of(rf, build_matrix(g, cfg).m);
      }
      return cert;
    }
    cert.rank = std::max(cert.rank, rank_of(f, build_matrix_fp(g, cfg, f)));
  }
  return cert;
}

std::vector<MotionQ> nullspace_exact(const PinnedGraph& g, const Configuration& config) {
  RigidityMatrix rm = build_matrix(g, config);
  RationalField f;
  auto basis = kernel_basis(f, rm.m);
  std::vector<MotionQ> out;
  const int d = g.dimension();
  for (const auto& vec : basis) {
    MotionQ mv;
    for (int b = 0; b < static_cast<int>(rm.col_vertices.size()); ++b) {
      std::vector<Rat> u(d);
      for (int c = 0; c < d; ++c) u[c] = vec[b * d + c];
      mv[rm.col_vertices[b]] = std::move(u);
    }
    out.push_back(std::move(mv));
  }
  return out;
}

std::vector<MotionF> nullspace_float(const PinnedGraph& g, const Configuration& config,
                                     double tol) {
  RigidityMatrix rm = build_matrix(g, config);
  std::vector<MotionF> out;
  if (rm.m.cols == 0) return out;
  Eigen::MatrixXd m = to_eigen(rm);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double sigma_max = sv.size() ? sv(0) : 0.0;
  const double cutoff = tol * sigma_max;
  const int d = g.dimension();
  for (int i = 0; i < rm.m.cols; ++i) {
    const bool in_kernel = i >= sv.size() || sv(i) <= cutoff;
    if (!in_kernel) continue;
    MotionF mv;
    for (int b = 0; b < static_cast<int>(rm.col_vertices.size()); ++b) {
      std::vector<double> u(d);
      for (int c = 0; c < d; ++c) u[c] = svd.matrixV()(b * d + c, i);
      mv[rm.col_vertices[b]] = std::move(u);
    }
    out.push_back(std::move(mv));
  }
  return out;
}

BlockTriangularView block_triangular_verify(const PinnedGraph& g, const Configuration& config,
                                            const Decomposition& d) {
  // the decomposition must partition I and own every edge exactly once
  {
    std::set<VertexId> seen;
    size_t edge_total = 0;
    for (const auto& c : d.components) {
      for (const auto& v : c.inner_vertices) {
        if (!g.is_inner(v) || !seen.insert(v).second)
          raise(Errc::decomposition_mismatch, "component vertices do not partition I");
      }
      edge_total += c.edges.size();
    }
    if (seen.size() != g.inner().size() || edge_total != g.edges().size())
      raise(Errc::decomposition_mismatch, "decomposition does not cover the graph");
  }

  RigidityMatrix rm = build_matrix(g, config);
  const int dim = g.dimension();
  BlockTriangularView view;

  std::vector<int> row_perm, col_block_perm;
  for (int c : d.linear_order) {
    const auto& comp = d.components[c];
    view.block_row_counts.push_back(static_cast<int>(comp.edges.size()));
    view.block_col_counts.push_back(dim * static_cast<int>(comp.inner_vertices.size()));
    for (const EdgeId& id : comp.edges) {
      int r = g.edge_index(id);
      if (r < 0) raise(Errc::decomposition_mismatch, "unknown edge " + id);
      row_perm.push_back(r);
    }
    for (const auto& v : comp.inner_vertices) col_block_perm.push_back(g.inner_index(v));
  }
  // keep row order within a component aligned with the graph edge order
  {
    size_t at = 0;
    for (int count : view.block_row_counts) {
      std::sort(row_perm.begin() + at, row_perm.begin() + at + count);
      at += count;
    }
  }

  view.permuted = Mat<Rat>(rm.m.rows, rm.m.cols);
  for (size_t r = 0; r < row_perm.size(); ++r) {
    view.row_order.push_back(rm.row_edges[row_perm[r]]);
    for (size_t b = 0; b < col_block_perm.size(); ++b) {
      for (int c = 0; c < dim; ++c)
        view.permuted.at(static_cast<int>(r), static_cast<int>(b) * dim + c) =
            rm.m.at(row_perm[r], col_block_perm[b] * dim + c);
    }
  }
  for (size_t b = 0; b < col_block_perm.size(); ++b)
    view.col_order.push_back(rm.col_vertices[col_block_perm[b]]);

  view.blocks_square = true;
  for (size_t i = 0; i < view.block_row_counts.size(); ++i)
    if (view.block_row_counts[i] != view.block_col_counts[i]) view.blocks_square = false;

  view.upper_blocks_zero = true;
  {
    std::vector<int> row_start{0}, col_start{0};
    for (int n : view.block_row_counts) row_start.push_back(row_start.back() + n);
    for (int n : view.block_col_counts) col_start.push_back(col_start.back() + n);
    const size_t nb = view.block_row_counts.size();
    for (size_t bi = 0; bi < nb && view.upper_blocks_zero; ++bi) {
      for (int r = row_start[bi]; r < row_start[bi + 1]; ++r) {
        for (int c = col_start[bi + 1]; c < view.permuted.cols; ++c) {
          if (view.permuted.at(r, c) != 0) {
            view.upper_blocks_zero = false;
            break;
          }
        }
        if (!view.upper_blocks_zero) break;
      }
    }
  }

  RationalField f;
  if (view.blocks_square && view.permuted.rows == view.permuted.cols) {
    view.det_permuted = det_of(f, view.permuted);
    view.block_det_product = 1;
    int off_r = 0, off_c = 0;
    for (size_t bi = 0; bi < view.block_row_counts.size(); ++bi) {
      const int n = view.block_row_counts[bi];
      Mat<Rat> block(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) block.at(r, c) = view.permuted.at(off_r + r, off_c + c);
      view.block_det_product = view.block_det_product * det_of(f, std::move(block));
      off_r += n;
      off_c += n;
    }
    view.det_matches_product = view.det_permuted == view.block_det_product ||
                               view.det_permuted == -view.block_det_product;
  }

  view.ok = view.upper_blocks_zero && view.blocks_square &&
            (view.permuted.rows != view.permuted.cols || view.det_matches_product);
  return view;
}

std::optional<int> btf_block_count(const PinnedGraph& g, const Configuration& config) {
  RigidityMatrix rm = build_matrix(g, config);
  const int rows = rm.m.rows, cols = rm.m.cols;
  if (rows != cols || rows == 0) return rows == 0 && cols == 0 ? std::optional<int>(0)
                                                               : std::nullopt;
  std::vector<std::vector<int>> nz_cols(rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (rm.m.at(r, c) != 0) nz_cols[r].push_back(c);

  // Kuhn matching: column -> row
  std::vector<int> row_of_col(cols, -1), col_of_row(rows, -1);
  std::function<bool(int, std::vector<bool>&)> try_row = [&](int r, std::vector<bool>& vis) {
    for (int c : nz_cols[r]) {
      if (vis[c]) continue;
      vis[c] = true;
      if (row_of_col[c] == -1 || try_row(row_of_col[c], vis)) {
        row_of_col[c] = r;
        col_of_row[r] = c;
        return true;
      }
    }
    return false;
  };
  for (int r = 0; r < rows; ++r) {
    std::vector<bool> vis(cols, false);
    if (!try_row(r, vis)) return std::nullopt;  // structurally singular
  }

  // digraph on columns: j -> k iff the row matched to k has a nonzero in j
  std::vector<std::pair<int, int>> arcs;
  for (int k = 0; k < cols; ++k) {
    int r = row_of_col[k];
    for (int j : nz_cols[r])
      if (j != k) arcs.emplace_back(j, k);
  }
  return static_cast<int>(strongly_connected_components(cols, arcs).size());
}

namespace {

std::string csv_of(const std::vector<EdgeId>& rows, const std::vector<VertexId>& col_blocks,
                   int dimension, const Mat<Rat>& m) {
  std::ostringstream os;
  os << "edge";
  for (const auto& v : col_blocks)
    for (int c = 0; c < dimension; ++c) os << "," << v << "." << c;
  os << "\n";
  for (int r = 0; r < m.rows; ++r) {
    os << rows[r];
    for (int c = 0; c < m.cols; ++c) os << "," << rat_to_string(m.at(r, c));
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string matrix_to_csv(const RigidityMatrix& rm) {
  return csv_of(rm.row_edges, rm.col_vertices, rm.dimension, rm.m);
}

std::string matrix_to_csv(const BlockTriangularView& view, int dimension) {
  return csv_of(view.row_order, view.col_order, dimension, view.permuted);
}

}  // namespace assur
