#ifndef ASSUR_RIGIDITY_HPP
#define ASSUR_RIGIDITY_HPP

#include <optional>

#include "assur/configuration.hpp"
#include "assur/decomposition.hpp"
#include "assur/linalg.hpp"
#include "assur/numeric.hpp"
#include "assur/pinned_graph.hpp"

namespace assur {

// |E| x d|I| pinned rigidity matrix with exact entries. Row order follows
// the graph edge order, column blocks follow sorted inner vertex ids.
struct RigidityMatrix {
  int dimension = 0;
  std::vector<EdgeId> row_edges;
  std::vector<VertexId> col_vertices;
  Mat<Rat> m;

  int col_of(int vertex_block, int coord) const { return vertex_block * dimension + coord; }
};

RigidityMatrix build_matrix(const PinnedGraph& g, const Configuration& config);

// Same matrix reduced mod p.
Mat<uint64_t> build_matrix_fp(const PinnedGraph& g, const Configuration& config,
                              const PrimeField& f);

template <typename S>
using Motion = std::map<VertexId, std::vector<S>>;
using MotionF = Motion<double>;
using MotionQ = Motion<Rat>;

// Maximum exact rank over `trials` independent prime-field configurations.
// Certified lower bound on the generic rank; with >= 3 trials reported as
// the generic rank itself.
int generic_rank(const PinnedGraph& g, int trials, uint64_t seed);
int generic_rank_serial(const PinnedGraph& g, int trials, uint64_t seed);

// rank at one explicit configuration (exact)
int rank_at(const PinnedGraph& g, const Configuration& config);
// float path: singular values above tol * sigma_max
int rank_at_float(const PinnedGraph& g, const Configuration& config, double tol = 1e-9);

struct IsostaticCertificate {
  bool isostatic = false;
  int rank = 0;
  int expected_rank = 0;  // d|I|
  bool top_count = false;
  uint64_t witness_seed = 0;  // configuration seed achieving the rank
  uint64_t prime = 0;
  uint64_t det_mod_p = 0;  // nonzero residue when isostatic
  std::optional<Rat> det_rational;
};

IsostaticCertificate is_pinned_isostatic(const PinnedGraph& g, uint64_t seed,
                                         bool rational_certificate = false);

// Kernel of the pinned rigidity matrix at `config`.
std::vector<MotionQ> nullspace_exact(const PinnedGraph& g, const Configuration& config);
std::vector<MotionF> nullspace_float(const PinnedGraph& g, const Configuration& config,
                                     double tol = 1e-9);

struct BlockTriangularView {
  bool ok = false;
  bool upper_blocks_zero = false;
  bool blocks_square = false;
  bool det_matches_product = false;
  std::vector<EdgeId> row_order;
  std::vector<VertexId> col_order;      // one entry per column block
  std::vector<int> block_row_counts;    // rows per component, linear order
  std::vector<int> block_col_counts;    // columns per component
  Rat det_permuted;
  Rat block_det_product;                // product over diagonal blocks
  Mat<Rat> permuted;
};

// Permutes rows and column blocks following the decomposition's linear
// order and verifies the lower block-triangular shape exactly.
BlockTriangularView block_triangular_verify(const PinnedGraph& g, const Configuration& config,
                                            const Decomposition& d);

// Finest block-triangular decomposition of the scalar matrix under
// independent row and column permutations: bipartite row-column matching on
// the exact nonzero pattern, then SCCs of the induced column digraph.
// Returns the diagonal block count, or nullopt when the pattern has no
// perfect matching (structurally singular).
std::optional<int> btf_block_count(const PinnedGraph& g, const Configuration& config);

std::string matrix_to_csv(const RigidityMatrix& rm);
std::string matrix_to_csv(const BlockTriangularView& view, int dimension);

}  // namespace assur

#endif
