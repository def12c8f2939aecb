#ifndef ASSUR_LINALG_HPP
#define ASSUR_LINALG_HPP

#include <optional>
#include <vector>

namespace assur {

// Row-major dense matrix over the value type of a field facade.
template <typename S>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<S> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  S& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const S& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

template <typename F>
struct Echelon {
  int rank = 0;
  // determinant of a square input; zero when singular, unused otherwise
  typename F::value_type det{};
  std::vector<int> pivot_cols;
  Mat<typename F::value_type> rref;
};

// Gauss-Jordan over an exact field. Division is exact, so no pivoting
// strategy beyond "first nonzero" is needed.
template <typename F>
Echelon<F> row_reduce(const F& f, Mat<typename F::value_type> m) {
  using S = typename F::value_type;
  Echelon<F> out;
  out.det = m.rows == m.cols ? f.one() : f.zero();
  bool det_live = m.rows == m.cols;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int r = row; r < m.rows; ++r) {
      if (!f.is_zero(m.at(r, col))) {
        piv = r;
        break;
      }
    }
    if (piv < 0) {
      det_live = false;
      continue;
    }
    if (piv != row) {
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
      if (det_live) out.det = f.neg(out.det);
    }
    const S lead = m.at(row, col);
    if (det_live) out.det = f.mul(out.det, lead);
    const S lead_inv = f.div(f.one(), lead);
    for (int c = col; c < m.cols; ++c) m.at(row, c) = f.mul(m.at(row, c), lead_inv);
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || f.is_zero(m.at(r, col))) continue;
      const S factor = m.at(r, col);
      for (int c = col; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  if (m.rows != m.cols || out.rank < m.rows) out.det = f.zero();
  out.rref = std::move(m);
  return out;
}

template <typename F>
int rank_of(const F& f, Mat<typename F::value_type> m) {
  return row_reduce(f, std::move(m)).rank;
}

template <typename F>
typename F::value_type det_of(const F& f, Mat<typename F::value_type> m) {
  return row_reduce(f, std::move(m)).det;
}

// Basis of the right kernel, one vector per free column. Each basis vector
// has value one at its free column, making the result canonical.
template <typename F>
std::vector<std::vector<typename F::value_type>> kernel_basis(
    const F& f, Mat<typename F::value_type> m) {
  using S = typename F::value_type;
  const int cols = m.cols;
  Echelon<F> e = row_reduce(f, std::move(m));
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<S>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<S> v(cols, f.zero());
    v[free] = f.one();
    for (size_t i = 0; i < e.pivot_cols.size(); ++i)
      v[e.pivot_cols[i]] = f.neg(e.rref.at(static_cast<int>(i), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Unique solution of a square full-rank system; nullopt when singular.
template <typename F>
std::optional<std::vector<typename F::value_type>> solve_square(
    const F& f, const Mat<typename F::value_type>& m,
    const std::vector<typename F::value_type>& b) {
  using S = typename F::value_type;
  Mat<S> aug(m.rows, m.cols + 1);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[r];
  }
  Echelon<F> e = row_reduce(f, std::move(aug));
  const bool pivot_in_rhs = !e.pivot_cols.empty() && e.pivot_cols.back() >= m.cols;
  if (m.rows != m.cols || e.rank != m.cols || pivot_in_rhs) return std::nullopt;
  std::vector<S> x(m.cols, f.zero());
  for (int r = 0; r < m.cols; ++r) x[r] = e.rref.at(r, m.cols);
  return x;
}

}  // namespace assur

#endif
