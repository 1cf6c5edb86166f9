#ifndef SEAWEED_LINALG_HPP
#define SEAWEED_LINALG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "seaweed/rational.hpp"

namespace seaweed {

/// Dense matrix over Q, row major. Sizes here stay small (a few hundred),
/// exact Gauss-Jordan is the whole story.
struct QMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<QVec> m;

  QMatrix() = default;
  QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), m(r, qvec_zero(c)) {}

  QVec& operator[](std::size_t i) { return m[i]; }
  const QVec& operator[](std::size_t i) const { return m[i]; }

  void add_row(QVec v) {
    if (cols == 0 && rows == 0) cols = v.size();
    if (v.size() != cols) throw std::invalid_argument("QMatrix: row length mismatch");
    m.push_back(std::move(v));
    ++rows;
  }
};

/// In-place reduced row echelon form. Returns the rank; pivot column indices
/// go to *pivots if given. Deterministic: pivots are the first nonzero column
/// scanning rows top to bottom.
inline std::size_t rref(QMatrix& M, std::vector<std::size_t>* pivots = nullptr) {
  std::size_t rank = 0;
  if (pivots) pivots->clear();
  for (std::size_t col = 0; col < M.cols && rank < M.rows; ++col) {
    std::size_t sel = rank;
    while (sel < M.rows && is_zero(M[sel][col])) ++sel;
    if (sel == M.rows) continue;
    std::swap(M.m[sel], M.m[rank]);
    // normalize pivot row
    Rat inv = 1 / M[rank][col];
    if (inv != 1) {
      for (std::size_t j = col; j < M.cols; ++j)
        if (!is_zero(M[rank][j])) M[rank][j] *= inv;
    }
    for (std::size_t i = 0; i < M.rows; ++i) {
      if (i == rank || is_zero(M[i][col])) continue;
      Rat f = M[i][col];
      for (std::size_t j = col; j < M.cols; ++j) {
        if (!is_zero(M[rank][j])) M[i][j] -= f * M[rank][j];
      }
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  M.m.resize(rank, qvec_zero(M.cols));
  M.rows = rank;
  return rank;
}

inline std::size_t rank_of(QMatrix M) { return rref(M); }

/// Canonical basis of {x : Mx = 0}, one row per free column, itself in
/// reduced echelon form (so kernel bases compare bit for bit).
inline QMatrix kernel_basis(QMatrix M) {
  std::vector<std::size_t> piv;
  std::size_t rank = rref(M, &piv);
  QMatrix K(0, M.cols);
  std::vector<bool> is_pivot(M.cols, false);
  for (std::size_t c : piv) is_pivot[c] = true;
  for (std::size_t free_col = 0; free_col < M.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    QVec v = qvec_zero(M.cols);
    v[free_col] = 1;
    for (std::size_t r = 0; r < rank; ++r)
      if (!is_zero(M[r][free_col])) v[piv[r]] = -M[r][free_col];
    K.add_row(std::move(v));
  }
  rref(K);
  return K;
}

/// One solution of Mx = b with free variables set to 0, or nullopt.
inline std::optional<QVec> solve(const QMatrix& M, const QVec& b) {
  if (b.size() != M.rows) throw std::invalid_argument("solve: rhs size mismatch");
  QMatrix A(M.rows, M.cols + 1);
  for (std::size_t i = 0; i < M.rows; ++i) {
    for (std::size_t j = 0; j < M.cols; ++j) A[i][j] = M[i][j];
    A[i][M.cols] = b[i];
  }
  std::vector<std::size_t> piv;
  std::size_t rank = rref(A, &piv);
  for (std::size_t r = 0; r < rank; ++r)
    if (piv[r] == M.cols) return std::nullopt; // inconsistent
  QVec x = qvec_zero(M.cols);
  for (std::size_t r = 0; r < rank; ++r) x[piv[r]] = A[r][M.cols];
  return x;
}

/// Row space kept in reduced echelon form; supports O(rows * cols) inserts
/// and membership tests. This is the workhorse for span/intersection math.
class RowSpace {
public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<QVec>& basis() const { return rows_; }

  /// Reduce v against the current basis; insert the remainder if nonzero.
  /// Returns true when the dimension grew.
  bool insert(QVec v) {
    reduce(v);
    std::size_t lead = leading(v);
    if (lead == cols_) return false;
    Rat inv = 1 / v[lead];
    if (inv != 1)
      for (std::size_t j = lead; j < cols_; ++j)
        if (!is_zero(v[j])) v[j] *= inv;
    // keep reduced form: eliminate this column from existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!is_zero(rows_[r][lead])) {
        Rat f = rows_[r][lead];
        for (std::size_t j = lead; j < cols_; ++j)
          if (!is_zero(v[j])) rows_[r][j] -= f * v[j];
      }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, lead);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
  }

  bool contains(QVec v) const {
    reduce(v);
    return leading(v) == cols_;
  }

  QMatrix matrix() const {
    QMatrix M(0, cols_);
    for (const auto& r : rows_) M.add_row(r);
    return M;
  }

private:
  void reduce(QVec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::size_t p = pivots_[r];
      if (!is_zero(v[p])) {
        Rat f = v[p];
        for (std::size_t j = p; j < cols_; ++j)
          if (!is_zero(rows_[r][j])) v[j] -= f * rows_[r][j];
      }
    }
  }

  std::size_t leading(const QVec& v) const {
    for (std::size_t j = 0; j < cols_; ++j)
      if (!is_zero(v[j])) return j;
    return cols_;
  }

  std::size_t cols_;
  std::vector<QVec> rows_;    // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

inline RowSpace row_space(const QMatrix& M) {
  RowSpace S(M.cols);
  for (const auto& r : M.m) S.insert(r);
  return S;
}

/// Zassenhaus: echelonize [U | U; W | 0]; rows with zero left half carry a
/// basis of U ∩ W in the right half.
inline RowSpace intersect(const RowSpace& U, const RowSpace& W) {
  if (U.cols() != W.cols()) throw std::invalid_argument("intersect: ambient mismatch");
  std::size_t n = U.cols();
  QMatrix Z(0, 2 * n);
  for (const auto& u : U.basis()) {
    QVec row = qvec_zero(2 * n);
    for (std::size_t j = 0; j < n; ++j) row[j] = row[n + j] = u[j];
    Z.add_row(std::move(row));
  }
  for (const auto& w : W.basis()) {
    QVec row = qvec_zero(2 * n);
    for (std::size_t j = 0; j < n; ++j) row[j] = w[j];
    Z.add_row(std::move(row));
  }
  rref(Z);
  RowSpace result(n);
  for (std::size_t i = 0; i < Z.rows; ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = is_zero(Z[i][j]);
    if (!left_zero) continue;
    QVec v(Z[i].begin() + static_cast<std::ptrdiff_t>(n), Z[i].end());
    result.insert(std::move(v));
  }
  return result;
}

inline std::size_t intersection_dim(const RowSpace& U, const RowSpace& W) {
  // dim U + dim W - dim(U + W); avoids building the double-width matrix
  RowSpace sum = U;
  for (const auto& w : W.basis()) sum.insert(w);
  return U.dim() + W.dim() - sum.dim();
}

} // namespace seaweed

#endif
