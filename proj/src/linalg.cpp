#include "incseq/linalg.hpp"

namespace incseq {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

std::vector<Element> Matrix::column(std::size_t c) const {
  std::vector<Element> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    const Element inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Element factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse needs a square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = m.field().one();
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::optional<std::vector<Element>> nullspace_vector(const Matrix& m) {
  Matrix reduced = m;
  auto pivots = rref(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::size_t free_col = 0;
  while (free_col < m.cols() && is_pivot[free_col]) ++free_col;
  if (free_col == m.cols()) return std::nullopt;
  std::vector<Element> x(m.cols(), m.field().zero());
  x[free_col] = m.field().one();
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -reduced(r, free_col);
  return x;
}

std::vector<std::vector<Element>> nullspace_basis(const Matrix& m) {
  Matrix reduced = m;
  auto pivots = rref(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Element>> out;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Element> x(m.cols(), m.field().zero());
    x[free_col] = m.field().one();
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -reduced(r, free_col);
    out.push_back(std::move(x));
  }
  return out;
}

bool EchelonBasis::insert(std::vector<Element> v) {
  if (v.size() != dim_) throw Error("vector dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Element c = v[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < dim_; ++k)
      if (!rows_[i][k].is_zero()) v[k] -= c * rows_[i][k];
  }
  std::size_t piv = 0;
  while (piv < dim_ && v[piv].is_zero()) ++piv;
  if (piv == dim_) return false;
  const Element inv = v[piv].inverse();
  for (auto& e : v) e *= inv;
  // Keep earlier rows reduced against the new pivot.
  for (auto& row : rows_) {
    const Element c = row[piv];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < dim_; ++k)
      if (!v[k].is_zero()) row[k] -= c * v[k];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

}  // namespace incseq
