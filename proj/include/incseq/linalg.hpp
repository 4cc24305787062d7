#pragma once

#include <optional>
#include <vector>

#include "incseq/field.hpp"

namespace incseq {

/// Dense row-major matrix of exact field elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Element> column(std::size_t c) const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

/// In-place reduced row echelon form. Pivots are the first nonzero entry in
/// each column scan. Returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// A nonzero vector x with m x = 0, built from the first free column of the
/// reduced form; nullopt when the columns are independent.
std::optional<std::vector<Element>> nullspace_vector(const Matrix& m);

/// One basis vector per free column of the reduced form.
std::vector<std::vector<Element>> nullspace_basis(const Matrix& m);

/// Incrementally grown set of linearly independent vectors kept in reduced
/// echelon form; answers "is v in the span so far".
class EchelonBasis {
 public:
  EchelonBasis(Field field, std::size_t dim) : field_(field), dim_(dim) {}

  /// Adds v if it is independent of the vectors so far; returns whether it was added.
  bool insert(std::vector<Element> v);
  std::size_t size() const { return rows_.size(); }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::vector<Element>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace incseq
