#pragma once

#include <cstddef>
#include <vector>

#include "cyclo/cyclo_ring.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/mod_ring.hpp"

namespace cyclo {

/// Dense row-major matrix over a ring whose elements carry their own ring
/// (CycloElem or ModElem), so every matrix is built from a fill value.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<T>& entries() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

using CycloMatrix = Matrix<CycloElem>;
using ModMatrix = Matrix<ModElem>;

/// Fraction-free (Bareiss) elimination over the cyclotomic domain. Every
/// intermediate division is exact, so no fraction field is needed.
CycloElem determinant(const CycloMatrix& a);

/// Division-free Laplace expansion with memoization over column subsets,
/// valid over any commutative ring (Z/m is not a domain). Limited to
/// 20 x 20.
ModElem determinant(const ModMatrix& a);

}  // namespace cyclo
