#pragma once

#include <nilorb/polynomial.hpp>
#include <nilorb/rational.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace nilorb {

/// Dense row-major matrix of exact rationals, 0-based storage.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank over Q. Rows are scaled to integers and reduced with Bareiss'
/// fraction-free elimination.
std::size_t rank(const RationalMatrix& m);

/// n x n matrix of polynomials with 1-based (row, col) access.
class PolyMatrix {
 public:
  explicit PolyMatrix(int n = 0) : n_(n), entries_(static_cast<std::size_t>(n * n)) {}
  int size() const { return n_; }
  Polynomial& at(int row, int col) { return entries_[index(row, col)]; }
  const Polynomial& at(int row, int col) const { return entries_[index(row, col)]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix pow(unsigned k) const;

  /// Determinant of the submatrix on rows I and columns J (both ascending,
  /// 1-based, equal length). Laplace expansion memoized over column subsets.
  Polynomial minor(std::span<const int> rows, std::span<const int> cols) const;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>((row - 1) * n_ + (col - 1));
  }
  int n_;
  std::vector<Polynomial> entries_;
};

}  // namespace nilorb
