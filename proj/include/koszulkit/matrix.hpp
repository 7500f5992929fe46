// Dense exact matrices with Gauss-Jordan elimination.
//
// Dense only, target dimensions up to a couple thousand; everything here is
// desk scale and correctness-first.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "koszulkit/field.hpp"

namespace kk::linalg {

class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), ent_(rows * cols, Rat(0)) {}

  static Matrix identity(Field f, std::size_t n);
  static Matrix zero(Field f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rat& at(std::size_t r, std::size_t c) const { return ent_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const Rat& v) { ent_[r * cols_ + c] = field_.reduce(v); }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rat& c) const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  std::vector<Rat> apply(const std::vector<Rat>& v) const;  // matrix * column

  // Reduced row-echelon form and rank (= number of pivots).
  std::pair<Matrix, std::size_t> rref() const;
  std::size_t rank() const { return rref().second; }

  // Basis of {v : A v = 0}, each vector of length cols().
  std::vector<std::vector<Rat>> kernel() const;

  // One solution x of A x = b, or empty if none.
  std::vector<std::vector<Rat>> column_space_basis() const;
  bool solve(const std::vector<Rat>& b, std::vector<Rat>& x) const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Rat> ent_;
};

// In-place row reduction of a list of row vectors; returns pivot columns.
// Rows end up in reduced echelon form with zero rows dropped.
std::vector<std::size_t> row_reduce(const Field& f, std::vector<std::vector<Rat>>& rows);

}  // namespace kk::linalg
