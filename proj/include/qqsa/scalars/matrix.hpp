#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qqsa/scalars/coeff.hpp"

namespace qqsa::scalars {

/// Execution policy for the elimination kernels. Both produce identical
/// results; serial is the reference the parallel kernel is tested against.
enum class Exec { serial, parallel };

using Vector = std::vector<Coeff>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Coeff& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Coeff& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  void swap_rows(std::size_t a, std::size_t b);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Coeff& c) const;
  Vector operator*(const Vector& v) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coeff> data_;
};

/// Reduced row echelon form. Pivots are chosen by smallest term count.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;  // pivot column of row r
  Coeff det;                            // determinant if square, else unused
};

Echelon row_reduce(const Matrix& m, Exec exec = Exec::parallel);

std::size_t rank(const Matrix& m, Exec exec = Exec::parallel);
Coeff det(const Matrix& m, Exec exec = Exec::parallel);

/// Basis of {v : m v = 0}; each vector is checked by substitution.
std::vector<Vector> kernel_basis(const Matrix& m, Exec exec = Exec::parallel);

/// Some solution of m x = rhs, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs, Exec exec = Exec::parallel);

}  // namespace qqsa::scalars
