#include "qqsa/scalars/matrix.hpp"

#include <stdexcept>

namespace qqsa::scalars {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Coeff(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch in product");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Coeff& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(Coeff(-1)); }

Matrix Matrix::scaled(const Coeff& c) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    }
  }
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

// Subtract factor(r) * pivot row from row r for every r != pivot_row.
void eliminate_column(Matrix& m, std::size_t pivot_row, std::size_t col, Exec exec) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const auto update = [&](std::size_t r) {
    if (r == pivot_row) return;
    const Coeff factor = m(r, col);
    if (factor.is_zero()) return;
    for (std::size_t j = col; j < cols; ++j) {
      const Coeff& p = m(pivot_row, j);
      if (!p.is_zero()) m(r, j) -= factor * p;
    }
  };
  if (exec == Exec::serial) {
    for (std::size_t r = 0; r < rows; ++r) update(r);
    return;
  }
  const auto n = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(dynamic, 1) if (n > 4)
  for (std::ptrdiff_t r = 0; r < n; ++r) update(static_cast<std::size_t>(r));
}

}  // namespace

Echelon row_reduce(const Matrix& input, Exec exec) {
  Echelon out{input, {}, Coeff(1)};
  Matrix& m = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::optional<std::size_t> best;
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      if (!best || m(r, col).term_count() < m(*best, col).term_count()) best = r;
    }
    if (!best) {
      out.det = Coeff(0);
      continue;
    }
    if (*best != row) {
      m.swap_rows(*best, row);
      out.det = -out.det;
    }
    const Coeff pivot = m(row, col);
    out.det *= pivot;
    const Coeff inv = pivot.inverse();
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    }
    eliminate_column(m, row, col, exec);
    out.pivot_cols.push_back(col);
    ++row;
  }
  if (out.pivot_cols.size() < m.cols()) out.det = Coeff(0);
  return out;
}

std::size_t rank(const Matrix& m, Exec exec) { return row_reduce(m, exec).pivot_cols.size(); }

Coeff det(const Matrix& m, Exec exec) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return Coeff(1);
  return row_reduce(m, exec).det;
}

std::vector<Vector> kernel_basis(const Matrix& m, Exec exec) {
  const Echelon e = row_reduce(m, exec);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = Coeff(1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, f);
    for (const auto& x : m * v) {
      if (!x.is_zero()) throw std::logic_error("kernel vector failed back-substitution");
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs, Exec exec) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("right-hand side has wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const Echelon e = row_reduce(aug, exec);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.reduced(r, m.cols());
  const Vector check = m * x;
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != rhs[i]) throw std::logic_error("solution failed back-substitution");
  }
  return x;
}

}  // namespace qqsa::scalars
