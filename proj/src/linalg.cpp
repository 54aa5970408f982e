#include "qci/linalg.hpp"

#include <string>

namespace qci {

Matrix::Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(ErrorKind::dimension_mismatch, "from_rows needs at least one nonempty row");
  }
  const FieldDescriptor field = rows.front().front().field();
  Matrix m(field, rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      throw Error(ErrorKind::dimension_mismatch, "ragged rows in matrix literal");
    }
    for (std::size_t c = 0; c < m.cols_; ++c) {
      if (!(rows[r][c].field() == field)) {
        throw Error(ErrorKind::descriptor_mismatch, "matrix entries over different fields");
      }
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::identity(FieldDescriptor field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& x = (*this)(r, c);
      if (r == c ? !x.is_one() : !x.is_zero()) return false;
    }
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorKind::dimension_mismatch,
                "cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                    " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw Error(ErrorKind::dimension_mismatch, "matrix-vector size mismatch");
  Vector out = zero_vector(a.field_, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

Vector zero_vector(const FieldDescriptor& field, std::size_t n) {
  return Vector(n, Scalar::zero(field));
}

bool is_zero_vector(const Vector& v) {
  for (const Scalar& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

EchelonForm row_reduce(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const Scalar scale = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= scale;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return EchelonForm{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_columns.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  const EchelonForm ef = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : ef.pivot_columns) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = Scalar::one(m.field());
    for (std::size_t r = 0; r < ef.pivot_columns.size(); ++r) {
      v[ef.pivot_columns[r]] = -ef.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::dimension_mismatch, "solve: rhs size mismatch");
  Matrix augmented(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
    augmented(r, m.cols()) = b[r];
  }
  const EchelonForm ef = row_reduce(std::move(augmented));
  if (!ef.pivot_columns.empty() && ef.pivot_columns.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < ef.pivot_columns.size(); ++r) {
    x[ef.pivot_columns[r]] = ef.reduced(r, m.cols());
  }
  return x;
}

std::optional<Matrix> invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::dimension_mismatch, "invert: matrix not square");
  const std::size_t n = m.rows();
  Matrix augmented(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
    augmented(r, n + r) = Scalar::one(m.field());
  }
  const EchelonForm ef = row_reduce(std::move(augmented));
  if (ef.pivot_columns.size() < n || ef.pivot_columns[n - 1] != n - 1) return std::nullopt;
  Matrix out(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = ef.reduced(r, n + c);
  }
  return out;
}

Matrix matrix_power(const Matrix& m, unsigned exponent) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::dimension_mismatch, "power of non-square matrix");
  Matrix result = Matrix::identity(m.field(), m.rows());
  Matrix base = m;
  while (exponent != 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Matrix from_columns(const FieldDescriptor& field, std::size_t length,
                    const std::vector<Vector>& columns) {
  Matrix m(field, length, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != length) throw Error(ErrorKind::dimension_mismatch, "column length");
    for (std::size_t r = 0; r < length; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

bool same_span(const FieldDescriptor& field, std::size_t length, const std::vector<Vector>& a,
               const std::vector<Vector>& b) {
  std::vector<Vector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t rank_a = rank(from_columns(field, length, a));
  const std::size_t rank_b = rank(from_columns(field, length, b));
  const std::size_t rank_both = rank(from_columns(field, length, both));
  return rank_a == rank_both && rank_b == rank_both;
}

}  // namespace qci
