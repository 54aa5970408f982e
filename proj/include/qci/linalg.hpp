#ifndef QCI_LINALG_HPP
#define QCI_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "qci/scalars.hpp"

namespace qci {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols);
  /// Throws on ragged rows or mixed fields.  An empty row list is rejected
  /// since the field could not be inferred.
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix identity(FieldDescriptor field, std::size_t n);

  const FieldDescriptor& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;

  bool is_identity() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  FieldDescriptor field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

Vector zero_vector(const FieldDescriptor& field, std::size_t n);
bool is_zero_vector(const Vector& v);

/// Reduced row echelon form with deterministic pivoting: columns scanned
/// left to right, the first nonzero entry at or below the current row is
/// the pivot.
struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};
EchelonForm row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of the right kernel, one vector per free column in ascending order;
/// each vector has a 1 at its free column and 0 at the other free columns.
std::vector<Vector> nullspace(const Matrix& m);

std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> invert(const Matrix& m);
Matrix matrix_power(const Matrix& m, unsigned exponent);

/// Matrix whose columns are the given vectors (all of equal length).
Matrix from_columns(const FieldDescriptor& field, std::size_t length,
                    const std::vector<Vector>& columns);

/// True when the two families span the same subspace.
bool same_span(const FieldDescriptor& field, std::size_t length, const std::vector<Vector>& a,
               const std::vector<Vector>& b);

}  // namespace qci

#endif  // QCI_LINALG_HPP
