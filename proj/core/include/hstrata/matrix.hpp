#ifndef HSTRATA_MATRIX_HPP
#define HSTRATA_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "hstrata/scalar.hpp"

namespace hstrata {

// Dense matrix over an exact field; exact Gaussian elimination throughout.
class Matrix {
public:
  Matrix(const FieldSpec& field, int rows, int cols)
      : field_(field),
        rows_(rows),
        cols_(cols),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Scalar::zero(field)) {
    if (rows < 0 || cols < 0) throw Error(Error::Code::InvalidInput, "negative matrix size");
  }

  static Matrix identity(const FieldSpec& field, int n);
  static Matrix from_rows(const FieldSpec& field, const std::vector<std::vector<Scalar>>& rows);

  const FieldSpec& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& at(int i, int j) { return a_[idx(i, j)]; }
  const Scalar& at(int i, int j) const { return a_[idx(i, j)]; }

  Matrix operator*(const Matrix& o) const;
  std::vector<Scalar> operator*(const std::vector<Scalar>& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Scalar trace() const;
  int rank() const;
  std::optional<Matrix> inverse() const;
  bool is_identity() const;

  // Unique solution of A x = b for square nonsingular A; nullopt when A is
  // singular.
  static std::optional<std::vector<Scalar>> solve(const Matrix& A, const std::vector<Scalar>& b);

  // Canonical key for hashing/dedup.
  std::string key() const;

private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
  }
  void check_same(const Matrix& o) const;

  FieldSpec field_;
  int rows_, cols_;
  std::vector<Scalar> a_;
};

}  // namespace hstrata

#endif
