#include "hstrata/matrix.hpp"

#include <sstream>

namespace hstrata {

Matrix Matrix::identity(const FieldSpec& field, int n) {
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, const std::vector<std::vector<Scalar>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(field, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
      throw Error(Error::Code::DimensionMismatch, "ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

void Matrix::check_same(const Matrix& o) const {
  if (field_ != o.field_) throw Error(Error::Code::FieldMismatch, "matrix fields differ");
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_same(o);
  if (cols_ != o.rows_) throw Error(Error::Code::DimensionMismatch, "matrix product shape");
  Matrix out(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        out.at(i, j) = out.at(i, j) + at(i, k) * o.at(k, j);
    }
  return out;
}

std::vector<Scalar> Matrix::operator*(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw Error(Error::Code::DimensionMismatch, "matrix-vector shape");
  std::vector<Scalar> out(static_cast<size_t>(rows_), Scalar::zero(field_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      out[static_cast<size_t>(i)] = out[static_cast<size_t>(i)] + at(i, j) * v[static_cast<size_t>(j)];
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same(o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(Error::Code::DimensionMismatch, "matrix sum shape");
  Matrix out(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same(o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(Error::Code::DimensionMismatch, "matrix difference shape");
  Matrix out(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw Error(Error::Code::DimensionMismatch, "trace of non-square matrix");
  Scalar t = Scalar::zero(field_);
  for (int i = 0; i < rows_; ++i) t = t + at(i, i);
  return t;
}

int Matrix::rank() const {
  Matrix w = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows_; ++i)
      if (!w.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(w.at(pivot, j), w.at(rank, j));
    const Scalar inv = w.at(rank, col).inverse();
    for (int j = col; j < cols_; ++j) w.at(rank, j) = w.at(rank, j) * inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == rank || w.at(i, col).is_zero()) continue;
      const Scalar f = w.at(i, col);
      for (int j = col; j < cols_; ++j)
        w.at(i, j) = w.at(i, j) - f * w.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::optional<Matrix> Matrix::inverse() const {
  if (!is_square()) throw Error(Error::Code::DimensionMismatch, "inverse of non-square matrix");
  const int n = rows_;
  Matrix w = *this;
  Matrix inv = identity(field_, n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (!w.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      std::swap(w.at(pivot, j), w.at(col, j));
      std::swap(inv.at(pivot, j), inv.at(col, j));
    }
    const Scalar f = w.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      w.at(col, j) = w.at(col, j) * f;
      inv.at(col, j) = inv.at(col, j) * f;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || w.at(i, col).is_zero()) continue;
      const Scalar g = w.at(i, col);
      for (int j = 0; j < n; ++j) {
        w.at(i, j) = w.at(i, j) - g * w.at(col, j);
        inv.at(i, j) = inv.at(i, j) - g * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

std::optional<std::vector<Scalar>> Matrix::solve(const Matrix& A, const std::vector<Scalar>& b) {
  auto inv = A.inverse();
  if (!inv) return std::nullopt;
  return *inv * b;
}

std::string Matrix::key() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << ":";
  for (const auto& v : a_) os << v.str() << ",";
  return os.str();
}

}  // namespace hstrata
