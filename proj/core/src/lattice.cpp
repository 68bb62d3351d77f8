#include "hstrata/lattice.hpp"

#include <algorithm>

#include "hstrata/error.hpp"

namespace hstrata {

int rat_rank(RatMat m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const mpq_class inv = 1 / m[rank][col];
    for (size_t j = col; j < cols; ++j) m[rank][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      const mpq_class f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

RatMat rat_left_nullspace(const RatMat& m) {
  if (m.empty()) return {};
  const size_t rows = m.size(), cols = m[0].size();
  // Row-reduce [M | I]; rows whose M-block vanishes carry left-nullspace
  // combinations in the I-block.
  RatMat a(rows, RatVec(cols + rows, 0));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
    a[i][cols + i] = 1;
  }
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const mpq_class inv = 1 / a[rank][col];
    for (size_t j = 0; j < cols + rows; ++j) a[rank][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const mpq_class f = a[i][col];
      for (size_t j = 0; j < cols + rows; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  RatMat null;
  for (size_t i = rank; i < rows; ++i)
    null.emplace_back(a[i].begin() + static_cast<long>(cols), a[i].end());
  return null;
}

bool integer_solvable(IntMat v, std::vector<mpz_class> w) {
  if (v.empty()) return true;
  const size_t rows = v.size(), cols = v[0].size();
  if (w.size() != rows) throw Error(Error::Code::DimensionMismatch, "rhs length mismatch");

  // Column echelon via unimodular column operations (swap, negate, subtract
  // integer multiples), tracking nothing: solvability only needs the echelon
  // form and w.
  size_t lead = 0;  // next free column
  std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
  for (size_t row = 0; row < rows && lead < cols; ++row) {
    // Reduce entries v[row][lead..] to a single nonzero gcd at column lead.
    for (;;) {
      size_t nonzero = cols;
      size_t count = 0;
      mpz_class min_abs = 0;
      size_t min_col = cols;
      for (size_t j = lead; j < cols; ++j) {
        if (v[row][j] == 0) continue;
        ++count;
        nonzero = j;
        mpz_class a = abs(v[row][j]);
        if (min_col == cols || a < min_abs) {
          min_abs = a;
          min_col = j;
        }
      }
      if (count == 0) break;  // row has no pivot; move to next row
      if (count == 1) {
        if (nonzero != lead)
          for (size_t i = 0; i < rows; ++i) std::swap(v[i][nonzero], v[i][lead]);
        break;
      }
      // Reduce all other columns modulo the minimal one.
      for (size_t j = lead; j < cols; ++j) {
        if (j == min_col || v[row][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v[row][j].get_mpz_t(), v[row][min_col].get_mpz_t());
        if (q != 0)
          for (size_t i = 0; i < rows; ++i) v[i][j] -= q * v[i][min_col];
      }
    }
    if (v[row][lead] != 0) {
      if (v[row][lead] < 0)
        for (size_t i = 0; i < rows; ++i) v[i][lead] = -v[i][lead];
      pivots.emplace_back(row, lead);
      ++lead;
    }
  }

  // Forward substitution: unknowns for non-pivot columns are 0.
  std::vector<mpz_class> x(cols, 0);
  size_t pi = 0;
  for (size_t row = 0; row < rows; ++row) {
    mpz_class acc = 0;
    for (size_t j = 0; j < cols; ++j) acc += v[row][j] * x[j];
    const mpz_class need = w[row] - acc;
    if (pi < pivots.size() && pivots[pi].first == row) {
      const size_t col = pivots[pi].second;
      if (!mpz_divisible_p(need.get_mpz_t(), v[row][col].get_mpz_t())) return false;
      x[col] = need / v[row][col];
      ++pi;
    } else {
      if (need != 0) return false;
    }
  }
  return true;
}

RatMat rat_mat_mul(const RatMat& a, const RatMat& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat out(n, RatVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

RatVec rat_mat_vec(const RatMat& a, const RatVec& v) {
  RatVec out(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

RatMat rat_identity(int n) {
  RatMat out(static_cast<size_t>(n), RatVec(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return out;
}

}  // namespace hstrata
