#include "hstrata/higgs.hpp"

namespace hstrata {

HiggsField HiggsField::validated(const FieldSpec& field, std::vector<Matrix> components) {
  if (components.empty())
    throw Error(Error::Code::InvalidInput, "a Higgs field needs at least one component");
  const int r = components[0].rows();
  for (const auto& a : components) {
    if (a.field() != field) throw Error(Error::Code::FieldMismatch, "component field differs");
    if (!a.is_square() || a.rows() != r)
      throw Error(Error::Code::DimensionMismatch, "components must be square of equal size");
  }
  const int d = static_cast<int>(components.size());
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      const Matrix& aj = components[static_cast<size_t>(j)];
      const Matrix& ak = components[static_cast<size_t>(k)];
      if (aj * ak != ak * aj)
        throw Error(Error::Code::NotHiggs,
                    "NotHiggs(" + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
    }
  return HiggsField(field, r, d, std::move(components));
}

HiggsField HiggsField::empty(const FieldSpec& field, int dim) {
  if (dim < 1) throw Error(Error::Code::InvalidInput, "dim must be >= 1");
  std::vector<Matrix> comps(static_cast<size_t>(dim), Matrix(field, 0, 0));
  return HiggsField(field, 0, dim, std::move(comps));
}

std::vector<GradedPoly> HiggsField::symbol_matrix() const {
  std::vector<GradedPoly> m(static_cast<size_t>(rank_) * static_cast<size_t>(rank_),
                            GradedPoly(field_, dim_));
  for (int k = 0; k < dim_; ++k) {
    const GradedPoly xk = GradedPoly::variable(field_, dim_, k);
    const Matrix& a = components_[static_cast<size_t>(k)];
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) {
        if (a.at(i, j).is_zero()) continue;
        auto& entry = m[static_cast<size_t>(i) * static_cast<size_t>(rank_) + static_cast<size_t>(j)];
        entry = entry + xk.scaled(a.at(i, j));
      }
  }
  return m;
}

namespace {

using PolyMat = std::vector<GradedPoly>;

const GradedPoly& ent(const PolyMat& m, int n, int i, int j) {
  return m[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
}

PolyMat mat_mul(const PolyMat& a, const PolyMat& b, int n, const GradedPoly& zero) {
  PolyMat out(static_cast<size_t>(n) * static_cast<size_t>(n), zero);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const GradedPoly& aik = ent(a, n, i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        auto& o = out[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
        o = o + aik * ent(b, n, k, j);
      }
    }
  return out;
}

GradedPoly mat_trace(const PolyMat& a, int n, const GradedPoly& zero) {
  GradedPoly t = zero;
  for (int i = 0; i < n; ++i) t = t + ent(a, n, i, i);
  return t;
}

// Coefficient vector c_0..c_n of det(yI - A), c_0 = 1 (c_i multiplies
// y^{n-i}), computed division-free via Toeplitz products over the trailing
// principal submatrices.
std::vector<GradedPoly> berkowitz(const PolyMat& a, int n, const GradedPoly& zero,
                                  const GradedPoly& one) {
  std::vector<GradedPoly> vec{one};
  for (int k = n - 1; k >= 0; --k) {
    const int m = n - k;  // size of the submatrix starting at (k, k)
    // Toeplitz column: 1, -a_kk, -(R C), -(R B C), ..., length m + 1.
    std::vector<GradedPoly> col;
    col.reserve(static_cast<size_t>(m) + 1);
    col.push_back(one);
    col.push_back(-ent(a, n, k, k));
    if (m >= 2) {
      std::vector<GradedPoly> w;  // initially C, then B C, B^2 C, ...
      w.reserve(static_cast<size_t>(m) - 1);
      for (int i = k + 1; i < n; ++i) w.push_back(ent(a, n, i, k));
      for (int step = 2; step <= m; ++step) {
        GradedPoly rb = zero;
        for (int j = k + 1; j < n; ++j)
          rb = rb + ent(a, n, k, j) * w[static_cast<size_t>(j - k - 1)];
        col.push_back(-rb);
        if (step == m) break;
        std::vector<GradedPoly> w2(w.size(), zero);
        for (int i = k + 1; i < n; ++i) {
          GradedPoly acc = zero;
          for (int j = k + 1; j < n; ++j)
            acc = acc + ent(a, n, i, j) * w[static_cast<size_t>(j - k - 1)];
          w2[static_cast<size_t>(i - k - 1)] = acc;
        }
        w = std::move(w2);
      }
    }
    std::vector<GradedPoly> next(static_cast<size_t>(m) + 1, zero);
    for (size_t i = 0; i < next.size(); ++i)
      for (size_t j = 0; j < vec.size(); ++j)
        if (i >= j && i - j < col.size()) next[i] = next[i] + col[i - j] * vec[j];
    vec = std::move(next);
  }
  return vec;
}

HitchinPoint hitchin_from_charpoly_coeffs(const std::vector<GradedPoly>& c, const FieldSpec& field,
                                          int nvars) {
  // det(yI - M) = sum c_i y^{n-i}; the stored s_i is (-1)^i c_i.
  const int r = static_cast<int>(c.size()) - 1;
  std::vector<GradedPoly> s;
  s.reserve(static_cast<size_t>(r));
  for (int i = 1; i <= r; ++i) {
    GradedPoly v = c[static_cast<size_t>(i)];
    if (i % 2 == 1) v = -v;
    s.push_back(std::move(v));
  }
  return HitchinPoint(field, nvars, std::move(s));
}

}  // namespace

PowerTraces power_traces(const HiggsField& theta) {
  const int r = theta.rank();
  if (r < 1) throw Error(Error::Code::InvalidInput, "power traces need rank >= 1");
  const GradedPoly zero(theta.field(), theta.dim());
  const PolyMat m = theta.symbol_matrix();
  PowerTraces out;
  PolyMat pw = m;
  for (int i = 1; i <= r; ++i) {
    out.traces.push_back(mat_trace(pw, r, zero));
    if (i < r) pw = mat_mul(pw, m, r, zero);
  }
  return out;
}

HitchinPoint char_poly(const HiggsField& theta) {
  const int r = theta.rank();
  if (r < 1) throw Error(Error::Code::InvalidInput, "characteristic polynomial needs rank >= 1");
  const GradedPoly zero(theta.field(), theta.dim());
  const GradedPoly one = GradedPoly::constant(theta.field(), theta.dim(), Scalar::one(theta.field()));
  const auto coeffs = berkowitz(theta.symbol_matrix(), r, zero, one);
  return hitchin_from_charpoly_coeffs(coeffs, theta.field(), theta.dim());
}

HitchinPoint char_poly_faddeev(const HiggsField& theta) {
  const int r = theta.rank();
  if (r < 1) throw Error(Error::Code::InvalidInput, "characteristic polynomial needs rank >= 1");
  const unsigned long p = theta.field().characteristic();
  if (p != 0 && p <= static_cast<unsigned long>(r))
    throw Error(Error::Code::CharTooSmall,
                "Faddeev-LeVerrier needs characteristic 0 or > " + std::to_string(r));
  const FieldSpec& field = theta.field();
  const GradedPoly zero(field, theta.dim());
  const PolyMat a = theta.symbol_matrix();

  // c[n] = 1 downward: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::vector<GradedPoly> c(static_cast<size_t>(r) + 1, zero);
  c[static_cast<size_t>(r)] = GradedPoly::constant(field, theta.dim(), Scalar::one(field));
  PolyMat m(static_cast<size_t>(r) * static_cast<size_t>(r), zero);
  for (int k = 1; k <= r; ++k) {
    PolyMat am = mat_mul(a, m, r, zero);
    for (int i = 0; i < r; ++i) {
      auto& diag = am[static_cast<size_t>(i) * static_cast<size_t>(r) + static_cast<size_t>(i)];
      diag = diag + c[static_cast<size_t>(r - k + 1)];
    }
    m = std::move(am);
    const PolyMat prod = mat_mul(a, m, r, zero);
    const Scalar invk = Scalar(field, static_cast<long>(k)).inverse();
    c[static_cast<size_t>(r - k)] = (-mat_trace(prod, r, zero)).scaled(invk);
  }
  // Reverse into c_0..c_r with c_0 = 1: coefficient of y^{r-i} is c[r-i].
  std::vector<GradedPoly> ordered;
  ordered.reserve(c.size());
  for (int i = 0; i <= r; ++i) ordered.push_back(c[static_cast<size_t>(r - i)]);
  return hitchin_from_charpoly_coeffs(ordered, field, theta.dim());
}

std::vector<GradedPoly> newton_convert(const std::vector<GradedPoly>& input,
                                       NewtonDirection direction) {
  if (input.empty()) throw Error(Error::Code::InvalidInput, "empty tuple");
  const FieldSpec field = input[0].field();
  const int nvars = input[0].nvars();
  const int r = static_cast<int>(input.size());
  const unsigned long p = field.characteristic();
  if (p != 0 && p <= static_cast<unsigned long>(r))
    throw Error(Error::Code::CharTooSmall,
                "Newton conversion needs characteristic 0 or > " + std::to_string(r));
  const GradedPoly zero(field, nvars);
  const GradedPoly one = GradedPoly::constant(field, nvars, Scalar::one(field));

  std::vector<GradedPoly> out;
  out.reserve(input.size());
  if (direction == NewtonDirection::PowerToElementary) {
    std::vector<GradedPoly> e{one};  // e_0
    for (int k = 1; k <= r; ++k) {
      GradedPoly acc = zero;
      for (int i = 1; i <= k; ++i) {
        GradedPoly term = e[static_cast<size_t>(k - i)] * input[static_cast<size_t>(i - 1)];
        if (i % 2 == 0) term = -term;
        acc = acc + term;
      }
      e.push_back(acc.scaled(Scalar(field, static_cast<long>(k)).inverse()));
    }
    out.assign(e.begin() + 1, e.end());
  } else {
    std::vector<GradedPoly> pvec;  // p_1..p_k as they are produced
    for (int k = 1; k <= r; ++k) {
      GradedPoly acc = zero;
      for (int i = 1; i <= k - 1; ++i) {
        GradedPoly term = input[static_cast<size_t>(i - 1)] * pvec[static_cast<size_t>(k - i - 1)];
        if (i % 2 == 0) term = -term;
        acc = acc + term;
      }
      GradedPoly last = input[static_cast<size_t>(k - 1)].scaled(Scalar(field, static_cast<long>(k)));
      if (k % 2 == 0) last = -last;
      pvec.push_back(acc + last);
    }
    out = std::move(pvec);
  }
  return out;
}

HiggsField direct_sum(const HiggsField& a, const HiggsField& b) {
  if (a.field() != b.field()) throw Error(Error::Code::FieldMismatch, "summand fields differ");
  if (a.dim() != b.dim()) throw Error(Error::Code::DimensionMismatch, "summand dims differ");
  if (a.rank() == 0) return b;
  if (b.rank() == 0) return a;
  const int r = a.rank() + b.rank();
  std::vector<Matrix> comps;
  comps.reserve(static_cast<size_t>(a.dim()));
  for (int k = 0; k < a.dim(); ++k) {
    Matrix m(a.field(), r, r);
    for (int i = 0; i < a.rank(); ++i)
      for (int j = 0; j < a.rank(); ++j) m.at(i, j) = a.component(k).at(i, j);
    for (int i = 0; i < b.rank(); ++i)
      for (int j = 0; j < b.rank(); ++j)
        m.at(a.rank() + i, a.rank() + j) = b.component(k).at(i, j);
    comps.push_back(std::move(m));
  }
  return HiggsField::validated(a.field(), std::move(comps));
}

}  // namespace hstrata
