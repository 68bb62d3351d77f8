#include "hstrata/ypoly.hpp"

#include <sstream>

#include "hstrata/matrix.hpp"

namespace hstrata {

YPoly::YPoly(const FieldSpec& field, int nvars, std::vector<GradedPoly> coeffs)
    : field_(field), nvars_(nvars), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Error::Code::InvalidInput, "empty y-polynomial");
  for (const auto& c : coeffs_) {
    if (c.field() != field_) throw Error(Error::Code::FieldMismatch, "coefficient field differs");
    if (c.nvars() != nvars_)
      throw Error(Error::Code::DimensionMismatch, "coefficient variable count differs");
  }
}

YPoly YPoly::one(const FieldSpec& field, int nvars) {
  return YPoly(field, nvars, {GradedPoly::constant(field, nvars, Scalar::one(field))});
}

YPoly YPoly::linear_root(const LinearForm& t) {
  std::vector<GradedPoly> c;
  c.push_back(-t.to_poly());
  c.push_back(GradedPoly::constant(t.field(), t.dim(), Scalar::one(t.field())));
  return YPoly(t.field(), t.dim(), std::move(c));
}

bool YPoly::is_monic() const {
  const GradedPoly& lead = coeffs_.back();
  return lead == GradedPoly::constant(field_, nvars_, Scalar::one(field_));
}

YPoly YPoly::operator*(const YPoly& o) const {
  if (field_ != o.field_) throw Error(Error::Code::FieldMismatch, "y-polynomial fields differ");
  if (nvars_ != o.nvars_)
    throw Error(Error::Code::DimensionMismatch, "y-polynomial variable counts differ");
  std::vector<GradedPoly> out(static_cast<size_t>(degree() + o.degree() + 1),
                              GradedPoly(field_, nvars_));
  for (int i = 0; i <= degree(); ++i)
    for (int j = 0; j <= o.degree(); ++j)
      out[static_cast<size_t>(i + j)] =
          out[static_cast<size_t>(i + j)] +
          coeffs_[static_cast<size_t>(i)] * o.coeffs_[static_cast<size_t>(j)];
  return YPoly(field_, nvars_, std::move(out));
}

std::vector<Scalar> YPoly::specialize(std::span<const Scalar> point) const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.eval(point));
  return out;
}

std::string YPoly::str() const {
  std::ostringstream os;
  for (int i = degree(); i >= 0; --i) {
    os << "(" << coeffs_[static_cast<size_t>(i)].str() << ")";
    if (i > 0) os << "*y^" << i << " + ";
  }
  return os.str();
}

YDivRem ypoly_divrem(const YPoly& s, const LinearForm& t) {
  if (s.field() != t.field()) throw Error(Error::Code::FieldMismatch, "divrem fields differ");
  if (s.nvars() != t.dim())
    throw Error(Error::Code::DimensionMismatch, "divrem variable counts differ");
  if (s.degree() < 1) throw Error(Error::Code::InvalidInput, "divrem needs degree >= 1");
  if (!s.is_monic()) throw Error(Error::Code::InvalidInput, "divrem needs a monic dividend");

  const int r = s.degree();
  const GradedPoly tp = t.to_poly();
  std::vector<GradedPoly> q(static_cast<size_t>(r), GradedPoly(s.field(), s.nvars()));
  q[static_cast<size_t>(r - 1)] = GradedPoly::constant(s.field(), s.nvars(), Scalar::one(s.field()));
  for (int i = r - 1; i >= 1; --i)
    q[static_cast<size_t>(i - 1)] = s.coeff(i) + tp * q[static_cast<size_t>(i)];
  GradedPoly rem = s.coeff(0) + tp * q[0];
  return YDivRem{YPoly(s.field(), s.nvars(), std::move(q)), std::move(rem)};
}

LinearForm interpolate_linear(const std::vector<std::pair<std::vector<Scalar>, Scalar>>& samples,
                              const FieldSpec& field, int dim) {
  if (static_cast<int>(samples.size()) < dim)
    throw Error(Error::Code::RankDeficient, "fewer samples than variables");
  for (const auto& [pt, val] : samples) {
    if (static_cast<int>(pt.size()) != dim)
      throw Error(Error::Code::DimensionMismatch, "sample point length != dim");
    (void)val;
  }

  // Row-reduce the full augmented system; a pivot in the value column means
  // no linear form fits.
  const int m = static_cast<int>(samples.size());
  Matrix aug(field, m, dim + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < dim; ++j) aug.at(i, j) = samples[static_cast<size_t>(i)].first[static_cast<size_t>(j)];
    aug.at(i, dim) = samples[static_cast<size_t>(i)].second;
  }
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col <= dim && rank < m; ++col) {
    int pivot = -1;
    for (int i = rank; i < m; ++i)
      if (!aug.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j <= dim; ++j) std::swap(aug.at(pivot, j), aug.at(rank, j));
    const Scalar inv = aug.at(rank, col).inverse();
    for (int j = col; j <= dim; ++j) aug.at(rank, j) = aug.at(rank, j) * inv;
    for (int i = 0; i < m; ++i) {
      if (i == rank || aug.at(i, col).is_zero()) continue;
      const Scalar f = aug.at(i, col);
      for (int j = col; j <= dim; ++j) aug.at(i, j) = aug.at(i, j) - f * aug.at(rank, j);
    }
    pivot_col.push_back(col);
    ++rank;
  }

  const bool value_pivot = !pivot_col.empty() && pivot_col.back() == dim;
  const int point_rank = static_cast<int>(pivot_col.size()) - (value_pivot ? 1 : 0);
  if (point_rank < dim) throw Error(Error::Code::RankDeficient, "sample points do not span");
  if (value_pivot) throw Error(Error::Code::Inconsistent, "no linear form fits the samples");

  std::vector<Scalar> coeffs(static_cast<size_t>(dim), Scalar::zero(field));
  for (int i = 0; i < dim; ++i) coeffs[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = aug.at(i, dim);
  return LinearForm(field, std::move(coeffs));
}

}  // namespace hstrata
