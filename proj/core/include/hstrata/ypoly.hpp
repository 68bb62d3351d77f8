#ifndef HSTRATA_YPOLY_HPP
#define HSTRATA_YPOLY_HPP

#include <utility>
#include <vector>

#include "hstrata/graded_poly.hpp"

namespace hstrata {

// Polynomial in the spectral variable y with GradedPoly coefficients,
// coeff(i) = coefficient of y^i. The affine layer keeps these monic.
class YPoly {
public:
  YPoly(const FieldSpec& field, int nvars, std::vector<GradedPoly> coeffs);

  static YPoly one(const FieldSpec& field, int nvars);
  // y - t
  static YPoly linear_root(const LinearForm& t);

  const FieldSpec& field() const { return field_; }
  int nvars() const { return nvars_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const GradedPoly& coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }
  const std::vector<GradedPoly>& coeffs() const { return coeffs_; }
  bool is_monic() const;

  YPoly operator*(const YPoly& o) const;
  bool operator==(const YPoly& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const YPoly& o) const { return !(*this == o); }

  // Specialization at a point: returns the scalar coefficient vector,
  // index = y-degree.
  std::vector<Scalar> specialize(std::span<const Scalar> point) const;

  std::string str() const;

private:
  FieldSpec field_;
  int nvars_;
  std::vector<GradedPoly> coeffs_;
};

struct YDivRem {
  YPoly quotient;
  GradedPoly remainder;
};

// Synthetic division of a monic y-polynomial by (y - t). remainder == 0
// certifies that (y - t) divides s exactly.
YDivRem ypoly_divrem(const YPoly& s, const LinearForm& t);

// Reconstructs the unique linear form through >= dim samples by exact linear
// solving; extra samples are verified. Throws RankDeficient when the sample
// points do not span, Inconsistent when no linear form fits.
LinearForm interpolate_linear(const std::vector<std::pair<std::vector<Scalar>, Scalar>>& samples,
                              const FieldSpec& field, int dim);

}  // namespace hstrata

#endif
