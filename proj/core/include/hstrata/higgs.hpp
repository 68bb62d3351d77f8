#ifndef HSTRATA_HIGGS_HPP
#define HSTRATA_HIGGS_HPP

#include <vector>

#include "hstrata/hitchin.hpp"
#include "hstrata/matrix.hpp"

namespace hstrata {

// A twisted Higgs field on the trivialized bundle: d square matrices
// A_1, ..., A_d of size r x r that commute pairwise, standing for the matrix
// of linear forms sum_k A_k x_k. Rank 0 is permitted as the direct-sum
// neutral element.
class HiggsField {
public:
  // Validates pairwise commutation; throws NotHiggs naming the first
  // non-commuting pair (1-based).
  static HiggsField validated(const FieldSpec& field, std::vector<Matrix> components);
  static HiggsField empty(const FieldSpec& field, int dim);

  const FieldSpec& field() const { return field_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }
  const Matrix& component(int k) const { return components_[static_cast<size_t>(k)]; }
  const std::vector<Matrix>& components() const { return components_; }

  // Entries of sum_k A_k x_k, row-major, as degree-1 polynomials.
  std::vector<GradedPoly> symbol_matrix() const;

  bool operator==(const HiggsField& o) const {
    return field_ == o.field_ && rank_ == o.rank_ && dim_ == o.dim_ &&
           components_ == o.components_;
  }

private:
  HiggsField(const FieldSpec& field, int rank, int dim, std::vector<Matrix> components)
      : field_(field), rank_(rank), dim_(dim), components_(std::move(components)) {}

  FieldSpec field_;
  int rank_;
  int dim_;
  std::vector<Matrix> components_;
};

struct PowerTraces {
  // traces[i-1] = trace of the i-th power, homogeneous of degree i.
  std::vector<GradedPoly> traces;
};

PowerTraces power_traces(const HiggsField& theta);

// Characteristic polynomial coefficients (s_1, ..., s_r) with
// det(y I - M) = y^r - s_1 y^{r-1} + ... + (-1)^r s_r, via the division-free
// Berkowitz algorithm over the polynomial ring.
HitchinPoint char_poly(const HiggsField& theta);

// Faddeev-LeVerrier cross-check path; needs characteristic 0 or > r.
HitchinPoint char_poly_faddeev(const HiggsField& theta);

enum class NewtonDirection { PowerToElementary, ElementaryToPower };

// Newton's identities between power sums and elementary symmetric tuples.
// Throws CharTooSmall when 0 < characteristic <= r.
std::vector<GradedPoly> newton_convert(const std::vector<GradedPoly>& input,
                                       NewtonDirection direction);

// Block-diagonal direct sum; ranks add.
HiggsField direct_sum(const HiggsField& a, const HiggsField& b);

}  // namespace hstrata

#endif
