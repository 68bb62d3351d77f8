#ifndef HSTRATA_GRADED_POLY_HPP
#define HSTRATA_GRADED_POLY_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "hstrata/scalar.hpp"

namespace hstrata {

using Exponents = std::vector<uint32_t>;

inline uint32_t exp_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), uint32_t{0});
}

// Graded-lexicographic term order: total degree first, then lexicographic on
// the exponent vector. Term maps keyed by this order serialize canonically.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const uint32_t da = exp_degree(a), db = exp_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

class LinearForm;

// Sparse multivariate polynomial over an exact field. No zero coefficients
// are ever stored, so equality is structural.
class GradedPoly {
public:
  using TermMap = std::map<Exponents, Scalar, GrlexLess>;

  GradedPoly(const FieldSpec& field, int nvars) : field_(field), nvars_(nvars) {
    if (nvars < 1) throw Error(Error::Code::InvalidInput, "nvars must be >= 1");
  }

  static GradedPoly constant(const FieldSpec& field, int nvars, const Scalar& c);
  static GradedPoly variable(const FieldSpec& field, int nvars, int index);
  static GradedPoly monomial(const FieldSpec& field, int nvars, Exponents exps,
                             const Scalar& c);

  const FieldSpec& field() const { return field_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int total_degree() const;
  // The zero polynomial is homogeneous of every degree.
  bool is_homogeneous(int degree) const;
  Scalar coeff(const Exponents& e) const;
  // Coefficient of the grlex-least term; throws on the zero polynomial.
  Scalar leading_coeff() const;

  GradedPoly operator+(const GradedPoly& o) const;
  GradedPoly operator-(const GradedPoly& o) const;
  GradedPoly operator*(const GradedPoly& o) const;
  GradedPoly operator-() const;
  GradedPoly scaled(const Scalar& c) const;

  bool operator==(const GradedPoly& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const GradedPoly& o) const { return !(*this == o); }

  Scalar eval(std::span<const Scalar> point) const;
  // Simultaneous substitution x_j -> images[j]; the images must be linear
  // forms on a common variable set.
  GradedPoly substitute(const std::vector<LinearForm>& images) const;

  void add_term(const Exponents& e, const Scalar& c);

  std::string str() const;

private:
  void check_compatible(const GradedPoly& o) const;

  FieldSpec field_;
  int nvars_;
  TermMap terms_;
};

// A homogeneous degree-1 polynomial, kept as its coefficient vector.
class LinearForm {
public:
  LinearForm(const FieldSpec& field, std::vector<Scalar> coeffs);
  static LinearForm zero(const FieldSpec& field, int dim);

  const FieldSpec& field() const { return field_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }
  const Scalar& coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  GradedPoly to_poly() const;
  // Recovers a linear form from a polynomial that is zero or homogeneous of
  // degree 1; throws otherwise.
  static LinearForm from_poly(const GradedPoly& p);

  Scalar eval(std::span<const Scalar> point) const;

  LinearForm operator-() const;

  bool operator==(const LinearForm& o) const {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const LinearForm& o) const { return !(*this == o); }
  // Lexicographic on coefficients; canonical order for multisets/reports.
  bool operator<(const LinearForm& o) const;

  std::string str() const;

private:
  FieldSpec field_;
  std::vector<Scalar> coeffs_;
};

}  // namespace hstrata

#endif
