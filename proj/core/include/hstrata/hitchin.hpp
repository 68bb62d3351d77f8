#ifndef HSTRATA_HITCHIN_HPP
#define HSTRATA_HITCHIN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hstrata/rng.hpp"
#include "hstrata/ypoly.hpp"

namespace hstrata {

// A point (s_1, ..., s_r) of the Hitchin base: s_i homogeneous of degree i.
// The attached monic y-polynomial is y^r - s_1 y^{r-1} + ... + (-1)^r s_r.
class HitchinPoint {
public:
  HitchinPoint(const FieldSpec& field, int nvars, std::vector<GradedPoly> coeffs);

  const FieldSpec& field() const { return field_; }
  int nvars() const { return nvars_; }
  int r() const { return static_cast<int>(coeffs_.size()); }
  // 1-based: s_i.
  const GradedPoly& coeff(int i) const { return coeffs_[static_cast<size_t>(i - 1)]; }
  const std::vector<GradedPoly>& coeffs() const { return coeffs_; }

  YPoly to_ypoly() const;
  static HitchinPoint from_ypoly(const YPoly& p);

  bool operator==(const HitchinPoint& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const HitchinPoint& o) const { return !(*this == o); }

private:
  FieldSpec field_;
  int nvars_;
  std::vector<GradedPoly> coeffs_;
};

// Coefficient tuple of the y-polynomial product; degree adds.
HitchinPoint hb_product(const HitchinPoint& a, const HitchinPoint& b);

// A point [s_0 : s_1 : ... : s_r] of the projective completion, s_0 a scalar.
// Stored normalized: the tuple is scaled so the leading coefficient of the
// first nonzero coordinate is 1, making equality structural.
class ProjHitchinPoint {
public:
  ProjHitchinPoint(const FieldSpec& field, int nvars, const Scalar& s0,
                   std::vector<GradedPoly> coeffs);
  static ProjHitchinPoint from_affine(const HitchinPoint& p);

  const FieldSpec& field() const { return field_; }
  int nvars() const { return nvars_; }
  int r() const { return static_cast<int>(coeffs_.size()); }
  const Scalar& s0() const { return s0_; }
  const GradedPoly& coeff(int i) const { return coeffs_[static_cast<size_t>(i - 1)]; }

  bool in_affine_chart() const { return !s0_.is_zero(); }
  // Requires s0 != 0.
  HitchinPoint to_affine() const;

  bool operator==(const ProjHitchinPoint& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && s0_ == o.s0_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const ProjHitchinPoint& o) const { return !(*this == o); }

private:
  void normalize();

  FieldSpec field_;
  int nvars_;
  Scalar s0_;
  std::vector<GradedPoly> coeffs_;
};

// Homogenized product on the projective completion; restricting to the charts
// s0 = t0 = 1 recovers hb_product. Throws ZeroPoint on an all-zero input.
ProjHitchinPoint proj_product(const ProjHitchinPoint& a, const ProjHitchinPoint& b);

// Multiset of linear forms with multiplicities, kept sorted canonically.
class RootMultiset {
public:
  RootMultiset(const FieldSpec& field, int nvars) : field_(field), nvars_(nvars) {}

  void add(const LinearForm& t, int multiplicity = 1);
  int size() const;  // with multiplicity
  const std::vector<std::pair<LinearForm, int>>& entries() const { return entries_; }
  const FieldSpec& field() const { return field_; }
  int nvars() const { return nvars_; }

  // prod (y - t)^mult as a Hitchin point.
  HitchinPoint product() const;

  bool operator==(const RootMultiset& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && entries_ == o.entries_;
  }
  bool operator!=(const RootMultiset& o) const { return !(*this == o); }

private:
  FieldSpec field_;
  int nvars_;
  std::vector<std::pair<LinearForm, int>> entries_;
};

struct SplitConfig {
  uint64_t seed = 0;
  // Total sample-point draws allowed per call; 0 forces Inconclusive on any
  // input that needs sampling.
  int max_retries = 32;
  // Cap on exhaustive linear-form enumeration (prime fields): q^d candidates.
  uint64_t enum_bound = 10000;
};

enum class SplitVerdict { Split, NotSplit, Inconclusive };

struct SplitResult {
  SplitVerdict verdict;
  // Populated iff verdict == Split.
  std::optional<RootMultiset> roots;
};

// Decides total splitting into linear factors over the base field.
// Las Vegas specialize-and-interpolate with exact-division certification:
// Split and NotSplit are certified, Inconclusive only when the draw budget
// runs out.
SplitResult total_split(const HitchinPoint& s, const SplitConfig& cfg = {});

struct SplitProfile {
  RootMultiset linear_part;
  int residual_degree = 0;
  // True when the residual is certified irreducible (trivially when it is
  // empty); over Q a residual of degree >= 2 is never certified.
  bool residual_certified = false;
};

// Maximal linear-factor extraction plus residual degree.
SplitProfile split_profile(const HitchinPoint& s, const SplitConfig& cfg = {});

// Exhaustive divide-test over all q^d linear forms; the independent
// complete-enumeration route for prime fields. Throws BoundExceeded when
// q^d exceeds the bound and NotPrimeField over Q.
SplitResult brute_split(const HitchinPoint& s, uint64_t enum_bound = 10000);

// --- univariate helpers (exposed for tests) ---

struct UnivariateRoots {
  // (root, multiplicity), sorted canonically.
  std::vector<std::pair<Scalar, int>> roots;
  int total = 0;  // with multiplicity
  // False when the divisor search had to give up (oversized integers); the
  // splitting engine treats that draw as failed.
  bool complete = false;
};

// All roots in the base field of a monic univariate polynomial
// (coeffs[i] = coefficient of y^i), with multiplicity. Complete over F_p by
// enumeration and over Q by divisor search on the integer-scaled polynomial.
UnivariateRoots univariate_roots(const std::vector<Scalar>& monic_coeffs, const FieldSpec& field);

// Irreducibility of a monic univariate polynomial over F_p by trial division
// up to degree/2; nullopt when the search space exceeds the bound.
std::optional<bool> univariate_irreducible_fp(const std::vector<Scalar>& monic_coeffs,
                                              const FieldSpec& field, uint64_t bound = 10000);

}  // namespace hstrata

#endif
