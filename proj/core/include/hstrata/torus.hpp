#ifndef HSTRATA_TORUS_HPP
#define HSTRATA_TORUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hstrata/lattice.hpp"

namespace hstrata {

// An affine automorphism x -> A x + b of the torus R^n / Z^n: A a lattice
// automorphism (integer, det +-1), b taken modulo 1 with entries in [0, 1).
class AffineTorusMap {
public:
  AffineTorusMap(IntMat a, RatVec b);
  static AffineTorusMap identity(int n);

  int n() const { return static_cast<int>(a_.size()); }
  const IntMat& linear() const { return a_; }
  const RatVec& translation() const { return b_; }
  bool is_identity() const;

  AffineTorusMap compose(const AffineTorusMap& o) const;  // this after o
  AffineTorusMap inverse() const;

  bool operator==(const AffineTorusMap& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const AffineTorusMap& o) const { return !(*this == o); }

  std::string key() const;

private:
  IntMat a_;
  RatVec b_;
};

enum class CodimConvention { Real, Complex };

// A finite group of affine torus automorphisms, closed under composition
// modulo the lattice. An optional complex structure J (rational, J^2 = -I,
// commuting with every linear part) selects the Complex codimension
// convention, which halves ranks.
class TorusGroupAction {
public:
  static TorusGroupAction close(std::vector<AffineTorusMap> maps, std::optional<RatMat> J,
                                CodimConvention convention, size_t order_bound = 4096);

  int n() const { return n_; }
  int size() const { return static_cast<int>(maps_.size()); }
  const AffineTorusMap& element(int i) const { return maps_[static_cast<size_t>(i)]; }
  int identity_index() const { return 0; }
  CodimConvention convention() const { return convention_; }
  const std::optional<RatMat>& complex_structure() const { return J_; }
  // Torus dimension in the units the convention counts codimension in.
  int dims() const { return convention_ == CodimConvention::Complex ? n_ / 2 : n_; }

  int product(int i, int j) const;
  int inverse(int i) const;

private:
  TorusGroupAction() = default;

  int n_ = 0;
  std::vector<AffineTorusMap> maps_;
  std::optional<RatMat> J_;
  CodimConvention convention_ = CodimConvention::Real;
};

struct FixedLocusReport {
  bool nonempty = false;
  std::optional<int> codim;
};

// Fixed locus of x -> A x + b on the torus: nonempty iff (A - I) x = -b has
// a solution modulo Z^n, decided exactly by projecting b against the column
// span of A - I and testing lattice membership; codim = rank(A - I) under
// the Real convention, rank/2 under Complex.
FixedLocusReport fixed_locus(const AffineTorusMap& g,
                             CodimConvention convention = CodimConvention::Real);

// The coincidence locus of two elements, reduced to fixed_locus(sigma^{-1} tau).
FixedLocusReport pairwise_component(int sigma, int tau, const TorusGroupAction& action);

struct ConnectingSeries {
  // series[i-1] = G_i, sorted element indices; i runs 1..dims().
  std::vector<std::vector<int>> series;
};

// G_i = subgroup generated by the elements whose fixed locus is nonempty of
// codimension <= i. Ascending by construction; normality is asserted.
ConnectingSeries connecting_series(const TorusGroupAction& action);

struct CoverClassification {
  bool etale = false;        // free action
  bool quasi_etale = false;  // every nonempty fixed locus (g != e) has codim >= 2
  std::optional<int> genuinely_ramified_in_codim;  // least i with G_i = G
  bool prime_to_p = false;   // p does not divide |G| (p = 0 always true)
};

CoverClassification classify_cover(const TorusGroupAction& action, unsigned long p);

}  // namespace hstrata

#endif
