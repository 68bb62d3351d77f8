#include "hstrata/hitchin.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hstrata/matrix.hpp"

namespace hstrata {

HitchinPoint::HitchinPoint(const FieldSpec& field, int nvars, std::vector<GradedPoly> coeffs)
    : field_(field), nvars_(nvars), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Error::Code::InvalidInput, "Hitchin point needs r >= 1");
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    if (c.field() != field_) throw Error(Error::Code::FieldMismatch, "coefficient field differs");
    if (c.nvars() != nvars_)
      throw Error(Error::Code::DimensionMismatch, "coefficient variable count differs");
    if (!c.is_homogeneous(static_cast<int>(i) + 1))
      throw Error(Error::Code::InvalidInput,
                  "coefficient s_" + std::to_string(i + 1) + " is not homogeneous of degree " +
                      std::to_string(i + 1));
  }
}

YPoly HitchinPoint::to_ypoly() const {
  const int rr = r();
  std::vector<GradedPoly> c(static_cast<size_t>(rr + 1), GradedPoly(field_, nvars_));
  c[static_cast<size_t>(rr)] = GradedPoly::constant(field_, nvars_, Scalar::one(field_));
  for (int i = 1; i <= rr; ++i) {
    GradedPoly v = coeff(i);
    if (i % 2 == 1) v = -v;
    c[static_cast<size_t>(rr - i)] = v;
  }
  return YPoly(field_, nvars_, std::move(c));
}

HitchinPoint HitchinPoint::from_ypoly(const YPoly& p) {
  if (!p.is_monic()) throw Error(Error::Code::InvalidInput, "y-polynomial is not monic");
  const int rr = p.degree();
  if (rr < 1) throw Error(Error::Code::InvalidInput, "y-polynomial has degree 0");
  std::vector<GradedPoly> s;
  s.reserve(static_cast<size_t>(rr));
  for (int i = 1; i <= rr; ++i) {
    GradedPoly v = p.coeff(rr - i);
    if (i % 2 == 1) v = -v;
    s.push_back(std::move(v));
  }
  return HitchinPoint(p.field(), p.nvars(), std::move(s));
}

HitchinPoint hb_product(const HitchinPoint& a, const HitchinPoint& b) {
  return HitchinPoint::from_ypoly(a.to_ypoly() * b.to_ypoly());
}

// The projective coordinates are not graded-validated: the boundary of the
// completion legitimately carries constant coordinates (e.g. [0 : 1]), and
// only the affine chart image must be a graded Hitchin point.
ProjHitchinPoint::ProjHitchinPoint(const FieldSpec& field, int nvars, const Scalar& s0,
                                   std::vector<GradedPoly> coeffs)
    : field_(field), nvars_(nvars), s0_(s0), coeffs_(std::move(coeffs)) {
  if (s0_.field() != field_) throw Error(Error::Code::FieldMismatch, "s0 field differs");
  bool all_zero = s0_.is_zero();
  for (const auto& c : coeffs_) {
    if (c.field() != field_) throw Error(Error::Code::FieldMismatch, "coefficient field differs");
    if (c.nvars() != nvars_)
      throw Error(Error::Code::DimensionMismatch, "coefficient variable count differs");
    if (!c.is_zero()) all_zero = false;
  }
  if (all_zero) throw Error(Error::Code::ZeroPoint, "all-zero projective tuple");
  normalize();
}

void ProjHitchinPoint::normalize() {
  Scalar lead = Scalar::zero(field_);
  if (!s0_.is_zero()) {
    lead = s0_;
  } else {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) {
        lead = c.leading_coeff();
        break;
      }
  }
  if (lead.is_one()) return;
  const Scalar f = lead.inverse();
  s0_ = s0_ * f;
  for (auto& c : coeffs_) c = c.scaled(f);
}

ProjHitchinPoint ProjHitchinPoint::from_affine(const HitchinPoint& p) {
  return ProjHitchinPoint(p.field(), p.nvars(), Scalar::one(p.field()), p.coeffs());
}

HitchinPoint ProjHitchinPoint::to_affine() const {
  if (s0_.is_zero())
    throw Error(Error::Code::InvalidInput, "point at infinity has no affine chart image");
  // Normalization already scaled s0 to 1.
  return HitchinPoint(field_, nvars_, coeffs_);
}

ProjHitchinPoint proj_product(const ProjHitchinPoint& a, const ProjHitchinPoint& b) {
  if (a.field() != b.field()) throw Error(Error::Code::FieldMismatch, "fields differ");
  if (a.nvars() != b.nvars()) throw Error(Error::Code::DimensionMismatch, "variable counts differ");
  const FieldSpec& field = a.field();
  const int nvars = a.nvars();

  auto to_ypoly = [&](const ProjHitchinPoint& p) {
    const int rr = p.r();
    std::vector<GradedPoly> c(static_cast<size_t>(rr + 1), GradedPoly(field, nvars));
    c[static_cast<size_t>(rr)] = GradedPoly::constant(field, nvars, p.s0());
    for (int i = 1; i <= rr; ++i) {
      GradedPoly v = p.coeff(i);
      if (i % 2 == 1) v = -v;
      c[static_cast<size_t>(rr - i)] = v;
    }
    return YPoly(field, nvars, std::move(c));
  };

  const YPoly prod = to_ypoly(a) * to_ypoly(b);
  const int r = prod.degree();
  const GradedPoly& v0_poly = prod.coeff(r);
  internal_check(v0_poly.is_homogeneous(0), "projective product leading term is not degree 0");
  Exponents zero_exp(static_cast<size_t>(nvars), 0);
  const Scalar v0 = v0_poly.coeff(zero_exp);
  std::vector<GradedPoly> coeffs;
  coeffs.reserve(static_cast<size_t>(r));
  for (int i = 1; i <= r; ++i) {
    GradedPoly v = prod.coeff(r - i);
    if (i % 2 == 1) v = -v;
    coeffs.push_back(std::move(v));
  }
  return ProjHitchinPoint(field, nvars, v0, std::move(coeffs));
}

void RootMultiset::add(const LinearForm& t, int multiplicity) {
  if (t.field() != field_) throw Error(Error::Code::FieldMismatch, "root field differs");
  if (t.dim() != nvars_) throw Error(Error::Code::DimensionMismatch, "root dimension differs");
  if (multiplicity < 1) throw Error(Error::Code::InvalidInput, "multiplicity must be >= 1");
  for (auto& [u, m] : entries_)
    if (u == t) {
      m += multiplicity;
      return;
    }
  entries_.emplace_back(t, multiplicity);
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
}

int RootMultiset::size() const {
  int n = 0;
  for (const auto& [t, m] : entries_) n += m;
  return n;
}

HitchinPoint RootMultiset::product() const {
  if (entries_.empty())
    throw Error(Error::Code::InvalidInput, "empty root multiset has no Hitchin point");
  YPoly acc = YPoly::one(field_, nvars_);
  for (const auto& [t, m] : entries_)
    for (int k = 0; k < m; ++k) acc = acc * YPoly::linear_root(t);
  return HitchinPoint::from_ypoly(acc);
}

// ---------------------------------------------------------------------------
// univariate helpers

namespace {

Scalar ueval(const std::vector<Scalar>& c, const Scalar& x) {
  Scalar acc = Scalar::zero(x.field());
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// Deflate a monic polynomial by a known root.
std::vector<Scalar> udeflate(const std::vector<Scalar>& c, const Scalar& rho) {
  const size_t m = c.size() - 1;
  std::vector<Scalar> q(m, Scalar::zero(rho.field()));
  q[m - 1] = c[m];
  for (size_t i = m - 1; i >= 1; --i) q[i - 1] = c[i] + rho * q[i];
  return q;
}

struct ZFactorization {
  std::vector<std::pair<mpz_class, unsigned>> primes;
  // False when a composite cofactor resisted the smooth/prime split.
  bool complete = false;
};

ZFactorization factor_integer(mpz_class n, unsigned long smooth_bound) {
  ZFactorization out;
  n = abs(n);
  if (n == 0) return out;
  for (unsigned long q = 2; mpz_class(q) * q <= n && q <= smooth_bound; ++q) {
    if (!mpz_divisible_ui_p(n.get_mpz_t(), q)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
      n /= static_cast<long>(q);
      ++e;
    }
    out.primes.emplace_back(q, e);
  }
  out.complete = true;
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 32) != 0)
      out.primes.emplace_back(n, 1);
    else
      out.complete = false;  // unknown composite cofactor
  }
  return out;
}

// All positive divisors when the factorization is complete and the count fits
// the cap; nullopt otherwise.
std::optional<std::vector<mpz_class>> all_divisors_capped(const ZFactorization& f,
                                                          size_t divisor_cap) {
  if (!f.complete) return std::nullopt;
  size_t count = 1;
  for (const auto& [q, e] : f.primes) {
    count *= e + 1;
    if (count > divisor_cap) return std::nullopt;
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [q, e] : f.primes) {
    const size_t base = divs.size();
    mpz_class pw = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pw *= q;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
    }
  }
  return divs;
}

// Divisors built from the known primes, magnitude-capped. Used as the root
// candidate pool when the full divisor set is infeasible; never a
// completeness certificate.
std::vector<mpz_class> divisors_bounded(const ZFactorization& f, const mpz_class& mag_bound,
                                        size_t count_cap) {
  std::vector<mpz_class> divs{1};
  for (const auto& [q, e] : f.primes) {
    const size_t base = divs.size();
    mpz_class pw = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pw *= q;
      if (pw > mag_bound) break;
      for (size_t i = 0; i < base; ++i) {
        const mpz_class cand = divs[i] * pw;
        if (cand <= mag_bound) divs.push_back(cand);
        if (divs.size() > count_cap) return divs;
      }
    }
  }
  return divs;
}

}  // namespace

UnivariateRoots univariate_roots(const std::vector<Scalar>& monic_coeffs, const FieldSpec& field) {
  UnivariateRoots out;
  out.complete = true;
  if (monic_coeffs.empty() || !monic_coeffs.back().is_one())
    throw Error(Error::Code::InvalidInput, "univariate input must be monic");
  if (monic_coeffs.size() == 1) return out;

  std::vector<Scalar> work = monic_coeffs;

  if (field.is_prime_field()) {
    const unsigned long p = field.characteristic();
    if (p > 100000) {
      out.complete = false;
      return out;
    }
    for (unsigned long v = 0; v < p; ++v) {
      const Scalar rho(field, static_cast<long>(v));
      int mult = 0;
      while (work.size() > 1 && ueval(work, rho).is_zero()) {
        work = udeflate(work, rho);
        ++mult;
      }
      if (mult > 0) out.roots.emplace_back(rho, mult);
    }
  } else {
    int zero_mult = 0;
    while (work.size() > 1 && work[0].is_zero()) {
      work.erase(work.begin());
      ++zero_mult;
    }
    if (zero_mult > 0) out.roots.emplace_back(Scalar::zero(field), zero_mult);

    std::map<mpq_class, int> found;
    auto try_candidates = [&](const std::set<mpq_class>& candidates) {
      bool any = false;
      for (const auto& cand : candidates) {
        const Scalar rho(field, cand);
        int mult = 0;
        while (work.size() > 1 && ueval(work, rho).is_zero()) {
          work = udeflate(work, rho);
          ++mult;
        }
        if (mult > 0) {
          found[cand] += mult;
          any = true;
        }
      }
      return any;
    };

    // Numerators divide L*c_0 and denominators divide L, for L the
    // coefficient denominator lcm. When the full divisor set is too large,
    // run magnitude-bounded passes that deflate found roots and re-factor
    // the shrinking constant term; reaching degree 0 restores completeness.
    bool certified = true;
    while (work.size() > 1) {
      mpz_class den_lcm = 1;
      for (const auto& c : work)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.value().get_den().get_mpz_t());
      const mpq_class c0 = work[0].value();
      const mpz_class g0 = c0.get_num() * (den_lcm / c0.get_den());
      const ZFactorization num_fact = factor_integer(g0, 10000);
      const ZFactorization den_fact = factor_integer(den_lcm, 10000);
      const auto dens = all_divisors_capped(den_fact, 2000);
      if (!dens) {
        certified = false;
        break;
      }
      if (const auto nums = all_divisors_capped(num_fact, 20000)) {
        std::set<mpq_class> candidates;
        for (const auto& a : *nums)
          for (const auto& b : *dens) {
            mpq_class q(a, b);
            q.canonicalize();
            candidates.insert(q);
            candidates.insert(-q);
          }
        try_candidates(candidates);
        break;  // full enumeration: every remaining rational root was tried
      }
      // Magnitude-escalating passes: small roots strip first and shrink the
      // constant term, usually down to a fully enumerable one.
      bool progressed = false;
      for (long bound : {2000L, 1000000L, 1000000000L}) {
        std::set<mpq_class> candidates;
        for (const auto& a : divisors_bounded(num_fact, mpz_class(bound), 100000))
          for (const auto& b : *dens) {
            mpq_class q(a, b);
            q.canonicalize();
            candidates.insert(q);
            candidates.insert(-q);
          }
        if (try_candidates(candidates)) {
          progressed = true;
          break;
        }
      }
      if (!progressed) {
        certified = false;  // no progress and no full enumeration
        break;
      }
    }
    if (work.size() == 1) certified = true;  // fully deflated: nothing was missed
    out.complete = certified;
    for (const auto& [cand, mult] : found) out.roots.emplace_back(Scalar(field, cand), mult);
  }

  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [rho, m] : out.roots) out.total += m;
  return out;
}

namespace {

// Monic univariate division over a field: returns remainder coefficients.
std::vector<Scalar> urem(const std::vector<Scalar>& num, const std::vector<Scalar>& den,
                         const FieldSpec& field) {
  std::vector<Scalar> r = num;
  const size_t dn = den.size() - 1;
  while (r.size() > 1 && r.size() - 1 >= dn) {
    const Scalar lead = r.back();
    if (!lead.is_zero()) {
      const size_t shift = r.size() - 1 - dn;
      for (size_t i = 0; i < den.size(); ++i)
        r[shift + i] = r[shift + i] - lead * den[i];
    }
    r.pop_back();
  }
  while (r.size() > 1 && r.back().is_zero()) r.pop_back();
  if (r.empty()) r.push_back(Scalar::zero(field));
  return r;
}

bool uis_zero(const std::vector<Scalar>& c) {
  for (const auto& v : c)
    if (!v.is_zero()) return false;
  return true;
}

}  // namespace

std::optional<bool> univariate_irreducible_fp(const std::vector<Scalar>& monic_coeffs,
                                              const FieldSpec& field, uint64_t bound) {
  if (!field.is_prime_field())
    throw Error(Error::Code::NotPrimeField, "irreducibility witness requires a prime field");
  const int m = static_cast<int>(monic_coeffs.size()) - 1;
  if (m <= 0) return false;
  if (m == 1) return true;
  const unsigned long p = field.characteristic();
  // Degree-1 factors: a root in F_p.
  if (p > bound) return std::nullopt;
  for (unsigned long v = 0; v < p; ++v)
    if (ueval(monic_coeffs, Scalar(field, static_cast<long>(v))).is_zero()) return false;
  // Monic factors of degree 2..m/2 by trial division.
  for (int k = 2; k <= m / 2; ++k) {
    uint64_t count = 1;
    for (int i = 0; i < k; ++i) {
      count *= p;
      if (count > bound) return std::nullopt;
    }
    std::vector<unsigned long> digits(static_cast<size_t>(k), 0);
    for (uint64_t iter = 0; iter < count; ++iter) {
      std::vector<Scalar> den;
      den.reserve(static_cast<size_t>(k) + 1);
      for (int i = 0; i < k; ++i) den.emplace_back(field, static_cast<long>(digits[static_cast<size_t>(i)]));
      den.push_back(Scalar::one(field));
      if (uis_zero(urem(monic_coeffs, den, field))) return false;
      for (size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < p) break;
        digits[i] = 0;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// splitting engine

namespace {

std::vector<Scalar> draw_point(SplitMix64& rng, const FieldSpec& field, int d, long height) {
  std::vector<Scalar> pt;
  pt.reserve(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    if (field.is_prime_field())
      pt.emplace_back(field, static_cast<long>(rng.below(field.characteristic())));
    else
      pt.emplace_back(field, rng.range(-height, height));
  }
  return pt;
}

template <typename Fn>
void enumerate_linear_forms(const FieldSpec& field, int d, Fn&& fn) {
  const unsigned long p = field.characteristic();
  std::vector<unsigned long> digits(static_cast<size_t>(d), 0);
  for (;;) {
    std::vector<Scalar> coeffs;
    coeffs.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) coeffs.emplace_back(field, static_cast<long>(digits[static_cast<size_t>(i)]));
    fn(LinearForm(field, std::move(coeffs)));
    size_t i = 0;
    for (; i < digits.size(); ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
    if (i == digits.size()) return;
  }
}

// Divides the full multiplicity of t out of work, recording it; returns the
// multiplicity removed.
int divide_out(YPoly& work, const LinearForm& t, RootMultiset& found) {
  int k = 0;
  while (work.degree() >= 1) {
    auto dr = ypoly_divrem(work, t);
    if (!dr.remainder.is_zero()) break;
    work = dr.quotient;
    found.add(t);
    ++k;
  }
  return k;
}

struct Extraction {
  RootMultiset roots;
  YPoly residual;
  bool complete;
};

Extraction extract_linear_factors(const HitchinPoint& s, const SplitConfig& cfg) {
  const FieldSpec field = s.field();
  const int d = s.nvars();
  YPoly work = s.to_ypoly();
  RootMultiset found(field, d);
  SplitMix64 rng(cfg.seed ^ 0xA3C59AC2ED9B81BCULL);
  int draws = cfg.max_retries;

  bool fq_feasible = false;
  if (field.is_prime_field()) {
    uint64_t count = 1;
    fq_feasible = true;
    for (int i = 0; i < d; ++i) {
      count *= field.characteristic();
      if (count > cfg.enum_bound) {
        fq_feasible = false;
        break;
      }
    }
  }

  while (work.degree() > 0) {
    if (work.degree() == 1) {
      // y + c0 with c0 homogeneous of degree 1: the root is -c0.
      found.add(LinearForm::from_poly(-work.coeff(0)));
      work = YPoly::one(field, d);
      break;
    }

    // Draw d solve points with an invertible matrix plus one filter point,
    // with complete univariate root sets at each.
    if (draws <= 0) return Extraction{found, work, false};
    --draws;
    std::vector<std::vector<Scalar>> pts;
    for (int j = 0; j <= d; ++j) pts.push_back(draw_point(rng, field, d, 9));
    std::vector<std::vector<Scalar>> rows(pts.begin() + 1, pts.end());
    const Matrix M = Matrix::from_rows(field, rows);
    const auto Minv = M.inverse();
    if (!Minv) continue;  // rank-deficient draw
    std::vector<UnivariateRoots> uroots;
    bool all_complete = true;
    for (int j = 0; j <= d; ++j) {
      uroots.push_back(univariate_roots(work.specialize(pts[static_cast<size_t>(j)]), field));
      all_complete = all_complete && uroots.back().complete;
    }
    if (!all_complete) continue;

    // Extract as many factors as this draw supports; the cached root
    // multisets are deflated alongside the quotient so each point is
    // root-solved only once per draw.
    auto cached_mult = [&](int j, const Scalar& value) {
      for (const auto& [rho, m] : uroots[static_cast<size_t>(j)].roots)
        if (rho == value) return m;
      return 0;
    };
    auto deflate_cache = [&](const LinearForm& t, int k) {
      for (int j = 0; j <= d; ++j) {
        const Scalar v = t.eval(pts[static_cast<size_t>(j)]);
        auto& rs = uroots[static_cast<size_t>(j)];
        bool ok = false;
        for (auto& [rho, m] : rs.roots)
          if (rho == v) {
            internal_check(m >= k, "cached root multiplicity underflow");
            m -= k;
            ok = true;
            break;
          }
        internal_check(ok, "factor value missing from cached roots");
        rs.roots.erase(std::remove_if(rs.roots.begin(), rs.roots.end(),
                                      [](const auto& e) { return e.second == 0; }),
                       rs.roots.end());
        rs.total -= k;
      }
    };
    // Certify a candidate by exact division, up to the multiplicity bound
    // visible in the cached root values; returns the multiplicity removed.
    auto take_factor = [&](const LinearForm& t, int bound) {
      int k = 0;
      while (k < bound && work.degree() >= 1) {
        auto dr = ypoly_divrem(work, t);
        if (!dr.remainder.is_zero()) break;
        work = dr.quotient;
        found.add(t);
        ++k;
      }
      if (k > 0) deflate_cache(t, k);
      return k;
    };

    while (work.degree() > 0) {
      if (work.degree() == 1) {
        found.add(LinearForm::from_poly(-work.coeff(0)));
        work = YPoly::one(field, d);
        break;
      }
      // One full scan over candidate value combinations, extracting every
      // factor it certifies.
      bool progressed = false;
      std::vector<std::vector<Scalar>> values(static_cast<size_t>(d));
      bool any_empty = false;
      for (int j = 1; j <= d; ++j) {
        for (const auto& [rho, m] : uroots[static_cast<size_t>(j)].roots)
          values[static_cast<size_t>(j - 1)].push_back(rho);
        if (values[static_cast<size_t>(j - 1)].empty()) any_empty = true;
      }
      if (!any_empty) {
        std::vector<size_t> odo(static_cast<size_t>(d), 0);
        for (;;) {
          std::vector<Scalar> v;
          v.reserve(static_cast<size_t>(d));
          for (int j = 0; j < d; ++j)
            v.push_back(values[static_cast<size_t>(j)][odo[static_cast<size_t>(j)]]);
          // Multiplicity bound over the solve points; 0 for combos whose
          // values were already divided out.
          int bound = work.degree();
          for (int j = 1; j <= d && bound > 0; ++j)
            bound = std::min(bound, cached_mult(j, v[static_cast<size_t>(j - 1)]));
          if (bound > 0) {
            const std::vector<Scalar> c = *Minv * v;
            const LinearForm t(field, c);
            const Scalar at_filter = t.eval(pts[0]);
            bound = std::min(bound, cached_mult(0, at_filter));
            if (bound > 0 && take_factor(t, bound) > 0) progressed = true;
            if (work.degree() <= 1) break;
          }
          size_t j = 0;
          for (; j < odo.size(); ++j) {
            if (++odo[j] < values[j].size()) break;
            odo[j] = 0;
          }
          if (j == odo.size()) break;
        }
      }
      if (work.degree() == 0 || work.degree() == 1 || progressed) continue;

      // A full scan certified nothing: no linear factor remains. Over a
      // small prime field, confirm by exhaustive enumeration first.
      if (fq_feasible) {
        std::optional<LinearForm> stray;
        enumerate_linear_forms(field, d, [&](const LinearForm& t) {
          if (!stray && ypoly_divrem(work, t).remainder.is_zero()) stray = t;
        });
        if (stray) {
          const int k = divide_out(work, *stray, found);
          internal_check(k >= 1, "enumerated factor failed to divide");
          deflate_cache(*stray, k);
          continue;
        }
      }
      return Extraction{found, work, true};
    }
  }
  return Extraction{found, work, true};
}

}  // namespace

SplitResult total_split(const HitchinPoint& s, const SplitConfig& cfg) {
  Extraction ex = extract_linear_factors(s, cfg);
  if (!ex.complete) return SplitResult{SplitVerdict::Inconclusive, std::nullopt};
  if (ex.residual.degree() == 0) return SplitResult{SplitVerdict::Split, std::move(ex.roots)};
  return SplitResult{SplitVerdict::NotSplit, std::nullopt};
}

SplitProfile split_profile(const HitchinPoint& s, const SplitConfig& cfg) {
  Extraction ex = extract_linear_factors(s, cfg);
  if (!ex.complete)
    throw Error(Error::Code::Inconclusive, "linear-factor extraction exhausted its draw budget");
  SplitProfile profile{std::move(ex.roots), ex.residual.degree(), false};
  if (profile.residual_degree == 0) {
    profile.residual_certified = true;
    return profile;
  }
  if (s.field().is_prime_field()) {
    SplitMix64 rng(cfg.seed ^ 0x1B56C4E9D8A3F70DULL);
    for (int tries = 0; tries < 16 && !profile.residual_certified; ++tries) {
      const auto pt = draw_point(rng, s.field(), s.nvars(), 9);
      const auto witness = univariate_irreducible_fp(ex.residual.specialize(pt), s.field(),
                                                     cfg.enum_bound);
      if (witness && *witness) profile.residual_certified = true;
    }
  }
  return profile;
}

SplitResult brute_split(const HitchinPoint& s, uint64_t enum_bound) {
  if (!s.field().is_prime_field())
    throw Error(Error::Code::NotPrimeField, "brute_split requires a prime field");
  const unsigned long p = s.field().characteristic();
  uint64_t count = 1;
  for (int i = 0; i < s.nvars(); ++i) {
    count *= p;
    if (count > enum_bound)
      throw Error(Error::Code::BoundExceeded,
                  "brute_split candidate space exceeds bound of " + std::to_string(enum_bound));
  }
  YPoly work = s.to_ypoly();
  RootMultiset found(s.field(), s.nvars());
  enumerate_linear_forms(s.field(), s.nvars(), [&](const LinearForm& t) {
    if (work.degree() >= 1) divide_out(work, t, found);
  });
  if (work.degree() == 0) return SplitResult{SplitVerdict::Split, std::move(found)};
  return SplitResult{SplitVerdict::NotSplit, std::nullopt};
}

}  // namespace hstrata
