#include "hstrata/torus.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hstrata/error.hpp"

namespace hstrata {

namespace {

mpq_class mod1(const mpq_class& x) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return x - fl;
}

mpz_class int_det(IntMat a) {
  // Fraction-free Bareiss elimination.
  const size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMat int_mat_mul(const IntMat& a, const IntMat& b) {
  const size_t n = a.size();
  IntMat out(n, std::vector<mpz_class>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

}  // namespace

AffineTorusMap::AffineTorusMap(IntMat a, RatVec b) : a_(std::move(a)), b_(std::move(b)) {
  const size_t n = a_.size();
  if (n == 0) throw Error(Error::Code::InvalidInput, "empty torus map");
  for (const auto& row : a_)
    if (row.size() != n) throw Error(Error::Code::DimensionMismatch, "non-square linear part");
  if (b_.size() != n) throw Error(Error::Code::DimensionMismatch, "translation length differs");
  const mpz_class det = int_det(a_);
  if (det != 1 && det != -1)
    throw Error(Error::Code::NotInvertible, "linear part is not a lattice automorphism");
  for (auto& x : b_) x = mod1(x);
}

AffineTorusMap AffineTorusMap::identity(int n) {
  IntMat a(static_cast<size_t>(n), std::vector<mpz_class>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return AffineTorusMap(std::move(a), RatVec(static_cast<size_t>(n), 0));
}

bool AffineTorusMap::is_identity() const { return *this == identity(n()); }

AffineTorusMap AffineTorusMap::compose(const AffineTorusMap& o) const {
  if (n() != o.n()) throw Error(Error::Code::DimensionMismatch, "torus map dims differ");
  // (A1, b1) after (A2, b2): x -> A1 A2 x + A1 b2 + b1.
  IntMat a = int_mat_mul(a_, o.a_);
  RatVec b(static_cast<size_t>(n()), 0);
  for (size_t i = 0; i < a_.size(); ++i) {
    for (size_t j = 0; j < a_.size(); ++j) b[i] += mpq_class(a_[i][j]) * o.b_[j];
    b[i] += b_[i];
  }
  return AffineTorusMap(std::move(a), std::move(b));
}

AffineTorusMap AffineTorusMap::inverse() const {
  // Integer inverse via the adjugate; det is +-1.
  const size_t n = a_.size();
  const mpz_class det = int_det(a_);
  IntMat inv(n, std::vector<mpz_class>(n, 0));
  // Cofactor expansion is fine at these sizes.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      IntMat minor;
      for (size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<mpz_class> row;
        for (size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(a_[r][c]);
        minor.push_back(std::move(row));
      }
      mpz_class cof = int_det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv[j][i] = cof * det;  // det^{-1} = det for det = +-1
    }
  RatVec b(n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) b[i] -= mpq_class(inv[i][j]) * b_[j];
  }
  return AffineTorusMap(std::move(inv), std::move(b));
}

std::string AffineTorusMap::key() const {
  std::ostringstream os;
  for (const auto& row : a_)
    for (const auto& v : row) os << v.get_str() << ",";
  os << "|";
  for (const auto& v : b_) os << v.get_str() << ",";
  return os.str();
}

TorusGroupAction TorusGroupAction::close(std::vector<AffineTorusMap> maps, std::optional<RatMat> J,
                                         CodimConvention convention, size_t order_bound) {
  if (maps.empty()) throw Error(Error::Code::InvalidInput, "no torus maps given");
  const int n = maps[0].n();
  for (const auto& m : maps)
    if (m.n() != n) throw Error(Error::Code::DimensionMismatch, "torus map dims differ");

  TorusGroupAction out;
  out.n_ = n;
  out.convention_ = convention;

  if (convention == CodimConvention::Complex) {
    if (n % 2 != 0)
      throw Error(Error::Code::InvalidInput, "complex convention needs even dimension");
    if (!J) throw Error(Error::Code::InvalidInput, "complex convention needs J");
  }
  if (J) {
    if (static_cast<int>(J->size()) != n)
      throw Error(Error::Code::DimensionMismatch, "J size differs from n");
    RatMat j2 = rat_mat_mul(*J, *J);
    RatMat neg_id = rat_identity(n);
    for (auto& row : neg_id)
      for (auto& v : row) v = -v;
    if (j2 != neg_id) throw Error(Error::Code::InvalidInput, "J^2 != -I");
  }

  std::map<std::string, int> index;
  const AffineTorusMap id = AffineTorusMap::identity(n);
  out.maps_.push_back(id);
  index[id.key()] = 0;
  std::vector<AffineTorusMap> gens = std::move(maps);
  for (size_t i = 0; i < out.maps_.size(); ++i) {
    for (const auto& g : gens) {
      const AffineTorusMap cand = out.maps_[i].compose(g);
      const std::string key = cand.key();
      if (index.count(key)) continue;
      index[key] = static_cast<int>(out.maps_.size());
      out.maps_.push_back(cand);
      if (out.maps_.size() > order_bound)
        throw Error(Error::Code::OrderBoundExceeded,
                    "torus group closure exceeded bound " + std::to_string(order_bound));
    }
  }

  if (J) {
    // J must commute with every linear part.
    for (const auto& m : out.maps_) {
      RatMat a(static_cast<size_t>(n), RatVec(static_cast<size_t>(n), 0));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              mpq_class(m.linear()[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      if (rat_mat_mul(a, *J) != rat_mat_mul(*J, a))
        throw Error(Error::Code::InvalidInput, "J does not commute with the action");
    }
    out.J_ = std::move(J);
  }
  return out;
}

int TorusGroupAction::product(int i, int j) const {
  const AffineTorusMap prod = maps_[static_cast<size_t>(i)].compose(maps_[static_cast<size_t>(j)]);
  for (int k = 0; k < size(); ++k)
    if (maps_[static_cast<size_t>(k)] == prod) return k;
  throw Error(Error::Code::Internal, "torus group not closed under composition");
}

int TorusGroupAction::inverse(int i) const {
  const AffineTorusMap inv = maps_[static_cast<size_t>(i)].inverse();
  for (int k = 0; k < size(); ++k)
    if (maps_[static_cast<size_t>(k)] == inv) return k;
  throw Error(Error::Code::Internal, "torus group not closed under inverse");
}

FixedLocusReport fixed_locus(const AffineTorusMap& g, CodimConvention convention) {
  const int n = g.n();
  RatMat ami(static_cast<size_t>(n), RatVec(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ami[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          mpq_class(g.linear()[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      if (i == j) ami[static_cast<size_t>(i)][static_cast<size_t>(j)] -= 1;
    }

  const int rank = rat_rank(ami);
  if (convention == CodimConvention::Complex)
    internal_check(rank % 2 == 0, "complex-commuting element with odd rank");

  // (A - I) x = -b + lambda solvable over R^n iff some lattice vector lambda
  // satisfies U lambda = U b for a left-nullspace basis U of A - I.
  const RatMat u = rat_left_nullspace(ami);
  bool nonempty = true;
  if (!u.empty()) {
    // Scale each row to a primitive integer row; both sides scale together.
    IntMat v;
    RatVec w_rat = rat_mat_vec(u, g.translation());
    std::vector<mpz_class> w;
    for (size_t i = 0; i < u.size(); ++i) {
      mpz_class den = 1;
      for (const auto& q : u[i]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w_rat[i].get_den().get_mpz_t());
      std::vector<mpz_class> row;
      for (const auto& q : u[i]) {
        mpq_class scaled = q * mpq_class(den);
        row.push_back(scaled.get_num());
      }
      v.push_back(std::move(row));
      mpq_class ws = w_rat[i] * mpq_class(den);
      w.push_back(ws.get_num());
    }
    nonempty = integer_solvable(std::move(v), std::move(w));
  }

  FixedLocusReport out;
  out.nonempty = nonempty;
  if (nonempty)
    out.codim = convention == CodimConvention::Complex ? rank / 2 : rank;
  return out;
}

FixedLocusReport pairwise_component(int sigma, int tau, const TorusGroupAction& action) {
  const AffineTorusMap rel =
      action.element(sigma).inverse().compose(action.element(tau));
  return fixed_locus(rel, action.convention());
}

ConnectingSeries connecting_series(const TorusGroupAction& action) {
  const int dims = action.dims();
  // Fixed-locus table once per element.
  std::vector<FixedLocusReport> table;
  table.reserve(static_cast<size_t>(action.size()));
  for (int i = 0; i < action.size(); ++i)
    table.push_back(fixed_locus(action.element(i), action.convention()));

  auto closure = [&](const std::vector<int>& members) {
    std::vector<bool> in(static_cast<size_t>(action.size()), false);
    std::vector<int> list{action.identity_index()};
    in[static_cast<size_t>(action.identity_index())] = true;
    for (size_t i = 0; i < list.size(); ++i)
      for (int m : members) {
        const int idx = action.product(list[i], m);
        if (!in[static_cast<size_t>(idx)]) {
          in[static_cast<size_t>(idx)] = true;
          list.push_back(idx);
        }
      }
    std::sort(list.begin(), list.end());
    return list;
  };

  ConnectingSeries out;
  for (int i = 1; i <= dims; ++i) {
    std::vector<int> gens;
    for (int g = 0; g < action.size(); ++g)
      if (table[static_cast<size_t>(g)].nonempty && *table[static_cast<size_t>(g)].codim <= i)
        gens.push_back(g);
    out.series.push_back(closure(gens));
  }

  // Ascending chain of normal subgroups.
  for (size_t i = 0; i + 1 < out.series.size(); ++i)
    internal_check(std::includes(out.series[i + 1].begin(), out.series[i + 1].end(),
                                 out.series[i].begin(), out.series[i].end()),
                   "connecting series is not ascending");
  for (const auto& sub : out.series) {
    for (int h : sub)
      for (int g = 0; g < action.size(); ++g) {
        const int conj = action.product(action.product(g, h), action.inverse(g));
        internal_check(std::binary_search(sub.begin(), sub.end(), conj),
                       "connecting group is not normal");
      }
  }
  return out;
}

CoverClassification classify_cover(const TorusGroupAction& action, unsigned long p) {
  CoverClassification out;
  out.etale = true;
  out.quasi_etale = true;
  for (int g = 0; g < action.size(); ++g) {
    if (g == action.identity_index()) continue;
    const FixedLocusReport rep = fixed_locus(action.element(g), action.convention());
    if (rep.nonempty) {
      out.etale = false;
      if (*rep.codim < 2) out.quasi_etale = false;
    }
  }
  const ConnectingSeries series = connecting_series(action);
  for (size_t i = 0; i < series.series.size(); ++i)
    if (static_cast<int>(series.series[i].size()) == action.size()) {
      out.genuinely_ramified_in_codim = static_cast<int>(i) + 1;
      break;
    }
  out.prime_to_p = p == 0 || static_cast<unsigned long>(action.size()) % p != 0;
  return out;
}

}  // namespace hstrata
