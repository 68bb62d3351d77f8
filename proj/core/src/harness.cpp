#include "hstrata/harness.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "hstrata/torus.hpp"

namespace hstrata {

namespace {

Scalar random_scalar(SplitMix64& rng, const FieldSpec& field, long height) {
  if (field.is_prime_field())
    return Scalar(field, static_cast<long>(rng.below(field.characteristic())));
  return Scalar(field, rng.range(-height, height));
}

Scalar random_nonzero_scalar(SplitMix64& rng, const FieldSpec& field, long height) {
  for (;;) {
    Scalar s = random_scalar(rng, field, height);
    if (!s.is_zero()) return s;
  }
}

Matrix random_invertible(SplitMix64& rng, const FieldSpec& field, int n, long height) {
  for (;;) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = random_scalar(rng, field, height);
    if (m.inverse()) return m;
  }
}

GradedPoly random_homogeneous(SplitMix64& rng, const FieldSpec& field, int nvars, int degree,
                              long height) {
  GradedPoly p(field, nvars);
  // Walk all exponent vectors of the given total degree.
  std::function<void(Exponents&, int, int)> walk = [&](Exponents& e, int pos, int left) {
    if (pos == nvars - 1) {
      e[static_cast<size_t>(pos)] = static_cast<uint32_t>(left);
      p.add_term(e, random_scalar(rng, field, height));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<size_t>(pos)] = static_cast<uint32_t>(k);
      walk(e, pos + 1, left - k);
    }
  };
  Exponents e(static_cast<size_t>(nvars), 0);
  walk(e, 0, degree);
  return p;
}

Matrix companion_matrix(const FieldSpec& field, const std::vector<Scalar>& monic_tail) {
  // monic_tail holds c_0..c_{r-1} of z^r + c_{r-1} z^{r-1} + ... + c_0.
  const int r = static_cast<int>(monic_tail.size());
  Matrix c(field, r, r);
  for (int i = 1; i < r; ++i) c.at(i, i - 1) = Scalar::one(field);
  for (int i = 0; i < r; ++i) c.at(i, r - 1) = -monic_tail[static_cast<size_t>(i)];
  return c;
}

Matrix matrix_poly(const Matrix& c, const std::vector<Scalar>& coeffs, const FieldSpec& field) {
  const int n = c.rows();
  Matrix acc(field, n, n);
  for (size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * c;
    for (int k = 0; k < n; ++k) acc.at(k, k) = acc.at(k, k) + coeffs[i];
  }
  return acc;
}

}  // namespace

GeneratedHiggs gen_commuting_tuple(const GenConfig& cfg, TupleMode mode) {
  SplitMix64 rng(cfg.seed ^ (mode == TupleMode::Diagonalizable ? 0x7C15D1F0E8A94B63ULL
                                                               : 0x2E8C3A57B96D10F4ULL));
  const FieldSpec& field = cfg.field;
  const int r = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(cfg.r_max)));
  const int d = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(cfg.d_max)));

  if (mode == TupleMode::Diagonalizable) {
    std::vector<std::vector<Scalar>> diag(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < r; ++i)
        diag[static_cast<size_t>(k)].push_back(random_scalar(rng, field, cfg.height));
    const Matrix p = random_invertible(rng, field, r, cfg.height);
    const Matrix pinv = *p.inverse();
    std::vector<Matrix> comps;
    for (int k = 0; k < d; ++k) {
      Matrix dk(field, r, r);
      for (int i = 0; i < r; ++i) dk.at(i, i) = diag[static_cast<size_t>(k)][static_cast<size_t>(i)];
      comps.push_back(p * dk * pinv);
    }
    RootMultiset roots(field, d);
    for (int i = 0; i < r; ++i) {
      std::vector<Scalar> coeffs;
      for (int k = 0; k < d; ++k) coeffs.push_back(diag[static_cast<size_t>(k)][static_cast<size_t>(i)]);
      roots.add(LinearForm(field, std::move(coeffs)));
    }
    return GeneratedHiggs{HiggsField::validated(field, std::move(comps)), std::move(roots)};
  }

  std::vector<Scalar> tail;
  for (int i = 0; i < r; ++i) tail.push_back(random_scalar(rng, field, cfg.height));
  const Matrix c = companion_matrix(field, tail);
  std::vector<Matrix> comps;
  for (int k = 0; k < d; ++k) {
    std::vector<Scalar> q;
    for (int i = 0; i < r; ++i) q.push_back(random_scalar(rng, field, cfg.height));
    comps.push_back(matrix_poly(c, q, field));
  }
  return GeneratedHiggs{HiggsField::validated(field, std::move(comps)), std::nullopt};
}

RootMultiset gen_stable_multiset(const GroupRep& G, int r, const GenConfig& cfg) {
  return sample_stable_multiset(G, r, cfg.seed, cfg.height);
}

// ---------------------------------------------------------------------------
// suites

namespace {

struct CaseRecorder {
  SuiteReport& report;
  int index;
  uint64_t seed;
  void fail(const std::string& detail) {
    report.failures.push_back(SuiteFailure{index, seed, detail});
  }
};

std::string verdict_name(SplitVerdict v) {
  switch (v) {
    case SplitVerdict::Split: return "split";
    case SplitVerdict::NotSplit: return "not_split";
    default: return "inconclusive";
  }
}

void suite_roundtrip(SuiteReport& rep, const GenConfig& cfg) {
  const int per_field = 500;
  rep.cases = 2 * per_field;
  for (int i = 0; i < rep.cases; ++i) {
    const FieldSpec field = i < per_field ? FieldSpec::rationals() : FieldSpec::prime_field(5);
    const uint64_t cs = mix_seed(cfg.seed, static_cast<uint64_t>(i));
    CaseRecorder rec{rep, i, cs};
    SplitMix64 rng(cs);
    const int r = 1 + static_cast<int>(rng.below(5));
    const int d = 1 + static_cast<int>(rng.below(3));
    RootMultiset roots(field, d);
    for (int k = 0; k < r; ++k) {
      std::vector<Scalar> coeffs;
      for (int j = 0; j < d; ++j) coeffs.push_back(random_scalar(rng, field, 9));
      roots.add(LinearForm(field, std::move(coeffs)));
    }
    const HitchinPoint s = roots.product();
    const SplitResult res = total_split(s, SplitConfig{cs, 32, 10000});
    if (res.verdict != SplitVerdict::Split)
      rec.fail("expected split, got " + verdict_name(res.verdict));
    else if (*res.roots != roots)
      rec.fail("recovered multiset differs");
  }
}

void suite_oracle_eq(SuiteReport& rep, const GenConfig& cfg) {
  rep.cases = 200;
  const FieldSpec field = FieldSpec::prime_field(3);
  for (int i = 0; i < rep.cases; ++i) {
    const uint64_t cs = mix_seed(cfg.seed, 1000 + static_cast<uint64_t>(i));
    CaseRecorder rec{rep, i, cs};
    SplitMix64 rng(cs);
    const int r = 1 + static_cast<int>(rng.below(4));
    std::vector<GradedPoly> coeffs;
    for (int k = 1; k <= r; ++k) coeffs.push_back(random_homogeneous(rng, field, 2, k, 9));
    const HitchinPoint s(field, 2, std::move(coeffs));
    const SplitResult mine = total_split(s, SplitConfig{cs, 32, 10000});
    const SplitResult oracle = brute_split(s);
    if (mine.verdict != oracle.verdict)
      rec.fail("verdicts differ: " + verdict_name(mine.verdict) + " vs " +
               verdict_name(oracle.verdict));
    else if (mine.verdict == SplitVerdict::Split && *mine.roots != *oracle.roots)
      rec.fail("multisets differ");
  }
}

void suite_charpoly(SuiteReport& rep, const GenConfig& cfg) {
  rep.cases = 200;
  for (int i = 0; i < rep.cases; ++i) {
    const uint64_t cs = mix_seed(cfg.seed, 2000 + static_cast<uint64_t>(i));
    CaseRecorder rec{rep, i, cs};
    GenConfig gc;
    gc.seed = cs;
    gc.field = FieldSpec::rationals();
    gc.r_max = 5;
    gc.d_max = 3;
    gc.height = 4;
    const TupleMode mode = i % 2 == 0 ? TupleMode::Diagonalizable : TupleMode::Companion;
    const GeneratedHiggs gen = gen_commuting_tuple(gc, mode);
    const HitchinPoint sb = char_poly(gen.theta);
    const HitchinPoint sf = char_poly_faddeev(gen.theta);
    if (sb != sf) {
      rec.fail("Berkowitz and Faddeev-LeVerrier disagree");
      continue;
    }
    const PowerTraces traces = power_traces(gen.theta);
    const auto elem = newton_convert(traces.traces, NewtonDirection::PowerToElementary);
    if (elem != sb.coeffs()) {
      rec.fail("Newton power->elementary mismatch");
      continue;
    }
    const auto back = newton_convert(sb.coeffs(), NewtonDirection::ElementaryToPower);
    if (back != traces.traces) {
      rec.fail("Newton elementary->power mismatch");
      continue;
    }
    if (gen.known_roots) {
      const SplitResult res = total_split(sb, SplitConfig{cs, 32, 10000});
      if (res.verdict != SplitVerdict::Split)
        rec.fail("diagonalizable char poly did not split");
      else if (*res.roots != *gen.known_roots)
        rec.fail("diagonalizable char poly split to different roots");
    }
  }
}

void suite_direct_sum(SuiteReport& rep, const GenConfig& cfg) {
  rep.cases = 200;
  for (int i = 0; i < rep.cases; ++i) {
    const uint64_t cs = mix_seed(cfg.seed, 3000 + static_cast<uint64_t>(i));
    CaseRecorder rec{rep, i, cs};
    SplitMix64 rng(cs);
    const FieldSpec field = i % 3 == 0   ? FieldSpec::rationals()
                            : i % 3 == 1 ? FieldSpec::prime_field(5)
                                         : FieldSpec::prime_field(3);
    const int d = 1 + static_cast<int>(rng.below(3));
    // Draw two tuples sharing d.
    auto draw = [&](uint64_t salt, TupleMode mode) {
      GenConfig gc;
      gc.seed = cs ^ salt;
      gc.field = field;
      gc.r_max = 3;
      gc.d_max = 3;
      gc.height = 4;
      for (;;) {
        GeneratedHiggs g = gen_commuting_tuple(gc, mode);
        if (g.theta.dim() == d) return g;
        gc.seed = mix_seed(gc.seed, 0xD1CEULL);
      }
    };
    const GeneratedHiggs a = draw(0x11, i % 2 == 0 ? TupleMode::Diagonalizable : TupleMode::Companion);
    const GeneratedHiggs b = draw(0x22, i % 2 == 0 ? TupleMode::Companion : TupleMode::Diagonalizable);
    const HiggsField sum = direct_sum(a.theta, b.theta);
    if (char_poly(sum) != hb_product(char_poly(a.theta), char_poly(b.theta)))
      rec.fail("char_poly(direct_sum) != hb_product of char polys");
  }
}

void suite_proj(SuiteReport& rep, const GenConfig& cfg) {
  rep.cases = 203;
  const FieldSpec q = FieldSpec::rationals();

  // Worked boundary examples (d = 1).
  {
    CaseRecorder rec{rep, 0, cfg.seed};
    const GradedPoly x = GradedPoly::variable(q, 1, 0);
    const Scalar one = Scalar::one(q), zero = Scalar::zero(q);
    const GradedPoly c1 = GradedPoly::constant(q, 1, one);
    // [1 : 2x] * [1 : 3x] = [1 : 5x : 6x^2]
    const ProjHitchinPoint a(q, 1, one, {x.scaled(Scalar(q, 2))});
    const ProjHitchinPoint b(q, 1, one, {x.scaled(Scalar(q, 3))});
    const ProjHitchinPoint ab = proj_product(a, b);
    const ProjHitchinPoint want(q, 1, one, {x.scaled(Scalar(q, 5)), (x * x).scaled(Scalar(q, 6))});
    if (ab != want) rec.fail("affine boundary example failed");
    // [0 : 1] * [1 : tau] = [0 : 1 : tau], with tau a constant
    const GradedPoly tau = GradedPoly::constant(q, 1, Scalar(q, 7));
    const ProjHitchinPoint inf(q, 1, zero, {c1});
    const ProjHitchinPoint aff(q, 1, one, {tau});
    const ProjHitchinPoint prod = proj_product(inf, aff);
    const ProjHitchinPoint want2(q, 1, zero, {c1, tau});
    if (prod != want2) rec.fail("[0:1]x[1:tau] boundary example failed");
    // [0 : 1] * [0 : 1] = [0 : 0 : 1]
    const ProjHitchinPoint prod2 = proj_product(inf, inf);
    const ProjHitchinPoint want3(q, 1, zero, {GradedPoly(q, 1), c1});
    if (prod2 != want3) rec.fail("[0:1]x[0:1] boundary example failed");
  }

  for (int i = 3; i < rep.cases; ++i) {
    const uint64_t cs = mix_seed(cfg.seed, 4000 + static_cast<uint64_t>(i));
    CaseRecorder rec{rep, i, cs};
    SplitMix64 rng(cs);
    const FieldSpec field = i % 2 == 0 ? q : FieldSpec::prime_field(5);
    const int d = 1 + static_cast<int>(rng.below(3));
    auto draw = [&]() {
      for (;;) {
        const int r = 1 + static_cast<int>(rng.below(4));
        const bool at_infinity = rng.below(4) == 0;
        Scalar s0 = at_infinity ? Scalar::zero(field) : random_nonzero_scalar(rng, field, 9);
        std::vector<GradedPoly> coeffs;
        bool nonzero = !s0.is_zero();
        for (int k = 1; k <= r; ++k) {
          GradedPoly p = rng.below(3) == 0 ? GradedPoly(field, d)
                                           : random_homogeneous(rng, field, d, k, 9);
          nonzero = nonzero || !p.is_zero();
          coeffs.push_back(std::move(p));
        }
        if (!nonzero) continue;
        return ProjHitchinPoint(field, d, s0, std::move(coeffs));
      }
    };
    const ProjHitchinPoint a = draw();
    const ProjHitchinPoint b = draw();
    const ProjHitchinPoint p = proj_product(a, b);
    // Never the zero tuple (the constructor would have thrown); spot-check
    // normalization idempotence via re-construction.
    std::vector<GradedPoly> copy;
    for (int k = 1; k <= p.r(); ++k) copy.push_back(p.coeff(k));
    if (ProjHitchinPoint(field, d, p.s0(), std::move(copy)) != p)
      rec.fail("normalization is not idempotent");
    if (a.in_affine_chart() && b.in_affine_chart()) {
      if (!p.in_affine_chart()) {
        rec.fail("product left the affine chart");
        continue;
      }
      if (hb_product(a.to_affine(), b.to_affine()) != p.to_affine())
        rec.fail("chart restriction differs from hb_product");
    }
  }
}

GroupRep make_neg_identity(const FieldSpec& field, int d) {
  Matrix m(field, d, d);
  for (int i = 0; i < d; ++i) m.at(i, i) = -Scalar::one(field);
  return GroupRep::close(field, d, {m});
}

GroupRep make_klein_four(const FieldSpec& field) {
  Matrix a(field, 2, 2), b(field, 2, 2);
  a.at(0, 0) = Scalar::one(field);
  a.at(1, 1) = -Scalar::one(field);
  b.at(0, 0) = -Scalar::one(field);
  b.at(1, 1) = Scalar::one(field);
  return GroupRep::close(field, 2, {a, b});
}

GroupRep make_klein_four_3d(const FieldSpec& field) {
  Matrix a(field, 3, 3), b(field, 3, 3);
  a.at(0, 0) = -Scalar::one(field);
  a.at(1, 1) = -Scalar::one(field);
  a.at(2, 2) = Scalar::one(field);
  b.at(0, 0) = Scalar::one(field);
  b.at(1, 1) = -Scalar::one(field);
  b.at(2, 2) = -Scalar::one(field);
  return GroupRep::close(field, 3, {a, b});
}

Matrix perm_matrix(const FieldSpec& field, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  Matrix m(field, n, n);
  for (int j = 0; j < n; ++j) m.at(perm[static_cast<size_t>(j)], j) = Scalar::one(field);
  return m;
}

std::vector<GroupRep> galois_group_pool(const FieldSpec& field) {
  std::vector<GroupRep> pool;
  pool.push_back(GroupRep::trivial(field, 1));
  pool.push_back(GroupRep::trivial(field, 2));
  pool.push_back(make_neg_identity(field, 1));
  pool.push_back(make_neg_identity(field, 2));
  pool.push_back(make_neg_identity(field, 3));
  pool.push_back(make_klein_four(field));
  // coordinate swap, order 2
  pool.push_back(GroupRep::close(field, 2, {perm_matrix(field, {1, 0})}));
  // rotation by 90 degrees, order 4
  {
    Matrix rot(field, 2, 2);
    rot.at(0, 1) = -Scalar::one(field);
    rot.at(1, 0) = Scalar::one(field);
    pool.push_back(GroupRep::close(field, 2, {rot}));
  }
  // dihedral of order 8
  {
    Matrix rot(field, 2, 2), refl(field, 2, 2);
    rot.at(0, 1) = -Scalar::one(field);
    rot.at(1, 0) = Scalar::one(field);
    refl.at(0, 0) = Scalar::one(field);
    refl.at(1, 1) = -Scalar::one(field);
    pool.push_back(GroupRep::close(field, 2, {rot, refl}));
  }
  // symmetric group on three coordinates, order 6
  pool.push_back(GroupRep::close(field, 3, {perm_matrix(field, {1, 0, 2}), perm_matrix(field, {1, 2, 0})}));
  // rotation group of the cube, order 24
  {
    Matrix rz(field, 3, 3), rx(field, 3, 3);
    rz.at(0, 1) = -Scalar::one(field);
    rz.at(1, 0) = Scalar::one(field);
    rz.at(2, 2) = Scalar::one(field);
    rx.at(0, 0) = Scalar::one(field);
    rx.at(1, 2) = -Scalar::one(field);
    rx.at(2, 1) = Scalar::one(field);
    pool.push_back(GroupRep::close(field, 3, {rz, rx}));
  }
  return pool;
}

void suite_galois(SuiteReport& rep, const GenConfig& cfg) {
  rep.cases = 100;
  const FieldSpec field = FieldSpec::rationals();
  const std::vector<GroupRep> pool = galois_group_pool(field);
  for (int i = 0; i < rep.cases; ++i) {
    const uint64_t cs = mix_seed(cfg.seed, 5000 + static_cast<uint64_t>(i));
    CaseRecorder rec{rep, i, cs};
    SplitMix64 rng(cs);
    const GroupRep& G = pool[rng.below(pool.size())];
    const int d = G.dim();
    std::vector<Scalar> coeffs;
    for (int j = 0; j < d; ++j) coeffs.push_back(random_scalar(rng, field, 9));
    const LinearForm t(field, std::move(coeffs));

    // Full orbit of t; its product is the invariant point under test.
    RootMultiset orbit_roots(field, d);
    for (int gi = 0; gi < G.size(); ++gi) {
      const LinearForm img = act(G.element(gi), t);
      bool seen = false;
      for (const auto& [u, m] : orbit_roots.entries())
        if (u == img) {
          seen = true;
          break;
        }
      if (!seen) orbit_roots.add(img);
    }
    const int r = orbit_roots.size();
    const HitchinPoint s = orbit_roots.product();

    try {
      if (!is_invariant(s, G)) {
        rec.fail("orbit product is not invariant");
        continue;
      }
      const OrbitDecomposition dec = orbit_factorization(s, G, SplitConfig{cs, 32, 10000});
      if (dec.orbits.size() != 1) {
        rec.fail("expected a single orbit, found " + std::to_string(dec.orbits.size()));
        continue;
      }
      if (dec.orbits[0].multiplicity != 1) {
        rec.fail("orbit roots are not pairwise distinct");
        continue;
      }
      const SpectralDatum datum = descend(s, G, SplitConfig{cs, 32, 10000});
      if (static_cast<int>(datum.cosets.size()) != r) {
        rec.fail("coset count differs from orbit size");
        continue;
      }
      if (static_cast<int>(datum.stabilizer.size()) * r != G.size()) {
        rec.fail("[G:H] != orbit size");
        continue;
      }
      RootMultiset recon(field, d);
      for (const auto& u : datum.orbit_roots) recon.add(u);
      if (recon.product() != s) {
        rec.fail("descended datum does not reconstruct s");
        continue;
      }
      const auto report = h_split_report(s, G, SplitConfig{cs, 32, 10000});
      for (const auto& e : report)
        if (e.orbit_size > r) rec.fail("orbit index exceeds r");
    } catch (const Error& e) {
      rec.fail(std::string("error: ") + e.what());
    }
  }
}

void suite_image(SuiteReport& rep, const GenConfig& cfg) {
  const FieldSpec field = FieldSpec::rationals();
  std::vector<GroupRep> groups;
  for (int d = 1; d <= 3; ++d) groups.push_back(GroupRep::trivial(field, d));
  for (int d = 1; d <= 3; ++d) groups.push_back(make_neg_identity(field, d));
  groups.push_back(make_klein_four(field));
  groups.push_back(make_klein_four_3d(field));

  int index = 0;
  // Part A: samples pass, non-invariant perturbations fail.
  for (const auto& G : groups) {
    for (int r = 1; r <= 6; ++r) {
      const uint64_t cs = mix_seed(cfg.seed, 6000 + static_cast<uint64_t>(index));
      CaseRecorder rec{rep, index++, cs};
      try {
        const HitchinPoint s = image_sample(G, r, cs);
        if (!image_check(s, G, SplitConfig{cs, 32, 10000})) {
          rec.fail("image_sample output failed image_check");
          continue;
        }
        if (G.size() > 1) {
          // Perturb each coefficient that admits a non-invariant monomial.
          for (int i = 1; i <= r; ++i) {
            std::optional<GradedPoly> bump;
            std::function<void(Exponents&, int, int)> walk = [&](Exponents& e, int pos, int left) {
              if (bump) return;
              if (pos == G.dim() - 1) {
                e[static_cast<size_t>(pos)] = static_cast<uint32_t>(left);
                GradedPoly mono = GradedPoly::monomial(field, G.dim(), e, Scalar::one(field));
                for (const auto& g : G.generators())
                  if (act_sym(g, mono) != mono) {
                    bump = mono;
                    return;
                  }
                return;
              }
              for (int k = 0; k <= left && !bump; ++k) {
                e[static_cast<size_t>(pos)] = static_cast<uint32_t>(k);
                walk(e, pos + 1, left - k);
              }
            };
            Exponents e(static_cast<size_t>(G.dim()), 0);
            walk(e, 0, i);
            if (!bump) continue;
            std::vector<GradedPoly> coeffs = s.coeffs();
            coeffs[static_cast<size_t>(i - 1)] = coeffs[static_cast<size_t>(i - 1)] + *bump;
            const HitchinPoint perturbed(field, G.dim(), std::move(coeffs));
            if (image_check(perturbed, G, SplitConfig{cs, 32, 10000}))
              rec.fail("non-invariant perturbation of s_" + std::to_string(i) +
                       " still passed image_check");
          }
        }
      } catch (const Error& e) {
        rec.fail(std::string("error: ") + e.what());
      }
    }
  }

  // Part B: trivial group membership coincides with total splitting.
  const GroupRep trivial1 = GroupRep::trivial(field, 2);
  for (int i = 0; i < 100; ++i) {
    const uint64_t cs = mix_seed(cfg.seed, 7000 + static_cast<uint64_t>(i));
    CaseRecorder rec{rep, index++, cs};
    SplitMix64 rng(cs);
    const int r = 1 + static_cast<int>(rng.below(4));
    HitchinPoint s = [&]() {
      if (i % 2 == 0) {
        RootMultiset roots(field, 2);
        for (int k = 0; k < r; ++k)
          roots.add(LinearForm(field, {random_scalar(rng, field, 9), random_scalar(rng, field, 9)}));
        return roots.product();
      }
      std::vector<GradedPoly> coeffs;
      for (int k = 1; k <= r; ++k) coeffs.push_back(random_homogeneous(rng, field, 2, k, 5));
      return HitchinPoint(field, 2, std::move(coeffs));
    }();
    try {
      const bool member = image_check(s, trivial1, SplitConfig{cs, 32, 10000});
      const SplitResult split = total_split(s, SplitConfig{cs ^ 1, 32, 10000});
      if (split.verdict == SplitVerdict::Inconclusive) {
        rec.fail("total_split inconclusive");
        continue;
      }
      if (member != (split.verdict == SplitVerdict::Split))
        rec.fail("trivial-group membership differs from split verdict");
    } catch (const Error& e) {
      rec.fail(std::string("error: ") + e.what());
    }
  }
  rep.cases = index;
}

AffineTorusMap torus_map(std::vector<std::vector<long>> a, std::vector<std::pair<long, long>> b) {
  IntMat ai;
  for (const auto& row : a) {
    std::vector<mpz_class> r;
    for (long v : row) r.emplace_back(v);
    ai.push_back(std::move(r));
  }
  RatVec bv;
  for (const auto& [num, den] : b) bv.emplace_back(mpq_class(num, den));
  return AffineTorusMap(std::move(ai), std::move(bv));
}

std::vector<TorusGroupAction> torus_pool() {
  std::vector<TorusGroupAction> pool;
  // Klein four: the two reflections.
  pool.push_back(TorusGroupAction::close(
      {torus_map({{1, 0}, {0, -1}}, {{0, 1}, {0, 1}}), torus_map({{-1, 0}, {0, 1}}, {{0, 1}, {0, 1}})},
      std::nullopt, CodimConvention::Real));
  // Central inversion on the 2-torus.
  pool.push_back(TorusGroupAction::close({torus_map({{-1, 0}, {0, -1}}, {{0, 1}, {0, 1}})},
                                         std::nullopt, CodimConvention::Real));
  // Free translation of order 2.
  pool.push_back(TorusGroupAction::close({torus_map({{1, 0}, {0, 1}}, {{1, 2}, {0, 1}})},
                                         std::nullopt, CodimConvention::Real));
  // Rotation of order 4.
  pool.push_back(TorusGroupAction::close({torus_map({{0, -1}, {1, 0}}, {{0, 1}, {0, 1}})},
                                         std::nullopt, CodimConvention::Real));
  // Dihedral of order 8.
  pool.push_back(TorusGroupAction::close({torus_map({{0, -1}, {1, 0}}, {{0, 1}, {0, 1}}),
                                          torus_map({{1, 0}, {0, -1}}, {{0, 1}, {0, 1}})},
                                         std::nullopt, CodimConvention::Real));
  // Glide: reflection with half translation along the axis.
  pool.push_back(TorusGroupAction::close({torus_map({{1, 0}, {0, -1}}, {{1, 2}, {0, 1}})},
                                         std::nullopt, CodimConvention::Real));
  // Coordinate 3-cycle on the 3-torus.
  pool.push_back(TorusGroupAction::close(
      {torus_map({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, {{0, 1}, {0, 1}, {0, 1}})}, std::nullopt,
      CodimConvention::Real));
  // Central inversion with two half translations, order 4, n = 3.
  pool.push_back(TorusGroupAction::close(
      {torus_map({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}, {{0, 1}, {0, 1}, {0, 1}}),
       torus_map({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{1, 2}, {1, 2}, {0, 1}})},
      std::nullopt, CodimConvention::Real));
  // Complex torus of complex dimension 2 with central inversion.
  {
    RatMat j(4, RatVec(4, 0));
    j[0][1] = -1;
    j[1][0] = 1;
    j[2][3] = -1;
    j[3][2] = 1;
    pool.push_back(TorusGroupAction::close(
        {torus_map({{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}},
                    {{0, 1}, {0, 1}, {0, 1}, {0, 1}})},
        j, CodimConvention::Complex));
  }
  return pool;
}

void suite_torus(SuiteReport& rep, const GenConfig& cfg) {
  int index = 0;

  // Worked examples.
  {
    CaseRecorder rec{rep, index++, cfg.seed};
    const auto r = fixed_locus(torus_map({{-1, 0}, {0, -1}}, {{0, 1}, {0, 1}}));
    if (!(r.nonempty && r.codim && *r.codim == 2)) rec.fail("central inversion: expected codim 2");
  }
  {
    CaseRecorder rec{rep, index++, cfg.seed};
    const auto r = fixed_locus(torus_map({{1, 0}, {0, 1}}, {{1, 2}, {0, 1}}));
    if (r.nonempty) rec.fail("free translation: expected empty fixed locus");
  }
  {
    CaseRecorder rec{rep, index++, cfg.seed};
    const auto r = fixed_locus(torus_map({{1, 0}, {0, -1}}, {{0, 1}, {0, 1}}));
    if (!(r.nonempty && r.codim && *r.codim == 1)) rec.fail("reflection: expected codim 1");
  }
  {
    CaseRecorder rec{rep, index++, cfg.seed};
    const auto r = fixed_locus(torus_map({{1, 0}, {0, -1}}, {{1, 2}, {0, 1}}));
    if (r.nonempty) rec.fail("glide reflection: expected empty fixed locus");
  }
  {
    CaseRecorder rec{rep, index++, cfg.seed};
    const auto klein = TorusGroupAction::close(
        {torus_map({{1, 0}, {0, -1}}, {{0, 1}, {0, 1}}), torus_map({{-1, 0}, {0, 1}}, {{0, 1}, {0, 1}})},
        std::nullopt, CodimConvention::Real);
    const ConnectingSeries series = connecting_series(klein);
    if (static_cast<int>(series.series[0].size()) != klein.size())
      rec.fail("Klein four: expected G_1 = G");
  }

  // Conjugation invariance on random triples, plus series checks per group.
  const std::vector<TorusGroupAction> pool = torus_pool();
  for (int i = 0; i < 100; ++i) {
    const uint64_t cs = mix_seed(cfg.seed, 8000 + static_cast<uint64_t>(i));
    CaseRecorder rec{rep, index++, cs};
    SplitMix64 rng(cs);
    const TorusGroupAction& action = pool[rng.below(pool.size())];
    const int sigma = static_cast<int>(rng.below(static_cast<uint64_t>(action.size())));
    const int nu = static_cast<int>(rng.below(static_cast<uint64_t>(action.size())));
    const int tau = static_cast<int>(rng.below(static_cast<uint64_t>(action.size())));
    const FixedLocusReport plain = pairwise_component(sigma, nu, action);
    const int cs_sigma = action.product(action.product(tau, sigma), action.inverse(tau));
    const int cs_nu = action.product(action.product(tau, nu), action.inverse(tau));
    const FixedLocusReport conj = pairwise_component(cs_sigma, cs_nu, action);
    if (plain.nonempty != conj.nonempty || plain.codim != conj.codim)
      rec.fail("conjugation changed the component report");
  }
  for (size_t gi = 0; gi < pool.size(); ++gi) {
    CaseRecorder rec{rep, index++, mix_seed(cfg.seed, 9000 + gi)};
    try {
      const ConnectingSeries series = connecting_series(pool[gi]);  // asserts internally
      const FixedLocusReport at_identity =
          pairwise_component(pool[gi].identity_index(), pool[gi].identity_index(), pool[gi]);
      if (!(at_identity.nonempty && at_identity.codim && *at_identity.codim == 0))
        rec.fail("identity component is not codim 0");
      (void)series;
    } catch (const Error& e) {
      rec.fail(std::string("error: ") + e.what());
    }
  }
  rep.cases = index;
}

using SuiteFn = void (*)(SuiteReport&, const GenConfig&);

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table{
      {"roundtrip", suite_roundtrip}, {"oracle_eq", suite_oracle_eq},
      {"charpoly", suite_charpoly},   {"direct_sum", suite_direct_sum},
      {"proj", suite_proj},           {"galois", suite_galois},
      {"image", suite_image},         {"torus", suite_torus},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& registered_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const GenConfig& cfg) {
  const auto& table = suite_table();
  auto it = table.find(name);
  if (it == table.end()) throw Error(Error::Code::UnknownSuite, "unknown suite: " + name);
  SuiteReport rep;
  rep.suite = name;
  const auto start = std::chrono::steady_clock::now();
  it->second(rep, cfg);
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return rep;
}

}  // namespace hstrata
