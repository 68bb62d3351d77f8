#include "hstrata/equivariance.hpp"

#include <algorithm>
#include <set>

namespace hstrata {

LinearForm act(const Matrix& g, const LinearForm& t) {
  if (g.field() != t.field()) throw Error(Error::Code::FieldMismatch, "action field differs");
  if (g.cols() != t.dim()) throw Error(Error::Code::DimensionMismatch, "action dimension differs");
  return LinearForm(t.field(), g * t.coeffs());
}

GradedPoly act_sym(const Matrix& g, const GradedPoly& f) {
  if (g.field() != f.field()) throw Error(Error::Code::FieldMismatch, "action field differs");
  if (g.cols() != f.nvars()) throw Error(Error::Code::DimensionMismatch, "action dimension differs");
  // x_j maps to the linear form carrying column j of g, the algebra
  // extension of the action on forms.
  std::vector<LinearForm> images;
  images.reserve(static_cast<size_t>(f.nvars()));
  for (int j = 0; j < f.nvars(); ++j) {
    std::vector<Scalar> col;
    col.reserve(static_cast<size_t>(g.rows()));
    for (int i = 0; i < g.rows(); ++i) col.push_back(g.at(i, j));
    images.emplace_back(f.field(), std::move(col));
  }
  return f.substitute(images);
}

HitchinPoint act_sym(const Matrix& g, const HitchinPoint& s) {
  std::vector<GradedPoly> coeffs;
  coeffs.reserve(static_cast<size_t>(s.r()));
  for (int i = 1; i <= s.r(); ++i) coeffs.push_back(act_sym(g, s.coeff(i)));
  return HitchinPoint(s.field(), s.nvars(), std::move(coeffs));
}

bool is_invariant(const HitchinPoint& s, const GroupRep& G) {
  if (G.dim() != s.nvars())
    throw Error(Error::Code::DimensionMismatch, "group and point dimensions differ");
  for (const auto& g : G.generators())
    for (int i = 1; i <= s.r(); ++i)
      if (act_sym(g, s.coeff(i)) != s.coeff(i)) return false;
  return true;
}

OrbitDecomposition orbit_factorization(const HitchinPoint& s, const GroupRep& G,
                                       const SplitConfig& cfg) {
  if (!is_invariant(s, G))
    throw Error(Error::Code::NotInvariant, "point is not invariant under the group");
  const SplitResult split = total_split(s, cfg);
  if (split.verdict == SplitVerdict::Inconclusive)
    throw Error(Error::Code::Inconclusive, "total_split was inconclusive");
  if (split.verdict == SplitVerdict::NotSplit)
    throw Error(Error::Code::NotSplitOverField, "point does not split over the base field");

  const RootMultiset& roots = *split.roots;
  OrbitDecomposition out;
  std::set<size_t> used;
  const auto& entries = roots.entries();
  for (size_t start = 0; start < entries.size(); ++start) {
    if (used.count(start)) continue;
    const LinearForm& seed = entries[start].first;
    // Orbit of the seed root under all group elements.
    std::vector<LinearForm> orbit;
    std::vector<int> stabilizer;
    for (int gi = 0; gi < G.size(); ++gi) {
      const LinearForm img = act(G.element(gi), seed);
      if (img == seed) stabilizer.push_back(gi);
      if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(img);
    }
    std::sort(orbit.begin(), orbit.end());
    // All orbit members must be roots with the seed's multiplicity.
    const int mult = entries[start].second;
    for (const auto& u : orbit) {
      bool found = false;
      for (size_t i = 0; i < entries.size(); ++i)
        if (entries[i].first == u) {
          internal_check(entries[i].second == mult,
                         "orbit roots with unequal multiplicities in an invariant point");
          used.insert(i);
          found = true;
          break;
        }
      internal_check(found, "orbit leaves the root multiset of an invariant point");
    }
    RootMultiset factor_roots(s.field(), s.nvars());
    for (const auto& u : orbit) factor_roots.add(u, mult);
    HitchinPoint factor = factor_roots.product();
    internal_check(is_invariant(factor, G), "orbit factor is not invariant");
    out.orbits.push_back(Orbit{std::move(orbit), mult, std::move(stabilizer), std::move(factor)});
  }
  return out;
}

SpectralDatum descend(const HitchinPoint& s, const GroupRep& G, const SplitConfig& cfg) {
  OrbitDecomposition dec = orbit_factorization(s, G, cfg);
  if (dec.orbits.size() != 1)
    throw Error(Error::Code::NotTransitive,
                "expected a single transitive orbit, found " + std::to_string(dec.orbits.size()));
  Orbit& orbit = dec.orbits[0];
  if (orbit.multiplicity != 1)
    throw Error(Error::Code::RepeatedRoots, "orbit roots are not pairwise distinct");

  const LinearForm& t = orbit.roots[0];  // canonical: smallest root
  const int r = static_cast<int>(orbit.roots.size());

  // Coset representative per root: the minimal element index mapping t there.
  std::vector<int> cosets(static_cast<size_t>(r), -1);
  for (int gi = 0; gi < G.size(); ++gi) {
    const LinearForm img = act(G.element(gi), t);
    for (int j = 0; j < r; ++j)
      if (orbit.roots[static_cast<size_t>(j)] == img) {
        if (cosets[static_cast<size_t>(j)] < 0) cosets[static_cast<size_t>(j)] = gi;
        break;
      }
  }
  for (int j = 0; j < r; ++j)
    internal_check(cosets[static_cast<size_t>(j)] >= 0, "orbit root unreachable from chosen root");

  std::vector<int> stabilizer;
  for (int gi = 0; gi < G.size(); ++gi)
    if (act(G.element(gi), t) == t) stabilizer.push_back(gi);
  internal_check(static_cast<int>(stabilizer.size()) * r == G.size(),
                 "orbit-stabilizer count mismatch");

  // Permutation action of every element on the root list.
  std::vector<std::vector<int>> perms;
  perms.reserve(static_cast<size_t>(G.size()));
  for (int gi = 0; gi < G.size(); ++gi) {
    std::vector<int> perm(static_cast<size_t>(r), -1);
    for (int j = 0; j < r; ++j) {
      const LinearForm img = act(G.element(gi), orbit.roots[static_cast<size_t>(j)]);
      for (int k = 0; k < r; ++k)
        if (orbit.roots[static_cast<size_t>(k)] == img) {
          perm[static_cast<size_t>(j)] = k;
          break;
        }
      internal_check(perm[static_cast<size_t>(j)] >= 0, "group action leaves the orbit");
    }
    perms.push_back(std::move(perm));
  }

  // Reconstruction: the diagonal multiset must reproduce s exactly.
  RootMultiset recon(s.field(), s.nvars());
  for (const auto& u : orbit.roots) recon.add(u);
  internal_check(recon.product() == s, "descended orbit does not reconstruct the input");

  return SpectralDatum{std::move(stabilizer), std::move(cosets), t, std::move(orbit.roots),
                       std::move(perms), r};
}

bool image_check(const HitchinPoint& s, const GroupRep& G, const SplitConfig& cfg) {
  if (!is_invariant(s, G)) return false;
  const SplitResult split = total_split(s, cfg);
  if (split.verdict == SplitVerdict::Inconclusive)
    throw Error(Error::Code::Inconclusive, "total_split was inconclusive");
  return split.verdict == SplitVerdict::Split;
}

namespace {

std::vector<Scalar> random_vector(SplitMix64& rng, const FieldSpec& field, int d, long height) {
  std::vector<Scalar> v;
  v.reserve(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    if (field.is_prime_field())
      v.emplace_back(field, static_cast<long>(rng.below(field.characteristic())));
    else
      v.emplace_back(field, rng.range(-height, height));
  }
  return v;
}

std::vector<LinearForm> orbit_of(const GroupRep& G, const LinearForm& t) {
  std::vector<LinearForm> orbit;
  for (int gi = 0; gi < G.size(); ++gi) {
    const LinearForm img = act(G.element(gi), t);
    if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(img);
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

}  // namespace

RootMultiset sample_stable_multiset(const GroupRep& G, int r, uint64_t seed, long height) {
  if (r < 1) throw Error(Error::Code::InvalidInput, "r must be >= 1");
  const FieldSpec& field = G.field();
  const int d = G.dim();
  SplitMix64 rng(seed ^ 0x5851F42D4C957F2DULL);

  for (int attempt = 0; attempt < 64; ++attempt) {
    // Orbit pool: seeded random vectors closed into full orbits, plus the
    // zero vector whose orbit has size 1.
    std::vector<std::vector<LinearForm>> orbits;
    auto add_orbit = [&](const LinearForm& t) {
      auto orb = orbit_of(G, t);
      if (std::find(orbits.begin(), orbits.end(), orb) == orbits.end())
        orbits.push_back(std::move(orb));
    };
    const int pool = std::max(4 * r, 8);
    for (int i = 0; i < pool; ++i)
      add_orbit(LinearForm(field, random_vector(rng, field, d, height)));
    add_orbit(LinearForm::zero(field, d));

    // Largest-fit greedy over orbit sizes; reusing an orbit is allowed and
    // contributes its roots with higher multiplicity.
    std::stable_sort(orbits.begin(), orbits.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    RootMultiset chosen(field, d);
    int remaining = r;
    size_t next = 0;
    bool progress = true;
    while (remaining > 0 && progress) {
      progress = false;
      for (size_t i = next; i < orbits.size(); ++i) {
        if (static_cast<int>(orbits[i].size()) <= remaining) {
          for (const auto& u : orbits[i]) chosen.add(u);
          remaining -= static_cast<int>(orbits[i].size());
          next = i + 1;
          progress = true;
          break;
        }
      }
      if (!progress && remaining > 0) {
        // Reuse the smallest orbit that fits.
        for (size_t i = orbits.size(); i-- > 0;) {
          if (static_cast<int>(orbits[i].size()) <= remaining) {
            for (const auto& u : orbits[i]) chosen.add(u);
            remaining -= static_cast<int>(orbits[i].size());
            progress = true;
            break;
          }
        }
      }
    }
    if (remaining == 0) return chosen;
  }
  throw Error(Error::Code::NoCombination, "no orbit-size combination sums to r");
}

HitchinPoint image_sample(const GroupRep& G, int r, uint64_t seed) {
  return sample_stable_multiset(G, r, seed).product();
}

std::vector<HSplitEntry> h_split_report(const HitchinPoint& s, const GroupRep& G,
                                        const SplitConfig& cfg) {
  const OrbitDecomposition dec = orbit_factorization(s, G, cfg);
  std::vector<HSplitEntry> out;
  out.reserve(dec.orbits.size());
  for (const auto& orbit : dec.orbits) {
    const int size = static_cast<int>(orbit.roots.size());
    internal_check(size <= s.r(), "orbit index exceeds r");
    internal_check(static_cast<int>(orbit.stabilizer.size()) * size == G.size(),
                   "orbit-stabilizer count mismatch");
    internal_check(is_invariant(orbit.factor, G), "orbit factor is not invariant");
    out.push_back(HSplitEntry{size, static_cast<int>(orbit.stabilizer.size())});
  }
  return out;
}

bool stratum_order(long m1, long m2) {
  if (m1 < 1 || m2 < 1) throw Error(Error::Code::InvalidInput, "decomposition types must be >= 1");
  return m2 % m1 == 0;
}

}  // namespace hstrata
