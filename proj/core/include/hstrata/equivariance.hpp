#ifndef HSTRATA_EQUIVARIANCE_HPP
#define HSTRATA_EQUIVARIANCE_HPP

#include <vector>

#include "hstrata/group.hpp"
#include "hstrata/hitchin.hpp"

namespace hstrata {

// Group elements act on linear forms by the matrix itself (coefficient
// vector -> g * coefficients); on polynomials by the algebra extension of
// that, so e_i(g . roots) = g . e_i(roots) holds identically.
LinearForm act(const Matrix& g, const LinearForm& t);
GradedPoly act_sym(const Matrix& g, const GradedPoly& f);
HitchinPoint act_sym(const Matrix& g, const HitchinPoint& s);

// True iff every coefficient is fixed by every generator.
bool is_invariant(const HitchinPoint& s, const GroupRep& G);

struct Orbit {
  std::vector<LinearForm> roots;  // distinct forms, canonical order
  int multiplicity;               // common multiplicity of the orbit's roots
  std::vector<int> stabilizer;    // element indices, sorted
  HitchinPoint factor;            // prod over roots (y - t)^multiplicity
};

struct OrbitDecomposition {
  std::vector<Orbit> orbits;
};

// Partitions the root multiset of a totally-split invariant point into
// G-orbits. Throws NotInvariant / NotSplitOverField (and Inconclusive when
// splitting could not be decided).
OrbitDecomposition orbit_factorization(const HitchinPoint& s, const GroupRep& G,
                                       const SplitConfig& cfg = {});

// Descent data of a single transitive orbit of pairwise-distinct roots:
// stabilizer subgroup H of the chosen root, coset representatives of G/H
// (one per root, minimal element index), and the permutation action of every
// group element on the root list.
struct SpectralDatum {
  std::vector<int> stabilizer;
  std::vector<int> cosets;
  LinearForm root;
  std::vector<LinearForm> orbit_roots;  // orbit_roots[j] = cosets[j] . root
  std::vector<std::vector<int>> perm_action;
  int decomposition_type;
};

// Throws NotTransitive when the orbit count exceeds 1, RepeatedRoots on
// multiplicities, plus the orbit_factorization errors.
SpectralDatum descend(const HitchinPoint& s, const GroupRep& G, const SplitConfig& cfg = {});

// Membership test for the image of the Hitchin morphism in the modeled
// situation: invariant and totally split. Propagates Inconclusive.
bool image_check(const HitchinPoint& s, const GroupRep& G, const SplitConfig& cfg = {});

// Seeded G-stable root multiset of total size r, assembled from full orbits
// (the zero vector supplies a size-1 orbit). Throws NoCombination when no
// orbit-size multiset reaches r.
RootMultiset sample_stable_multiset(const GroupRep& G, int r, uint64_t seed, long height = 9);

// The elementary-symmetric point of a sampled stable multiset; always passes
// image_check.
HitchinPoint image_sample(const GroupRep& G, int r, uint64_t seed);

struct HSplitEntry {
  int orbit_size;
  int stabilizer_order;
};

// Per-orbit (orbit size, stabilizer order), asserting index <= r and orbit
// factor invariance.
std::vector<HSplitEntry> h_split_report(const HitchinPoint& s, const GroupRep& G,
                                        const SplitConfig& cfg = {});

// Stratum ordering: Z(m1) <= Z(m2) iff m1 divides m2.
bool stratum_order(long m1, long m2);

}  // namespace hstrata

#endif
