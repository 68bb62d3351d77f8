#ifndef HSTRATA_HARNESS_HPP
#define HSTRATA_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hstrata/equivariance.hpp"
#include "hstrata/higgs.hpp"

namespace hstrata {

// Seeded generator configuration. Identical configs give bit-identical
// outputs.
struct GenConfig {
  uint64_t seed = 0;
  FieldSpec field = FieldSpec::rationals();
  int r_max = 5;
  int d_max = 3;
  long height = 9;
};

enum class TupleMode { Diagonalizable, Companion };

struct GeneratedHiggs {
  HiggsField theta;
  // Diagonalizable mode: the diagonal forms, i.e. the split char-poly roots.
  std::optional<RootMultiset> known_roots;
};

// Commuting tuples by construction: conjugated diagonal tuples
// (split spectrum, roots known) or polynomials of one companion matrix
// (possibly non-split spectrum). Output always passes validation.
GeneratedHiggs gen_commuting_tuple(const GenConfig& cfg, TupleMode mode);

// G-stable multiset of size r built from full orbits; its symmetrization
// passes image_check.
RootMultiset gen_stable_multiset(const GroupRep& G, int r, const GenConfig& cfg);

struct SuiteFailure {
  int case_index = 0;
  uint64_t seed = 0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  int cases = 0;
  std::vector<SuiteFailure> failures;
  long long millis = 0;
};

// Registered suites: roundtrip, oracle_eq, charpoly, direct_sum, proj,
// galois, image, torus. Throws UnknownSuite otherwise.
SuiteReport run_suite(const std::string& name, const GenConfig& cfg);

const std::vector<std::string>& registered_suites();

}  // namespace hstrata

#endif
