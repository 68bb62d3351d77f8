#ifndef HSTRATA_LATTICE_HPP
#define HSTRATA_LATTICE_HPP

#include <gmpxx.h>

#include <vector>

namespace hstrata {

using IntMat = std::vector<std::vector<mpz_class>>;
using RatMat = std::vector<std::vector<mpq_class>>;
using RatVec = std::vector<mpq_class>;

int rat_rank(RatMat m);

// Rows form a basis of { u : u^T M = 0 }.
RatMat rat_left_nullspace(const RatMat& m);

// Whether V x = w has an integer solution x; decided by reducing V to column
// echelon form with unimodular column operations (Hermite-style) and forward
// substitution with divisibility checks.
bool integer_solvable(IntMat v, std::vector<mpz_class> w);

RatMat rat_mat_mul(const RatMat& a, const RatMat& b);
RatVec rat_mat_vec(const RatMat& a, const RatVec& v);
RatMat rat_identity(int n);

}  // namespace hstrata

#endif
