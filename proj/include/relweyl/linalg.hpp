#pragma once

#include <cstdint>
#include <vector>

#include "relweyl/numeric.hpp"

namespace relweyl {

// Dense exact matrices, row-major vectors of rows.
using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;

IntMat int_identity(std::size_t n);
IntMat int_mul(const IntMat& a, const IntMat& b);
bool is_identity(const IntMat& a);

// Entrywise reduction to [0, p).
using ModMat = std::vector<std::vector<std::int64_t>>;
ModMat mod_reduce(const IntMat& a, std::int64_t p);
ModMat mod_mul(const ModMat& a, const ModMat& b, std::int64_t p);
bool mod_is_identity(const ModMat& a);

// Gaussian elimination over F_p (p prime).
int mod_rank(ModMat a, std::int64_t p);
// Basis of { x : A x = 0 } over F_p as columns, from the RREF free columns.
ModMat mod_kernel(const ModMat& a, std::int64_t p);

// Basis of { x : A x = 0 } as columns; saturated by construction since integer
// kernels of integer matrices are. Computed by unimodular column reduction.
IntMat integer_kernel(const IntMat& a);

// Rational kernel basis (columns), from the RREF free columns.
RatMat rational_kernel(const RatMat& a);

// Solve B * R = X for R where the columns of B are independent; throws
// DimensionMismatch if inconsistent. B is n x d, X is n x c, R is d x c.
RatMat solve_exact(const RatMat& b, const RatMat& x);

RatMat to_rat(const IntMat& a);
// Throws NonIntegralEntry unless every entry is integral.
IntMat to_int(const RatMat& a, const char* context);

int rat_rank(RatMat a);

}  // namespace relweyl
