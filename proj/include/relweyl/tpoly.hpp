#pragma once

#include <vector>

#include "relweyl/numeric.hpp"

namespace relweyl {

// Dense univariate polynomials in t with exact integer coefficients,
// coefficient k at index k. Used for length generating functions, Poincare
// polynomials and degree extraction.
using TPoly = std::vector<Int>;

TPoly tp_trim(TPoly p);
TPoly tp_mul(const TPoly& a, const TPoly& b);
TPoly tp_sub(const TPoly& a, const TPoly& b);
bool tp_equal(const TPoly& a, const TPoly& b);
Int tp_eval_one(const TPoly& p);
int tp_degree(const TPoly& p);

// Exact division; returns false (and leaves q empty) when b does not divide a.
bool tp_divide(const TPoly& a, const TPoly& b, TPoly& q);

// [d]_t = 1 + t + ... + t^{d-1}.
TPoly tp_qbracket(int d);
// Cyclotomic polynomial Phi_k, by recursive division of t^k - 1.
TPoly tp_cyclotomic(int k);

}  // namespace relweyl
