#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relweyl/linalg.hpp"
#include "relweyl/polynomial.hpp"
#include "relweyl/root_system.hpp"
#include "relweyl/tpoly.hpp"
#include "relweyl/weyl_group.hpp"

namespace relweyl {

// Graded module on the Schubert basis {X_w}. Cohomological degree 2i is the
// polynomial degree i block; block d lists the W-indices of elements of length
// d in enumeration order. Generator matrices act columnwise: the image of
// basis column w is sum_v M[v][w] X_v, so matrices compose like the group.
//
// Matrices for the simple reflections are built from the transition identity
//   s_i X_w = X_w - alpha_i * del_i X_w,  del_i X_w = X_{w s_i} or 0,
// with the degree-one product expanded by the Chevalley rule
//   lambda * X_v = sum_{alpha > 0, l(v s_alpha) = l(v) + 1} <lambda, alpha^vee> X_{v s_alpha}.
// Entries are integral by construction here; the polynomial engine
// (action_matrices_polynomial) recomputes them independently and must agree.
class CoinvariantModule {
 public:
  static CoinvariantModule build(const RootSystem& rs, const WeylGroup& W);

  const RootSystem& root_system() const { return *rs_; }
  const WeylGroup& weyl_group() const { return *W_; }

  int top_polynomial_degree() const { return static_cast<int>(blocks_.size()) - 1; }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  std::size_t block_dim(int d) const { return blocks_[d].size(); }
  std::size_t position_in_block(std::size_t w_index) const { return pos_[w_index]; }

  // Chevalley product of a weight-lattice linear form with X_{w_index};
  // result maps W-indices (all of length l(w)+1) to integer coefficients.
  std::map<std::size_t, Int> chevalley_product(const std::vector<Int>& lambda,
                                               std::size_t w_index) const;

  // Per-degree matrices of s_i, cached after first use.
  const std::vector<IntMat>& generator_matrices(int i) const;
  // Per-degree matrices of an arbitrary element, as the product over its word.
  std::vector<IntMat> element_matrices(const WeylElement& w) const;

  // Explicit Schubert representatives: X_{w0} = (1/|W|) prod_{alpha>0} alpha,
  // X_{w s_i} = del_i X_w along descents; every alternative descent path is
  // compared and a mismatch raises BraidInconsistency. Cached after first use.
  const std::vector<Polynomial>& representatives() const;
  const Polynomial& representative(std::size_t w_index) const;

  // Coefficients of f in the Schubert basis via the pairing
  // coeff_v = constant term of del_v f; throws NonIntegralEntry only where a
  // caller requires integrality (expand returns exact rationals).
  std::map<std::size_t, Rat> expand(const Polynomial& f) const;

  // Action of w computed the definitional way: act on each representative by
  // the word substitution, then re-expand. Integrality of entries is asserted.
  std::vector<IntMat> action_matrices_polynomial(const WeylElement& w) const;

 private:
  const RootSystem* rs_ = nullptr;
  const WeylGroup* W_ = nullptr;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> pos_;
  std::vector<std::vector<std::uint16_t>> refl_perms_;  // s_alpha for each positive root
  mutable std::vector<std::vector<IntMat>> gen_matrices_;  // [i][degree]
  mutable std::vector<char> gen_built_;
  mutable std::vector<Polynomial> reps_;
};

// Saturated lattice of W_L-invariants with the induced W(L) action. basis[d]
// has the invariant lattice basis of degree-d block as columns; action[g][d]
// is the matrix of W(L) generator g (index into rwg.generator_indices()).
class InvariantLattice {
 public:
  static InvariantLattice build(const CoinvariantModule& cm, const RelativeWeylGroup& rwg);

  const CoinvariantModule& module() const { return *cm_; }
  const RelativeWeylGroup& relative_group() const { return *rwg_; }

  int top_polynomial_degree() const { return static_cast<int>(basis_.size()) - 1; }
  const std::vector<IntMat>& basis() const { return basis_; }
  std::size_t dim(int d) const { return basis_[d].empty() ? 0 : basis_[d][0].size(); }
  std::vector<Int> graded_dims() const;

  // Matrices of the g-th W(L) generator, one per degree.
  const std::vector<IntMat>& generator_action(std::size_t g) const { return action_[g]; }
  // Matrices of an arbitrary W(L) element (by its index), via its generator word.
  std::vector<IntMat> element_action(std::size_t i) const;
  Rat trace_of(std::size_t i, int degree) const;

 private:
  const CoinvariantModule* cm_ = nullptr;
  const RelativeWeylGroup* rwg_ = nullptr;
  std::vector<IntMat> basis_;
  std::vector<std::vector<IntMat>> action_;
};

// Same matrices entrywise mod p; throws NotPrime unless p is prime.
class ModPLattice {
 public:
  static ModPLattice build(const InvariantLattice& il, std::int64_t p);

  std::int64_t p() const { return p_; }
  const RelativeWeylGroup& relative_group() const { return *rwg_; }
  const std::vector<ModMat>& generator_action(std::size_t g) const { return action_[g]; }
  std::vector<ModMat> element_action(std::size_t i) const;
  bool acts_as_identity(std::size_t i) const;

 private:
  std::int64_t p_ = 0;
  const RelativeWeylGroup* rwg_ = nullptr;
  std::vector<std::vector<ModMat>> action_;
};

// Expected graded dimensions of the invariant lattice: W(t)/W_L(t), where both
// Poincare polynomials come from length histograms. Exact division; throws
// DimensionMismatch when the division fails.
TPoly invariant_dimension_series(const RootSystem& rs, const WeylGroup& W, const std::vector<int>& J);

}  // namespace relweyl
