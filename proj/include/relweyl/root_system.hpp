#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relweyl/numeric.hpp"

namespace relweyl {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Irreducible type X_n. Valid ranks: A n>=1, B n>=2, C n>=3, D n>=4, E 6..8, F 4, G 2
// (low-rank coincidences such as C2=B2 and D3=A3 are rejected rather than aliased).
struct CartanType {
  Series series;
  int rank;

  // Accepts forms like "A3", "b2", "E6"; case-insensitive. Throws UnsupportedType.
  static CartanType parse(const std::string& s);
  std::string to_string() const;

  bool operator==(const CartanType& o) const { return series == o.series && rank == o.rank; }
};

// |W| by the product formula; exact.
Int weyl_order(CartanType t);

// Roots are integer coordinate vectors in the simple-root basis.
using Root = std::vector<int>;

int height(const Root& r);

// Root index space: 0..m-1 are the positive roots sorted by (height, lex),
// m+i is the negative of positive root i. Simple roots are the height-1 block.
class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }

  // cartan(i, j) = <alpha_j, alpha_i^vee>, so s_i(alpha_j) = alpha_j - cartan(i, j) alpha_i.
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  int cartan(int i, int j) const { return cartan_[i][j]; }

  // (alpha_i, alpha_j), normalized so short roots have squared length 2. Integral and
  // positive definite; equals diag(d) * cartan with d_i = (alpha_i, alpha_i)/2.
  const std::vector<std::vector<int>>& bilinear_form() const { return bilinear_; }
  const std::vector<int>& symmetrizer() const { return d_; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  std::size_t num_positive() const { return positive_.size(); }
  std::size_t num_roots() const { return 2 * positive_.size(); }

  const Root& root(std::size_t idx) const;
  bool is_root(const Root& r) const;
  std::size_t root_index(const Root& r) const;  // throws NotARoot
  std::size_t negate_index(std::size_t idx) const;
  bool is_negative_index(std::size_t idx) const { return idx >= positive_.size(); }
  std::size_t simple_root_index(int i) const { return simple_index_[i]; }

  // s_i(r) for 0-based simple index i; r must be a root (NotARoot otherwise).
  Root reflect(int i, const Root& r) const;
  std::size_t reflect_index(int i, std::size_t idx) const { return simple_perm_[i][idx]; }
  const std::vector<std::uint32_t>& simple_reflection_perm(int i) const { return simple_perm_[i]; }

  // s_alpha for alpha = positive root #k, as a permutation of the root index space.
  std::vector<std::uint32_t> reflection_perm(std::size_t k) const;

  // (r1, r2) under the normalized form; arguments in simple-root coordinates.
  Int form(const Root& r1, const Root& r2) const;
  // <r, alpha^vee> for alpha = positive root #k; always an integer.
  Int coroot_pairing(const Root& r, std::size_t k) const;
  // <lambda, alpha^vee> with lambda in fundamental-weight coordinates.
  Int coroot_pairing_weight(const std::vector<Int>& lambda, std::size_t k) const;

  Int weyl_order() const { return relweyl::weyl_order(type_); }

 private:
  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> bilinear_;
  std::vector<int> d_;
  std::vector<Root> positive_;
  std::vector<Root> all_;  // positives then negatives
  std::vector<std::size_t> simple_index_;
  std::vector<std::vector<std::uint32_t>> simple_perm_;

  std::size_t find_index(const Root& r) const;  // npos if absent
};

}  // namespace relweyl
