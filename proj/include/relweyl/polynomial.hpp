#pragma once

#include <map>
#include <string>
#include <vector>

#include "relweyl/numeric.hpp"
#include "relweyl/root_system.hpp"

namespace relweyl {

// Sparse exact polynomial in the fundamental-weight coordinates x_0..x_{n-1}
// (x_i is the linear functional <., alpha_i^vee>, i.e. the weight omega_i).
// Invariant: no explicit zero coefficients; term order is the map order on
// exponent vectors, which makes iteration and printing deterministic.
class Polynomial {
 public:
  using Mono = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rat& c);
  static Polynomial variable(int nvars, int i);
  // Linear form sum_i coeffs[i] * x_i.
  static Polynomial linear(const std::vector<Rat>& coeffs);
  // alpha_i as a linear polynomial: column i of the Cartan matrix.
  static Polynomial simple_root(const RootSystem& rs, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Mono, Rat>& terms() const { return terms_; }

  Rat constant_term() const;
  Rat coefficient(const Mono& m) const;
  Polynomial homogeneous_part(int d) const;

  Polynomial& add_term(const Mono& m, const Rat& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rat& c) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  bool operator==(const Polynomial& o) const;

  std::string to_string() const;

 private:
  int nvars_ = 0;
  std::map<Mono, Rat> terms_;
};

// s_i f: substitutes x_i -> x_i - alpha_i; other variables are fixed.
Polynomial apply_simple_reflection(const RootSystem& rs, int i, const Polynomial& f);
// w f along a reduced word (0-based indices, leftmost letter applied last).
Polynomial apply_word(const RootSystem& rs, const std::vector<std::uint8_t>& word, const Polynomial& f);

// del_i f = (f - s_i f) / alpha_i; the division is exact by construction and
// verified during synthetic division.
Polynomial divided_difference(const RootSystem& rs, int i, const Polynomial& f);
// del_w = del_{i1} o ... o del_{ik} for word i1..ik (rightmost applied first).
// Well-defined by braid independence, which schubert_basis checks separately.
Polynomial divided_difference_word(const RootSystem& rs, const std::vector<std::uint8_t>& word,
                                   const Polynomial& f);

}  // namespace relweyl
