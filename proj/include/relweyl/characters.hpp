#pragma once

#include <map>
#include <string>
#include <vector>

#include "relweyl/numeric.hpp"
#include "relweyl/root_system.hpp"
#include "relweyl/tpoly.hpp"
#include "relweyl/weyl_group.hpp"

namespace relweyl {

// Fundamental degrees d_1..d_n, extracted by factoring the length generating
// function into q-brackets [d]_t (via cyclotomic multiplicities) and verified
// against the dual partition of the positive-root height distribution.
// Throws FactorizationFailure if either step fails; this doubles as a
// self-test of the enumeration.
std::vector<int> fundamental_degrees(const RootSystem& rs, const std::vector<Int>& length_histogram);

// Precomputed numerator prod_i (1 - t^{d_i}) for the Molien traces.
class MolienEngine {
 public:
  MolienEngine(const RootSystem& rs, const WeylGroup& W);

  const RootSystem& root_system() const { return *rs_; }
  const std::vector<int>& degrees() const { return degrees_; }

  // Graded trace of w on the coinvariant algebra:
  //   prod_i (1 - t^{d_i}) / det(1 - t M_w),
  // truncated at max_degree inclusive. Exact; coefficients are integers.
  std::vector<Rat> graded_trace(const WeylElement& w, int max_degree) const;
  // Same but from a bare root-basis matrix (row-major rank x rank).
  std::vector<Rat> graded_trace_matrix(const std::vector<int>& matrix, int max_degree) const;

 private:
  const RootSystem* rs_ = nullptr;
  std::vector<int> degrees_;
  TPoly numerator_;
};

// det(1 - t M) for an integer matrix in row-major form, exact.
TPoly char_poly_reversed(const std::vector<int>& matrix, int rank);

// Graded trace of w on the W_L-invariants (the H*(G/P) model):
//   (1/|W_L|) sum_{u in W_L} molien(w u).
// Defined for w normalizing W_L; coefficients vanish above N = number of
// positive roots outside Phi_L.
std::vector<Rat> partial_flag_character(const MolienEngine& eng, const ParabolicSubgroup& WL,
                                        const WeylElement& w, int max_degree);

// Character of the top cohomology H^{2N}: epsilon_U(w) = coefficient of t^N in
// the partial flag character. Values are class functions with value 1 on the
// identity (NotOneDimensional otherwise) and multiplicative (NotMultiplicative
// otherwise); both are checked, which forces every value into {+1, -1}.
class EpsilonCharacter {
 public:
  static EpsilonCharacter build(const MolienEngine& eng, const ParabolicSubgroup& WL,
                                const RelativeWeylGroup& rwg);

  const RelativeWeylGroup& group() const { return *rwg_; }
  int top_exponent() const { return N_; }  // N = |Phi^+| - |Phi_L^+|
  const Rat& value_of_class(std::size_t c) const { return class_values_[c]; }
  const Rat& value(std::size_t element_index) const;
  const std::vector<Rat>& class_values() const { return class_values_; }

 private:
  const RelativeWeylGroup* rwg_ = nullptr;
  int N_ = 0;
  std::vector<Rat> class_values_;
};

// Element of Q[W(L)], sparse over element indices.
using GroupAlgebraElement = std::map<std::size_t, Rat>;

// Lambda_U: w -> epsilon_U(w) w, extended linearly. An involution.
GroupAlgebraElement lambda_U(const EpsilonCharacter& eps, const GroupAlgebraElement& x);

// Graded character table of W(L) on the H*(G/P) model. values[c][i] is the
// trace of class c on cohomological degree 2i; the identity column is the
// vector of graded dimensions. Traces are checked to be constant on classes
// and integral.
class GradedCharacter {
 public:
  static GradedCharacter build(const MolienEngine& eng, const ParabolicSubgroup& WL,
                               const RelativeWeylGroup& rwg);

  const RelativeWeylGroup& group() const { return *rwg_; }
  int top_exponent() const { return N_; }
  const Rat& value(std::size_t c, int i) const { return values_[c][i]; }
  const std::vector<std::vector<Rat>>& values() const { return values_; }
  std::vector<Int> graded_dims() const;

 private:
  const RelativeWeylGroup* rwg_ = nullptr;
  int N_ = 0;
  std::vector<std::vector<Rat>> values_;  // [class][degree/2]
};

// JSON for the characters/epsilon CLI output; 1-based generator indices.
std::string characters_to_json(const GradedCharacter& gc, const EpsilonCharacter& eps);
std::string characters_to_tsv(const GradedCharacter& gc, const EpsilonCharacter& eps);

}  // namespace relweyl
