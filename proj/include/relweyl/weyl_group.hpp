#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "relweyl/numeric.hpp"
#include "relweyl/root_system.hpp"

namespace relweyl {

// Canonical form is the root permutation; matrix and length are derived views.
// matrix is rank x rank row-major with column j = coordinates of w(alpha_j),
// so M(wv) = M(w)M(v). word is the lexicographically smallest reduced word
// (0-based generator indices); length == word.size() == #inversions.
struct WeylElement {
  std::vector<std::uint16_t> perm;
  std::vector<int> matrix;
  std::vector<std::uint8_t> word;
  int length = 0;

  bool operator==(const WeylElement& o) const { return perm == o.perm; }
  bool operator!=(const WeylElement& o) const { return perm != o.perm; }
};

WeylElement identity_element(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int i);
WeylElement multiply(const RootSystem& rs, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootSystem& rs, const WeylElement& a);
WeylElement element_from_word(const RootSystem& rs, const std::vector<int>& word);

// (-1)^length.
int sign_character(const WeylElement& w);

// Lexicographically smallest reduced word recovered from the permutation alone.
std::vector<std::uint8_t> lex_min_word(const RootSystem& rs, const std::vector<std::uint16_t>& perm);

struct PermHash {
  std::size_t operator()(const std::vector<std::uint16_t>& p) const;
};
using PermIndexMap = std::unordered_map<std::vector<std::uint16_t>, std::size_t, PermHash>;

// Full enumeration in BFS order: by length, ties broken by lex-min reduced word;
// elements[0] is the identity.
class WeylGroup {
 public:
  static WeylGroup enumerate(const RootSystem& rs, const Int& max_order);

  const RootSystem& root_system() const { return *rs_; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t index_of(const std::vector<std::uint16_t>& perm) const;  // throws Error if absent
  std::optional<std::size_t> find(const std::vector<std::uint16_t>& perm) const;
  std::size_t longest_index() const { return elements_.size() - 1; }

  // Coefficient k = #{w : length(w) = k}.
  std::vector<Int> length_histogram() const;

 private:
  const RootSystem* rs_ = nullptr;
  std::vector<WeylElement> elements_;
  PermIndexMap index_;
};

inline constexpr std::uint64_t kDefaultMaxOrder = 1000000;

// W_L = <s_j : j in J>, J a set of 0-based simple indices. Elements in BFS order
// over the J alphabet; lengths in W restrict to word lengths over J.
struct ParabolicSubgroup {
  std::vector<int> J;
  std::vector<WeylElement> elements;
  PermIndexMap index;

  bool contains(const std::vector<std::uint16_t>& perm) const;
};

ParabolicSubgroup parabolic_subgroup(const RootSystem& rs, const std::vector<int>& J);

// Indices (into the root index space) of the positive roots supported on J.
std::vector<std::uint32_t> parabolic_positive_roots(const RootSystem& rs, const std::vector<int>& J);

// W(L) = { w in N_W(W_L) : w(Phi_L^+) = Phi_L^+ }.
class RelativeWeylGroup {
 public:
  static RelativeWeylGroup build(const RootSystem& rs, const WeylGroup& W, const std::vector<int>& J);

  const RootSystem& root_system() const { return *rs_; }
  const WeylGroup& weyl_group() const { return *W_; }
  const std::vector<int>& J() const { return J_; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  const Int& normalizer_order() const { return normalizer_order_; }
  const Int& parabolic_order() const { return parabolic_order_; }

  std::size_t index_of(const std::vector<std::uint16_t>& perm) const;
  std::size_t mult(std::size_t i, std::size_t j) const;
  std::size_t inverse_of(std::size_t i) const { return inverse_[i]; }
  bool has_full_table() const { return !table_.empty(); }

  // Greedily chosen generating set (indices into elements()).
  const std::vector<std::size_t>& generator_indices() const { return generators_; }
  // Shortest word over generator_indices() for each element; BFS-deterministic.
  const std::vector<std::vector<std::uint32_t>>& generator_words() const { return gen_words_; }
  int word_length(std::size_t i) const { return static_cast<int>(gen_words_[i].size()); }

  // Sorted by smallest member; classes[i] is ascending.
  const std::vector<std::vector<std::size_t>>& conjugacy_classes() const { return classes_; }
  std::size_t class_of(std::size_t i) const { return class_of_[i]; }

 private:
  const RootSystem* rs_ = nullptr;
  const WeylGroup* W_ = nullptr;
  std::vector<int> J_;
  std::vector<WeylElement> elements_;
  PermIndexMap index_;
  Int normalizer_order_ = 0;
  Int parabolic_order_ = 0;
  std::vector<std::uint32_t> table_;  // k*k when small enough, else empty
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> generators_;
  std::vector<std::vector<std::uint32_t>> gen_words_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
};

struct SemidirectReport {
  CartanType type;
  std::vector<int> J;
  Int parabolic_order;
  Int normalizer_order;
  Int relative_order;
  bool intersection_trivial = false;
  bool product_covers = false;
  bool parabolic_normal = false;
  std::string witness;  // empty when ok

  bool ok() const { return intersection_trivial && product_covers && parabolic_normal; }
};

SemidirectReport verify_semidirect(const RootSystem& rs, const WeylGroup& W, const RelativeWeylGroup& rwg);

// Action of W(L) on the W_L-fixed subspace of the reflection representation.
// codims[i] = codimension of the fixed space of element i inside V^{W_L}.
// An element with codim 1 acts as a (pseudo-)reflection there; this is a
// classification heuristic, not a presentation or Coxeterness proof.
struct ReflectionReport {
  int fixed_space_dim = 0;
  std::vector<int> codims;
  std::vector<std::size_t> reflection_indices;
  bool reflections_generate = false;
  std::string label = "heuristic: codim-1 classification on V^{W_L}, not a Coxeterness proof";
};

ReflectionReport reflection_classification(const RelativeWeylGroup& rwg);

}  // namespace relweyl
