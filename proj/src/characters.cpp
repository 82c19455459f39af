#include "relweyl/characters.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "relweyl/error.hpp"

namespace relweyl {

std::vector<int> fundamental_degrees(const RootSystem& rs,
                                     const std::vector<Int>& length_histogram) {
  const TPoly wt = tp_trim(length_histogram);
  const int m = tp_degree(wt);
  const int n = rs.rank();

  // Multiplicity of Phi_e in W(t) counts the degrees divisible by e; walking e
  // downward, any degree strictly above e divisible by e is already placed.
  std::vector<int> degrees;
  for (int e = m + 1; e >= 2; --e) {
    int mult = 0;
    TPoly rem = wt;
    const TPoly phi = tp_cyclotomic(e);
    TPoly q;
    while (tp_divide(rem, phi, q)) {
      ++mult;
      rem = q;
      q.clear();
    }
    int placed = 0;
    for (int d : degrees)
      if (d % e == 0) ++placed;
    if (mult < placed)
      throw FactorizationFailure("cyclotomic multiplicities are inconsistent at e = " +
                                 std::to_string(e));
    for (int k = 0; k < mult - placed; ++k) degrees.push_back(e);
  }
  std::sort(degrees.begin(), degrees.end());

  if (static_cast<int>(degrees.size()) != n)
    throw FactorizationFailure("extracted " + std::to_string(degrees.size()) +
                               " degrees, expected " + std::to_string(n));
  TPoly product = {Int(1)};
  for (int d : degrees) product = tp_mul(product, tp_qbracket(d));
  if (!tp_equal(product, wt))
    throw FactorizationFailure("q-bracket product does not reproduce the length series");

  // Independent check: exponents are the conjugate partition of the height
  // distribution of the positive roots.
  std::map<int, int> by_height;
  for (const auto& r : rs.positive_roots()) by_height[height(r)] += 1;
  std::vector<int> heights;
  for (const auto& [h, c] : by_height) heights.push_back(c);
  std::vector<int> dual_degrees;
  for (int j = 1; j <= (heights.empty() ? 0 : heights[0]); ++j) {
    int exponent = 0;
    for (int c : heights)
      if (c >= j) ++exponent;
    dual_degrees.push_back(exponent + 1);
  }
  std::sort(dual_degrees.begin(), dual_degrees.end());
  if (dual_degrees != degrees)
    throw FactorizationFailure("degrees disagree with the height-duality reconstruction");

  return degrees;
}

MolienEngine::MolienEngine(const RootSystem& rs, const WeylGroup& W) : rs_(&rs) {
  degrees_ = fundamental_degrees(rs, W.length_histogram());
  numerator_ = {Int(1)};
  for (int d : degrees_) {
    TPoly factor(static_cast<std::size_t>(d) + 1, Int(0));
    factor[0] = 1;
    factor[static_cast<std::size_t>(d)] = -1;
    numerator_ = tp_mul(numerator_, factor);
  }
}

TPoly char_poly_reversed(const std::vector<int>& matrix, int rank) {
  // Faddeev-LeVerrier: c_k = tr(M_k)/k with M_k = M (M_{k-1} - c_{k-1} I);
  // det(1 - t M) = 1 - c_1 t - ... - c_n t^n.
  const std::size_t n = static_cast<std::size_t>(rank);
  std::vector<Int> M(n * n), Mk(n * n), tmp(n * n);
  for (std::size_t i = 0; i < n * n; ++i) M[i] = matrix[i];
  Mk = M;
  TPoly out(n + 1, Int(0));
  out[0] = 1;
  Int ck = 0;
  for (int k = 1; k <= rank; ++k) {
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += Mk[i * n + i];
    if (tr % k != 0) throw Error("Faddeev-LeVerrier trace is not divisible");
    ck = tr / k;
    out[static_cast<std::size_t>(k)] = -ck;
    if (k == rank) break;
    for (std::size_t i = 0; i < n; ++i) Mk[i * n + i] -= ck;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Int s = 0;
        for (std::size_t l = 0; l < n; ++l) s += M[i * n + l] * Mk[l * n + j];
        tmp[i * n + j] = s;
      }
    Mk = tmp;
  }
  return out;
}

std::vector<Rat> MolienEngine::graded_trace(const WeylElement& w, int max_degree) const {
  return graded_trace_matrix(w.matrix, max_degree);
}

std::vector<Rat> MolienEngine::graded_trace_matrix(const std::vector<int>& matrix,
                                                   int max_degree) const {
  const TPoly den = char_poly_reversed(matrix, rs_->rank());
  // Power series division; den[0] = 1 keeps everything integral.
  std::vector<Rat> out(static_cast<std::size_t>(max_degree) + 1, Rat(0));
  for (int k = 0; k <= max_degree; ++k) {
    Rat acc = k < static_cast<int>(numerator_.size()) ? Rat(numerator_[static_cast<std::size_t>(k)])
                                                      : Rat(0);
    for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j)
      acc -= Rat(den[static_cast<std::size_t>(j)]) * out[static_cast<std::size_t>(k - j)];
    out[static_cast<std::size_t>(k)] = acc;
  }
  return out;
}

std::vector<Rat> partial_flag_character(const MolienEngine& eng, const ParabolicSubgroup& WL,
                                        const WeylElement& w, int max_degree) {
  const int n = eng.root_system().rank();
  std::vector<Rat> acc(static_cast<std::size_t>(max_degree) + 1, Rat(0));
  std::vector<int> product(static_cast<std::size_t>(n) * n);
  for (const auto& u : WL.elements) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int s = 0;
        for (int l = 0; l < n; ++l)
          s += w.matrix[static_cast<std::size_t>(i) * n + l] *
               u.matrix[static_cast<std::size_t>(l) * n + j];
        product[static_cast<std::size_t>(i) * n + j] = s;
      }
    const auto trace = eng.graded_trace_matrix(product, max_degree);
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += trace[k];
  }
  const Rat scale(Int(1), Int(WL.elements.size()));
  for (auto& v : acc) v *= scale;
  return acc;
}

namespace {

int top_exponent_of(const RootSystem& rs, const ParabolicSubgroup& WL) {
  return static_cast<int>(rs.num_positive() - parabolic_positive_roots(rs, WL.J).size());
}

// Per-element values of the top-degree character, with class constancy and
// multiplicativity verified on the way.
std::vector<Rat> epsilon_values(const MolienEngine& eng, const ParabolicSubgroup& WL,
                                const RelativeWeylGroup& rwg, int N) {
  std::vector<Rat> per_element(rwg.order());
  for (std::size_t i = 0; i < rwg.order(); ++i)
    per_element[i] = partial_flag_character(eng, WL, rwg.elements()[i], N)[static_cast<std::size_t>(N)];

  if (per_element[0] != 1)
    throw NotOneDimensional("identity has top-degree trace " + rat_to_string(per_element[0]));
  for (const auto& v : per_element)
    if (v != 1 && v != -1)
      throw NotOneDimensional("top-degree trace " + rat_to_string(v) + " is not a sign");
  for (const auto& cls : rwg.conjugacy_classes())
    for (std::size_t member : cls)
      if (per_element[member] != per_element[cls[0]])
        throw NotMultiplicative("top-degree trace is not constant on a conjugacy class");
  for (std::size_t g : rwg.generator_indices())
    for (std::size_t x = 0; x < rwg.order(); ++x)
      if (per_element[rwg.mult(g, x)] != per_element[g] * per_element[x])
        throw NotMultiplicative("top-degree trace fails epsilon(g x) = epsilon(g) epsilon(x)");
  return per_element;
}

}  // namespace

EpsilonCharacter EpsilonCharacter::build(const MolienEngine& eng, const ParabolicSubgroup& WL,
                                         const RelativeWeylGroup& rwg) {
  EpsilonCharacter eps;
  eps.rwg_ = &rwg;
  eps.N_ = top_exponent_of(eng.root_system(), WL);
  const auto per_element = epsilon_values(eng, WL, rwg, eps.N_);
  for (const auto& cls : rwg.conjugacy_classes()) eps.class_values_.push_back(per_element[cls[0]]);
  return eps;
}

const Rat& EpsilonCharacter::value(std::size_t element_index) const {
  return class_values_[rwg_->class_of(element_index)];
}

GroupAlgebraElement lambda_U(const EpsilonCharacter& eps, const GroupAlgebraElement& x) {
  GroupAlgebraElement out;
  for (const auto& [i, c] : x) {
    const Rat v = c * eps.value(i);
    if (v != 0) out.emplace(i, v);
  }
  return out;
}

GradedCharacter GradedCharacter::build(const MolienEngine& eng, const ParabolicSubgroup& WL,
                                       const RelativeWeylGroup& rwg) {
  GradedCharacter gc;
  gc.rwg_ = &rwg;
  gc.N_ = top_exponent_of(eng.root_system(), WL);

  std::vector<std::vector<Rat>> per_element(rwg.order());
  for (std::size_t i = 0; i < rwg.order(); ++i) {
    per_element[i] = partial_flag_character(eng, WL, rwg.elements()[i], gc.N_);
    for (const auto& v : per_element[i])
      if (!is_integer(v))
        throw NonIntegralEntry("graded trace " + rat_to_string(v) + " is not an integer");
  }
  for (const auto& cls : rwg.conjugacy_classes()) {
    for (std::size_t member : cls)
      if (per_element[member] != per_element[cls[0]])
        throw Error("graded trace is not constant on a conjugacy class");
    gc.values_.push_back(per_element[cls[0]]);
  }
  return gc;
}

std::vector<Int> GradedCharacter::graded_dims() const {
  std::vector<Int> out;
  for (const auto& v : values_[0]) out.push_back(rat_num(v));
  return out;
}

namespace {

std::string word_string(const WeylElement& w) {
  if (w.word.empty()) return "e";
  std::string s;
  for (std::uint8_t letter : w.word) {
    if (!s.empty()) s += " ";
    s += std::to_string(static_cast<int>(letter) + 1);
  }
  return s;
}

}  // namespace

std::string characters_to_json(const GradedCharacter& gc, const EpsilonCharacter& eps) {
  using json = nlohmann::ordered_json;
  const auto& rwg = gc.group();
  json out;
  out["type"] = rwg.root_system().type().to_string();
  json jarr = json::array();
  for (int j : rwg.J()) jarr.push_back(j + 1);
  out["J"] = jarr;
  out["order"] = rwg.order();
  out["parabolic_order"] = rwg.parabolic_order().convert_to<std::int64_t>();
  out["normalizer_order"] = rwg.normalizer_order().convert_to<std::int64_t>();
  out["top_degree"] = 2 * gc.top_exponent();
  json dims = json::array();
  for (const auto& d : gc.graded_dims()) dims.push_back(d.convert_to<std::int64_t>());
  out["graded_dims"] = dims;
  json classes = json::array();
  for (std::size_t c = 0; c < rwg.conjugacy_classes().size(); ++c) {
    const auto& cls = rwg.conjugacy_classes()[c];
    json jc;
    jc["class"] = c;
    jc["size"] = cls.size();
    jc["representative_word"] = word_string(rwg.elements()[cls[0]]);
    jc["length_in_W"] = rwg.elements()[cls[0]].length;
    jc["epsilon"] = eps.value_of_class(c).convert_to<std::int64_t>();
    json traces = json::array();
    for (int i = 0; i <= gc.top_exponent(); ++i)
      traces.push_back(rat_num(gc.value(c, i)).convert_to<std::int64_t>());
    jc["graded_trace"] = traces;
    classes.push_back(jc);
  }
  out["classes"] = classes;
  return out.dump(2) + "\n";
}

std::string characters_to_tsv(const GradedCharacter& gc, const EpsilonCharacter& eps) {
  const auto& rwg = gc.group();
  std::string out = "class\tsize\trepresentative\tepsilon";
  for (int i = 0; i <= gc.top_exponent(); ++i) out += "\tH" + std::to_string(2 * i);
  out += "\n";
  for (std::size_t c = 0; c < rwg.conjugacy_classes().size(); ++c) {
    const auto& cls = rwg.conjugacy_classes()[c];
    out += std::to_string(c) + "\t" + std::to_string(cls.size()) + "\t" +
           word_string(rwg.elements()[cls[0]]) + "\t" + rat_to_string(eps.value_of_class(c));
    for (int i = 0; i <= gc.top_exponent(); ++i) out += "\t" + rat_to_string(gc.value(c, i));
    out += "\n";
  }
  return out;
}

}  // namespace relweyl
