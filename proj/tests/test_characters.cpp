#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "relweyl/characters.hpp"
#include "relweyl/coinvariants.hpp"
#include "relweyl/error.hpp"

using namespace relweyl;

namespace {

WeylGroup enumerate(const RootSystem& rs) { return WeylGroup::enumerate(rs, Int(kDefaultMaxOrder)); }

std::vector<std::vector<int>> all_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> J;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) J.push_back(i);
    out.push_back(J);
  }
  return out;
}

}  // namespace

TEST_CASE("fundamental degrees for the frozen table") {
  const std::vector<std::pair<const char*, std::vector<int>>> expected = {
      {"A1", {2}},          {"A2", {2, 3}},        {"A3", {2, 3, 4}},
      {"A4", {2, 3, 4, 5}}, {"B2", {2, 4}},        {"B3", {2, 4, 6}},
      {"B4", {2, 4, 6, 8}}, {"C3", {2, 4, 6}},     {"D4", {2, 4, 4, 6}},
      {"G2", {2, 6}},       {"F4", {2, 6, 8, 12}},
  };
  for (const auto& [name, degrees] : expected) {
    RootSystem rs(CartanType::parse(name));
    CAPTURE(name);
    auto W = enumerate(rs);
    CHECK(fundamental_degrees(rs, W.length_histogram()) == degrees);
  }
}

TEST_CASE("fundamental degrees of E6") {
  RootSystem rs(CartanType::parse("E6"));
  auto W = enumerate(rs);
  CHECK(fundamental_degrees(rs, W.length_histogram()) == std::vector<int>{2, 5, 6, 8, 9, 12});
}

TEST_CASE("graded traces: frozen rank-one and rank-two values") {
  RootSystem a1(CartanType::parse("A1"));
  auto W1 = enumerate(a1);
  MolienEngine eng1(a1, W1);
  // (1 - t^2) / (1 + t) = 1 - t
  CHECK(eng1.graded_trace(W1.elements()[1], 3) ==
        std::vector<Rat>{Rat(1), Rat(-1), Rat(0), Rat(0)});
  CHECK(eng1.graded_trace(W1.elements()[0], 1) == std::vector<Rat>{Rat(1), Rat(1)});

  RootSystem a2(CartanType::parse("A2"));
  auto W2 = enumerate(a2);
  MolienEngine eng2(a2, W2);
  CHECK(eng2.degrees() == std::vector<int>{2, 3});
  // identity carries the Poincare polynomial
  CHECK(eng2.graded_trace(W2.elements()[0], 3) ==
        std::vector<Rat>{Rat(1), Rat(2), Rat(2), Rat(1)});
  // longest element: (1-t^2)(1-t^3)/(1-t^2) = 1 - t^3
  CHECK(eng2.graded_trace(W2.elements()[W2.longest_index()], 3) ==
        std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(-1)});
}

TEST_CASE("graded traces vanish above the number of positive roots") {
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    RootSystem rs(CartanType::parse(name));
    CAPTURE(name);
    auto W = enumerate(rs);
    MolienEngine eng(rs, W);
    const int m = static_cast<int>(rs.num_positive());
    for (const auto& w : W.elements()) {
      const auto tr = eng.graded_trace(w, m + 3);
      for (int k = m + 1; k <= m + 3; ++k) CHECK(tr[static_cast<std::size_t>(k)] == 0);
    }
  }
}

TEST_CASE("graded traces agree with the coinvariant matrices") {
  for (const char* name : {"A2", "B2", "A3"}) {
    RootSystem rs(CartanType::parse(name));
    CAPTURE(name);
    auto W = enumerate(rs);
    MolienEngine eng(rs, W);
    auto cm = CoinvariantModule::build(rs, W);
    for (const auto& w : W.elements()) {
      const auto tr = eng.graded_trace(w, cm.top_polynomial_degree());
      const auto mats = cm.element_matrices(w);
      for (int d = 0; d <= cm.top_polynomial_degree(); ++d) {
        Int diag = 0;
        for (std::size_t r = 0; r < mats[d].size(); ++r) diag += mats[d][r][r];
        CHECK(tr[static_cast<std::size_t>(d)] == Rat(diag));
      }
    }
  }
}

TEST_CASE("partial flag character at the identity is the dimension series") {
  for (const char* name : {"A3", "B3"}) {
    RootSystem rs(CartanType::parse(name));
    CAPTURE(name);
    auto W = enumerate(rs);
    MolienEngine eng(rs, W);
    for (const auto& J : all_subsets(rs.rank())) {
      CAPTURE(J);
      const auto WL = parabolic_subgroup(rs, J);
      const int N = static_cast<int>(rs.num_positive() - parabolic_positive_roots(rs, J).size());
      const auto series = invariant_dimension_series(rs, W, J);
      const auto chr = partial_flag_character(eng, WL, W.elements()[0], N);
      REQUIRE(static_cast<int>(series.size()) - 1 <= N);
      for (int k = 0; k <= N; ++k) {
        const Rat expect =
            k < static_cast<int>(series.size()) ? Rat(series[static_cast<std::size_t>(k)]) : Rat(0);
        CHECK(chr[static_cast<std::size_t>(k)] == expect);
      }
    }
  }
}

TEST_CASE("epsilon at J = empty is the sign character") {
  for (const char* name : {"A2", "B2", "A3", "G2"}) {
    RootSystem rs(CartanType::parse(name));
    CAPTURE(name);
    auto W = enumerate(rs);
    MolienEngine eng(rs, W);
    const auto WL = parabolic_subgroup(rs, {});
    auto rwg = RelativeWeylGroup::build(rs, W, {});
    auto eps = EpsilonCharacter::build(eng, WL, rwg);
    CHECK(eps.top_exponent() == static_cast<int>(rs.num_positive()));
    for (std::size_t i = 0; i < rwg.order(); ++i)
      CHECK(eps.value(i) == Rat(sign_character(rwg.elements()[i])));
  }
}

TEST_CASE("frozen A3 J={1,3} character data") {
  RootSystem rs(CartanType::parse("A3"));
  auto W = enumerate(rs);
  MolienEngine eng(rs, W);
  const auto WL = parabolic_subgroup(rs, {0, 2});
  auto rwg = RelativeWeylGroup::build(rs, W, {0, 2});

  auto eps = EpsilonCharacter::build(eng, WL, rwg);
  CHECK(eps.top_exponent() == 4);
  REQUIRE(eps.class_values().size() == 2);
  CHECK(eps.value_of_class(0) == Rat(1));
  CHECK(eps.value_of_class(1) == Rat(1));

  auto gc = GradedCharacter::build(eng, WL, rwg);
  CHECK(gc.top_exponent() == 4);
  CHECK(gc.graded_dims() == std::vector<Int>{1, 1, 2, 1, 1});
  const std::vector<Rat> cls1 = {Rat(1), Rat(-1), Rat(0), Rat(-1), Rat(1)};
  for (int i = 0; i <= 4; ++i) CHECK(gc.value(1, i) == cls1[static_cast<std::size_t>(i)]);
}

TEST_CASE("characters match the invariant lattice traces") {
  for (const char* name : {"A2", "A3", "B3"}) {
    RootSystem rs(CartanType::parse(name));
    CAPTURE(name);
    auto W = enumerate(rs);
    MolienEngine eng(rs, W);
    auto cm = CoinvariantModule::build(rs, W);
    for (const auto& J : all_subsets(rs.rank())) {
      CAPTURE(J);
      const auto WL = parabolic_subgroup(rs, J);
      auto rwg = RelativeWeylGroup::build(rs, W, J);
      auto gc = GradedCharacter::build(eng, WL, rwg);
      auto il = InvariantLattice::build(cm, rwg);
      for (std::size_t c = 0; c < rwg.conjugacy_classes().size(); ++c) {
        const std::size_t rep = rwg.conjugacy_classes()[c][0];
        for (int i = 0; i <= gc.top_exponent(); ++i) CHECK(gc.value(c, i) == il.trace_of(rep, i));
        // above the top exponent the lattice is null
        for (int d = gc.top_exponent() + 1; d <= il.top_polynomial_degree(); ++d)
          CHECK(il.dim(d) == 0);
      }
    }
  }
}

TEST_CASE("lambda_U is an involution") {
  RootSystem rs(CartanType::parse("A3"));
  auto W = enumerate(rs);
  MolienEngine eng(rs, W);
  const auto WL = parabolic_subgroup(rs, {0, 2});
  auto rwg = RelativeWeylGroup::build(rs, W, {0, 2});
  auto eps = EpsilonCharacter::build(eng, WL, rwg);

  const GroupAlgebraElement x = {{0, Rat(3, 2)}, {1, Rat(-5)}};
  const auto once = lambda_U(eps, x);
  CHECK(lambda_U(eps, once) == x);
  // basis behavior: e_i maps to epsilon(i) e_i
  const GroupAlgebraElement basis = {{1, Rat(1)}};
  const auto image = lambda_U(eps, basis);
  REQUIRE(image.size() == 1);
  CHECK(image.at(1) == eps.value(1));
}

TEST_CASE("character serialization is deterministic and tagged") {
  RootSystem rs(CartanType::parse("A3"));
  auto W = enumerate(rs);
  MolienEngine eng(rs, W);
  const auto WL = parabolic_subgroup(rs, {0, 2});
  auto rwg = RelativeWeylGroup::build(rs, W, {0, 2});
  auto eps = EpsilonCharacter::build(eng, WL, rwg);
  auto gc = GradedCharacter::build(eng, WL, rwg);

  const auto json1 = characters_to_json(gc, eps);
  const auto json2 = characters_to_json(gc, eps);
  CHECK(json1 == json2);
  CHECK(json1.find("\"type\": \"A3\"") != std::string::npos);
  CHECK(json1.find("\"J\": [") != std::string::npos);

  const auto tsv = characters_to_tsv(gc, eps);
  CHECK(tsv.find("class\tsize\trepresentative\tepsilon\tH0") == 0);
  CHECK(tsv.find("2 1 3 2") != std::string::npos);  // the relative generator word
}
