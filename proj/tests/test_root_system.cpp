#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "relweyl/error.hpp"
#include "relweyl/root_system.hpp"

using namespace relweyl;

namespace {

struct TypeFact {
  const char* name;
  std::size_t positives;
  std::uint64_t order;
};

// Classical count formulas: A_n n(n+1)/2 and (n+1)!, B_n/C_n n^2 and 2^n n!,
// D_n n(n-1) and 2^(n-1) n!, plus the exceptional table.
const TypeFact kFacts[] = {
    {"A1", 1, 2},        {"A2", 3, 6},         {"A3", 6, 24},       {"A4", 10, 120},
    {"A5", 15, 720},     {"A6", 21, 5040},     {"B2", 4, 8},        {"B3", 9, 48},
    {"B4", 16, 384},     {"B5", 25, 3840},     {"B6", 36, 46080},   {"C3", 9, 48},
    {"C4", 16, 384},     {"C5", 25, 3840},     {"C6", 36, 46080},   {"D4", 12, 192},
    {"D5", 20, 1920},    {"D6", 30, 23040},    {"E6", 36, 51840},   {"E7", 63, 2903040},
    {"E8", 120, 696729600}, {"F4", 24, 1152},  {"G2", 6, 12},
};

}  // namespace

TEST_CASE("type parsing accepts valid ranks, case-insensitively") {
  CHECK(CartanType::parse("A1").rank == 1);
  CHECK(CartanType::parse("a3").series == Series::A);
  CHECK(CartanType::parse("b2").to_string() == "B2");
  CHECK(CartanType::parse("E6").rank == 6);
  for (const char* bad : {"A0", "B1", "C2", "D3", "E5", "E9", "F3", "F5", "G1", "G3", "Z9", "",
                          "A", "3A", "A-1", "A1x"}) {
    CHECK_THROWS_AS(CartanType::parse(bad), UnsupportedType);
  }
}

TEST_CASE("positive root counts and Weyl orders match the type formulas") {
  for (const auto& f : kFacts) {
    RootSystem rs(CartanType::parse(f.name));
    CAPTURE(f.name);
    CHECK(rs.num_positive() == f.positives);
    CHECK(rs.weyl_order() == Int(f.order));
  }
}

TEST_CASE("A1 basics") {
  RootSystem rs(CartanType::parse("A1"));
  CHECK(rs.num_positive() == 1);
  CHECK(rs.cartan_matrix() == std::vector<std::vector<int>>{{2}});
  CHECK(rs.positive_roots()[0] == Root{1});
  CHECK(rs.reflect(0, Root{1}) == Root{-1});
}

TEST_CASE("A2 reflection arithmetic") {
  RootSystem rs(CartanType::parse("A2"));
  // s_1(alpha_2) = alpha_2 - a_{12} alpha_1 = alpha_1 + alpha_2.
  CHECK(rs.reflect(0, Root{0, 1}) == Root{1, 1});
  CHECK(rs.reflect(1, Root{1, 0}) == Root{1, 1});
  CHECK(rs.reflect(0, Root{1, 1}) == Root{0, 1});
  const std::vector<Root> expect = {{1, 0}, {0, 1}, {1, 1}};
  auto positives = rs.positive_roots();
  CHECK(std::is_permutation(positives.begin(), positives.end(), expect.begin(), expect.end()));
}

TEST_CASE("positive roots are sorted by height then lex, simple roots first") {
  for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    RootSystem rs(CartanType::parse(name));
    CAPTURE(name);
    const auto& pos = rs.positive_roots();
    for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
      const int h1 = height(pos[i]), h2 = height(pos[i + 1]);
      CHECK((h1 < h2 || (h1 == h2 && pos[i] < pos[i + 1])));
    }
    for (int i = 0; i < rs.rank(); ++i) {
      const Root& alpha = rs.root(rs.simple_root_index(i));
      CHECK(height(alpha) == 1);
      CHECK(alpha[i] == 1);
    }
  }
}

TEST_CASE("simple reflections are involutions and permute the other positives") {
  for (const char* name : {"A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    RootSystem rs(CartanType::parse(name));
    CAPTURE(name);
    for (int i = 0; i < rs.rank(); ++i) {
      for (std::size_t idx = 0; idx < rs.num_roots(); ++idx) {
        const Root& r = rs.root(idx);
        CHECK(rs.reflect(i, rs.reflect(i, r)) == r);
        CHECK(rs.reflect_index(i, rs.reflect_index(i, idx)) == idx);
      }
      // s_i(Phi^+ \ {alpha_i}) stays positive.
      const std::size_t ai = rs.simple_root_index(i);
      for (std::size_t idx = 0; idx < rs.num_positive(); ++idx) {
        if (idx == ai) {
          CHECK(rs.reflect_index(i, idx) == rs.negate_index(idx));
        } else {
          CHECK(!rs.is_negative_index(rs.reflect_index(i, idx)));
        }
      }
    }
  }
}

TEST_CASE("bilinear form: symmetric, reflection-invariant, short roots have norm 2") {
  for (const char* name : {"A3", "B3", "C3", "G2", "F4", "D4"}) {
    RootSystem rs(CartanType::parse(name));
    CAPTURE(name);
    const auto& B = rs.bilinear_form();
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) CHECK(B[i][j] == B[j][i]);
    Int min_norm = 0;
    for (const auto& r : rs.positive_roots()) {
      Int n = rs.form(r, r);
      CHECK(n > 0);
      if (min_norm == 0 || n < min_norm) min_norm = n;
    }
    CHECK(min_norm == 2);
    // invariance under every simple reflection
    for (int i = 0; i < rs.rank(); ++i) {
      for (std::size_t a = 0; a < rs.num_positive(); ++a) {
        for (std::size_t b = 0; b < rs.num_positive(); ++b) {
          CHECK(rs.form(rs.reflect(i, rs.root(a)), rs.reflect(i, rs.root(b))) ==
                rs.form(rs.root(a), rs.root(b)));
        }
      }
    }
  }
}

TEST_CASE("bilinear form is positive definite (leading principal minors)") {
  for (const char* name : {"A6", "B6", "C6", "D6", "E6", "E7", "E8", "F4", "G2"}) {
    RootSystem rs(CartanType::parse(name));
    CAPTURE(name);
    const int n = rs.rank();
    // integer Gaussian minors: det of leading k x k blocks via fraction-free elimination
    for (int k = 1; k <= n; ++k) {
      std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = Rat(rs.bilinear_form()[i][j]);
      Rat det = 1;
      for (int c = 0; c < k; ++c) {
        int piv = -1;
        for (int r = c; r < k; ++r)
          if (m[r][c] != 0) {
            piv = r;
            break;
          }
        REQUIRE(piv >= 0);
        if (piv != c) {
          std::swap(m[piv], m[c]);
          det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < k; ++r) {
          Rat f = m[r][c] / m[c][c];
          for (int j = c; j < k; ++j) m[r][j] -= f * m[c][j];
        }
      }
      CHECK(det > 0);
    }
  }
}

TEST_CASE("root membership and index bookkeeping") {
  RootSystem rs(CartanType::parse("B3"));
  CHECK(rs.num_roots() == 18);
  for (std::size_t idx = 0; idx < rs.num_roots(); ++idx) {
    CHECK(rs.root_index(rs.root(idx)) == idx);
    CHECK(rs.negate_index(rs.negate_index(idx)) == idx);
  }
  CHECK(!rs.is_root(Root{5, 0, 0}));
  CHECK_THROWS_AS(rs.root_index(Root{5, 0, 0}), NotARoot);
  CHECK_THROWS_AS(rs.reflect(0, Root{5, 0, 0}), NotARoot);
  CHECK_THROWS_AS(rs.reflect(0, Root{1, 1}), NotARoot);  // wrong dimension
}

TEST_CASE("coroot pairings are integral and match the Cartan matrix on simples") {
  for (const char* name : {"A3", "B3", "C3", "G2", "F4"}) {
    RootSystem rs(CartanType::parse(name));
    CAPTURE(name);
    for (int i = 0; i < rs.rank(); ++i) {
      for (int j = 0; j < rs.rank(); ++j) {
        // <alpha_j, alpha_i^vee> = cartan(i, j)
        Root aj(rs.rank(), 0);
        aj[j] = 1;
        CHECK(rs.coroot_pairing(aj, rs.simple_root_index(i)) == Int(rs.cartan(i, j)));
      }
    }
  }
}

TEST_CASE("reflection_perm matches the reflection formula on every root") {
  for (const char* name : {"A3", "B2", "G2"}) {
    RootSystem rs(CartanType::parse(name));
    CAPTURE(name);
    for (std::size_t k = 0; k < rs.num_positive(); ++k) {
      auto perm = rs.reflection_perm(k);
      const Root alpha = rs.root(k);
      for (std::size_t idx = 0; idx < rs.num_roots(); ++idx) {
        Root image = rs.root(idx);
        const int pairing = rs.coroot_pairing(image, k).convert_to<int>();
        for (int c = 0; c < rs.rank(); ++c) image[c] -= pairing * alpha[c];
        CHECK(perm[idx] == rs.root_index(image));
      }
    }
  }
}
