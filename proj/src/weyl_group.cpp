#include "relweyl/weyl_group.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "relweyl/error.hpp"
#include "relweyl/linalg.hpp"

namespace relweyl {

namespace {

std::vector<std::uint16_t> identity_perm(std::size_t n) {
  std::vector<std::uint16_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint16_t>(i);
  return p;
}

std::vector<std::uint16_t> invert_perm(const std::vector<std::uint16_t>& p) {
  std::vector<std::uint16_t> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<std::uint16_t>(i);
  return inv;
}

std::vector<std::uint16_t> compose(const std::vector<std::uint16_t>& a,
                                   const std::vector<std::uint16_t>& b) {
  std::vector<std::uint16_t> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

std::vector<int> matrix_from_perm(const RootSystem& rs, const std::vector<std::uint16_t>& perm) {
  const int n = rs.rank();
  std::vector<int> mat(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    const Root& image = rs.root(perm[rs.simple_root_index(j)]);
    for (int a = 0; a < n; ++a) mat[static_cast<std::size_t>(a) * n + j] = image[a];
  }
  return mat;
}

std::vector<int> matrix_mul(int n, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j)
        c[static_cast<std::size_t>(i) * n + j] += aik * b[static_cast<std::size_t>(k) * n + j];
    }
  return c;
}

}  // namespace

WeylElement identity_element(const RootSystem& rs) {
  WeylElement e;
  e.perm = identity_perm(rs.num_roots());
  const int n = rs.rank();
  e.matrix.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) e.matrix[static_cast<std::size_t>(i) * n + i] = 1;
  return e;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  WeylElement s;
  const auto& p = rs.simple_reflection_perm(i);
  s.perm.assign(p.begin(), p.end());
  s.matrix = matrix_from_perm(rs, s.perm);
  s.word = {static_cast<std::uint8_t>(i)};
  s.length = 1;
  return s;
}

WeylElement multiply(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  WeylElement c;
  c.perm = compose(a.perm, b.perm);
  c.matrix = matrix_mul(rs.rank(), a.matrix, b.matrix);
  c.word = lex_min_word(rs, c.perm);
  c.length = static_cast<int>(c.word.size());
  return c;
}

WeylElement inverse(const RootSystem& rs, const WeylElement& a) {
  WeylElement c;
  c.perm = invert_perm(a.perm);
  c.matrix = matrix_from_perm(rs, c.perm);
  c.word = lex_min_word(rs, c.perm);
  c.length = static_cast<int>(c.word.size());
  return c;
}

WeylElement element_from_word(const RootSystem& rs, const std::vector<int>& word) {
  auto perm = identity_perm(rs.num_roots());
  for (int letter : word) {
    if (letter < 0 || letter >= rs.rank()) throw Error("word letter out of range");
    const auto& sp = rs.simple_reflection_perm(letter);
    // acc <- acc o s_letter keeps left-to-right word order
    std::vector<std::uint16_t> next(perm.size());
    for (std::size_t x = 0; x < perm.size(); ++x) next[x] = perm[sp[x]];
    perm = std::move(next);
  }
  WeylElement c;
  c.perm = std::move(perm);
  c.matrix = matrix_from_perm(rs, c.perm);
  c.word = lex_min_word(rs, c.perm);
  c.length = static_cast<int>(c.word.size());
  return c;
}

int sign_character(const WeylElement& w) { return w.length % 2 == 0 ? 1 : -1; }

std::vector<std::uint8_t> lex_min_word(const RootSystem& rs,
                                       const std::vector<std::uint16_t>& perm) {
  const std::size_t m = rs.num_positive();
  auto inv = invert_perm(perm);
  std::vector<std::uint8_t> word;
  for (std::size_t guard = 0; guard <= m; ++guard) {
    int descent = -1;
    for (int j = 0; j < rs.rank(); ++j) {
      if (inv[rs.simple_root_index(j)] >= m) {
        descent = j;
        break;
      }
    }
    if (descent < 0) return word;
    word.push_back(static_cast<std::uint8_t>(descent));
    const auto& sp = rs.simple_reflection_perm(descent);
    // replacing w by s_j w sends w^{-1} to w^{-1} s_j
    std::vector<std::uint16_t> next(inv.size());
    for (std::size_t y = 0; y < inv.size(); ++y) next[y] = inv[sp[y]];
    inv = std::move(next);
  }
  throw Error("lex_min_word did not terminate; permutation is not in W");
}

std::size_t PermHash::operator()(const std::vector<std::uint16_t>& p) const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint16_t v : p) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

WeylGroup WeylGroup::enumerate(const RootSystem& rs, const Int& max_order) {
  const Int order = weyl_order(rs.type());
  if (order > max_order)
    throw TooLarge("|W(" + rs.type().to_string() + ")| = " + order.str() +
                   " exceeds the enumeration bound " + max_order.str());

  WeylGroup W;
  W.rs_ = &rs;
  const std::size_t m = rs.num_positive();
  const int n = rs.rank();

  W.elements_.push_back(identity_element(rs));
  std::vector<std::size_t> level = {0};
  std::vector<std::vector<std::uint16_t>> level_inv = {identity_perm(rs.num_roots())};

  std::vector<WeylElement> simples;
  for (int i = 0; i < n; ++i) simples.push_back(simple_reflection(rs, i));

  while (!level.empty()) {
    std::vector<std::size_t> next_level;
    std::vector<std::vector<std::uint16_t>> next_inv;
    for (int i = 0; i < n; ++i) {
      const auto& sp = rs.simple_reflection_perm(i);
      for (std::size_t li = 0; li < level.size(); ++li) {
        const auto& w = W.elements_[level[li]];
        const auto& winv = level_inv[li];
        // ascent condition: l(s_i w) = l(w) + 1 iff w^{-1}(alpha_i) > 0
        if (winv[rs.simple_root_index(i)] >= m) continue;
        // accept only from the minimal left descent so each element appears once:
        // (s_i w)^{-1}(alpha_j) = w^{-1} s_i (alpha_j)
        bool minimal = true;
        for (int j = 0; j < i; ++j) {
          if (winv[sp[rs.simple_root_index(j)]] >= m) {
            minimal = false;
            break;
          }
        }
        if (!minimal) continue;

        WeylElement v;
        v.perm = compose(std::vector<std::uint16_t>(sp.begin(), sp.end()), w.perm);
        v.matrix = matrix_mul(n, simples[i].matrix, w.matrix);
        v.word.reserve(w.word.size() + 1);
        v.word.push_back(static_cast<std::uint8_t>(i));
        v.word.insert(v.word.end(), w.word.begin(), w.word.end());
        v.length = w.length + 1;

        std::vector<std::uint16_t> vinv(winv.size());
        for (std::size_t y = 0; y < winv.size(); ++y) vinv[y] = winv[sp[y]];

        next_level.push_back(W.elements_.size());
        W.elements_.push_back(std::move(v));
        next_inv.push_back(std::move(vinv));
      }
    }
    level = std::move(next_level);
    level_inv = std::move(next_inv);
  }

  if (Int(W.elements_.size()) != order)
    throw Error("enumeration produced " + std::to_string(W.elements_.size()) +
                " elements, expected " + order.str());
  W.index_.reserve(W.elements_.size());
  for (std::size_t i = 0; i < W.elements_.size(); ++i) W.index_.emplace(W.elements_[i].perm, i);
  return W;
}

std::size_t WeylGroup::index_of(const std::vector<std::uint16_t>& perm) const {
  const auto it = index_.find(perm);
  if (it == index_.end()) throw Error("permutation is not a group element");
  return it->second;
}

std::optional<std::size_t> WeylGroup::find(const std::vector<std::uint16_t>& perm) const {
  const auto it = index_.find(perm);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Int> WeylGroup::length_histogram() const {
  std::vector<Int> h(rs_->num_positive() + 1, 0);
  for (const auto& w : elements_) h[static_cast<std::size_t>(w.length)] += 1;
  return h;
}

namespace {

std::vector<int> normalize_J(const RootSystem& rs, std::vector<int> J) {
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  for (int j : J)
    if (j < 0 || j >= rs.rank()) throw UsageError("J index out of range");
  return J;
}

}  // namespace

bool ParabolicSubgroup::contains(const std::vector<std::uint16_t>& perm) const {
  return index.find(perm) != index.end();
}

ParabolicSubgroup parabolic_subgroup(const RootSystem& rs, const std::vector<int>& J_in) {
  ParabolicSubgroup L;
  L.J = normalize_J(rs, J_in);
  const std::size_t m = rs.num_positive();
  const int n = rs.rank();

  L.elements.push_back(identity_element(rs));
  std::vector<std::size_t> level = {0};
  std::vector<std::vector<std::uint16_t>> level_inv = {identity_perm(rs.num_roots())};

  std::vector<WeylElement> simples;
  for (int i = 0; i < n; ++i) simples.push_back(simple_reflection(rs, i));

  while (!level.empty()) {
    std::vector<std::size_t> next_level;
    std::vector<std::vector<std::uint16_t>> next_inv;
    for (int i : L.J) {
      const auto& sp = rs.simple_reflection_perm(i);
      for (std::size_t li = 0; li < level.size(); ++li) {
        const auto& w = L.elements[level[li]];
        const auto& winv = level_inv[li];
        if (winv[rs.simple_root_index(i)] >= m) continue;
        bool minimal = true;
        for (int j : L.J) {
          if (j >= i) break;
          if (winv[sp[rs.simple_root_index(j)]] >= m) {
            minimal = false;
            break;
          }
        }
        if (!minimal) continue;

        WeylElement v;
        v.perm = compose(std::vector<std::uint16_t>(sp.begin(), sp.end()), w.perm);
        v.matrix = matrix_mul(n, simples[i].matrix, w.matrix);
        v.word.reserve(w.word.size() + 1);
        v.word.push_back(static_cast<std::uint8_t>(i));
        v.word.insert(v.word.end(), w.word.begin(), w.word.end());
        v.length = w.length + 1;

        std::vector<std::uint16_t> vinv(winv.size());
        for (std::size_t y = 0; y < winv.size(); ++y) vinv[y] = winv[sp[y]];

        next_level.push_back(L.elements.size());
        L.elements.push_back(std::move(v));
        next_inv.push_back(std::move(vinv));
      }
    }
    level = std::move(next_level);
    level_inv = std::move(next_inv);
  }

  L.index.reserve(L.elements.size());
  for (std::size_t i = 0; i < L.elements.size(); ++i) L.index.emplace(L.elements[i].perm, i);
  return L;
}

std::vector<std::uint32_t> parabolic_positive_roots(const RootSystem& rs,
                                                    const std::vector<int>& J_in) {
  const auto J = normalize_J(rs, J_in);
  std::vector<bool> in_J(static_cast<std::size_t>(rs.rank()), false);
  for (int j : J) in_J[static_cast<std::size_t>(j)] = true;
  std::vector<std::uint32_t> out;
  for (std::size_t idx = 0; idx < rs.num_positive(); ++idx) {
    const Root& r = rs.positive_roots()[idx];
    bool supported = true;
    for (int i = 0; i < rs.rank(); ++i) {
      if (r[i] != 0 && !in_J[static_cast<std::size_t>(i)]) {
        supported = false;
        break;
      }
    }
    if (supported) out.push_back(static_cast<std::uint32_t>(idx));
  }
  return out;
}

namespace {

// Indices into W.elements() of N_W(W_L), tested on the generators s_j, j in J.
std::vector<std::size_t> normalizer_indices(const RootSystem& rs, const WeylGroup& W,
                                            const ParabolicSubgroup& WL) {
  std::vector<std::size_t> out;
  const std::size_t nroots = rs.num_roots();
  std::vector<std::uint16_t> conj(nroots);
  for (std::size_t wi = 0; wi < W.order(); ++wi) {
    const auto& w = W.elements()[wi];
    const auto winv = invert_perm(w.perm);
    bool normalizes = true;
    for (int j : WL.J) {
      const auto& sp = rs.simple_reflection_perm(j);
      for (std::size_t x = 0; x < nroots; ++x) conj[x] = w.perm[sp[winv[x]]];
      if (!WL.contains(conj)) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) out.push_back(wi);
  }
  return out;
}

constexpr std::size_t kMaxTableEntries = std::size_t(1) << 21;

}  // namespace

RelativeWeylGroup RelativeWeylGroup::build(const RootSystem& rs, const WeylGroup& W,
                                           const std::vector<int>& J_in) {
  RelativeWeylGroup R;
  R.rs_ = &rs;
  R.W_ = &W;
  R.J_ = normalize_J(rs, J_in);

  const auto WL = parabolic_subgroup(rs, R.J_);
  R.parabolic_order_ = Int(WL.elements.size());

  const auto normalizer = normalizer_indices(rs, W, WL);
  R.normalizer_order_ = Int(normalizer.size());

  const auto phiL = parabolic_positive_roots(rs, R.J_);
  std::vector<bool> in_phiL(rs.num_roots(), false);
  for (auto k : phiL) in_phiL[k] = true;

  for (std::size_t wi : normalizer) {
    const auto& w = W.elements()[wi];
    bool preserves = true;
    for (auto k : phiL) {
      if (!in_phiL[w.perm[k]]) {
        preserves = false;
        break;
      }
    }
    if (preserves) R.elements_.push_back(w);
  }

  const std::size_t k = R.elements_.size();
  if (Int(k) * R.parabolic_order_ != R.normalizer_order_)
    throw Error("normalizer does not factor as W(L) x W_L over " + rs.type().to_string());

  R.index_.reserve(k);
  for (std::size_t i = 0; i < k; ++i) R.index_.emplace(R.elements_[i].perm, i);

  R.inverse_.resize(k);
  for (std::size_t i = 0; i < k; ++i)
    R.inverse_[i] = R.index_.at(invert_perm(R.elements_[i].perm));

  if (k * k <= kMaxTableEntries) {
    R.table_.resize(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        R.table_[i * k + j] = static_cast<std::uint32_t>(
            R.index_.at(compose(R.elements_[i].perm, R.elements_[j].perm)));
  }

  // Greedy generators: first element not yet reached, until closure is everything.
  std::vector<bool> reached(k, false);
  auto closure = [&]() {
    std::fill(reached.begin(), reached.end(), false);
    reached[0] = true;
    std::deque<std::size_t> queue = {0};
    std::size_t count = 1;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t g : R.generators_) {
        const std::size_t y = R.mult(x, g);
        if (!reached[y]) {
          reached[y] = true;
          ++count;
          queue.push_back(y);
        }
      }
    }
    return count;
  };
  std::size_t covered = closure();
  for (std::size_t i = 1; i < k && covered < k; ++i) {
    if (reached[i]) continue;
    R.generators_.push_back(i);
    covered = closure();
  }

  // Shortest generator words by BFS; ties resolved lexicographically because
  // discovery order is lexicographic by induction.
  R.gen_words_.assign(k, {});
  std::vector<bool> seen(k, false);
  seen[0] = true;
  std::deque<std::size_t> queue = {0};
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t gi = 0; gi < R.generators_.size(); ++gi) {
      const std::size_t y = R.mult(x, R.generators_[gi]);
      if (!seen[y]) {
        seen[y] = true;
        R.gen_words_[y] = R.gen_words_[x];
        R.gen_words_[y].push_back(static_cast<std::uint32_t>(gi));
        queue.push_back(y);
      }
    }
  }

  // Conjugacy classes: orbits of conjugation by the generators.
  std::vector<std::size_t> parent(k);
  for (std::size_t i = 0; i < k; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find_root = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t g : R.generators_) {
      const std::size_t y = R.mult(R.mult(g, x), R.inverse_[g]);
      const std::size_t a = find_root(x), b = find_root(y);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<std::size_t>> buckets(k);
  for (std::size_t i = 0; i < k; ++i) buckets[find_root(i)].push_back(i);
  R.class_of_.resize(k);
  for (std::size_t root = 0; root < k; ++root) {
    if (buckets[root].empty()) continue;
    for (std::size_t member : buckets[root]) R.class_of_[member] = R.classes_.size();
    R.classes_.push_back(std::move(buckets[root]));
  }

  return R;
}

std::size_t RelativeWeylGroup::index_of(const std::vector<std::uint16_t>& perm) const {
  const auto it = index_.find(perm);
  if (it == index_.end()) throw Error("permutation is not in the relative Weyl group");
  return it->second;
}

std::size_t RelativeWeylGroup::mult(std::size_t i, std::size_t j) const {
  const std::size_t k = elements_.size();
  if (!table_.empty()) return table_[i * k + j];
  return index_.at(compose(elements_[i].perm, elements_[j].perm));
}

SemidirectReport verify_semidirect(const RootSystem& rs, const WeylGroup& W,
                                   const RelativeWeylGroup& rwg) {
  SemidirectReport rep;
  rep.type = rs.type();
  rep.J = rwg.J();
  rep.parabolic_order = rwg.parabolic_order();
  rep.normalizer_order = rwg.normalizer_order();
  rep.relative_order = Int(rwg.order());

  const auto WL = parabolic_subgroup(rs, rwg.J());
  const auto normalizer = normalizer_indices(rs, W, WL);

  rep.intersection_trivial = true;
  for (std::size_t i = 1; i < rwg.order(); ++i) {
    if (WL.contains(rwg.elements()[i].perm)) {
      rep.intersection_trivial = false;
      rep.witness = "W(L) element #" + std::to_string(i) + " lies in W_L";
      return rep;
    }
  }

  PermIndexMap normalizer_set;
  normalizer_set.reserve(normalizer.size());
  for (std::size_t wi : normalizer) normalizer_set.emplace(W.elements()[wi].perm, wi);

  PermIndexMap products;
  products.reserve(rwg.order() * WL.elements.size());
  for (const auto& s : rwg.elements()) {
    for (const auto& u : WL.elements) {
      auto p = compose(s.perm, u.perm);
      if (normalizer_set.find(p) == normalizer_set.end()) {
        rep.product_covers = false;
        rep.witness = "a product s*u falls outside the normalizer";
        return rep;
      }
      products.emplace(std::move(p), products.size());
    }
  }
  rep.product_covers = products.size() == normalizer.size();
  if (!rep.product_covers) {
    rep.witness = "products cover " + std::to_string(products.size()) + " of " +
                  std::to_string(normalizer.size()) + " normalizer elements";
    return rep;
  }

  // Normality of W_L in the normalizer; conjugate every W_L element when the
  // quadratic sweep is affordable, only the generators s_j otherwise.
  const bool full = normalizer.size() * WL.elements.size() <= 1000000;
  rep.parabolic_normal = true;
  for (std::size_t wi : normalizer) {
    const auto& w = W.elements()[wi];
    const auto winv = invert_perm(w.perm);
    if (full) {
      for (const auto& u : WL.elements) {
        if (!WL.contains(compose(w.perm, compose(u.perm, winv)))) {
          rep.parabolic_normal = false;
          rep.witness = "conjugation by normalizer element #" + std::to_string(wi) +
                        " leaves W_L";
          return rep;
        }
      }
    } else {
      for (int j : rwg.J()) {
        const auto& sp = rs.simple_reflection_perm(j);
        if (!WL.contains(compose(w.perm, compose(std::vector<std::uint16_t>(sp.begin(), sp.end()), winv)))) {
          rep.parabolic_normal = false;
          rep.witness = "conjugation by normalizer element #" + std::to_string(wi) +
                        " moves a generator out of W_L";
          return rep;
        }
      }
    }
  }
  return rep;
}

ReflectionReport reflection_classification(const RelativeWeylGroup& rwg) {
  const RootSystem& rs = rwg.root_system();
  const int n = rs.rank();

  RatMat fixed_basis;  // n x d, columns span V^{W_L}
  if (rwg.J().empty()) {
    fixed_basis.assign(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i) fixed_basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  } else {
    RatMat stacked;
    for (int j : rwg.J()) {
      const auto s = simple_reflection(rs, j);
      for (int r = 0; r < n; ++r) {
        std::vector<Rat> row(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) {
          Rat v(s.matrix[static_cast<std::size_t>(r) * n + c]);
          if (r == c) v -= 1;
          row[static_cast<std::size_t>(c)] = v;
        }
        stacked.push_back(std::move(row));
      }
    }
    fixed_basis = rational_kernel(stacked);
  }

  ReflectionReport rep;
  const std::size_t d = fixed_basis.empty() ? 0 : fixed_basis[0].size();
  rep.fixed_space_dim = static_cast<int>(d);

  auto mat_mul_rat = [&](const RatMat& a, const RatMat& b) {
    RatMat c(a.size(), std::vector<Rat>(b[0].size(), Rat(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (a[i][k] == 0) continue;
        for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
      }
    return c;
  };

  for (std::size_t i = 0; i < rwg.order(); ++i) {
    if (d == 0) {
      rep.codims.push_back(0);
      continue;
    }
    const auto& w = rwg.elements()[i];
    RatMat M(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            Rat(w.matrix[static_cast<std::size_t>(r) * n + c]);
    RatMat restricted = solve_exact(fixed_basis, mat_mul_rat(M, fixed_basis));
    for (std::size_t a = 0; a < d; ++a) restricted[a][a] -= 1;
    const int codim = rat_rank(restricted);
    rep.codims.push_back(codim);
    if (codim == 1) rep.reflection_indices.push_back(i);
  }

  std::vector<bool> reached(rwg.order(), false);
  reached[0] = true;
  std::deque<std::size_t> queue = {0};
  std::size_t covered = 1;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t g : rep.reflection_indices) {
      const std::size_t y = rwg.mult(x, g);
      if (!reached[y]) {
        reached[y] = true;
        ++covered;
        queue.push_back(y);
      }
    }
  }
  rep.reflections_generate = covered == rwg.order();
  return rep;
}

}  // namespace relweyl
