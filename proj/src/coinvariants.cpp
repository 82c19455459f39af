#include "relweyl/coinvariants.hpp"

#include <algorithm>

#include "relweyl/error.hpp"

namespace relweyl {

namespace {

int perm_length(const std::vector<std::uint16_t>& perm, std::size_t m) {
  int len = 0;
  for (std::size_t x = 0; x < m; ++x)
    if (perm[x] >= m) ++len;
  return len;
}

std::vector<std::uint16_t> compose(const std::vector<std::uint16_t>& a,
                                   const std::vector<std::uint16_t>& b) {
  std::vector<std::uint16_t> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

// Linear form of a root in the weight coordinates: coeff_j = (C r)_j.
Polynomial root_linear_form(const RootSystem& rs, const Root& r) {
  const int n = rs.rank();
  std::vector<Rat> coeffs(static_cast<std::size_t>(n), Rat(0));
  for (int j = 0; j < n; ++j) {
    Int c = 0;
    for (int k = 0; k < n; ++k) c += Int(rs.cartan(j, k)) * r[k];
    coeffs[static_cast<std::size_t>(j)] = Rat(c);
  }
  return Polynomial::linear(coeffs);
}

}  // namespace

CoinvariantModule CoinvariantModule::build(const RootSystem& rs, const WeylGroup& W) {
  CoinvariantModule cm;
  cm.rs_ = &rs;
  cm.W_ = &W;

  const int top = static_cast<int>(rs.num_positive());
  cm.blocks_.assign(static_cast<std::size_t>(top) + 1, {});
  cm.pos_.resize(W.order());
  for (std::size_t i = 0; i < W.order(); ++i) {
    const int len = W.elements()[i].length;
    cm.pos_[i] = cm.blocks_[static_cast<std::size_t>(len)].size();
    cm.blocks_[static_cast<std::size_t>(len)].push_back(i);
  }

  cm.refl_perms_.reserve(rs.num_positive());
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    const auto p = rs.reflection_perm(k);
    cm.refl_perms_.emplace_back(p.begin(), p.end());
  }

  cm.gen_matrices_.resize(static_cast<std::size_t>(rs.rank()));
  cm.gen_built_.assign(static_cast<std::size_t>(rs.rank()), 0);
  return cm;
}

std::map<std::size_t, Int> CoinvariantModule::chevalley_product(const std::vector<Int>& lambda,
                                                                std::size_t w_index) const {
  const auto& w = W_->elements()[w_index];
  const std::size_t m = rs_->num_positive();
  std::map<std::size_t, Int> out;
  for (std::size_t k = 0; k < m; ++k) {
    const auto moved = compose(w.perm, refl_perms_[k]);
    if (perm_length(moved, m) != w.length + 1) continue;
    const Int pairing = rs_->coroot_pairing_weight(lambda, k);
    if (pairing == 0) continue;
    const std::size_t target = W_->index_of(moved);
    auto [it, inserted] = out.emplace(target, pairing);
    if (!inserted) {
      it->second += pairing;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

const std::vector<IntMat>& CoinvariantModule::generator_matrices(int i) const {
  if (gen_built_[static_cast<std::size_t>(i)]) return gen_matrices_[static_cast<std::size_t>(i)];

  const int n = rs_->rank();
  std::vector<Int> alpha_i(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) alpha_i[static_cast<std::size_t>(j)] = rs_->cartan(j, i);
  const std::size_t m = rs_->num_positive();
  const auto& sp = rs_->simple_reflection_perm(i);

  auto& mats = gen_matrices_[static_cast<std::size_t>(i)];
  mats.clear();
  for (int d = 0; d <= top_polynomial_degree(); ++d) {
    const auto& block = blocks_[static_cast<std::size_t>(d)];
    IntMat mat(block.size(), std::vector<Int>(block.size(), 0));
    for (std::size_t col = 0; col < block.size(); ++col) {
      const std::size_t wi = block[col];
      const auto& w = W_->elements()[wi];
      // right descent: w(alpha_i) < 0
      const bool descent = w.perm[rs_->simple_root_index(i)] >= m;
      mat[col][col] = 1;
      if (!descent) continue;
      std::vector<std::uint16_t> wsperm(w.perm.size());
      for (std::size_t x = 0; x < w.perm.size(); ++x) wsperm[x] = w.perm[sp[x]];
      const std::size_t ws = W_->index_of(wsperm);
      for (const auto& [target, coeff] : chevalley_product(alpha_i, ws))
        mat[pos_[target]][col] -= coeff;
    }
    mats.push_back(std::move(mat));
  }
  gen_built_[static_cast<std::size_t>(i)] = 1;
  return mats;
}

std::vector<IntMat> CoinvariantModule::element_matrices(const WeylElement& w) const {
  std::vector<IntMat> out;
  for (int d = 0; d <= top_polynomial_degree(); ++d)
    out.push_back(int_identity(block_dim(d)));
  for (std::uint8_t letter : w.word) {
    const auto& gm = generator_matrices(static_cast<int>(letter));
    for (int d = 0; d <= top_polynomial_degree(); ++d)
      out[static_cast<std::size_t>(d)] = int_mul(out[static_cast<std::size_t>(d)], gm[static_cast<std::size_t>(d)]);
  }
  return out;
}

const std::vector<Polynomial>& CoinvariantModule::representatives() const {
  if (!reps_.empty()) return reps_;
  const int n = rs_->rank();
  const std::size_t m = rs_->num_positive();

  reps_.resize(W_->order());
  Polynomial topclass = Polynomial::constant(n, Rat(1, weyl_order(rs_->type())));
  for (std::size_t k = 0; k < m; ++k)
    topclass = topclass * root_linear_form(*rs_, rs_->positive_roots()[k]);
  reps_[W_->longest_index()] = topclass;

  // Walk down by length; every ascent of w gives an independent path to X_w.
  for (std::size_t idx = W_->order() - 1; idx-- > 0;) {
    const auto& w = W_->elements()[idx];
    bool have = false;
    for (int i = 0; i < n; ++i) {
      if (w.perm[rs_->simple_root_index(i)] >= m) continue;  // descent, not ascent
      const auto& sp = rs_->simple_reflection_perm(i);
      std::vector<std::uint16_t> wsperm(w.perm.size());
      for (std::size_t x = 0; x < w.perm.size(); ++x) wsperm[x] = w.perm[sp[x]];
      const std::size_t ws = W_->index_of(wsperm);
      Polynomial candidate = divided_difference(*rs_, i, reps_[ws]);
      if (!have) {
        reps_[idx] = std::move(candidate);
        have = true;
      } else if (!(candidate == reps_[idx])) {
        throw BraidInconsistency("representative of element #" + std::to_string(idx) +
                                 " differs between descent paths");
      }
    }
    if (!have) throw Error("element without ascent below the top");
  }
  return reps_;
}

const Polynomial& CoinvariantModule::representative(std::size_t w_index) const {
  return representatives()[w_index];
}

std::map<std::size_t, Rat> CoinvariantModule::expand(const Polynomial& f) const {
  std::map<std::size_t, Rat> out;
  const int deg = f.degree();
  for (std::size_t v = 0; v < W_->order(); ++v) {
    const auto& el = W_->elements()[v];
    if (el.length > deg) continue;
    const Rat c = divided_difference_word(*rs_, el.word, f).constant_term();
    if (c != 0) out.emplace(v, c);
  }
  return out;
}

std::vector<IntMat> CoinvariantModule::action_matrices_polynomial(const WeylElement& w) const {
  representatives();
  std::vector<IntMat> out;
  for (int d = 0; d <= top_polynomial_degree(); ++d) {
    const auto& block = blocks_[static_cast<std::size_t>(d)];
    IntMat mat(block.size(), std::vector<Int>(block.size(), 0));
    for (std::size_t col = 0; col < block.size(); ++col) {
      const Polynomial image = apply_word(*rs_, w.word, reps_[block[col]]);
      for (const auto& [v, c] : expand(image)) {
        if (W_->elements()[v].length != d)
          throw Error("coinvariant action does not preserve degree");
        if (!is_integer(c))
          throw NonIntegralEntry("coinvariant action matrix entry " + rat_to_string(c));
        mat[pos_[v]][col] = rat_num(c);
      }
    }
    out.push_back(std::move(mat));
  }
  return out;
}

InvariantLattice InvariantLattice::build(const CoinvariantModule& cm,
                                         const RelativeWeylGroup& rwg) {
  InvariantLattice il;
  il.cm_ = &cm;
  il.rwg_ = &rwg;

  const auto& J = rwg.J();
  for (int d = 0; d <= cm.top_polynomial_degree(); ++d) {
    const std::size_t dim = cm.block_dim(d);
    if (J.empty()) {
      il.basis_.push_back(int_identity(dim));
      continue;
    }
    IntMat stacked;
    for (int j : J) {
      const auto& mj = cm.generator_matrices(j)[static_cast<std::size_t>(d)];
      for (std::size_t r = 0; r < dim; ++r) {
        std::vector<Int> row = mj[r];
        row[r] -= 1;
        stacked.push_back(std::move(row));
      }
    }
    il.basis_.push_back(integer_kernel(stacked));
  }

  il.action_.resize(rwg.generator_indices().size());
  for (std::size_t g = 0; g < rwg.generator_indices().size(); ++g) {
    const auto& el = rwg.elements()[rwg.generator_indices()[g]];
    const auto full = cm.element_matrices(el);
    for (int d = 0; d <= cm.top_polynomial_degree(); ++d) {
      const auto& B = il.basis_[static_cast<std::size_t>(d)];
      if (B.empty() || B[0].empty()) {
        il.action_[g].push_back(IntMat{});
        continue;
      }
      const RatMat R = solve_exact(to_rat(B), to_rat(int_mul(full[static_cast<std::size_t>(d)], B)));
      il.action_[g].push_back(to_int(R, "restricted action on the invariant lattice"));
    }
  }
  return il;
}

std::vector<Int> InvariantLattice::graded_dims() const {
  std::vector<Int> out;
  for (int d = 0; d <= top_polynomial_degree(); ++d) out.push_back(Int(dim(d)));
  return out;
}

std::vector<IntMat> InvariantLattice::element_action(std::size_t i) const {
  std::vector<IntMat> out;
  for (int d = 0; d <= top_polynomial_degree(); ++d) out.push_back(int_identity(dim(d)));
  for (std::uint32_t g : rwg_->generator_words()[i]) {
    for (int d = 0; d <= top_polynomial_degree(); ++d) {
      auto& acc = out[static_cast<std::size_t>(d)];
      const auto& gm = action_[g][static_cast<std::size_t>(d)];
      if (acc.empty()) continue;
      acc = int_mul(acc, gm);
    }
  }
  return out;
}

Rat InvariantLattice::trace_of(std::size_t i, int degree) const {
  const auto mats = element_action(i);
  const auto& mat = mats[static_cast<std::size_t>(degree)];
  Int t = 0;
  for (std::size_t r = 0; r < mat.size(); ++r) t += mat[r][r];
  return Rat(t);
}

ModPLattice ModPLattice::build(const InvariantLattice& il, std::int64_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  ModPLattice mp;
  mp.p_ = p;
  mp.rwg_ = &il.relative_group();
  const std::size_t ngens = mp.rwg_->generator_indices().size();
  mp.action_.resize(ngens);
  for (std::size_t g = 0; g < ngens; ++g)
    for (int d = 0; d <= il.top_polynomial_degree(); ++d)
      mp.action_[g].push_back(mod_reduce(il.generator_action(g)[static_cast<std::size_t>(d)], p));
  return mp;
}

std::vector<ModMat> ModPLattice::element_action(std::size_t i) const {
  const std::size_t ndeg = action_.empty() ? 0 : action_[0].size();
  std::vector<ModMat> out(ndeg);
  for (std::size_t d = 0; d < ndeg; ++d) {
    const std::size_t dim = action_.empty() ? 0 : action_[0][d].size();
    out[d].assign(dim, std::vector<std::int64_t>(dim, 0));
    for (std::size_t r = 0; r < dim; ++r) out[d][r][r] = 1 % p_;
  }
  for (std::uint32_t g : rwg_->generator_words()[i])
    for (std::size_t d = 0; d < ndeg; ++d)
      if (!out[d].empty()) out[d] = mod_mul(out[d], action_[g][d], p_);
  return out;
}

bool ModPLattice::acts_as_identity(std::size_t i) const {
  for (const auto& mat : element_action(i))
    if (!mod_is_identity(mat)) return false;
  return true;
}

TPoly invariant_dimension_series(const RootSystem& rs, const WeylGroup& W,
                                 const std::vector<int>& J) {
  TPoly wt = W.length_histogram();
  const auto WL = parabolic_subgroup(rs, J);
  TPoly wlt;
  for (const auto& u : WL.elements) {
    if (static_cast<std::size_t>(u.length) >= wlt.size()) wlt.resize(u.length + 1, Int(0));
    wlt[static_cast<std::size_t>(u.length)] += 1;
  }
  TPoly q;
  if (!tp_divide(wt, wlt, q))
    throw DimensionMismatch("Poincare series of W is not divisible by that of W_L");
  return q;
}

}  // namespace relweyl
