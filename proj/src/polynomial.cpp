#include "relweyl/polynomial.hpp"

#include <algorithm>

#include "relweyl/error.hpp"

namespace relweyl {

Polynomial Polynomial::constant(int nvars, const Rat& c) {
  Polynomial p(nvars);
  p.add_term(Mono(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Polynomial p(nvars);
  Mono m(static_cast<std::size_t>(nvars), 0);
  m[static_cast<std::size_t>(i)] = 1;
  p.add_term(m, Rat(1));
  return p;
}

Polynomial Polynomial::linear(const std::vector<Rat>& coeffs) {
  Polynomial p(static_cast<int>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Mono m(coeffs.size(), 0);
    m[i] = 1;
    p.add_term(m, coeffs[i]);
  }
  return p;
}

Polynomial Polynomial::simple_root(const RootSystem& rs, int i) {
  std::vector<Rat> coeffs(static_cast<std::size_t>(rs.rank()));
  for (int j = 0; j < rs.rank(); ++j) coeffs[static_cast<std::size_t>(j)] = Rat(rs.cartan(j, i));
  return linear(coeffs);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (int e : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -2;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (int e : m) t += e;
    if (d == -2) d = t;
    else if (t != d) return false;
  }
  return true;
}

Rat Polynomial::constant_term() const {
  return coefficient(Mono(static_cast<std::size_t>(nvars_), 0));
}

Rat Polynomial::coefficient(const Mono& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial p(nvars_);
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (int e : m) t += e;
    if (t == d) p.terms_.emplace(m, c);
  }
  return p;
}

Polynomial& Polynomial::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return *this;
  const auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial p = *this;
  p += o;
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial p = *this;
  p -= o;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial p(nvars_);
  Mono m(static_cast<std::size_t>(nvars_));
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
      p.add_term(m, c1 * c2);
    }
  }
  return p;
}

Polynomial Polynomial::operator*(const Rat& c) const {
  Polynomial p(nvars_);
  if (c == 0) return p;
  for (const auto& [m, c0] : terms_) p.terms_.emplace(m, c0 * c);
  return p;
}

bool Polynomial::operator==(const Polynomial& o) const { return terms_ == o.terms_; }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += rat_to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += rat_to_string(c) + "*" + mono;
    }
  }
  return out;
}

Polynomial apply_simple_reflection(const RootSystem& rs, int i, const Polynomial& f) {
  const int n = f.nvars();
  // x_i maps to x_i - alpha_i; every other variable is fixed.
  const Polynomial image = Polynomial::variable(n, i) - Polynomial::simple_root(rs, i);

  int maxexp = 0;
  for (const auto& [m, c] : f.terms()) maxexp = std::max(maxexp, m[static_cast<std::size_t>(i)]);
  std::vector<Polynomial> powers;
  powers.push_back(Polynomial::constant(n, Rat(1)));
  for (int e = 1; e <= maxexp; ++e) powers.push_back(powers.back() * image);

  Polynomial out(n);
  for (const auto& [m, c] : f.terms()) {
    const int e = m[static_cast<std::size_t>(i)];
    Polynomial::Mono rest = m;
    rest[static_cast<std::size_t>(i)] = 0;
    Polynomial::Mono shifted(static_cast<std::size_t>(n));
    for (const auto& [pm, pc] : powers[static_cast<std::size_t>(e)].terms()) {
      for (std::size_t k = 0; k < shifted.size(); ++k) shifted[k] = pm[k] + rest[k];
      out.add_term(shifted, c * pc);
    }
  }
  return out;
}

Polynomial apply_word(const RootSystem& rs, const std::vector<std::uint8_t>& word,
                      const Polynomial& f) {
  Polynomial g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    g = apply_simple_reflection(rs, *it, g);
  return g;
}

Polynomial divided_difference(const RootSystem& rs, int i, const Polynomial& f) {
  const int n = f.nvars();
  Polynomial num = f - apply_simple_reflection(rs, i, f);
  if (num.is_zero()) return Polynomial(n);

  // Divide by alpha_i = 2 x_i + L' treating x_i as the main variable; the
  // layers q_k live in the subring without x_i, so the recurrence is exact.
  Polynomial lprime(n);
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    const int c = rs.cartan(j, i);
    if (c != 0) lprime += Polynomial::variable(n, j) * Rat(c);
  }

  std::map<int, Polynomial> layers;
  int top = 0;
  for (const auto& [m, c] : num.terms()) {
    const int e = m[static_cast<std::size_t>(i)];
    top = std::max(top, e);
    Polynomial::Mono rest = m;
    rest[static_cast<std::size_t>(i)] = 0;
    auto [it, inserted] = layers.try_emplace(e, n);
    it->second.add_term(rest, c);
  }
  if (top == 0) throw Error("divided difference: numerator has no x_i factor");

  const Rat half(1, 2);
  std::map<int, Polynomial> q;
  Polynomial carry(n);  // L' * q_k from the previous step
  for (int k = top; k >= 1; --k) {
    Polynomial gk(n);
    const auto it = layers.find(k);
    if (it != layers.end()) gk = it->second;
    gk -= carry;
    Polynomial qk = gk * half;
    if (!qk.is_zero()) q.emplace(k - 1, qk);
    carry = lprime * qk;
  }
  Polynomial r0(n);
  const auto it0 = layers.find(0);
  if (it0 != layers.end()) r0 = it0->second;
  if (!(r0 - carry).is_zero()) throw Error("divided difference: division is not exact");

  Polynomial out(n);
  for (const auto& [k, poly] : q) {
    for (const auto& [m, c] : poly.terms()) {
      Polynomial::Mono full = m;
      full[static_cast<std::size_t>(i)] = k;
      out.add_term(full, c);
    }
  }
  return out;
}

Polynomial divided_difference_word(const RootSystem& rs, const std::vector<std::uint8_t>& word,
                                   const Polynomial& f) {
  Polynomial g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = divided_difference(rs, *it, g);
  return g;
}

}  // namespace relweyl
