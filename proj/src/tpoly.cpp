#include "relweyl/tpoly.hpp"

#include <map>

namespace relweyl {

TPoly tp_trim(TPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int tp_degree(const TPoly& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<int>(i);
  return -1;
}

TPoly tp_mul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return tp_trim(std::move(c));
}

TPoly tp_sub(const TPoly& a, const TPoly& b) {
  TPoly c(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return tp_trim(std::move(c));
}

bool tp_equal(const TPoly& a, const TPoly& b) { return tp_trim(a) == tp_trim(b); }

Int tp_eval_one(const TPoly& p) {
  Int s = 0;
  for (const auto& c : p) s += c;
  return s;
}

bool tp_divide(const TPoly& a0, const TPoly& b0, TPoly& q) {
  q.clear();
  TPoly a = tp_trim(a0), b = tp_trim(b0);
  if (b.empty()) return false;
  if (a.empty()) return true;  // q = 0
  if (a.size() < b.size()) return false;
  q.assign(a.size() - b.size() + 1, Int(0));
  // long division from the top; exact only if every leading step divides
  for (std::size_t k = q.size(); k-- > 0;) {
    Int lead = a[k + b.size() - 1];
    if (lead == 0) continue;
    if (lead % b.back() != 0) {
      q.clear();
      return false;
    }
    Int f = lead / b.back();
    q[k] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= f * b[j];
  }
  for (const auto& c : a)
    if (c != 0) {
      q.clear();
      return false;
    }
  return true;
}

TPoly tp_qbracket(int d) {
  TPoly p(d, Int(1));
  return p;
}

TPoly tp_cyclotomic(int k) {
  // t^k - 1 divided by all lower cyclotomics of divisors of k
  TPoly p(k + 1, Int(0));
  p[0] = -1;
  p[k] = 1;
  for (int d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    TPoly q;
    TPoly cd = tp_cyclotomic(d);
    if (!tp_divide(p, cd, q)) return {};  // unreachable for valid inputs
    p = q;
  }
  return p;
}

}  // namespace relweyl
