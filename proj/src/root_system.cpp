#include "relweyl/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "relweyl/error.hpp"

namespace relweyl {

namespace {

Int factorial(int n) {
  Int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Int pow2(int n) {
  Int f = 1;
  f <<= n;
  return f;
}

void check_rank(Series s, int n) {
  switch (s) {
    case Series::A:
      if (n >= 1) return;
      break;
    case Series::B:
      if (n >= 2) return;
      break;
    case Series::C:
      if (n >= 3) return;
      break;
    case Series::D:
      if (n >= 4) return;
      break;
    case Series::E:
      if (n >= 6 && n <= 8) return;
      break;
    case Series::F:
      if (n == 4) return;
      break;
    case Series::G:
      if (n == 2) return;
      break;
  }
  throw UnsupportedType(std::string(1, static_cast<char>(s)) + std::to_string(n) +
                        " is not a supported type");
}

}  // namespace

CartanType CartanType::parse(const std::string& s) {
  if (s.size() < 2) throw UnsupportedType("malformed type '" + s + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  static const std::string valid = "ABCDEFG";
  if (valid.find(letter) == std::string::npos)
    throw UnsupportedType("unknown series '" + s + "'");
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw UnsupportedType("malformed type '" + s + "'");
    rank = rank * 10 + (s[i] - '0');
    if (rank > 99) throw UnsupportedType("rank out of range in '" + s + "'");
  }
  CartanType t{static_cast<Series>(letter), rank};
  check_rank(t.series, t.rank);
  return t;
}

std::string CartanType::to_string() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

Int weyl_order(CartanType t) {
  const int n = t.rank;
  switch (t.series) {
    case Series::A:
      return factorial(n + 1);
    case Series::B:
    case Series::C:
      return pow2(n) * factorial(n);
    case Series::D:
      return pow2(n - 1) * factorial(n);
    case Series::E:
      if (n == 6) return Int(51840);
      if (n == 7) return Int(2903040);
      return Int(696729600);
    case Series::F:
      return Int(1152);
    case Series::G:
      return Int(12);
  }
  throw UnsupportedType("bad series");
}

int height(const Root& r) {
  int h = 0;
  for (int c : r) h += c;
  return h;
}

RootSystem::RootSystem(CartanType type) : type_(type) {
  check_rank(type.series, type.rank);
  const int n = type.rank;

  // Symmetrizer d_i = (alpha_i, alpha_i)/2 with short roots normalized to 2.
  d_.assign(n, 1);
  std::vector<std::pair<int, int>> edges;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) edges.emplace_back(i, i + 1);
  };
  switch (type.series) {
    case Series::A:
      chain(n);
      break;
    case Series::B:
      chain(n);
      for (int i = 0; i < n - 1; ++i) d_[i] = 2;
      break;
    case Series::C:
      chain(n);
      d_[n - 1] = 2;
      break;
    case Series::D:
      chain(n - 1);
      edges.emplace_back(n - 3, n - 1);
      break;
    case Series::E:
      edges.emplace_back(0, 2);
      for (int i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(1, 3);
      break;
    case Series::F:
      chain(4);
      d_[0] = d_[1] = 2;
      break;
    case Series::G:
      chain(2);
      d_[1] = 3;
      break;
  }

  bilinear_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) bilinear_[i][i] = 2 * d_[i];
  for (auto [i, j] : edges) bilinear_[i][j] = bilinear_[j][i] = -std::max(d_[i], d_[j]);

  cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cartan_[i][j] = bilinear_[i][j] / d_[i];

  // Orbit closure of the simple roots under the simple reflections.
  std::set<Root> seen;
  std::vector<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Root r = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += cartan_[i][j] * r[j];
      Root image = r;
      image[i] -= pairing;
      if (seen.insert(image).second) queue.push_back(image);
    }
  }

  for (const auto& r : seen) {
    const bool nonneg = std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
    const bool nonpos = std::all_of(r.begin(), r.end(), [](int c) { return c <= 0; });
    if (!nonneg && !nonpos) throw Error("root with mixed signs; closure is inconsistent");
    if (nonneg) positive_.push_back(r);
  }
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    const int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });

  all_ = positive_;
  all_.reserve(2 * positive_.size());
  for (const auto& r : positive_) {
    Root neg(r);
    for (int& c : neg) c = -c;
    all_.push_back(neg);
  }

  simple_index_.assign(n, 0);
  for (std::size_t idx = 0; idx < positive_.size(); ++idx) {
    if (height(positive_[idx]) == 1) {
      for (int i = 0; i < n; ++i)
        if (positive_[idx][i] == 1) simple_index_[i] = idx;
    }
  }

  simple_perm_.assign(n, std::vector<std::uint32_t>(all_.size(), 0));
  for (int i = 0; i < n; ++i)
    for (std::size_t idx = 0; idx < all_.size(); ++idx)
      simple_perm_[i][idx] = static_cast<std::uint32_t>(find_index(reflect(i, all_[idx])));
}

const Root& RootSystem::root(std::size_t idx) const { return all_.at(idx); }

std::size_t RootSystem::find_index(const Root& r) const {
  const auto it = std::lower_bound(
      all_.begin(), all_.begin() + static_cast<long>(positive_.size()), r,
      [](const Root& a, const Root& b) {
        const int ha = height(a), hb = height(b);
        return ha != hb ? ha < hb : a < b;
      });
  if (it != all_.begin() + static_cast<long>(positive_.size()) && *it == r)
    return static_cast<std::size_t>(it - all_.begin());
  Root neg(r);
  for (int& c : neg) c = -c;
  const auto it2 = std::lower_bound(
      all_.begin(), all_.begin() + static_cast<long>(positive_.size()), neg,
      [](const Root& a, const Root& b) {
        const int ha = height(a), hb = height(b);
        return ha != hb ? ha < hb : a < b;
      });
  if (it2 != all_.begin() + static_cast<long>(positive_.size()) && *it2 == neg)
    return static_cast<std::size_t>(it2 - all_.begin()) + positive_.size();
  return all_.size();
}

bool RootSystem::is_root(const Root& r) const {
  return r.size() == static_cast<std::size_t>(rank()) && find_index(r) < all_.size();
}

std::size_t RootSystem::root_index(const Root& r) const {
  if (r.size() != static_cast<std::size_t>(rank()))
    throw NotARoot("vector has wrong dimension");
  const std::size_t idx = find_index(r);
  if (idx >= all_.size()) throw NotARoot("vector is not a root");
  return idx;
}

std::size_t RootSystem::negate_index(std::size_t idx) const {
  const std::size_t m = positive_.size();
  return idx < m ? idx + m : idx - m;
}

Root RootSystem::reflect(int i, const Root& r) const {
  if (r.size() != static_cast<std::size_t>(rank()) || find_index(r) >= all_.size())
    throw NotARoot("reflect: input is not a root");
  int pairing = 0;
  for (int j = 0; j < rank(); ++j) pairing += cartan_[i][j] * r[j];
  Root image = r;
  image[i] -= pairing;
  return image;
}

std::vector<std::uint32_t> RootSystem::reflection_perm(std::size_t k) const {
  std::vector<std::uint32_t> perm(all_.size());
  for (std::size_t idx = 0; idx < all_.size(); ++idx) {
    const Int pairing = coroot_pairing(all_[idx], k);
    Root image = all_[idx];
    const int p = pairing.convert_to<int>();
    for (int c = 0; c < rank(); ++c) image[c] -= p * positive_[k][c];
    perm[idx] = static_cast<std::uint32_t>(find_index(image));
  }
  return perm;
}

Int RootSystem::form(const Root& r1, const Root& r2) const {
  Int s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (r1[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += Int(r1[i]) * bilinear_[i][j] * r2[j];
  }
  return s;
}

Int RootSystem::coroot_pairing(const Root& r, std::size_t k) const {
  const Int num = 2 * form(r, positive_[k]);
  const Int den = form(positive_[k], positive_[k]);
  if (num % den != 0) throw Error("coroot pairing is not integral");
  return num / den;
}

Int RootSystem::coroot_pairing_weight(const std::vector<Int>& lambda, std::size_t k) const {
  // (omega_i, alpha) = a_i d_i for alpha = sum a_j alpha_j
  Int num = 0;
  for (int i = 0; i < rank(); ++i) num += lambda[i] * positive_[k][i] * d_[i];
  num *= 2;
  const Int den = form(positive_[k], positive_[k]);
  if (num % den != 0) throw Error("weight-coroot pairing is not integral");
  return num / den;
}

}  // namespace relweyl
