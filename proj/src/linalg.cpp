#include "relweyl/linalg.hpp"

#include <algorithm>
#include <string>

#include "relweyl/error.hpp"

namespace relweyl {

IntMat int_identity(std::size_t n) {
  IntMat m(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMat c(n, std::vector<Int>(m, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      const Int& f = a[i][t];
      for (std::size_t j = 0; j < m; ++j) c[i][j] += f * b[t][j];
    }
  return c;
}

bool is_identity(const IntMat& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

ModMat mod_reduce(const IntMat& a, std::int64_t p) {
  ModMat m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    m[i].resize(a[i].size());
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      Int r = a[i][j] % p;
      if (r < 0) r += p;
      m[i][j] = r.convert_to<std::int64_t>();
    }
  }
  return m;
}

ModMat mod_mul(const ModMat& a, const ModMat& b, std::int64_t p) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  ModMat c(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      const std::int64_t f = a[i][t];
      if (f == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] = (c[i][j] + f * b[t][j]) % p;
    }
  return c;
}

bool mod_is_identity(const ModMat& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // Extended Euclid; requires gcd(a, p) = 1, which holds for a != 0 mod a prime.
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return ((t % p) + p) % p;
}

std::vector<std::size_t> mod_rref(ModMat& m, std::int64_t p) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const std::int64_t inv = mod_inverse(m[r][c], p);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::int64_t f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int mod_rank(ModMat a, std::int64_t p) { return static_cast<int>(mod_rref(a, p).size()); }

ModMat mod_kernel(const ModMat& a, std::int64_t p) {
  ModMat m = a;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  auto pivots = mod_rref(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  ModMat kernel(cols, std::vector<std::int64_t>(free_cols.size(), 0));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    kernel[f][k] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      kernel[pivots[r]][k] = (p - m[r][f]) % p;
  }
  return kernel;
}

IntMat integer_kernel(const IntMat& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  // Column reduction A U = H with U unimodular; kernel = columns of U under zero
  // columns of H. Work on transposed storage: each entry of `work` is a column
  // of A stacked with the corresponding column of U.
  std::vector<std::vector<Int>> acol(cols, std::vector<Int>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) acol[j][i] = a[i][j];
  IntMat u(cols, std::vector<Int>(cols, Int(0)));  // row j = coefficients of column j
  for (std::size_t j = 0; j < cols; ++j) u[j][j] = 1;

  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows && lead < cols; ++r) {
    // gcd-reduce row r across columns lead..cols-1 until at most one nonzero
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = lead; j < cols; ++j) {
        if (acol[j][r] == 0) continue;
        if (best == cols || abs(acol[j][r]) < abs(acol[best][r])) best = j;
      }
      if (best == cols) break;  // row r already zero on the tail
      std::swap(acol[lead], acol[best]);
      std::swap(u[lead], u[best]);
      bool cleared = true;
      for (std::size_t j = lead + 1; j < cols; ++j) {
        if (acol[j][r] == 0) continue;
        Int f = acol[j][r] / acol[lead][r];
        if (f != 0) {
          for (std::size_t i = r; i < rows; ++i) acol[j][i] -= f * acol[lead][i];
          for (std::size_t i = 0; i < cols; ++i) u[j][i] -= f * u[lead][i];
        }
        if (acol[j][r] != 0) cleared = false;
      }
      if (cleared) {
        ++lead;
        break;
      }
    }
    if (lead >= cols) break;
  }

  IntMat kernel(cols);
  std::size_t dim = 0;
  for (std::size_t j = lead; j < cols; ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < rows && zero; ++i) zero = acol[j][i] == 0;
    if (zero) ++dim;
  }
  IntMat result(cols, std::vector<Int>(dim, Int(0)));
  std::size_t c = 0;
  for (std::size_t j = lead; j < cols; ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < rows && zero; ++i) zero = acol[j][i] == 0;
    if (!zero) continue;
    for (std::size_t i = 0; i < cols; ++i) result[i][c] = u[j][i];
    ++c;
  }
  return result;
}

namespace {

// Reduced row echelon form in place; returns pivot column of each pivot row.
std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const Rat inv = Rat(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RatMat rational_kernel(const RatMat& a) {
  RatMat m = a;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RatMat kernel(cols, std::vector<Rat>(free_cols.size(), Rat(0)));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    kernel[f][k] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) kernel[pivots[r]][k] = -m[r][f];
  }
  return kernel;
}

RatMat solve_exact(const RatMat& b, const RatMat& x) {
  const std::size_t n = b.size();
  const std::size_t d = n == 0 ? 0 : b[0].size();
  const std::size_t c = x.empty() ? 0 : x[0].size();
  if (x.size() != n) throw DimensionMismatch("solve_exact: row count mismatch");
  RatMat aug(n, std::vector<Rat>(d + c));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug[i][j] = b[i][j];
    for (std::size_t j = 0; j < c; ++j) aug[i][d + j] = x[i][j];
  }
  auto pivots = rref(aug);
  if (pivots.size() != d)
    throw DimensionMismatch("solve_exact: basis columns are dependent");
  for (auto p : pivots)
    if (p >= d) throw DimensionMismatch("solve_exact: inconsistent system");
  // rows beyond the pivots must be zero on the right
  for (std::size_t i = d; i < n; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (aug[i][d + j] != 0) throw DimensionMismatch("solve_exact: inconsistent system");
  RatMat r(d, std::vector<Rat>(c));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < c; ++j) r[i][j] = aug[i][d + j];
  return r;
}

RatMat to_rat(const IntMat& a) {
  RatMat m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i].assign(a[i].begin(), a[i].end());
  return m;
}

IntMat to_int(const RatMat& a, const char* context) {
  IntMat m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    m[i].resize(a[i].size());
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (!is_integer(a[i][j]))
        throw NonIntegralEntry(std::string(context) + ": entry (" + std::to_string(i) + "," +
                               std::to_string(j) + ") = " + rat_to_string(a[i][j]));
      m[i][j] = rat_num(a[i][j]);
    }
  }
  return m;
}

int rat_rank(RatMat a) { return static_cast<int>(rref(a).size()); }

}  // namespace relweyl
