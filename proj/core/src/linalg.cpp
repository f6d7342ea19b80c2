#include "zgrade/linalg.hpp"

#include <numeric>
#include <utility>

#include "zgrade/types.hpp"

namespace zgrade {

namespace {
__extension__ using Wide = __int128;
}  // namespace

std::int64_t determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw InputError("determinant of non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  int sign = 1;
  Wide prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

namespace {

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

// Extended gcd: returns g and sets x, y with a*x + b*y = g >= 0.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

}  // namespace

std::vector<std::int64_t> smith_diagonal(IntMatrix a) {
  const std::size_t n = a.size();
  for (std::size_t t = 0; t < n; ++t) {
    // pivot: smallest nonzero magnitude in the trailing block
    bool done = false;
    while (!done) {
      std::size_t pr = n, pc = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pr == n || abs64(a[i][j]) < abs64(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == n) {
        std::vector<std::int64_t> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(i < t ? abs64(a[i][i]) : 0);
        return out;
      }
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);

      // clear column t by row operations
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t] == 0) continue;
        if (a[i][t] % a[t][t] == 0) {
          const std::int64_t q = a[i][t] / a[t][t];
          for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
          continue;
        }
        std::int64_t x, y;
        std::int64_t g = ext_gcd(a[t][t], a[i][t], x, y);
        std::int64_t u = a[t][t] / g, v = a[i][t] / g;
        for (std::size_t j = t; j < n; ++j) {
          std::int64_t top = a[t][j], bot = a[i][j];
          a[t][j] = x * top + y * bot;
          a[i][j] = -v * top + u * bot;
        }
      }
      // clear row t by column operations
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        if (a[t][j] % a[t][t] == 0) {
          const std::int64_t q = a[t][j] / a[t][t];
          for (std::size_t i = t; i < n; ++i) a[i][j] -= q * a[i][t];
          continue;
        }
        std::int64_t x, y;
        std::int64_t g = ext_gcd(a[t][t], a[t][j], x, y);
        std::int64_t u = a[t][t] / g, v = a[t][j] / g;
        for (std::size_t i = t; i < n; ++i) {
          std::int64_t left = a[i][t], right = a[i][j];
          a[i][t] = x * left + y * right;
          a[i][j] = -v * left + u * right;
        }
      }
      bool column_clear = true;
      for (std::size_t i = t + 1; i < n; ++i) column_clear = column_clear && a[i][t] == 0;
      if (!column_clear) continue;
      // divisibility: fold any entry not divisible by the pivot into row t
      done = true;
      for (std::size_t i = t + 1; i < n && done; ++i)
        for (std::size_t j = t + 1; j < n && done; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = t; c < n; ++c) a[t][c] += a[i][c];
            done = false;
          }
    }
  }
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(abs64(a[i][i]));
  return out;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a = m;
  RatMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InputError("singular matrix has no inverse");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::vector<std::int64_t> primitive_integer(const std::vector<Rational>& v) {
  std::int64_t den_lcm = 1;
  for (const auto& x : v) den_lcm = std::lcm(den_lcm, x.denominator());
  std::vector<std::int64_t> out;
  std::int64_t g = 0;
  for (const auto& x : v) {
    std::int64_t val = x.numerator() * (den_lcm / x.denominator());
    out.push_back(val);
    g = std::gcd(g, val);
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

std::vector<std::int64_t> primitive_kernel_vector(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  RatMatrix a = to_rational(m);
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    Rational d = a[r][c];
    for (auto& x : a[r]) x /= d;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  if (r + 1 != cols) throw InputError("matrix does not have a one-dimensional kernel");
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> v(cols, Rational(0));
  v[free_col] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free_col];
  auto out = primitive_integer(v);
  for (auto x : out) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : out) y = -y;
    break;
  }
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    std::vector<Rational> r;
    r.reserve(row.size());
    for (auto x : row) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

IntMatrix principal_submatrix(const IntMatrix& m, const std::vector<int>& indices) {
  IntMatrix out;
  for (int i : indices) {
    std::vector<std::int64_t> row;
    for (int j : indices) row.push_back(m[i][j]);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace zgrade
