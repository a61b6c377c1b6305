#include "eqehr/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace eqehr {

RowEchelon row_echelon(RatMatrix a, std::size_t ncols) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[row], a[pivot]);
    BigRational inv = 1 / a[row][col];
    const std::size_t width = a[row].size();
    for (std::size_t j = col; j < width; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      BigRational f = a[i][col];
      for (std::size_t j = col; j < width; ++j) a[i][j] -= f * a[row][j];
    }
    out.pivots.push_back(col);
    ++row;
  }
  a.resize(std::min(row, a.size()));
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const RatMatrix& a, std::size_t ncols) { return row_echelon(a, ncols).pivots.size(); }

RatMatrix nullspace(const RatMatrix& a, std::size_t ncols) {
  RowEchelon e = row_echelon(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RatMatrix basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(ncols);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b, std::size_t ncols) {
  RatMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  RowEchelon e = row_echelon(std::move(aug), ncols + 1);
  RatVector x(ncols);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == ncols) return std::nullopt;
    x[e.pivots[r]] = e.reduced[r][ncols];
  }
  return x;
}

BigRational determinant(RatMatrix a) {
  const std::size_t n = a.size();
  BigRational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      BigRational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix aug(n, RatVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  RowEchelon e = row_echelon(std::move(aug), n);
  if (e.pivots.size() != n) return std::nullopt;
  RatMatrix inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.reduced[i][n + j];
  return inv;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  RatMatrix c(a.size(), RatVector(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

RatVector multiply(const RatMatrix& a, const RatVector& x) {
  RatVector y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
  return y;
}

RatMatrix transpose(const RatMatrix& a, std::size_t ncols) {
  RatMatrix t(ncols, RatVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) t[j][i] = a[i][j];
  return t;
}

RatPolynomial characteristic_polynomial(const RatMatrix& a) {
  // Faddeev-LeVerrier.
  const std::size_t n = a.size();
  std::vector<BigRational> c(n + 1);
  c[n] = 1;
  RatMatrix m(n, RatVector(n));
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix am = multiply(a, m);
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = std::move(am);
    RatMatrix prod = multiply(a, m);
    BigRational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += prod[i][i];
    c[n - k] = -trace / BigRational(static_cast<long>(k));
  }
  return RatPolynomial(std::move(c));
}

BigRational dot(const RatVector& a, const RatVector& b) {
  BigRational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigRational dot(const BigIntVector& a, const RatVector& b) {
  BigRational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigIntVector primitive_integer_vector(const RatVector& v) {
  BigInt den = 1;
  for (const auto& x : v) den = lcm_of(den, x.get_den());
  BigIntVector out(v.size());
  BigInt g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    BigRational scaled = v[i] * den;
    out[i] = scaled.get_num();
    g = gcd_of(g, out[i]);
  }
  if (g != 0)
    for (auto& x : out) x /= g;
  return out;
}

namespace {

struct ColumnReduction {
  BigIntMatrix h;                       // e * u
  BigIntMatrix u;                       // unimodular, n x n
  std::vector<std::size_t> pivot_rows;  // pivot row of column j < rank
};

ColumnReduction column_reduce(const BigIntMatrix& e, std::size_t n) {
  ColumnReduction cr{e, BigIntMatrix(n, BigIntVector(n)), {}};
  for (std::size_t i = 0; i < n; ++i) cr.u[i][i] = 1;
  auto& h = cr.h;
  auto& u = cr.u;
  auto col_axpy = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (auto& row : h) row[dst] -= q * row[src];
    for (auto& row : u) row[dst] -= q * row[src];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : h) std::swap(row[a], row[b]);
    for (auto& row : u) std::swap(row[a], row[b]);
  };
  std::size_t col = 0;
  for (std::size_t i = 0; i < h.size() && col < n; ++i) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = col; j < n; ++j)
        if (h[i][j] != 0 && (best == n || abs(h[i][j]) < abs(h[i][best]))) best = j;
      if (best == n) break;
      col_swap(col, best);
      bool clean = true;
      for (std::size_t j = col + 1; j < n; ++j) {
        if (h[i][j] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), h[i][j].get_mpz_t(), h[i][col].get_mpz_t());
        col_axpy(j, col, q);
        if (h[i][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (h[i][col] != 0) {
      cr.pivot_rows.push_back(i);
      ++col;
    }
  }
  return cr;
}

}  // namespace

BigIntMatrix integer_kernel(const BigIntMatrix& e, std::size_t ncols) {
  ColumnReduction cr = column_reduce(e, ncols);
  BigIntMatrix basis;
  for (std::size_t j = cr.pivot_rows.size(); j < ncols; ++j) {
    BigIntVector v(ncols);
    for (std::size_t i = 0; i < ncols; ++i) v[i] = cr.u[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<BigIntVector> solve_integer(const BigIntMatrix& e, const RatVector& target, std::size_t ncols) {
  ColumnReduction cr = column_reduce(e, ncols);
  const std::size_t r = cr.pivot_rows.size();
  std::vector<BigInt> y(r);
  for (std::size_t j = 0; j < r; ++j) {
    std::size_t p = cr.pivot_rows[j];
    BigRational rest = target[p];
    for (std::size_t i = 0; i < j; ++i) rest -= cr.h[p][i] * y[i];
    BigRational yj = rest / BigRational(cr.h[p][j]);
    if (!is_integral(yj)) return std::nullopt;
    y[j] = yj.get_num();
  }
  for (std::size_t row = 0; row < e.size(); ++row) {
    BigRational s = 0;
    for (std::size_t j = 0; j < r; ++j) s += cr.h[row][j] * y[j];
    if (s != target[row]) return std::nullopt;
  }
  BigIntVector x(ncols);
  for (std::size_t i = 0; i < ncols; ++i)
    for (std::size_t j = 0; j < r; ++j) x[i] += cr.u[i][j] * y[j];
  return x;
}

}  // namespace eqehr
