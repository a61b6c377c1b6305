#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

namespace {

// Solves the square system a x = b; empty when singular.
std::vector<BigRational> solve_square(std::vector<std::vector<BigRational>> a, std::vector<BigRational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return {};
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const BigRational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

BigRational determinant(std::vector<std::vector<BigRational>> a) {
  const std::size_t n = a.size();
  BigRational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const BigRational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return det;
}

}  // namespace

std::vector<Halfspace> brute_force_facets(const std::vector<IntVector>& points) {
  const std::size_t n = points.front().size();
  std::vector<Halfspace> out;
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == n) {
      // normal by cofactors of the (n - 1) x n difference matrix
      std::vector<BigRational> normal(n);
      for (std::size_t skip = 0; skip < n; ++skip) {
        std::vector<std::vector<BigRational>> minor;
        for (std::size_t r = 1; r < n; ++r) {
          std::vector<BigRational> row;
          for (std::size_t c = 0; c < n; ++c)
            if (c != skip) row.push_back(BigRational(points[pick[r]][c] - points[pick[0]][c]));
          minor.push_back(row);
        }
        normal[skip] = (skip % 2 == 0 ? 1 : -1) * (n == 1 ? BigRational(1) : determinant(minor));
      }
      if (std::all_of(normal.begin(), normal.end(), [](const BigRational& v) { return v == 0; })) return;
      auto dot = [&](const IntVector& p) {
        BigRational s = 0;
        for (std::size_t i = 0; i < n; ++i) s += normal[i] * p[i];
        return s;
      };
      const BigRational rhs = dot(points[pick[0]]);
      bool below = true, above = true;
      for (const auto& p : points) {
        const BigRational v = dot(p);
        below = below && v <= rhs;
        above = above && v >= rhs;
      }
      if (below) out.push_back({normal, rhs});
      if (above) {
        for (auto& v : normal) v = -v;
        out.push_back({normal, -rhs});
      }
      return;
    }
    for (std::size_t i = start; i < points.size(); ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

bool in_halfspaces(const std::vector<Halfspace>& facets, const std::vector<BigRational>& x) {
  for (const auto& f : facets) {
    BigRational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += f.normal[i] * x[i];
    if (s > f.rhs) return false;
  }
  return true;
}

bool in_hull(const std::vector<IntVector>& points, const std::vector<BigRational>& x) {
  const std::size_t n = x.size(), k = n + 1;
  if (points.size() < k) return false;
  std::vector<std::size_t> pick(k);
  bool found = false;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (found) return;
    if (depth == k) {
      std::vector<std::vector<BigRational>> a(k, std::vector<BigRational>(k));
      std::vector<BigRational> b(k);
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < n; ++i) a[i][j] = points[pick[j]][i];
        a[n][j] = 1;
      }
      for (std::size_t i = 0; i < n; ++i) b[i] = x[i];
      b[n] = 1;
      const auto lambda = solve_square(a, b);
      if (!lambda.empty() && std::all_of(lambda.begin(), lambda.end(), [](const BigRational& v) { return v >= 0; }))
        found = true;
      return;
    }
    for (std::size_t i = start; i < points.size(); ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return found;
}

std::vector<IntVector> lattice_points(const std::vector<IntVector>& points, std::int64_t m) {
  const std::size_t n = points.front().size();
  if (m == 0) return {IntVector(n, 0)};
  IntVector lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = hi[i] = points.front()[i];
    for (const auto& p : points) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
    lo[i] *= m;
    hi[i] *= m;
  }
  const auto facets = brute_force_facets(points);
  std::vector<IntVector> out;
  IntVector cur(lo);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      std::vector<BigRational> x;
      for (auto c : cur) x.push_back(BigRational(c, m));
      for (auto& v : x) v.canonicalize();
      if (in_halfspaces(facets, x)) out.push_back(cur);
      return;
    }
    for (std::int64_t v = lo[i]; v <= hi[i]; ++v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

BigInt count(const std::vector<IntVector>& points, std::int64_t m) {
  return BigInt(static_cast<unsigned long>(lattice_points(points, m).size()));
}

eqehr::IntPolynomial hstar_from_counts(const std::vector<BigInt>& counts, int d) {
  std::vector<BigInt> h(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= i; ++j) {
      BigInt c = eqehr::binomial(d + 1, j) * counts[static_cast<std::size_t>(i - j)];
      h[static_cast<std::size_t>(i)] += (j % 2 == 0) ? c : BigInt(-c);
    }
  return eqehr::IntPolynomial(h);
}

int affine_dimension(const std::vector<IntVector>& points) {
  std::vector<std::vector<BigRational>> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<BigRational> r;
    for (std::size_t k = 0; k < points[i].size(); ++k) r.push_back(BigRational(points[i][k] - points[0][k]));
    rows.push_back(r);
  }
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  int rank = 0;
  for (std::size_t col = 0; col < ncols && static_cast<std::size_t>(rank) < rows.size(); ++col) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][col] == 0) continue;
      const BigRational f = rows[r][col] / rows[static_cast<std::size_t>(rank)][col];
      for (std::size_t k = 0; k < ncols; ++k) rows[r][k] -= f * rows[static_cast<std::size_t>(rank)][k];
    }
    ++rank;
  }
  return rank;
}

eqehr::IntPolynomial eulerian_by_descents(unsigned d) {
  std::vector<unsigned> perm(d);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<BigInt> c(d == 0 ? 1 : d, 0);
  do {
    std::size_t descents = 0;
    for (std::size_t i = 0; i + 1 < perm.size(); ++i)
      if (perm[i] > perm[i + 1]) ++descents;
    c[descents] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return eqehr::IntPolynomial(c);
}

BigInt partitions_at_most(long m, long k) {
  // p(m, k) = p(m, k - 1) + p(m - k, k)
  if (m == 0) return 1;
  if (m < 0 || k == 0) return 0;
  return partitions_at_most(m, k - 1) + partitions_at_most(m - k, k);
}

BigInt partitions_distinct(long m, long k) {
  // subtracting k, k - 1, ..., 1 from the sorted parts leaves at most k parts of m - k(k + 1) / 2
  const long rest = m - k * (k + 1) / 2;
  if (rest < 0) return 0;
  return partitions_at_most(rest, k);
}

}  // namespace oracle
