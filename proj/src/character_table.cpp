#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "eqehr/errors.hpp"
#include "eqehr/lattice_group.hpp"

namespace eqehr {

namespace {

using u64 = std::uint64_t;
using ModMatrix = std::vector<std::vector<u64>>;

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a % p == 0) throw std::domain_error("inverse of zero mod p");
    return pow(a, p - 2);
  }
  u64 from(long v) const {
    long r = v % static_cast<long>(p);
    return static_cast<u64>(r < 0 ? r + static_cast<long>(p) : r);
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 choose_prime(u64 exponent, u64 order) {
  u64 floor_bound = static_cast<u64>(2.0 * std::sqrt(static_cast<double>(order))) + 2;
  for (u64 p = exponent + 1;; p += exponent)
    if (p > floor_bound && is_prime(p)) return p;
}

u64 primitive_root(const Field& f) {
  std::vector<u64> factors;
  u64 m = f.p - 1;
  for (u64 q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    factors.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < f.p; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(), [&](u64 q) { return f.pow(g, (f.p - 1) / q) != 1; });
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const Field& f, ModMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[row], a[piv]);
    u64 inv = f.inv(a[row][col]);
    for (auto& x : a[row]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      u64 factor = a[i][col];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[row][j]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Column vectors spanning the kernel of a (n x n).
std::vector<std::vector<u64>> kernel(const Field& f, ModMatrix a, std::size_t n) {
  auto pivots = rref(f, a, n);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<u64> charpoly(const Field& f, ModMatrix h) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    u64 inv = f.inv(h[m][m - 1]);
    for (std::size_t r = m + 1; r < n; ++r) {
      u64 u = f.mul(h[r][m - 1], inv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[r][c] = f.sub(h[r][c], f.mul(u, h[m][c]));
      for (std::size_t c = 0; c < n; ++c) h[c][m] = f.add(h[c][m], f.mul(u, h[c][r]));
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_i h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}, 1-based.
  std::vector<std::vector<u64>> polys{{1}};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<u64> next(m + 1, 0);
    const auto& prev = polys[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      next[k + 1] = f.add(next[k + 1], prev[k]);
      next[k] = f.sub(next[k], f.mul(h[m - 1][m - 1], prev[k]));
    }
    u64 prod = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod = f.mul(prod, h[i][i - 1]);
      u64 coef = f.mul(h[i - 1][m - 1], prod);
      if (coef != 0) {
        const auto& q = polys[i - 1];
        for (std::size_t k = 0; k < q.size(); ++k) next[k] = f.sub(next[k], f.mul(coef, q[k]));
      }
    }
    polys.push_back(std::move(next));
  }
  return polys[n];
}

u64 eval(const Field& f, const std::vector<u64>& poly, u64 x) {
  u64 r = 0;
  for (std::size_t i = poly.size(); i-- > 0;) r = f.add(f.mul(r, x), poly[i]);
  return r;
}

struct LiftedCharacter {
  ClassFunction values;
  long degree = 0;
  std::vector<std::vector<unsigned>> eigen_exponents;  // per class, sorted
};

}  // namespace

BigInt CharacterTable::degree(std::size_t i) const { return characters[i][0].rational().get_num(); }

std::size_t CharacterTable::trivial_index() const {
  for (std::size_t i = 0; i < characters.size(); ++i) {
    bool trivial = std::all_of(characters[i].values().begin(), characters[i].values().end(),
                               [](const CyclotomicValue& v) { return v == CyclotomicValue(1); });
    if (trivial) return i;
  }
  throw std::logic_error("character table without a trivial character");
}

std::optional<std::size_t> CharacterTable::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  return std::nullopt;
}

CharacterTable character_table(const GroupPtr& group) {
  const FiniteMatrixGroup& g = *group;
  const std::size_t k = g.class_count();
  const u64 n = g.order();
  const unsigned e = g.exponent();
  const Field f{choose_prime(e, n)};

  // c[j][a][b] = #{(x, y) in C_j x C_a : x y = z_b}
  std::vector<ModMatrix> cmat(k, ModMatrix(k, std::vector<u64>(k, 0)));
  for (std::size_t b = 0; b < k; ++b) {
    std::size_t z = g.representative_index(b);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t x : g.class_members(j)) {
        std::size_t y = g.multiply(g.inverse(x), z);
        cmat[j][g.class_of(y)][b] += 1;
      }
  }
  for (auto& m : cmat)
    for (auto& row : m)
      for (auto& v : row) v %= f.p;

  // Common eigenvectors (columns) of all class matrices.
  std::vector<ModMatrix> spaces;  // each: list of basis column vectors
  {
    ModMatrix basis;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<u64> v(k, 0);
      v[i] = 1;
      basis.push_back(std::move(v));
    }
    spaces.push_back(std::move(basis));
  }
  for (std::size_t j = 1; j < k; ++j) {
    if (spaces.size() == k) break;
    std::vector<ModMatrix> next;
    for (auto& space : spaces) {
      const std::size_t w = space.size();
      if (w == 1) {
        next.push_back(std::move(space));
        continue;
      }
      // Solve B R = M B via elimination on [B | M B] (rows indexed by class).
      ModMatrix aug(k, std::vector<u64>(2 * w, 0));
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < w; ++c) {
          aug[r][c] = space[c][r];
          u64 s = 0;
          for (std::size_t t = 0; t < k; ++t) s = f.add(s, f.mul(cmat[j][r][t], space[c][t]));
          aug[r][w + c] = s;
        }
      rref(f, aug, w);
      ModMatrix restricted(w, std::vector<u64>(w));
      for (std::size_t r = 0; r < w; ++r)
        for (std::size_t c = 0; c < w; ++c) restricted[r][c] = aug[r][w + c];
      auto poly = charpoly(f, restricted);
      std::size_t total = 0;
      for (u64 lambda = 0; lambda < f.p; ++lambda) {
        if (eval(f, poly, lambda) != 0) continue;
        ModMatrix shifted = restricted;
        for (std::size_t i = 0; i < w; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
        auto ker = kernel(f, shifted, w);
        ModMatrix sub;
        for (const auto& coeffs : ker) {
          std::vector<u64> v(k, 0);
          for (std::size_t c = 0; c < w; ++c)
            for (std::size_t r = 0; r < k; ++r) v[r] = f.add(v[r], f.mul(coeffs[c], space[c][r]));
          sub.push_back(std::move(v));
        }
        total += sub.size();
        next.push_back(std::move(sub));
      }
      if (total != w) throw InternalMismatch("class matrix not diagonalizable modulo p");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) throw InternalMismatch("class algebra did not split into one-dimensional eigenspaces");

  std::vector<std::size_t> inverse_class(k);
  for (std::size_t c = 0; c < k; ++c) inverse_class[c] = g.class_of(g.inverse(g.representative_index(c)));
  std::vector<std::vector<std::size_t>> power_classes(k);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t o = g.element_order(g.representative_index(c));
    for (std::size_t l = 0; l < o; ++l) power_classes[c].push_back(g.power_class(c, static_cast<long>(l)));
  }
  const u64 z = f.pow(primitive_root(f), (f.p - 1) / e);

  std::vector<LiftedCharacter> lifted;
  for (const auto& space : spaces) {
    std::vector<u64> omega = space[0];
    u64 norm = f.inv(omega[0]);
    for (auto& x : omega) x = f.mul(x, norm);
    u64 s = 0;
    for (std::size_t c = 0; c < k; ++c)
      s = f.add(s, f.mul(f.mul(omega[c], omega[inverse_class[c]]), f.inv(g.class_size(c) % f.p)));
    u64 deg_sq = f.mul(n % f.p, f.inv(s));
    long degree = 0;
    for (long d = 1; static_cast<u64>(d * d) <= n; ++d)
      if (f.mul(d, d) == deg_sq) degree = d;
    if (degree == 0) throw InternalMismatch("could not recover a character degree");
    std::vector<u64> chi(k);
    for (std::size_t c = 0; c < k; ++c)
      chi[c] = f.mul(f.mul(omega[c], static_cast<u64>(degree)), f.inv(g.class_size(c) % f.p));

    LiftedCharacter lc;
    lc.degree = degree;
    std::vector<CyclotomicValue> values;
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t o = power_classes[c].size();
      const u64 zo = f.pow(z, e / o);
      const u64 o_inv = f.inv(o % f.p);
      std::vector<BigRational> coeffs(e);
      std::vector<unsigned> exps;
      for (std::size_t kk = 0; kk < o; ++kk) {
        u64 m = 0;
        for (std::size_t l = 0; l < o; ++l) {
          u64 root = f.pow(zo, (o - (kk * l) % o) % o);
          m = f.add(m, f.mul(chi[power_classes[c][l]], root));
        }
        m = f.mul(m, o_inv);
        if (m > static_cast<u64>(degree)) throw InternalMismatch("eigenvalue multiplicity out of range");
        unsigned ex = static_cast<unsigned>(kk * (e / o));
        coeffs[ex] += static_cast<long>(m);
        exps.insert(exps.end(), m, ex);
      }
      std::sort(exps.begin(), exps.end());
      lc.eigen_exponents.push_back(std::move(exps));
      values.push_back(CyclotomicValue::from_polynomial(e, RatPolynomial(std::move(coeffs))));
    }
    lc.values = ClassFunction(group, std::move(values));
    lifted.push_back(std::move(lc));
  }
  std::sort(lifted.begin(), lifted.end(), [](const LiftedCharacter& a, const LiftedCharacter& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.eigen_exponents < b.eigen_exponents;
  });

  std::vector<ClassFunction> chars;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    chars.push_back(std::move(lifted[i].values));
    labels.push_back("chi" + std::to_string(i) + "[" + std::to_string(lifted[i].degree) + "]");
  }
  try {
    return character_table_from_values(group, std::move(chars), std::move(labels));
  } catch (const std::invalid_argument& err) {
    throw InternalMismatch(std::string("computed character table failed validation: ") + err.what());
  }
}

CharacterTable character_table_from_values(const GroupPtr& group, std::vector<ClassFunction> characters,
                                           std::vector<std::string> labels) {
  const std::size_t k = group->class_count();
  if (characters.size() != k) throw std::invalid_argument("character table must have one character per class");
  if (labels.size() != k) throw std::invalid_argument("character table must have one label per character");
  BigInt sum_sq = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (characters[i].group() != group) throw std::invalid_argument("character on a different group");
    for (std::size_t j = i; j < k; ++j) {
      CyclotomicValue ip = inner_product(characters[i], characters[j]);
      if (ip != CyclotomicValue(i == j ? 1 : 0))
        throw std::invalid_argument("characters " + labels[i] + " and " + labels[j] + " are not orthonormal");
    }
    if (!characters[i][0].is_integer()) throw std::invalid_argument("character degree is not an integer");
    BigInt d = characters[i][0].rational().get_num();
    sum_sq += d * d;
  }
  if (sum_sq != group->order()) throw std::invalid_argument("squared degrees do not sum to the group order");
  CharacterTable t{group, std::move(characters), std::move(labels)};
  t.trivial_index();
  return t;
}

std::vector<CyclotomicValue> decompose(const ClassFunction& f, const CharacterTable& table) {
  std::vector<CyclotomicValue> out;
  out.reserve(table.size());
  for (const auto& chi : table.characters) out.push_back(inner_product(f, chi));
  return out;
}

bool is_effective(const std::vector<CyclotomicValue>& multiplicities) {
  return std::all_of(multiplicities.begin(), multiplicities.end(),
                     [](const CyclotomicValue& m) { return m.is_integer() && m.rational() >= 0; });
}

std::string format_decomposition(const std::vector<CyclotomicValue>& multiplicities, const CharacterTable& table) {
  std::string out;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    const auto& m = multiplicities[i];
    if (m.is_zero()) continue;
    std::string coef;
    bool negative = false;
    if (m.is_rational()) {
      BigRational q = m.rational();
      negative = q < 0;
      if (negative) q = -q;
      if (q != 1) coef = to_string(q) + "*";
    } else {
      coef = "(" + m.to_string() + ")*";
    }
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += coef + table.labels[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace eqehr
