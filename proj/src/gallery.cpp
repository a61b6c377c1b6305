#include "eqehr/gallery.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "eqehr/errors.hpp"

namespace eqehr {

namespace {

// w with g.P = P - w, from the vertex barycenter b: w = A b - b.
IntVector invariant_translation(const IntMatrix& a, const std::vector<IntVector>& vertices) {
  const std::size_t n = a.rows();
  RatVector b(n, BigRational(0));
  for (const auto& v : vertices)
    for (std::size_t i = 0; i < n; ++i) b[i] += v[i];
  for (auto& x : b) x /= BigRational(static_cast<long>(vertices.size()));
  RatVector ab = a.apply(b);
  IntVector w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = to_int64(BigRational(ab[i] - b[i]));
  return w;
}

IntMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  IntMatrix m(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m.at(perm[i], i) = 1;
  return m;
}

// Transposition (0 1) and the long cycle.
std::vector<std::vector<std::size_t>> symmetric_generators(std::size_t n) {
  std::vector<std::vector<std::size_t>> gens;
  if (n < 2) return gens;
  std::vector<std::size_t> swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  gens.push_back(swap);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  if (n > 2) gens.push_back(cycle);
  return gens;
}

RationalPolytope lattice_hull(std::size_t n, const std::vector<IntVector>& pts) {
  return RationalPolytope::hull_of_lattice_points(n, pts);
}

}  // namespace

GalleryInstance hexagon_Z6() {
  GalleryInstance g;
  g.name = "hexagon";
  g.polytope = lattice_hull(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}});
  g.group = generate_group(2, {AffineLatticeAutomorphism(IntMatrix({{0, 1}, {-1, 1}}), {0, 0})});
  g.expected_hstar = IntPolynomial{1, 4, 1};
  return g;
}

GalleryInstance square_B2() {
  GalleryInstance g;
  g.name = "square-b2";
  std::vector<IntVector> verts{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  g.polytope = lattice_hull(2, verts);
  IntMatrix sigma({{0, -1}, {1, 0}}), tau({{-1, 0}, {0, 1}});
  g.group = generate_group(2, {AffineLatticeAutomorphism(sigma, invariant_translation(sigma, verts)),
                               AffineLatticeAutomorphism(tau, invariant_translation(tau, verts))});
  g.expected_hstar = IntPolynomial{1, 1};
  return g;
}

GalleryInstance bad_square_Z2() {
  GalleryInstance g;
  g.name = "bad-square";
  std::vector<IntVector> verts{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  g.polytope = lattice_hull(2, verts);
  IntMatrix tau({{-1, 0}, {0, 1}});
  g.group = generate_group(2, {AffineLatticeAutomorphism(tau, invariant_translation(tau, verts))});
  g.expected_hstar = IntPolynomial{1, 1};
  return g;
}

GalleryInstance bad_reflexive_Z2() {
  GalleryInstance g;
  g.name = "bad-reflexive";
  std::vector<IntVector> verts;
  for (IntVector v : std::vector<IntVector>{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}) {
    verts.push_back(v);
    for (auto& x : v) x = -x;
    verts.push_back(v);
  }
  g.polytope = lattice_hull(3, verts);
  g.group = generate_group(3, {AffineLatticeAutomorphism(IntMatrix({{-1, 0, 1}, {0, 1, 0}, {0, 0, 1}}), {0, 0, 0})});
  g.expected_hstar = IntPolynomial{1, 5, 5, 1};
  return g;
}

GalleryInstance hypercube_instance(unsigned d, CubeGroup which) {
  if (d == 0) throw std::invalid_argument("hypercube dimension must be positive");
  GalleryInstance g;
  std::vector<IntVector> verts;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    IntVector v(d);
    for (unsigned i = 0; i < d; ++i) v[i] = (mask >> i) & 1u;
    verts.push_back(v);
  }
  g.polytope = lattice_hull(d, verts);
  std::vector<AffineLatticeAutomorphism> gens;
  for (const auto& perm : symmetric_generators(d)) gens.emplace_back(permutation_matrix(perm), IntVector(d, 0));
  if (which == CubeGroup::Hyperoctahedral) {
    IntMatrix flip = IntMatrix::identity(d);
    flip.at(0, 0) = -1;
    gens.emplace_back(flip, invariant_translation(flip, verts));
    g.name = "hypercube-b" + std::to_string(d);
  } else {
    g.name = "hypercube-sym" + std::to_string(d);
  }
  g.group = generate_group(d, gens);
  if (which == CubeGroup::Symmetric) g.table = symmetric_group_table(g.group, d, false);
  g.expected_hstar = eulerian_polynomial(d);
  return g;
}

GalleryInstance standard_simplex_sym(unsigned n) {
  if (n < 2) throw std::invalid_argument("standard simplex needs n >= 2");
  const std::size_t dim = n - 1;
  auto chart = [&](std::size_t i) {
    IntVector v(dim, 0);
    if (i < dim) v[i] = 1;
    return v;
  };
  std::vector<IntVector> verts;
  for (std::size_t i = 0; i < n; ++i) verts.push_back(chart(i));
  std::vector<AffineLatticeAutomorphism> gens;
  for (const auto& perm : symmetric_generators(n)) {
    const IntVector base = chart(perm[n - 1]);
    IntMatrix a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const IntVector col = chart(perm[i]);
      for (std::size_t k = 0; k < dim; ++k) a.at(k, i) = col[k] - base[k];
    }
    IntVector w(dim);
    for (std::size_t k = 0; k < dim; ++k) w[k] = -base[k];
    gens.emplace_back(a, w);
  }
  GalleryInstance g;
  g.name = "simplex-sym" + std::to_string(n);
  g.polytope = lattice_hull(dim, verts);
  g.group = generate_group(dim, gens);
  g.table = symmetric_group_table(g.group, n, true);
  g.expected_hstar = IntPolynomial::one();
  return g;
}

GalleryInstance standard_reflexive_simplex(unsigned n) {
  if (n < 1) throw std::invalid_argument("standard reflexive simplex needs n >= 1");
  const std::size_t big = 2 * n, dim = big - 1;
  auto image = [&](std::size_t i) {
    IntVector v(dim, 0);
    if (i < dim)
      v[i] = 1;
    else
      std::fill(v.begin(), v.end(), -1);
    return v;
  };
  std::vector<IntVector> verts;
  for (std::size_t i = 0; i < big; ++i) verts.push_back(image(i));
  std::vector<AffineLatticeAutomorphism> gens;
  for (const auto& perm : symmetric_generators(big)) {
    IntMatrix a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const IntVector col = image(perm[i]);
      for (std::size_t k = 0; k < dim; ++k) a.at(k, i) = col[k];
    }
    gens.emplace_back(a, IntVector(dim, 0));
  }
  GalleryInstance g;
  g.name = "reflexive-simplex" + std::to_string(n);
  g.polytope = lattice_hull(dim, verts);
  g.group = generate_group(dim, gens);
  g.table = symmetric_group_table(g.group, static_cast<unsigned>(big), true);
  std::vector<BigInt> ones(big, 1);
  g.expected_hstar = IntPolynomial(ones);
  return g;
}

GalleryInstance cross_family(unsigned k, unsigned d) {
  if (d == 0 || 2 * k > d) throw std::invalid_argument("V(2k, d) needs 0 <= 2k <= d and d >= 1");
  std::vector<IntVector> verts;
  for (unsigned i = 0; i < d; ++i) {
    IntVector v(d, 0);
    v[i] = 1;
    verts.push_back(v);
    v[i] = -1;
    verts.push_back(v);
  }
  if (k > 0) {
    IntVector v(d, 0);
    for (unsigned i = 0; i < 2 * k; ++i) v[i] = 1;
    verts.push_back(v);
    for (auto& x : v) x = -x;
    verts.push_back(v);
  }
  IntMatrix minus = IntMatrix::identity(d);
  for (unsigned i = 0; i < d; ++i) minus.at(i, i) = -1;
  GalleryInstance g;
  g.name = "cross-" + std::to_string(2 * k) + "-" + std::to_string(d);
  g.polytope = lattice_hull(d, verts);
  g.group = generate_group(d, {AffineLatticeAutomorphism(minus, IntVector(d, 0))});
  g.expected_hstar = cross_family_hstar(k, d);
  return g;
}

GalleryInstance pyramid_instance(const GalleryInstance& base) {
  const std::size_t n = base.polytope.ambient_dim();
  std::vector<AffineLatticeAutomorphism> gens;
  for (const auto& g : base.group->generators()) gens.emplace_back(g.lifted(), IntVector(n + 1, 0));
  GalleryInstance out;
  out.name = "pyramid-" + base.name;
  out.polytope = pyramid(base.polytope);
  out.group = generate_group(n + 1, gens);
  return out;
}

RationalPolytope pip_family(unsigned n) {
  const GalleryInstance s = standard_reflexive_simplex(n);
  const std::size_t dim = 2 * n - 1;
  auto image = [&](std::size_t i) {
    IntVector v(dim, 0);
    if (i < dim)
      v[i] = 1;
    else
      std::fill(v.begin(), v.end(), -1);
    return v;
  };
  std::vector<std::size_t> cycle(2 * n);
  std::iota(cycle.begin(), cycle.end(), 0);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  IntMatrix a(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const IntVector col = image(cycle[i]);
    for (std::size_t k = 0; k < dim; ++k) a.at(k, i) = col[k];
  }
  return fixed_polytope(s.polytope, AffineLatticeAutomorphism(a, IntVector(dim, 0))).polytope;
}

BigInt pip_count(unsigned n, long m) { return binomial(m + n, n) + binomial(m, n); }

IntPolynomial hypercube_char_formula(const Partition& cycle_type) {
  IntPolynomial out = eulerian_polynomial(static_cast<unsigned>(cycle_type.size()));
  for (unsigned mu : cycle_type) out *= IntPolynomial(std::vector<BigInt>(mu, 1));
  return out;
}

IntPolynomial cross_family_hstar(unsigned k, unsigned d) {
  IntPolynomial out;
  const IntPolynomial one_plus_t{1, 1};
  for (unsigned i = 0; i <= k; ++i)
    out += IntPolynomial::monomial(binomial(2 * i, i), i) * one_plus_t.pow(d - 2 * i);
  return out;
}

namespace {

BigInt pascal_recurrence(unsigned d, long i) {
  if (i < 0) return 0;
  if (d == 0) return 1;
  if (2 * i < static_cast<long>(d)) return pascal_recurrence(d - 1, i) + pascal_recurrence(d - 1, i - 1);
  // d = 2i
  return 2 * pascal_recurrence(d - 1, i - 1) + binomial(d, i);
}

}  // namespace

PascalPartialSums pascal_partial_sums(unsigned d, unsigned i) {
  if (2 * i > d) throw std::invalid_argument("pascal partial sums need i <= d / 2");
  PascalPartialSums out;
  out.recurrence = pascal_recurrence(d, i);
  out.closed_form = 0;
  for (unsigned j = 0; j <= i; ++j) out.closed_form += binomial(d + 1, j);
  IntPolynomial sum;
  const IntPolynomial one_minus_t = IntPolynomial::one_minus_power(1);
  for (unsigned j = 0; j <= d; ++j) {
    BigInt c = binomial(d + 1, j);
    mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), j);
    sum += IntPolynomial::monomial(c, j) * one_minus_t.pow(d - j);
  }
  out.from_definition = sum.coeff(i);
  return out;
}

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string partition_label(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

BigInt hook_length_dimension(const Partition& p) {
  unsigned n = 0;
  for (unsigned x : p) n += x;
  BigInt hooks = 1;
  for (std::size_t r = 0; r < p.size(); ++r)
    for (unsigned c = 0; c < p[r]; ++c) {
      unsigned below = 0;
      for (std::size_t k = r + 1; k < p.size() && p[k] > c; ++k) ++below;
      hooks *= BigInt(p[r] - c + below);
    }
  return factorial(n) / hooks;
}

namespace {

// Beta-set form: removing a rim hook of length k moves one bead from b to b - k.
BigInt mn_beta(std::vector<long> beta, const Partition& cycle, std::size_t pos) {
  if (pos == cycle.size()) return 1;
  const long k = cycle[pos];
  BigInt total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const long b = beta[i];
    if (b - k < 0 || std::find(beta.begin(), beta.end(), b - k) != beta.end()) continue;
    long between = 0;
    for (long x : beta)
      if (x > b - k && x < b) ++between;
    std::vector<long> next = beta;
    next[i] = b - k;
    BigInt v = mn_beta(next, cycle, pos + 1);
    total += (between % 2 == 0) ? v : BigInt(-v);
  }
  return total;
}

}  // namespace

BigInt symmetric_character(const Partition& shape, const Partition& cycle_type) {
  std::vector<long> beta;
  const long len = static_cast<long>(shape.size());
  for (long i = 0; i < len; ++i) beta.push_back(static_cast<long>(shape[static_cast<std::size_t>(i)]) + (len - 1 - i));
  return mn_beta(beta, cycle_type, 0);
}

Partition cycle_type_of(const IntMatrix& linear, bool reduced) {
  IntPolynomial cp = linear.det_one_minus_t();  // prod over cycles of (1 - t^mu), up to the reduced factor
  if (reduced) cp *= IntPolynomial::one_minus_power(1);
  const unsigned n = static_cast<unsigned>(cp.degree());
  // multiplicity of Phi_k counts the parts divisible by k
  std::vector<long> divisible(n + 1, 0);
  for (unsigned k = 1; k <= n; ++k) {
    const IntPolynomial& f = k == 1 ? IntPolynomial::one_minus_power(1) : cyclotomic_polynomial(k);
    while (auto q = cp.exact_quotient(f)) {
      cp = *q;
      ++divisible[k];
    }
  }
  std::vector<long> exact(n + 1, 0);
  for (unsigned k = n; k >= 1; --k) {
    long v = divisible[k];
    for (unsigned j = 2 * k; j <= n; j += k) v -= exact[j];
    exact[k] = v;
  }
  Partition out;
  for (unsigned k = n; k >= 1; --k)
    for (long c = 0; c < exact[k]; ++c) out.push_back(k);
  return out;
}

CharacterTable symmetric_group_table(const GroupPtr& group, unsigned n, bool reduced) {
  CharacterTable computed = character_table(group);
  std::vector<Partition> types;
  for (std::size_t c = 0; c < group->class_count(); ++c) types.push_back(cycle_type_of(group->representative(c).linear(), reduced));
  std::vector<ClassFunction> chars;
  std::vector<std::string> labels;
  for (const auto& lambda : partitions_of(n)) {
    std::vector<BigInt> v;
    for (const auto& mu : types) v.push_back(symmetric_character(lambda, mu));
    ClassFunction f = ClassFunction::from_integers(group, v);
    if (std::find(computed.characters.begin(), computed.characters.end(), f) == computed.characters.end())
      throw InternalMismatch("Murnaghan-Nakayama character " + partition_label(lambda) + " is not in the computed table");
    chars.push_back(f);
    labels.push_back("chi" + partition_label(lambda));
  }
  return character_table_from_values(group, std::move(chars), std::move(labels));
}

unsigned MarkedTableau::index() const {
  unsigned s = 0;
  for (auto [j, f] : marking) s += f;
  return s;
}

std::vector<MarkedTableau> marked_tableaux(const Partition& shape) {
  unsigned d = 0;
  for (unsigned x : shape) d += x;
  std::vector<MarkedTableau> out;
  std::vector<std::vector<unsigned>> t;
  for (unsigned len : shape) t.emplace_back(len, 0);
  std::vector<std::pair<std::size_t, unsigned>> cells;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (unsigned c = 0; c < shape[r]; ++c) cells.emplace_back(r, c);

  auto finish = [&] {
    std::map<unsigned, unsigned> mult;
    for (const auto& row : t)
      for (unsigned x : row)
        if (x > 0) ++mult[x];
    unsigned k = 0;
    for (auto [j, m] : mult) {
      if (j != k + 1) return;  // not admissible
      k = j;
      if (m < 2) return;       // no marking exists
    }
    std::vector<unsigned> keys;
    for (auto [j, m] : mult) keys.push_back(j);
    std::map<unsigned, unsigned> marking;
    std::function<void(std::size_t)> mark = [&](std::size_t pos) {
      if (pos == keys.size()) {
        out.push_back(MarkedTableau{shape, t, marking});
        return;
      }
      for (unsigned f = 1; f < mult[keys[pos]]; ++f) {
        marking[keys[pos]] = f;
        mark(pos + 1);
      }
      marking.erase(keys[pos]);
    };
    mark(0);
  };
  std::function<void(std::size_t)> fill = [&](std::size_t pos) {
    if (pos == cells.size()) {
      finish();
      return;
    }
    auto [r, c] = cells[pos];
    unsigned lo = 0;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (unsigned v = lo; v <= d; ++v) {
      t[r][c] = v;
      fill(pos + 1);
    }
  };
  fill(0);
  return out;
}

IntPolynomial marked_tableaux_polynomial(const Partition& shape) {
  std::vector<BigInt> c;
  for (const auto& m : marked_tableaux(shape)) {
    const unsigned i = m.index();
    if (c.size() <= i) c.resize(i + 1, 0);
    c[i] += 1;
  }
  return IntPolynomial(c);
}

std::vector<std::string> gallery_names() {
  return {"hexagon", "square-b2", "bad-square", "bad-reflexive", "hypercube", "hypercube-b",
          "simplex-sym", "reflexive-simplex", "cross", "pyramid-hexagon"};
}

GalleryInstance gallery_instance(const std::string& name, const std::vector<unsigned>& params) {
  auto param = [&](std::size_t i, unsigned fallback) { return i < params.size() ? params[i] : fallback; };
  if (name == "hexagon") return hexagon_Z6();
  if (name == "square-b2") return square_B2();
  if (name == "bad-square") return bad_square_Z2();
  if (name == "bad-reflexive") return bad_reflexive_Z2();
  if (name == "hypercube") return hypercube_instance(param(0, 3), CubeGroup::Symmetric);
  if (name == "hypercube-b") return hypercube_instance(param(0, 2), CubeGroup::Hyperoctahedral);
  if (name == "simplex-sym") return standard_simplex_sym(param(0, 3));
  if (name == "reflexive-simplex") return standard_reflexive_simplex(param(0, 2));
  if (name == "cross") return cross_family(param(0, 1), param(1, 2));
  if (name == "pyramid-hexagon") return pyramid_instance(hexagon_Z6());
  throw std::invalid_argument("unknown gallery instance '" + name + "'");
}

}  // namespace eqehr
