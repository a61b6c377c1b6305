#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "eqehr/gallery.hpp"
#include "oracles.hpp"

using namespace eqehr;

namespace {

EquivariantPolytope build(const GalleryInstance& g) { return EquivariantPolytope(g.polytope, g.group, g.table); }

IntPolynomial one_plus_t_power(unsigned e) {
  IntPolynomial p = IntPolynomial::one();
  for (unsigned i = 0; i < e; ++i) p *= IntPolynomial{1, 1};
  return p;
}

BigInt choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// |centralizer| of a permutation of the given cycle type
BigInt centralizer_order(const Partition& mu) {
  std::map<unsigned, unsigned> counts;
  for (unsigned part : mu) ++counts[part];
  BigInt r = 1;
  for (auto [part, k] : counts)
    for (unsigned i = 1; i <= k; ++i) r *= BigInt(part) * i;
  return r;
}

// Brute-force tableaux: all fillings with entries 0..d, rows weakly increasing,
// columns strictly increasing, admissible positive support, then every marking.
void fill(const Partition& shape, std::vector<std::vector<unsigned>>& t, std::size_t row, std::size_t col, unsigned d,
          std::vector<BigInt>& out) {
  if (row == shape.size()) {
    std::map<unsigned, unsigned> mult;
    for (const auto& r : t)
      for (unsigned x : r)
        if (x > 0) ++mult[x];
    unsigned expect = 1;
    for (const auto& [v, k] : mult)
      if (v != expect++) return;
    // generating function of the markings: prod_j (t + ... + t^(m_j - 1))
    std::vector<BigInt> gf{1};
    for (const auto& [v, k] : mult) {
      std::vector<BigInt> next(gf.size() + k, 0);
      for (std::size_t i = 0; i < gf.size(); ++i)
        for (unsigned f = 1; f + 1 <= k; ++f) next[i + f] += gf[i];
      gf = next;
    }
    if (out.size() < gf.size()) out.resize(gf.size(), 0);
    for (std::size_t i = 0; i < gf.size(); ++i) out[i] += gf[i];
    return;
  }
  if (col == shape[row]) return fill(shape, t, row + 1, 0, d, out);
  for (unsigned x = 0; x <= d; ++x) {
    if (col > 0 && x < t[row][col - 1]) continue;
    if (row > 0 && x <= t[row - 1][col]) continue;
    t[row][col] = x;
    fill(shape, t, row, col + 1, d, out);
  }
}

IntPolynomial brute_tableaux_polynomial(const Partition& shape) {
  const unsigned d = std::accumulate(shape.begin(), shape.end(), 0u);
  std::vector<std::vector<unsigned>> t;
  for (unsigned len : shape) t.emplace_back(len, 0);
  std::vector<BigInt> out;
  fill(shape, t, 0, 0, d, out);
  return IntPolynomial(out);
}

}  // namespace

TEST_CASE("hypercube examples") {
  const auto sq = build(hypercube_instance(2, CubeGroup::Symmetric));
  const auto hs = equivariant_hstar(sq);
  REQUIRE(hs.polynomial);
  for (const auto& v : hs.per_class) CHECK(v == RationalFunction(IntPolynomial{1, 1}));

  const auto cube = hypercube_instance(3, CubeGroup::Symmetric);
  REQUIRE(cube.table);
  const auto h3 = equivariant_hstar(build(cube));
  REQUIRE(h3.coefficients.size() == 3);
  const auto& table = *cube.table;
  const auto trivial = *table.find_label("chi(3)");
  const auto standard = *table.find_label("chi(2,1)");
  const auto sign = *table.find_label("chi(1,1,1)");
  CHECK(h3.coefficients[0] == table.characters[trivial]);
  CHECK(h3.coefficients[2] == table.characters[trivial]);
  CHECK(h3.coefficients[1] == table.characters[trivial] * CyclotomicValue(2) + table.characters[standard]);
  CHECK(h3.multiplicities[1][sign] == CyclotomicValue(0));

  const auto b2 = equivariant_hstar(build(hypercube_instance(2, CubeGroup::Hyperoctahedral)));
  CHECK_FALSE(b2.polynomial);
}

TEST_CASE("character formula for the cube") {
  CHECK(hypercube_char_formula({1, 1}) == IntPolynomial{1, 1});
  CHECK(hypercube_char_formula({2, 1}) == IntPolynomial{1, 2, 1});
  CHECK(hypercube_char_formula({3}) == IntPolynomial{1, 1, 1});
  for (unsigned d = 2; d <= 4; ++d) {
    const auto inst = hypercube_instance(d, CubeGroup::Symmetric);
    const auto ep = build(inst);
    const auto hs = equivariant_hstar(ep);
    for (const auto& cd : ep.classes())
      CHECK(hs.per_class[cd.class_index] == RationalFunction(hypercube_char_formula(cycle_type_of(cd.rep.linear(), false))));
  }
}

TEST_CASE("marked tableaux examples") {
  CHECK(marked_tableaux_polynomial({2}) == IntPolynomial{1, 1});
  CHECK(marked_tableaux_polynomial({2, 1}) == IntPolynomial{0, 1});
  CHECK(marked_tableaux(Partition{2}).size() == 2);
  for (unsigned d = 2; d <= 5; ++d) CHECK(marked_tableaux_polynomial(Partition(d, 1)).is_zero());
  for (unsigned d = 1; d <= 5; ++d) CHECK(marked_tableaux_polynomial({d}) == one_plus_t_power(d - 1));
  for (unsigned d = 3; d <= 6; ++d) {
    IntPolynomial expected = IntPolynomial{0, static_cast<long>(d - 2)} * one_plus_t_power(d - 3);
    CHECK(marked_tableaux_polynomial({d - 1, 1}) == expected);
  }
  for (const auto& t : marked_tableaux({2, 2})) {
    for (std::size_t r = 0; r < t.entries.size(); ++r)
      for (std::size_t c = 0; c < t.entries[r].size(); ++c) {
        if (c > 0) CHECK(t.entries[r][c - 1] <= t.entries[r][c]);
        if (r > 0) CHECK(t.entries[r - 1][c] < t.entries[r][c]);
      }
  }
}

TEST_CASE("marked tableaux match brute force") {
  for (unsigned d = 1; d <= 5; ++d)
    for (const auto& shape : partitions_of(d)) {
      INFO(partition_label(shape));
      CHECK(marked_tableaux_polynomial(shape) == brute_tableaux_polynomial(shape));
    }
}

TEST_CASE("Eulerian refinement") {
  for (unsigned d = 1; d <= 5; ++d) {
    IntPolynomial sum;
    for (const auto& shape : partitions_of(d)) sum += marked_tableaux_polynomial(shape) * IntPolynomial{hook_length_dimension(shape)};
    CHECK(sum == oracle::eulerian_by_descents(d));
  }
}

TEST_CASE("hypercube decomposes by marked tableaux") {
  for (unsigned d = 2; d <= 4; ++d) {
    const auto inst = hypercube_instance(d, CubeGroup::Symmetric);
    REQUIRE(inst.table);
    const auto hs = equivariant_hstar(build(inst));
    REQUIRE(hs.polynomial);
    for (const auto& shape : partitions_of(d)) {
      const std::size_t k = *inst.table->find_label("chi" + partition_label(shape));
      std::vector<BigInt> coeffs;
      for (const auto& row : hs.multiplicities) coeffs.push_back(row[k].rational().get_num());
      CHECK(IntPolynomial(coeffs) == marked_tableaux_polynomial(shape));
    }
  }
}

TEST_CASE("symmetric group characters") {
  CHECK(hook_length_dimension({2, 1}) == 2);
  CHECK(hook_length_dimension({3, 2}) == 5);
  CHECK(hook_length_dimension({2, 2, 1}) == 5);
  CHECK(symmetric_character({2, 1}, {3}) == -1);
  CHECK(symmetric_character({2, 1}, {2, 1}) == 0);
  CHECK(symmetric_character({1, 1, 1}, {2, 1}) == -1);
  for (unsigned n = 1; n <= 6; ++n) {
    const auto parts = partitions_of(n);
    BigInt total = 0;
    for (const auto& lambda : parts) {
      const BigInt dim = hook_length_dimension(lambda);
      total += dim * dim;
      CHECK(symmetric_character(lambda, Partition(n, 1)) == dim);
    }
    BigInt factorial = 1;
    for (unsigned i = 2; i <= n; ++i) factorial *= i;
    CHECK(total == factorial);
    // column orthogonality
    for (const auto& mu : parts)
      for (const auto& nu : parts) {
        BigInt s = 0;
        for (const auto& lambda : parts) s += symmetric_character(lambda, mu) * symmetric_character(lambda, nu);
        CHECK(s == (mu == nu ? centralizer_order(mu) : BigInt(0)));
      }
  }
  CHECK(partition_label({3, 1}) == "(3,1)");
  CHECK(partitions_of(5).size() == 7);
}

TEST_CASE("symmetric group tables") {
  const auto inst = standard_simplex_sym(4);
  const auto table = symmetric_group_table(inst.group, 4, true);
  CHECK(table.size() == 5);
  for (const auto& shape : partitions_of(4)) {
    const auto k = table.find_label("chi" + partition_label(shape));
    REQUIRE(k);
    for (std::size_t c = 0; c < inst.group->class_count(); ++c)
      CHECK(table.characters[*k][c] ==
            CyclotomicValue(BigRational(symmetric_character(shape, cycle_type_of(inst.group->representative(c).linear(), true)))));
  }
}

TEST_CASE("instances") {
  const auto bad = bad_reflexive_Z2();
  CHECK(hstar_data(bad.polytope).hstar == IntPolynomial{1, 5, 5, 1});
  CHECK(cross_family_hstar(1, 2) == IntPolynomial{1, 4, 1});
  CHECK(cross_family_hstar(2, 4) == IntPolynomial{1, 6, 16, 6, 1});
  CHECK(hstar_data(cross_family(1, 2).polytope).hstar == IntPolynomial{1, 4, 1});
  const auto pip = quasi_polynomial(pip_family(2));
  for (long m = 0; m <= 12; ++m) {
    CHECK(pip(m) == BigRational(choose(m + 2, 2) + choose(m, 2)));
    CHECK(pip_count(2, m) == choose(m + 2, 2) + choose(m, 2));
  }
  for (const auto& name : gallery_names()) {
    const auto inst = gallery_instance(name, {});
    INFO(name);
    CHECK(inst.group->rank() == inst.polytope.ambient_dim());
    if (inst.expected_hstar) CHECK(hstar_data(inst.polytope).hstar == *inst.expected_hstar);
  }
  CHECK_THROWS_AS(gallery_instance("nope", {}), std::invalid_argument);
  CHECK(gallery_instance("hypercube", {4}).group->order() == 24);
}

TEST_CASE("Pascal partial sums") {
  for (unsigned d = 0; d <= 12; ++d)
    for (unsigned i = 0; 2 * i <= d; ++i) {
      const auto t = pascal_partial_sums(d, i);
      CHECK(t.recurrence == t.closed_form);
      CHECK(t.closed_form == t.from_definition);
    }
  CHECK(pascal_partial_sums(4, 2).closed_form == 16);
  CHECK(pascal_partial_sums(5, 2).closed_form == 22);
  for (unsigned d = 0; d <= 8; ++d) CHECK(pascal_partial_sums(d, 0).closed_form == 1);
}

TEST_CASE("centrally symmetric identity") {
  for (auto [k, d] : std::vector<std::pair<unsigned, unsigned>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}}) {
    const auto inst = cross_family(k, d);
    const auto ep = build(inst);
    const auto hs = equivariant_hstar(ep);
    const auto h = cross_family_hstar(k, d);
    REQUIRE(hs.polynomial);
    const std::size_t minus = inst.group->class_of(1);
    for (unsigned i = 0; i <= d; ++i) {
      const BigInt hi = h.coeff(i);
      const BigInt b = choose(d, i);
      CHECK(hi >= b);
      CHECK(hs.coefficients[i][0] == CyclotomicValue(BigRational(hi)));
      CHECK(hs.coefficients[i][minus] == CyclotomicValue(BigRational(b)));
    }
  }
}
