#include <doctest.h>

#include <algorithm>
#include <set>

#include "eqehr/errors.hpp"
#include "eqehr/lattice_group.hpp"

using namespace eqehr;

namespace {

using Aff = AffineLatticeAutomorphism;

const Aff sigma6(IntMatrix({{0, 1}, {-1, 1}}), {0, 0});
const Aff quarter(IntMatrix({{0, -1}, {1, 0}}), {-1, 0});
const Aff flip(IntMatrix({{-1, 0}, {0, 1}}), {-1, 0});

GroupPtr sym3_on_coordinates() {
  return generate_group(3, {Aff(IntMatrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), {0, 0, 0}),
                            Aff(IntMatrix({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}), {0, 0, 0})});
}

std::set<std::size_t> class_as_set(const FiniteMatrixGroup& g, std::size_t c) {
  return {g.class_members(c).begin(), g.class_members(c).end()};
}

}  // namespace

TEST_CASE("group closure") {
  CHECK(generate_group(2, {sigma6})->order() == 6);
  CHECK(generate_group(3, {})->order() == 1);
  const auto b2 = generate_group(2, {quarter, flip});
  CHECK(b2->order() == 8);
  CHECK(b2->class_count() == 5);
  CHECK(generate_group(2, {sigma6})->exponent() == 6);
  CHECK(b2->exponent() == 4);
  CHECK(generate_group(3, {})->exponent() == 1);
  CHECK_THROWS_AS(generate_group(2, {Aff(IntMatrix({{1, 1}, {0, 1}}), {0, 0})}), ClosureExceeded);
  CHECK_THROWS_AS(generate_group(2, {Aff(IntMatrix({{2, 0}, {0, 1}}), {0, 0})}), NonInvertibleGenerator);
  CHECK_THROWS_AS(generate_group(2, {sigma6}, 5), ClosureExceeded);
}

TEST_CASE("lift composes as a cocycle") {
  const Aff gh = quarter * flip;
  CHECK(gh.lifted() == quarter.lifted() * flip.lifted());
  IntVector expected = quarter.linear().apply(flip.translation());
  for (std::size_t i = 0; i < 2; ++i) expected[i] += quarter.translation()[i];
  CHECK(gh.translation() == expected);
  CHECK(Aff::from_lifted(gh.lifted()) == gh);
  // the height-m action
  CHECK(flip.apply(IntVector{0, 0}, 2) == IntVector{2, 0});
}

TEST_CASE("conjugacy classes of B2") {
  const auto g = generate_group(2, {quarter, flip});
  auto idx = [&](const Aff& x) { return g->index_of(x); };
  const Aff s2 = quarter * quarter, s3 = s2 * quarter;
  const std::set<std::set<std::size_t>> expected{{idx(Aff::identity(2))},
                                                 {idx(quarter), idx(s3)},
                                                 {idx(s2)},
                                                 {idx(flip), idx(flip * s2)},
                                                 {idx(flip * quarter), idx(flip * s3)}};
  std::set<std::set<std::size_t>> got;
  for (std::size_t c = 0; c < g->class_count(); ++c) got.insert(class_as_set(*g, c));
  CHECK(got == expected);
  CHECK(g->class_size(g->class_of(0)) == 1);
  for (std::size_t c = 0; c < g->class_count(); ++c)
    CHECK(g->representative_index(c) == *std::min_element(g->class_members(c).begin(), g->class_members(c).end()));
}

TEST_CASE("classes of Sym3 agree with brute-force conjugation") {
  const auto g = sym3_on_coordinates();
  std::multiset<std::size_t> sizes;
  for (std::size_t c = 0; c < g->class_count(); ++c) sizes.insert(g->class_size(c));
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
  for (std::size_t i = 0; i < g->order(); ++i)
    for (std::size_t j = 0; j < g->order(); ++j) {
      const Aff conj = g->element(j) * g->element(i) * g->element(g->inverse(j));
      CHECK(g->class_of(g->index_of(conj)) == g->class_of(i));
    }
}

TEST_CASE("group table invariants") {
  for (const auto& g : {generate_group(2, {quarter, flip}), sym3_on_coordinates(), generate_group(2, {sigma6})}) {
    for (std::size_t i = 0; i < g->order(); ++i) {
      CHECK(g->multiply(i, g->inverse(i)) == 0);
      CHECK(g->exponent() % g->element_order(i) == 0);
      for (std::size_t j = 0; j < g->order(); ++j)
        CHECK(g->element(g->multiply(i, j)) == g->element(i) * g->element(j));
    }
  }
}

TEST_CASE("determinant character") {
  const auto minus = generate_group(3, {Aff(IntMatrix({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}), {0, 0, 0})});
  const auto det = det_character(minus);
  CHECK(det[minus->class_of(1)] == CyclotomicValue(-1));
  const auto b2 = generate_group(2, {quarter, flip});
  CHECK(det_character(b2)[b2->class_of(b2->index_of(flip))] == CyclotomicValue(-1));
  const auto z6 = generate_group(2, {sigma6});
  CHECK(det_character(z6)[z6->class_of(z6->index_of(sigma6))] == CyclotomicValue(1));
  for (const auto& g : {b2, z6, minus})
    for (std::size_t c = 0; c < g->class_count(); ++c) {
      const auto& rep = g->representative(c);
      const long sign = (rep.rank() - rep.linear().fixed_space_dimension()) % 2 == 0 ? 1 : -1;
      CHECK(det_character(g)[c] == CyclotomicValue(sign));
    }
}

TEST_CASE("character tables") {
  const auto z6 = generate_group(2, {sigma6});
  const auto t6 = character_table(z6);
  CHECK(t6.size() == 6);
  // the six powers of chi with chi(sigma) = zeta_6 all appear
  const std::size_t s = z6->class_of(z6->index_of(sigma6));
  std::set<long> exponents;
  for (const auto& chi : t6.characters)
    for (long k = 0; k < 6; ++k)
      if (chi[s] == CyclotomicValue::root_of_unity(6, k)) exponents.insert(k);
  CHECK(exponents.size() == 6);

  const auto z2 = generate_group(1, {Aff(IntMatrix(std::vector<IntVector>{{-1}}), {0})});
  const auto t2 = character_table(z2);
  REQUIRE(t2.size() == 2);
  CHECK(t2.characters[1][1] == CyclotomicValue(-1));

  const auto s3 = sym3_on_coordinates();
  const auto t3 = character_table(s3);
  std::multiset<long> degrees;
  BigInt sum = 0;
  for (std::size_t i = 0; i < t3.size(); ++i) {
    degrees.insert(t3.degree(i).get_si());
    sum += t3.degree(i) * t3.degree(i);
  }
  CHECK(degrees == std::multiset<long>{1, 1, 2});
  CHECK(sum == 6);
  for (std::size_t i = 0; i < t3.size(); ++i)
    for (std::size_t j = 0; j < t3.size(); ++j)
      CHECK(inner_product(t3.characters[i], t3.characters[j]) == CyclotomicValue(i == j ? 1 : 0));
  CHECK(t3.trivial_index() == 0);
}

TEST_CASE("decomposition and permutation characters") {
  const auto g = generate_group(2, {quarter, flip});
  const auto table = character_table(g);
  // G acting on itself by left multiplication gives the regular character
  const auto regular = permutation_character(g, g->order(), [&](const Aff& x, std::size_t i) {
    return g->index_of(x * g->element(i));
  });
  const auto dec = decompose(regular, table);
  for (std::size_t i = 0; i < table.size(); ++i) CHECK(dec[i] == CyclotomicValue(table.degree(i)));
  CHECK(regular[g->class_of(0)] == CyclotomicValue(8));
  const auto trivial = decompose(ClassFunction::constant(g, 1), table);
  for (std::size_t i = 0; i < table.size(); ++i) CHECK(trivial[i] == CyclotomicValue(i == table.trivial_index() ? 1 : 0));
  CHECK(is_effective(dec));
  CHECK_FALSE(is_effective(decompose(ClassFunction::constant(g, -1), table)));

  const auto s3 = sym3_on_coordinates();
  const auto coords = permutation_character(s3, 3, [](const Aff& x, std::size_t i) {
    for (std::size_t r = 0; r < 3; ++r)
      if (x.linear().at(r, i) == 1) return r;
    return i;
  });
  std::multiset<long> values;
  for (const auto& v : coords.values()) values.insert(v.rational().get_num().get_si());
  CHECK(values == std::multiset<long>{3, 1, 0});
  CHECK(coords == standard_character(s3));

  const auto trivial_group = generate_group(2, {});
  CHECK(permutation_character(trivial_group, 5, [](const Aff&, std::size_t i) { return i; })[0] == CyclotomicValue(5));
}

TEST_CASE("Burnside: trivial multiplicity counts orbits") {
  const auto g = generate_group(2, {quarter, flip});
  std::vector<IntVector> pts;
  for (std::int64_t x = 0; x <= 3; ++x)
    for (std::int64_t y = 0; y <= 3; ++y) pts.push_back({x, y});
  // the square [0, 3]^2 at height 3
  const auto chi = permutation_character_on_points(g, pts, 3);
  std::set<std::set<IntVector>> orbits;
  for (const auto& p : pts) {
    std::set<IntVector> orbit;
    for (const auto& x : g->elements()) orbit.insert(x.apply(p, 3));
    orbits.insert(orbit);
  }
  CHECK(inner_product(chi, ClassFunction::constant(g, 1)) == CyclotomicValue(static_cast<long>(orbits.size())));
  CHECK(count_orbits(g, pts, 3) == orbits.size());
}

TEST_CASE("exterior power expansion of det(I - A t)") {
  const auto g = generate_group(2, {quarter, flip});
  for (const auto& x : g->elements()) {
    const IntMatrix& a = x.linear();
    const BigInt trace = a.at(0, 0) + a.at(1, 1);
    CHECK(a.det_one_minus_t() == IntPolynomial{1, -trace, a.determinant()});
  }
}
