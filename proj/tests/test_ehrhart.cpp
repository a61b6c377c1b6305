#include <doctest.h>

#include <random>

#include "eqehr/ehrhart.hpp"
#include "eqehr/errors.hpp"
#include "eqehr/fixed_locus.hpp"
#include "eqehr/gallery.hpp"
#include "oracles.hpp"

using namespace eqehr;

namespace {

RationalPolytope lattice(std::size_t n, std::vector<IntVector> pts) { return RationalPolytope::hull_of_lattice_points(n, pts); }

}  // namespace

TEST_CASE("Ehrhart series") {
  const auto square = lattice(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const auto s = ehrhart_series(square);
  CHECK(s.period == 1);
  CHECK(s.numerator == IntPolynomial{1, 1});

  const auto bad = bad_reflexive_Z2();
  const auto ptau = fixed_polytope(bad.polytope, bad.group->element(1)).polytope;
  const auto st = ehrhart_series(ptau);
  CHECK(st.period == 2);
  CHECK(st.as_rational_function() ==
        RationalFunction(IntPolynomial{1, 1} * IntPolynomial{1, 0, 6, 0, 1}, {PowerFactor{2, 3}}));

  const auto point = lattice(3, {{1, 2, 3}});
  CHECK(ehrhart_series(point).as_rational_function() == RationalFunction(IntPolynomial::one(), {PowerFactor{1, 1}}));
}

TEST_CASE("quasi-polynomials") {
  for (unsigned d = 1; d <= 4; ++d) {
    const auto q = quasi_polynomial(hypercube_instance(d, CubeGroup::Symmetric).polytope);
    for (std::int64_t m = -3; m <= 8; ++m) {
      BigRational expected = 1;
      for (unsigned i = 0; i < d; ++i) expected *= BigRational(m + 1);
      CHECK(q(m) == expected);
    }
  }
  for (unsigned n : {2u, 3u}) {
    const auto q = quasi_polynomial(pip_family(n));
    CHECK(q.minimal_period() == 1);
    for (long m = 0; m <= 12; ++m) CHECK(q(m) == BigRational(pip_count(n, m)));
  }
  const auto half = RationalPolytope::hull(1, {{BigRational(0)}, {BigRational(1, 2)}});
  const auto q = quasi_polynomial(half);
  CHECK(q.period() == 2);
  for (std::int64_t m = 0; m <= 9; ++m) CHECK(q(m) == (m % 2 == 0 ? BigRational(m / 2 + 1) : BigRational((m + 1) / 2)));
  CHECK(q.to_string().find("m") != std::string::npos);
}

TEST_CASE("fitting rejects inconsistent samples") {
  std::vector<BigInt> squares;
  for (long m = 0; m < 6; ++m) squares.push_back(m * m);
  CHECK(fit_quasi_polynomial(2, 1, 0, squares)(7) == 49);
  squares.back() += 1;
  CHECK_THROWS_AS(fit_quasi_polynomial(2, 1, 0, squares), VerificationFailure);
}

TEST_CASE("Ehrhart reciprocity") {
  const auto square = lattice(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(quasi_polynomial(square)(-1) == 0);
  const auto hexagon = hexagon_Z6().polytope;
  CHECK(quasi_polynomial(hexagon)(-1) == 1);
  const auto triangle = lattice(2, {{0, 0}, {1, 0}, {0, 1}});
  CHECK(quasi_polynomial(triangle)(-2) == 0);
  CHECK(quasi_polynomial(triangle)(-3) == 1);
  for (const auto& p : {square, hexagon, triangle, pip_family(2), bad_reflexive_Z2().polytope}) CHECK(reciprocity_check(p).holds);
}

TEST_CASE("Eulerian polynomials") {
  CHECK(eulerian_polynomial(1) == IntPolynomial{1});
  CHECK(eulerian_polynomial(2) == IntPolynomial{1, 1});
  CHECK(eulerian_polynomial(4) == IntPolynomial{1, 11, 11, 1});
  for (unsigned d = 1; d <= 7; ++d) CHECK(eulerian_polynomial(d) == oracle::eulerian_by_descents(d));
}

TEST_CASE("h* data of lattice polytopes") {
  std::vector<RationalPolytope> polys{hexagon_Z6().polytope, bad_reflexive_Z2().polytope,
                                      hypercube_instance(3, CubeGroup::Symmetric).polytope, cross_family(1, 3).polytope,
                                      lattice(2, {{0, 0}, {1, 0}, {0, 2}}), lattice(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 3}})};
  for (const auto& p : polys) {
    const auto hd = hstar_data(p);
    const int d = p.dim();
    const auto& h = hd.hstar;
    CHECK(h.coeff(0) == 1);
    CHECK(h.coeff(1) == count_lattice_points(p, 1) - d - 1);
    CHECK(h.coeff(static_cast<std::size_t>(d)) == count_interior_lattice_points(p, 1));
    CHECK(h.coeff(static_cast<std::size_t>(d)) <= h.coeff(1));
    CHECK(h.leading() == count_interior_lattice_points(p, hd.codegree));
    CHECK(hd.codegree == d + 1 - hd.degree);
    CHECK(BigRational(h.evaluate(BigInt(1))) == BigRational(factorial(static_cast<unsigned long>(d))) * normalized_volume(p));
    for (const auto& c : h.coefficients()) CHECK(c >= 0);
    const auto q = quasi_polynomial(p);
    CHECK(q(0) == 1);
    CHECK(q.degree() == d);
  }
  CHECK_THROWS_AS(hstar_data(pip_family(2)), NotLattice);
  for (unsigned k = 1; k <= 2; ++k) {
    const auto h = hstar_data(cross_family(k, 2 * k).polytope).hstar;
    CHECK(h.evaluate(BigInt(1)) == (2 * k + 1) * binomial(2 * k, k));
  }
}

TEST_CASE("h* agrees with brute-force interpolation on random polytopes") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> c(-2, 2);
  int done = 0;
  while (done < 6) {
    const std::size_t n = 2 + static_cast<std::size_t>(done % 2);
    std::vector<IntVector> pts;
    for (std::size_t i = 0; i < n + 2; ++i) {
      IntVector v(n);
      for (auto& x : v) x = c(rng);
      pts.push_back(v);
    }
    if (oracle::affine_dimension(pts) != static_cast<int>(n)) continue;
    std::vector<BigInt> counts;
    for (std::int64_t m = 0; m <= static_cast<std::int64_t>(n); ++m) counts.push_back(oracle::count(pts, m));
    CHECK(hstar_data(lattice(n, pts)).hstar == oracle::hstar_from_counts(counts, static_cast<int>(n)));
    ++done;
  }
}
