#include <doctest.h>

#include <cmath>
#include <random>

#include "eqehr/cyclotomic.hpp"
#include "eqehr/errors.hpp"
#include "eqehr/rational_function.hpp"

using namespace eqehr;

TEST_CASE("rationals are kept in lowest terms") {
  const BigRational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(q) == "-3/2");
  CHECK(parse_rational("10/4") == BigRational(5, 2));
  CHECK_THROWS(make_rational(1, 0));
  CHECK_THROWS(parse_rational("1/"));
  CHECK(floor_of(BigRational(-3, 2)) == -2);
  CHECK(ceil_of(BigRational(-3, 2)) == -1);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(2, 5) == 0);
  CHECK(factorial(5) == 120);
}

TEST_CASE("polynomials are trimmed and divide exactly") {
  const IntPolynomial p{1, 2, 1, 0, 0};
  CHECK(p.degree() == 2);
  const auto q = p.exact_quotient(IntPolynomial{1, 1});
  REQUIRE(q);
  CHECK(*q == IntPolynomial{1, 1});
  CHECK_FALSE(p.exact_quotient(IntPolynomial{1, 0, 1}));
  CHECK(IntPolynomial{1, 1}.pow(3) == IntPolynomial{1, 3, 3, 1});
  CHECK(IntPolynomial{1, 2}.reversed(3) == IntPolynomial{0, 0, 2, 1});
  CHECK(cyclotomic_polynomial(6) == IntPolynomial{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == IntPolynomial{1, 0, -1, 0, 1});
}

TEST_CASE("power series quotient") {
  auto coeffs = [](std::vector<BigInt> v) { return v; };
  CHECK(poly_series_quotient(IntPolynomial::one(), {PowerFactor{1, 2}}, IntPolynomial::one(), 4) == coeffs({1, 2, 3, 4}));
  CHECK(poly_series_quotient(IntPolynomial{1, 1, 1, 1}, {PowerFactor{1, 4}}, IntPolynomial::one(), 3) == coeffs({1, 5, 15}));
  CHECK(poly_series_quotient(IntPolynomial{}, {PowerFactor{1, 1}}, IntPolynomial::one(), 5) == coeffs({0, 0, 0, 0, 0}));
  // 3-cube dilates counted directly: (m + 1)^3
  const auto cube = poly_series_quotient(IntPolynomial{1, 4, 1}, {PowerFactor{1, 4}}, IntPolynomial::one(), 6);
  for (long m = 0; m < 6; ++m) CHECK(cube[static_cast<std::size_t>(m)] == BigInt((m + 1) * (m + 1) * (m + 1)));
  CHECK_THROWS(series_quotient(IntPolynomial::one(), IntPolynomial{0, 1}, 3));
}

TEST_CASE("rational functions cancel and evaluate at one") {
  const RationalFunction a(IntPolynomial::one_minus_power(2), {PowerFactor{1, 1}});
  CHECK(a.is_polynomial());
  CHECK(*a.as_polynomial() == IntPolynomial{1, 1});
  CHECK(rational_function_eval_at_one(a) == 2);

  const RationalFunction b = RationalFunction(IntPolynomial{1, 3, 8, 3, 1}).divided_by(IntPolynomial{1, 1});
  CHECK_FALSE(b.is_polynomial());
  CHECK(b.value_at_one() == 8);

  const RationalFunction pole(IntPolynomial::one_minus_power(1), {PowerFactor{1, 2}});
  CHECK_THROWS_AS(pole.value_at_one(), PoleAtOne);

  // 1/(1 - t^2) has the factors (1 - t) and Phi_2
  const RationalFunction c(IntPolynomial::one(), {PowerFactor{2, 1}});
  CHECK(c.cyclotomic_factors().at(1) == 1);
  CHECK(c.cyclotomic_factors().at(2) == 1);
  CHECK(c.denominator() == IntPolynomial::one_minus_power(2));
}

TEST_CASE("rational function reciprocal and arithmetic") {
  const RationalFunction f(IntPolynomial{1, 1}, {PowerFactor{1, 3}});
  auto [e, r] = f.reciprocal(3);
  // t^3 (1 + 1/t) / (1 - 1/t)^3 = -t^5 (1 + t)/(1 - t)^3
  REQUIRE(e >= 0);
  CHECK(r.shifted(static_cast<std::size_t>(e)) == -RationalFunction(IntPolynomial{0, 0, 0, 0, 0, 1, 1}, {PowerFactor{1, 3}}));
  const RationalFunction g(IntPolynomial::one(), {PowerFactor{1, 1}});
  CHECK(g * RationalFunction(IntPolynomial::one_minus_power(1)) == RationalFunction(IntPolynomial::one()));
  CHECK((g + g) == RationalFunction(IntPolynomial{2}, {PowerFactor{1, 1}}));
  CHECK((g - g).numerator().is_zero());
}

TEST_CASE("expansion times denominator reproduces the numerator") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, 6), period(1, 4), power(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<BigInt> c;
    const int n = deg(rng);
    for (int i = 0; i <= n; ++i) c.push_back(coef(rng));
    const IntPolynomial num(c);
    std::vector<PowerFactor> factors{PowerFactor{static_cast<unsigned>(period(rng)), static_cast<unsigned>(power(rng))},
                                     PowerFactor{1, static_cast<unsigned>(power(rng))}};
    const RationalFunction f(num, factors);
    const std::size_t k = static_cast<std::size_t>(std::max(f.numerator().degree(), 0)) + 5;
    const IntPolynomial back = IntPolynomial(f.series(k)) * f.denominator();
    CHECK(back.truncated(k) == f.numerator().truncated(k));
    // the canonical form represents the same function
    IntPolynomial den = IntPolynomial::one();
    for (const auto& pf : factors) den *= IntPolynomial::one_minus_power(pf.a).pow(pf.b);
    CHECK((IntPolynomial(f.series(k)) * den).truncated(k) == num.truncated(k));
  }
}

TEST_CASE("cyclotomic values") {
  const auto z6 = CyclotomicValue::root_of_unity(6, 1);
  CHECK(z6 + CyclotomicValue::root_of_unity(6, 5) == CyclotomicValue(1));
  const auto i = CyclotomicValue::root_of_unity(4, 1);
  CHECK(i * i == CyclotomicValue(-1));
  CHECK(CyclotomicValue::root_of_unity(3, 1).conj() == CyclotomicValue::root_of_unity(3, 2));
  CHECK(CyclotomicValue::root_of_unity(12, 4) == CyclotomicValue::root_of_unity(3, 1));
  CHECK(z6 * z6 * z6 == CyclotomicValue(-1));
  CHECK((z6 + i).order() == 12);
  CHECK(CyclotomicValue(BigRational(3, 2)).is_rational());
  CHECK_FALSE(z6.is_rational());
}

TEST_CASE("cyclotomic arithmetic agrees with floating point") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> order_pick(0, 5), small(-3, 3), expo(0, 11);
  const unsigned orders[] = {1, 2, 3, 4, 6, 12};
  auto random_value = [&] {
    const unsigned n = orders[order_pick(rng)];
    CyclotomicValue v(0);
    for (int k = 0; k < 3; ++k) v += CyclotomicValue::root_of_unity(n, expo(rng)) * CyclotomicValue(small(rng));
    return v;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_value(), b = random_value();
    const std::complex<double> ca = a.to_complex(), cb = b.to_complex();
    CHECK(std::abs((a + b).to_complex() - (ca + cb)) < 1e-9);
    CHECK(std::abs((a * b).to_complex() - (ca * cb)) < 1e-9);
    CHECK(std::abs(a.conj().to_complex() - std::conj(ca)) < 1e-9);
  }
}
