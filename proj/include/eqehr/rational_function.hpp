#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqehr/polynomial.hpp"

namespace eqehr {

// (1 - t^a)^b
struct PowerFactor {
  unsigned a = 1;
  unsigned b = 1;
};

// numerator / denominator with integer coefficients.  The denominator is kept
// factored into (1 - t) and the cyclotomic polynomials Phi_k (k >= 2), with any
// non-cyclotomic remainder held separately.  Every instance is canonical: no
// cyclotomic factor of the denominator divides the numerator.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(IntPolynomial numerator);  // NOLINT: polynomials are rational functions
  RationalFunction(IntPolynomial numerator, const std::vector<PowerFactor>& factors,
                   const IntPolynomial& extra = IntPolynomial::one());

  const IntPolynomial& numerator() const { return num_; }
  // Factor index -> exponent.  Index 1 stands for (1 - t), k >= 2 for Phi_k.
  const std::map<unsigned, unsigned>& cyclotomic_factors() const { return cyc_; }
  const IntPolynomial& residual_denominator() const { return residual_; }
  IntPolynomial denominator() const;

  bool is_polynomial() const;
  std::optional<IntPolynomial> as_polynomial() const;

  // First n power series coefficients.
  std::vector<BigInt> series(std::size_t n) const;
  // Throws PoleAtOne when (1 - t) survives in the denominator.
  BigRational value_at_one() const;

  // t^k f(1/t) written as t^e * R(t); returns {e, R}.
  std::pair<long, RationalFunction> reciprocal(long k) const;
  // f * t^k
  RationalFunction shifted(std::size_t k) const;
  // f / q for a polynomial q (folded into the denominator).
  RationalFunction divided_by(const IntPolynomial& q) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  RationalFunction operator-() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string to_string() const;
  std::string denominator_string() const;

 private:
  void absorb_denominator(IntPolynomial extra);
  void canonicalize();

  IntPolynomial num_;
  std::map<unsigned, unsigned> cyc_;
  IntPolynomial residual_ = IntPolynomial::one();
};

// (1 - t) for index 1, Phi_k otherwise.
const IntPolynomial& denominator_factor(unsigned index);

std::vector<BigInt> poly_series_quotient(const IntPolynomial& numerator, const std::vector<PowerFactor>& factors,
                                         const IntPolynomial& extra, std::size_t n);
BigRational rational_function_eval_at_one(const RationalFunction& f);

}  // namespace eqehr
