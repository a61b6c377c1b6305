#pragma once

#include <complex>
#include <string>
#include <vector>

#include "eqehr/bigint.hpp"
#include "eqehr/polynomial.hpp"

namespace eqehr {

// Element of Q(zeta_N), stored in the power basis 1, z, ..., z^(phi(N)-1)
// where z = exp(2 pi i / N).  Values of different orders are lifted to the
// lcm of the orders before combining.
class CyclotomicValue {
 public:
  CyclotomicValue() : CyclotomicValue(BigRational(0)) {}
  CyclotomicValue(BigRational q);  // NOLINT: implicit by design
  CyclotomicValue(long q) : CyclotomicValue(BigRational(q)) {}  // NOLINT

  static CyclotomicValue root_of_unity(unsigned order, long exponent);
  // Reduces an arbitrary polynomial in z modulo Phi_order.
  static CyclotomicValue from_polynomial(unsigned order, const RatPolynomial& poly);

  unsigned order() const { return order_; }
  const std::vector<BigRational>& coordinates() const { return coords_; }

  CyclotomicValue lifted(unsigned new_order) const;

  bool is_rational() const;
  bool is_zero() const;
  // Throws std::domain_error unless the value is rational.
  BigRational rational() const;
  bool is_integer() const { return is_rational() && is_integral(rational()); }

  CyclotomicValue conj() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  CyclotomicValue& operator+=(const CyclotomicValue& o);
  CyclotomicValue& operator-=(const CyclotomicValue& o);
  CyclotomicValue& operator*=(const CyclotomicValue& o);
  CyclotomicValue& operator/=(const BigRational& q);
  friend CyclotomicValue operator+(CyclotomicValue a, const CyclotomicValue& b) { return a += b; }
  friend CyclotomicValue operator-(CyclotomicValue a, const CyclotomicValue& b) { return a -= b; }
  friend CyclotomicValue operator*(CyclotomicValue a, const CyclotomicValue& b) { return a *= b; }
  friend CyclotomicValue operator/(CyclotomicValue a, const BigRational& q) { return a /= q; }
  CyclotomicValue operator-() const;
  friend bool operator==(const CyclotomicValue& a, const CyclotomicValue& b);
  friend bool operator!=(const CyclotomicValue& a, const CyclotomicValue& b) { return !(a == b); }

 private:
  CyclotomicValue(unsigned order, std::vector<BigRational> coords);
  RatPolynomial as_polynomial() const;
  unsigned order_ = 1;
  std::vector<BigRational> coords_;
};

}  // namespace eqehr
