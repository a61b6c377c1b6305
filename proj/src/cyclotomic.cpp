#include "eqehr/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace eqehr {

namespace {

std::vector<BigRational> reduce(unsigned order, const RatPolynomial& poly) {
  const unsigned dim = euler_phi(order);
  RatPolynomial rem = poly;
  if (rem.degree() >= static_cast<int>(dim)) {
    auto qr = rem.divmod(to_rational(cyclotomic_polynomial(order)));
    rem = qr->second;
  }
  std::vector<BigRational> out(dim);
  for (unsigned i = 0; i < dim; ++i) out[i] = rem.coeff(i);
  return out;
}

unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

}  // namespace

CyclotomicValue::CyclotomicValue(BigRational q) : order_(1), coords_{std::move(q)} {}

CyclotomicValue::CyclotomicValue(unsigned order, std::vector<BigRational> coords)
    : order_(order), coords_(std::move(coords)) {}

CyclotomicValue CyclotomicValue::root_of_unity(unsigned order, long exponent) {
  if (order == 0) throw std::invalid_argument("root of unity of order 0");
  long k = exponent % static_cast<long>(order);
  if (k < 0) k += order;
  return from_polynomial(order, RatPolynomial::monomial(BigRational(1), static_cast<std::size_t>(k)));
}

CyclotomicValue CyclotomicValue::from_polynomial(unsigned order, const RatPolynomial& poly) {
  if (order == 0) throw std::invalid_argument("cyclotomic order 0");
  return CyclotomicValue(order, reduce(order, poly));
}

RatPolynomial CyclotomicValue::as_polynomial() const { return RatPolynomial(coords_); }

CyclotomicValue CyclotomicValue::lifted(unsigned new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0) throw std::invalid_argument("cannot lift cyclotomic value to a non-multiple order");
  return from_polynomial(new_order, as_polynomial().substitute_power(new_order / order_));
}

bool CyclotomicValue::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

bool CyclotomicValue::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

BigRational CyclotomicValue::rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + to_string());
  return coords_.empty() ? BigRational(0) : coords_[0];
}

CyclotomicValue CyclotomicValue::conj() const {
  if (order_ <= 2) return *this;
  std::vector<BigRational> c(order_);
  for (std::size_t i = 0; i < coords_.size(); ++i) c[(order_ - i) % order_] += coords_[i];
  return from_polynomial(order_, RatPolynomial(std::move(c)));
}

std::complex<double> CyclotomicValue::to_complex() const {
  std::complex<double> r = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(order_);
    r += coords_[i].get_d() * std::polar(1.0, angle);
  }
  return r;
}

std::string CyclotomicValue::to_string() const {
  if (is_rational()) return eqehr::to_string(rational());
  return as_polynomial().to_string("z" + std::to_string(order_));
}

CyclotomicValue& CyclotomicValue::operator+=(const CyclotomicValue& o) {
  unsigned n = lcm_u(order_, o.order_);
  CyclotomicValue a = lifted(n);
  CyclotomicValue b = o.lifted(n);
  for (std::size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] += b.coords_[i];
  return *this = std::move(a);
}

CyclotomicValue& CyclotomicValue::operator-=(const CyclotomicValue& o) { return *this += -o; }

CyclotomicValue& CyclotomicValue::operator*=(const CyclotomicValue& o) {
  if (o.order_ == 1) {
    for (auto& c : coords_) c *= o.coords_[0];
    return *this;
  }
  if (order_ == 1) {
    BigRational s = coords_[0];
    *this = o;
    for (auto& c : coords_) c *= s;
    return *this;
  }
  unsigned n = lcm_u(order_, o.order_);
  return *this = from_polynomial(n, lifted(n).as_polynomial() * o.lifted(n).as_polynomial());
}

CyclotomicValue& CyclotomicValue::operator/=(const BigRational& q) {
  if (q == 0) throw std::domain_error("cyclotomic division by zero");
  for (auto& c : coords_) c /= q;
  return *this;
}

CyclotomicValue CyclotomicValue::operator-() const {
  CyclotomicValue r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

bool operator==(const CyclotomicValue& a, const CyclotomicValue& b) {
  if (a.order_ == b.order_) return a.coords_ == b.coords_;
  unsigned n = lcm_u(a.order_, b.order_);
  return a.lifted(n).coords_ == b.lifted(n).coords_;
}

}  // namespace eqehr
