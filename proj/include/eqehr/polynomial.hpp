#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "eqehr/bigint.hpp"

namespace eqehr {

// Dense univariate polynomial, coefficient i multiplies t^i.
// Coefficients are kept trimmed: the zero polynomial has no coefficients.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(T value) { return Polynomial(std::vector<T>{std::move(value)}); }
  static Polynomial monomial(T value, std::size_t power) {
    std::vector<T> c(power + 1);
    c[power] = std::move(value);
    return Polynomial(std::move(c));
  }
  static Polynomial one() { return constant(T(1)); }
  // 1 - t^a
  static Polynomial one_minus_power(std::size_t a) {
    std::vector<T> c(a + 1);
    c[0] = 1;
    c[a] -= 1;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coefficients() const { return c_; }

  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }
  T lowest_coeff() const { return coeff(0); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned e) const {
    Polynomial r = one();
    Polynomial b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e) b *= b;
    }
    return r;
  }

  template <class U>
  U evaluate(const U& x) const {
    U r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + U(c_[i]);
    return r;
  }

  // p(t) * t^k
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> c(k, T(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Polynomial(std::move(c));
  }
  // t^n p(1/t); requires deg p <= n.
  Polynomial reversed(std::size_t n) const {
    if (degree() > static_cast<int>(n)) throw std::invalid_argument("reversal degree too small");
    std::vector<T> c(n + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) c[n - i] = c_[i];
    return Polynomial(std::move(c));
  }
  // p(t^k)
  Polynomial substitute_power(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> c((c_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i * k] = c_[i];
    return Polynomial(std::move(c));
  }
  // Terms of degree < n.
  Polynomial truncated(std::size_t n) const {
    if (c_.size() <= n) return *this;
    return Polynomial(std::vector<T>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
  }
  // Lowest power of t with a nonzero coefficient; -1 for zero.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    return -1;
  }
  bool is_palindromic(std::size_t n) const { return degree() <= static_cast<int>(n) && reversed(n) == *this; }

  // Division with remainder.  Over the integers every step must divide exactly,
  // otherwise std::nullopt is returned.
  std::optional<std::pair<Polynomial, Polynomial>> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<T> r = c_;
    if (r.size() < d.c_.size()) return std::make_pair(Polynomial{}, *this);
    std::vector<T> q(r.size() - d.c_.size() + 1);
    const T& lead = d.c_.back();
    for (std::size_t k = q.size(); k-- > 0;) {
      T& top = r[k + d.c_.size() - 1];
      if (top == 0) continue;
      T factor;
      if constexpr (std::is_same_v<T, BigInt>) {
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        factor = top / lead;
      } else {
        factor = top / lead;
      }
      q[k] = factor;
      for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] -= factor * d.c_[j];
    }
    return std::make_pair(Polynomial(std::move(q)), Polynomial(std::move(r)));
  }

  // Quotient when d divides *this exactly.
  std::optional<Polynomial> exact_quotient(const Polynomial& d) const {
    auto qr = divmod(d);
    if (!qr || !qr->second.is_zero()) return std::nullopt;
    return std::move(qr->first);
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      T a = c_[i];
      bool neg = a < 0;
      if (neg) a = -a;
      if (first) {
        if (neg) out << "-";
      } else {
        out << (neg ? " - " : " + ");
      }
      first = false;
      bool unit = (a == 1);
      if (i == 0 || !unit) out << eqehr::to_string(a);
      if (i > 0) {
        if (!unit) out << "*";
        out << var;
        if (i > 1) out << "^" << i;
      }
    }
    return out.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<BigRational>;

RatPolynomial to_rational(const IntPolynomial& p);
// Throws std::domain_error if some coefficient is not an integer.
IntPolynomial to_integer(const RatPolynomial& p);

// First n coefficients of num / den as a power series; den(0) must be nonzero
// and the quotient must have integral coefficients when T is BigInt.
template <class T>
std::vector<T> series_quotient(const Polynomial<T>& num, const Polynomial<T>& den, std::size_t n) {
  if (den.coeff(0) == 0) throw std::domain_error("series division by a polynomial with zero constant term");
  const T c0 = den.coeff(0);
  std::vector<T> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    T acc = num.coeff(k);
    std::size_t top = std::min<std::size_t>(k, den.size() ? den.size() - 1 : 0);
    for (std::size_t j = 1; j <= top; ++j) acc -= den.coeff(j) * out[k - j];
    if constexpr (std::is_same_v<T, BigInt>) {
      if (!mpz_divisible_p(acc.get_mpz_t(), c0.get_mpz_t()))
        throw std::domain_error("series quotient is not integral");
      out[k] = acc / c0;
    } else {
      out[k] = acc / c0;
    }
  }
  return out;
}

// Lagrange interpolation through (xs[i], ys[i]).
RatPolynomial interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys);

// Cyclotomic polynomial Phi_n (cached, thread safe).
const IntPolynomial& cyclotomic_polynomial(unsigned n);
unsigned euler_phi(unsigned n);
std::vector<unsigned> divisors(unsigned n);

}  // namespace eqehr
