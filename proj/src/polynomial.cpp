#include <map>
#include <mutex>

#include "eqehr/polynomial.hpp"

namespace eqehr {

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<BigRational> c;
  c.reserve(p.size());
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

IntPolynomial to_integer(const RatPolynomial& p) {
  std::vector<BigInt> c;
  c.reserve(p.size());
  for (const auto& x : p.coefficients()) {
    if (!is_integral(x)) throw std::domain_error("non-integral coefficient " + to_string(x));
    c.emplace_back(x.get_num());
  }
  return IntPolynomial(std::move(c));
}

RatPolynomial interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  RatPolynomial result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (ys[i] == 0) continue;
    RatPolynomial basis = RatPolynomial::one();
    BigRational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= RatPolynomial{BigRational(-xs[j]), BigRational(1)};
      denom *= xs[i] - xs[j];
    }
    if (denom == 0) throw std::invalid_argument("interpolate: repeated node");
    result += basis * BigRational(ys[i] / denom);
  }
  return result;
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned k = 1; k <= n; ++k)
    if (n % k == 0) out.push_back(k);
  return out;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const IntPolynomial& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial(0)");
  static std::mutex mutex;
  static std::map<unsigned, IntPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // t^n - 1 divided by Phi_k for proper divisors k.
  IntPolynomial p = -IntPolynomial::one_minus_power(n);
  for (unsigned k : divisors(n)) {
    if (k == n) continue;
    auto q = p.exact_quotient(cyclotomic_polynomial(k));
    if (!q) throw std::logic_error("cyclotomic division failed");
    p = std::move(*q);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(p)).first->second;
}

}  // namespace eqehr
