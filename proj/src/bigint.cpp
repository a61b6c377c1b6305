#include "eqehr/bigint.hpp"

#include <limits>
#include <stdexcept>

namespace eqehr {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt floor_of(const BigRational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil_of(const BigRational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_integral(const BigRational& q) { return q.get_den() == 1; }

BigInt gcd_of(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt lcm_of(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  BigInt r;
  if (n >= 0) {
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  } else {
    BigInt nn(n);
    mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
  }
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  static_assert(sizeof(long) == 8);
  return v.get_si();
}

std::int64_t to_int64(const BigRational& v) {
  if (!is_integral(v)) throw std::domain_error("not an integer: " + v.get_str());
  return to_int64(BigInt(v.get_num()));
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

BigInt integer_from(std::string_view s) {
  if (!valid_integer_text(s)) throw std::invalid_argument("malformed integer: " + std::string(s));
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

BigInt parse_integer(std::string_view text) { return integer_from(text); }

BigRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(integer_from(text));
  BigInt num = integer_from(text.substr(0, slash));
  BigInt den = integer_from(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in: " + std::string(text));
  return make_rational(num, den);
}

}  // namespace eqehr
