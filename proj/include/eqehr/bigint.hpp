#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace eqehr {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Canonical quotient; throws std::domain_error on a zero denominator.
BigRational make_rational(const BigInt& num, const BigInt& den);

BigInt floor_of(const BigRational& q);
BigInt ceil_of(const BigRational& q);
bool is_integral(const BigRational& q);

BigInt gcd_of(const BigInt& a, const BigInt& b);
BigInt lcm_of(const BigInt& a, const BigInt& b);

BigInt binomial(long n, long k);
BigInt factorial(unsigned long n);

// Throws std::overflow_error if the value does not fit.
std::int64_t to_int64(const BigInt& v);
std::int64_t to_int64(const BigRational& v);

// "p" for integers, "p/q" otherwise.
std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);

// Accepts "p", "-p", "p/q".  Throws std::invalid_argument on malformed text.
BigRational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

using RatVector = std::vector<BigRational>;
using IntVector = std::vector<std::int64_t>;

}  // namespace eqehr
