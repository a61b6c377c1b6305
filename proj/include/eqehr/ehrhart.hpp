#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqehr/polytope.hpp"
#include "eqehr/rational_function.hpp"

namespace eqehr {

// f(m) = constituent[m mod period](m); negative m uses the residue of m.
class QuasiPolynomial {
 public:
  QuasiPolynomial() : QuasiPolynomial(std::vector<RatPolynomial>{RatPolynomial{}}) {}
  explicit QuasiPolynomial(std::vector<RatPolynomial> constituents);
  static QuasiPolynomial polynomial(RatPolynomial p) { return QuasiPolynomial(std::vector<RatPolynomial>{std::move(p)}); }

  std::size_t period() const { return parts_.size(); }
  const std::vector<RatPolynomial>& constituents() const { return parts_; }
  const RatPolynomial& constituent_for(std::int64_t m) const;
  BigRational operator()(std::int64_t m) const;
  // Coefficient of m^power in the constituent used at m.
  BigRational coefficient(std::size_t power, std::int64_t m) const;
  int degree() const;

  std::size_t minimal_period() const;
  QuasiPolynomial reduced() const;  // same function, minimal period
  QuasiPolynomial with_period(std::size_t period) const;  // period must be a multiple

  QuasiPolynomial& operator+=(const QuasiPolynomial& o);
  QuasiPolynomial& operator*=(const BigRational& s);
  friend QuasiPolynomial operator+(QuasiPolynomial a, const QuasiPolynomial& b) { return a += b; }
  friend QuasiPolynomial operator*(QuasiPolynomial a, const BigRational& s) { return a *= s; }
  friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b);

  std::string to_string(const std::string& var = "m") const;

 private:
  std::vector<RatPolynomial> parts_;
};

// sum_m f(m) t^m = numerator / (1 - t^period)^(dim + 1)
struct EhrhartSeries {
  int dim = 0;
  unsigned period = 1;
  IntPolynomial numerator;

  RationalFunction as_rational_function() const;
  std::vector<BigInt> expand(std::size_t n) const;
};

// counts[m] for m = 0 .. (dim + 2) period - 1: the first (dim + 1) period fix
// the numerator, the rest are held out.  Throws VerificationFailure.
EhrhartSeries ehrhart_series_from_counts(int dim, unsigned period, const std::vector<BigInt>& counts);

// Degree-`degree` quasi-polynomial through samples (m, values[m - first]) with the given
// period; uses degree + 1 samples per residue and checks every remaining one.
QuasiPolynomial fit_quasi_polynomial(int degree, unsigned period, std::int64_t first, const std::vector<BigInt>& values);

// Counts of m Q for m = 0 .. (dim + 2) * denominator - 1.
std::vector<BigInt> dilate_counts(const RationalPolytope& q);
// Relative interior counts of m Q for m = 1 .. (dim + 2) * denominator.
std::vector<BigInt> interior_dilate_counts(const RationalPolytope& q);

EhrhartSeries ehrhart_series(const RationalPolytope& q);
QuasiPolynomial quasi_polynomial(const RationalPolytope& q);
QuasiPolynomial interior_quasi_polynomial(const RationalPolytope& q);

struct HStarData {
  IntPolynomial hstar;
  int degree = 0;
  int codegree = 0;
};
// Lattice polytopes only (NotLattice otherwise).
HStarData hstar_data(const RationalPolytope& p);

struct ReciprocityResult {
  bool holds = true;
  std::optional<std::int64_t> witness;  // first failing m
};
// f(-m) = (-1)^dim f°(m) for m = 1 .. (dim + 1) denominator + 2, with interior counts enumerated.
ReciprocityResult reciprocity_check(const RationalPolytope& q);

IntPolynomial eulerian_polynomial(unsigned d);

}  // namespace eqehr
