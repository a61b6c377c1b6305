#include "eqehr/ehrhart.hpp"

#include <numeric>
#include <sstream>

#include "eqehr/errors.hpp"

namespace eqehr {

namespace {

std::size_t residue(std::int64_t m, std::size_t period) {
  auto p = static_cast<std::int64_t>(period);
  return static_cast<std::size_t>(((m % p) + p) % p);
}

}  // namespace

QuasiPolynomial::QuasiPolynomial(std::vector<RatPolynomial> constituents) : parts_(std::move(constituents)) {
  if (parts_.empty()) throw std::invalid_argument("quasi-polynomial needs at least one constituent");
}

const RatPolynomial& QuasiPolynomial::constituent_for(std::int64_t m) const { return parts_[residue(m, period())]; }

BigRational QuasiPolynomial::operator()(std::int64_t m) const {
  return constituent_for(m).evaluate(BigRational(static_cast<long>(m)));
}

BigRational QuasiPolynomial::coefficient(std::size_t power, std::int64_t m) const { return constituent_for(m).coeff(power); }

int QuasiPolynomial::degree() const {
  int d = -1;
  for (const auto& p : parts_) d = std::max(d, p.degree());
  return d;
}

std::size_t QuasiPolynomial::minimal_period() const {
  const std::size_t s = period();
  for (unsigned q : divisors(static_cast<unsigned>(s))) {
    bool ok = true;
    for (std::size_t i = q; i < s && ok; ++i) ok = parts_[i] == parts_[i % q];
    if (ok) return q;
  }
  return s;
}

QuasiPolynomial QuasiPolynomial::reduced() const {
  const std::size_t q = minimal_period();
  return QuasiPolynomial(std::vector<RatPolynomial>(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(q)));
}

QuasiPolynomial QuasiPolynomial::with_period(std::size_t period) const {
  if (period % this->period() != 0) throw std::invalid_argument("period must be a multiple of the current period");
  std::vector<RatPolynomial> parts(period);
  for (std::size_t i = 0; i < period; ++i) parts[i] = parts_[i % this->period()];
  return QuasiPolynomial(std::move(parts));
}

QuasiPolynomial& QuasiPolynomial::operator+=(const QuasiPolynomial& o) {
  const std::size_t l = std::lcm(period(), o.period());
  QuasiPolynomial a = with_period(l), b = o.with_period(l);
  for (std::size_t i = 0; i < l; ++i) a.parts_[i] += b.parts_[i];
  return *this = a;
}

QuasiPolynomial& QuasiPolynomial::operator*=(const BigRational& s) {
  for (auto& p : parts_) p *= s;
  return *this;
}

bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b) {
  const std::size_t l = std::lcm(a.period(), b.period());
  return a.with_period(l).parts_ == b.with_period(l).parts_;
}

std::string QuasiPolynomial::to_string(const std::string& var) const {
  if (period() == 1) return parts_[0].to_string(var);
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < period(); ++i) {
    if (i) out << "; ";
    out << var << "=" << i << " mod " << period() << ": " << parts_[i].to_string(var);
  }
  out << "]";
  return out.str();
}

RationalFunction EhrhartSeries::as_rational_function() const {
  return RationalFunction(numerator, {PowerFactor{period, static_cast<unsigned>(dim + 1)}});
}

std::vector<BigInt> EhrhartSeries::expand(std::size_t n) const {
  return poly_series_quotient(numerator, {PowerFactor{period, static_cast<unsigned>(dim + 1)}}, IntPolynomial::one(), n);
}

EhrhartSeries ehrhart_series_from_counts(int dim, unsigned period, const std::vector<BigInt>& counts) {
  const std::size_t fit = static_cast<std::size_t>(dim + 1) * period;
  if (counts.size() < fit) throw std::invalid_argument("not enough counts for the Ehrhart series");
  EhrhartSeries s;
  s.dim = dim;
  s.period = period;
  IntPolynomial head(std::vector<BigInt>(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(fit)));
  s.numerator = (head * IntPolynomial::one_minus_power(period).pow(static_cast<unsigned>(dim + 1))).truncated(fit);
  const auto check = s.expand(counts.size());
  for (std::size_t m = fit; m < counts.size(); ++m)
    if (check[m] != counts[m])
      throw VerificationFailure("Ehrhart series disagrees with the count at m = " + std::to_string(m));
  return s;
}

QuasiPolynomial fit_quasi_polynomial(int degree, unsigned period, std::int64_t first, const std::vector<BigInt>& values) {
  std::vector<RatPolynomial> parts(period);
  const std::size_t need = static_cast<std::size_t>(degree + 1);
  for (unsigned res = 0; res < period; ++res) {
    std::vector<BigRational> xs, ys;
    for (std::size_t k = 0; k < values.size(); ++k) {
      const std::int64_t m = first + static_cast<std::int64_t>(k);
      if (residue(m, period) != res) continue;
      xs.emplace_back(static_cast<long>(m));
      ys.emplace_back(values[k]);
    }
    if (xs.size() < need) throw std::invalid_argument("not enough samples for a quasi-polynomial constituent");
    std::vector<BigRational> fx(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(need));
    std::vector<BigRational> fy(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(need));
    parts[res] = interpolate(fx, fy);
    for (std::size_t k = need; k < xs.size(); ++k)
      if (parts[res].evaluate(xs[k]) != ys[k])
        throw VerificationFailure("quasi-polynomial disagrees with the count at m = " + to_string(xs[k]));
  }
  return QuasiPolynomial(std::move(parts));
}

namespace {

std::int64_t horizon_of(const RationalPolytope& q) {
  return static_cast<std::int64_t>(q.dim() + 2) * to_int64(q.denominator());
}

}  // namespace

std::vector<BigInt> dilate_counts(const RationalPolytope& q) {
  std::vector<BigInt> out;
  for (std::int64_t m = 0; m < horizon_of(q); ++m) out.push_back(count_lattice_points(q, m));
  return out;
}

std::vector<BigInt> interior_dilate_counts(const RationalPolytope& q) {
  std::vector<BigInt> out;
  for (std::int64_t m = 1; m <= horizon_of(q); ++m) out.push_back(count_interior_lattice_points(q, m));
  return out;
}

EhrhartSeries ehrhart_series(const RationalPolytope& q) {
  return ehrhart_series_from_counts(q.dim(), static_cast<unsigned>(to_int64(q.denominator())), dilate_counts(q));
}

QuasiPolynomial quasi_polynomial(const RationalPolytope& q) {
  return fit_quasi_polynomial(q.dim(), static_cast<unsigned>(to_int64(q.denominator())), 0, dilate_counts(q)).reduced();
}

QuasiPolynomial interior_quasi_polynomial(const RationalPolytope& q) {
  return fit_quasi_polynomial(q.dim(), static_cast<unsigned>(to_int64(q.denominator())), 1, interior_dilate_counts(q))
      .reduced();
}

HStarData hstar_data(const RationalPolytope& p) {
  if (!p.is_lattice()) throw NotLattice("h* is defined for lattice polytopes");
  HStarData out;
  out.hstar = ehrhart_series(p).numerator;
  out.degree = out.hstar.degree();
  out.codegree = p.dim() + 1 - out.degree;
  return out;
}

ReciprocityResult reciprocity_check(const RationalPolytope& q) {
  const QuasiPolynomial f = quasi_polynomial(q);
  const std::int64_t top = static_cast<std::int64_t>(q.dim() + 1) * to_int64(q.denominator()) + 2;
  const BigRational sign = (q.dim() % 2 == 0) ? 1 : -1;
  for (std::int64_t m = 1; m <= top; ++m)
    if (f(-m) != sign * BigRational(count_interior_lattice_points(q, m))) return {false, m};
  return {};
}

IntPolynomial eulerian_polynomial(unsigned d) {
  // rows of A(n, k), k descents among permutations of n letters
  std::vector<BigInt> row{1};
  for (unsigned n = 1; n <= d; ++n) {
    std::vector<BigInt> next(n, 0);
    for (unsigned k = 0; k < n; ++k) {
      if (k < row.size()) next[k] += BigInt(k + 1) * row[k];
      if (k >= 1 && k - 1 < row.size()) next[k] += BigInt(n - k) * row[k - 1];
    }
    row = std::move(next);
  }
  return IntPolynomial(row);
}

}  // namespace eqehr
