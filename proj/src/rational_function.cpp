#include "eqehr/rational_function.hpp"

#include "eqehr/errors.hpp"

namespace eqehr {

const IntPolynomial& denominator_factor(unsigned index) {
  static const IntPolynomial one_minus_t = IntPolynomial::one_minus_power(1);
  if (index == 1) return one_minus_t;
  return cyclotomic_polynomial(index);
}

RationalFunction::RationalFunction(IntPolynomial numerator) : num_(std::move(numerator)) {}

RationalFunction::RationalFunction(IntPolynomial numerator, const std::vector<PowerFactor>& factors,
                                   const IntPolynomial& extra)
    : num_(std::move(numerator)) {
  for (const auto& f : factors) {
    if (f.a == 0) throw std::invalid_argument("denominator factor (1 - t^0)");
    for (unsigned k : divisors(f.a)) cyc_[k] += f.b;
  }
  absorb_denominator(extra);
  canonicalize();
}

void RationalFunction::absorb_denominator(IntPolynomial extra) {
  if (extra.is_zero()) throw std::domain_error("rational function with zero denominator");
  int deg = extra.degree();
  if (deg > 0) {
    unsigned bound = 2u * static_cast<unsigned>(deg * deg) + 2u;
    for (unsigned k = 1; k <= bound && extra.degree() > 0; ++k) {
      if (k > 1 && euler_phi(k) > static_cast<unsigned>(extra.degree())) continue;
      while (extra.degree() > 0) {
        auto q = extra.exact_quotient(denominator_factor(k));
        if (!q) break;
        extra = std::move(*q);
        cyc_[k] += 1;
      }
    }
  }
  residual_ *= extra;
  if (residual_.coeff(0) < 0 || (residual_.coeff(0) == 0 && residual_.leading() < 0)) {
    residual_ = -residual_;
    num_ = -num_;
  }
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    cyc_.clear();
    residual_ = IntPolynomial::one();
    return;
  }
  for (auto it = cyc_.begin(); it != cyc_.end();) {
    const IntPolynomial& f = denominator_factor(it->first);
    while (it->second > 0) {
      auto q = num_.exact_quotient(f);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    if (it->second == 0)
      it = cyc_.erase(it);
    else
      ++it;
  }
  if (residual_ != IntPolynomial::one()) {
    if (auto q = num_.exact_quotient(residual_)) {
      num_ = std::move(*q);
      residual_ = IntPolynomial::one();
    }
  }
}

IntPolynomial RationalFunction::denominator() const {
  IntPolynomial d = residual_;
  for (const auto& [k, e] : cyc_) d *= denominator_factor(k).pow(e);
  return d;
}

bool RationalFunction::is_polynomial() const { return cyc_.empty() && residual_ == IntPolynomial::one(); }

std::optional<IntPolynomial> RationalFunction::as_polynomial() const {
  if (!is_polynomial()) return std::nullopt;
  return num_;
}

std::vector<BigInt> RationalFunction::series(std::size_t n) const { return series_quotient(num_, denominator(), n); }

BigRational RationalFunction::value_at_one() const {
  if (cyc_.count(1)) throw PoleAtOne("rational function has a pole at t = 1: " + to_string());
  BigRational d = denominator().evaluate(BigRational(1));
  if (d == 0) throw PoleAtOne("denominator vanishes at t = 1: " + to_string());
  return num_.evaluate(BigRational(1)) / d;
}

std::pair<long, RationalFunction> RationalFunction::reciprocal(long k) const {
  if (num_.is_zero()) return {0, RationalFunction()};
  const long n = num_.degree();
  const long q = denominator().degree();
  RationalFunction r;
  r.num_ = num_.reversed(static_cast<std::size_t>(n));
  if (auto it = cyc_.find(1); it != cyc_.end() && it->second % 2 == 1) r.num_ = -r.num_;
  r.cyc_ = cyc_;
  r.residual_ = IntPolynomial::one();
  r.absorb_denominator(residual_.reversed(static_cast<std::size_t>(residual_.degree())));
  r.canonicalize();
  return {k - n + q, r};
}

RationalFunction RationalFunction::shifted(std::size_t k) const {
  RationalFunction r = *this;
  r.num_ = num_.shifted(k);
  return r;
}

RationalFunction RationalFunction::divided_by(const IntPolynomial& q) const {
  RationalFunction r = *this;
  r.absorb_denominator(q);
  r.canonicalize();
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  std::map<unsigned, unsigned> lcm = cyc_;
  for (const auto& [k, e] : o.cyc_) lcm[k] = std::max(lcm[k], e);
  IntPolynomial a = num_;
  IntPolynomial b = o.num_;
  for (const auto& [k, e] : lcm) {
    auto mine = cyc_.count(k) ? cyc_.at(k) : 0u;
    auto theirs = o.cyc_.count(k) ? o.cyc_.at(k) : 0u;
    a *= denominator_factor(k).pow(e - mine);
    b *= denominator_factor(k).pow(e - theirs);
  }
  if (residual_ == o.residual_) {
    num_ = a + b;
  } else {
    num_ = a * o.residual_ + b * residual_;
    residual_ *= o.residual_;
  }
  cyc_ = std::move(lcm);
  canonicalize();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -num_;
  return r;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  for (const auto& [k, e] : o.cyc_) cyc_[k] += e;
  residual_ *= o.residual_;
  canonicalize();
  return *this;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.cyc_ == b.cyc_ && a.residual_ == b.residual_) return a.num_ == b.num_;
  return a.num_ * b.denominator() == b.num_ * a.denominator();
}

std::string RationalFunction::denominator_string() const {
  std::string out;
  for (const auto& [k, e] : cyc_) {
    if (!out.empty()) out += "*";
    out += "(" + denominator_factor(k).to_string() + ")";
    if (e > 1) out += "^" + std::to_string(e);
  }
  if (residual_ != IntPolynomial::one()) {
    if (!out.empty()) out += "*";
    out += "(" + residual_.to_string() + ")";
  }
  return out.empty() ? "1" : out;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  const bool single_factor = cyc_.size() + (residual_ != IntPolynomial::one() ? 1 : 0) == 1 &&
                             (cyc_.empty() || cyc_.begin()->second == 1);
  const std::string den = denominator_string();
  return "(" + num_.to_string() + ")/" + (single_factor ? den : "(" + den + ")");
}

std::vector<BigInt> poly_series_quotient(const IntPolynomial& numerator, const std::vector<PowerFactor>& factors,
                                         const IntPolynomial& extra, std::size_t n) {
  IntPolynomial den = extra;
  for (const auto& f : factors) den *= IntPolynomial::one_minus_power(f.a).pow(f.b);
  return series_quotient(numerator, den, n);
}

BigRational rational_function_eval_at_one(const RationalFunction& f) { return f.value_at_one(); }

}  // namespace eqehr
