#include "eqehr/lattice_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "eqehr/errors.hpp"

namespace eqehr {

namespace {

std::int64_t checked_mul_add(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t p;
  if (__builtin_mul_overflow(a, b, &p) || __builtin_add_overflow(acc, p, &acc))
    throw std::overflow_error("integer matrix arithmetic overflow");
  return acc;
}

std::string vector_string(const IntVector& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "]";
  return out.str();
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(const std::vector<IntVector>& rows) : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  IntVector y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] = checked_mul_add(y[i], at(i, j), x[j]);
  return y;
}

RatVector IntMatrix::apply(const RatVector& x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  RatVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) y[i] += BigRational(static_cast<long>(at(i, j))) * x[j];
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      std::int64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) = checked_mul_add(c.at(i, j), aik, b.at(k, j));
    }
  return c;
}

RatMatrix IntMatrix::to_rational() const {
  RatMatrix m(rows_, RatVector(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m[i][j] = BigRational(static_cast<long>(at(i, j)));
  return m;
}

std::vector<IntVector> IntMatrix::to_rows() const {
  std::vector<IntVector> rows(rows_);
  for (std::size_t i = 0; i < rows_; ++i) rows[i].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  return rows;
}

BigInt IntMatrix::determinant() const {
  if (rows_ != cols_) throw DimensionMismatch("determinant of a non-square matrix");
  return BigRational(eqehr::determinant(to_rational())).get_num();
}

IntPolynomial IntMatrix::det_one_minus_t() const {
  if (rows_ != cols_) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  return to_integer(characteristic_polynomial(to_rational()).reversed(rows_));
}

std::size_t IntMatrix::fixed_space_dimension() const {
  RatMatrix m = to_rational();
  for (std::size_t i = 0; i < rows_; ++i) m[i][i] -= 1;
  return cols_ - eqehr::rank(m, cols_);
}

AffineLatticeAutomorphism::AffineLatticeAutomorphism(IntMatrix linear, IntVector translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
  if (linear_.rows() != linear_.cols()) throw DimensionMismatch("linear part must be square");
  if (translation_.size() != linear_.rows()) throw DimensionMismatch("translation length must equal the lattice rank");
}

AffineLatticeAutomorphism AffineLatticeAutomorphism::identity(std::size_t rank) {
  return AffineLatticeAutomorphism(IntMatrix::identity(rank), IntVector(rank, 0));
}

AffineLatticeAutomorphism AffineLatticeAutomorphism::from_lifted(const IntMatrix& lifted) {
  const std::size_t n = lifted.rows();
  if (n == 0 || lifted.cols() != n) throw DimensionMismatch("lifted matrix must be square and nonempty");
  for (std::size_t j = 0; j + 1 < n; ++j)
    if (lifted.at(n - 1, j) != 0) throw std::invalid_argument("lifted matrix must preserve height");
  if (lifted.at(n - 1, n - 1) != 1) throw std::invalid_argument("lifted matrix must preserve height");
  IntMatrix a(n - 1, n - 1);
  IntVector w(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) a.at(i, j) = lifted.at(i, j);
    w[i] = -lifted.at(i, n - 1);
  }
  return AffineLatticeAutomorphism(std::move(a), std::move(w));
}

IntMatrix AffineLatticeAutomorphism::lifted() const {
  const std::size_t d = rank();
  IntMatrix m(d + 1, d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m.at(i, j) = linear_.at(i, j);
    m.at(i, d) = -translation_[i];
  }
  m.at(d, d) = 1;
  return m;
}

IntVector AffineLatticeAutomorphism::apply(const IntVector& x, std::int64_t height) const {
  IntVector y = linear_.apply(x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = checked_mul_add(y[i], -height, translation_[i]);
  return y;
}

RatVector AffineLatticeAutomorphism::apply(const RatVector& x, const BigRational& height) const {
  RatVector y = linear_.apply(x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= height * BigRational(static_cast<long>(translation_[i]));
  return y;
}

bool AffineLatticeAutomorphism::is_identity() const {
  return is_linear() && linear_ == IntMatrix::identity(rank());
}

bool AffineLatticeAutomorphism::is_linear() const {
  return std::all_of(translation_.begin(), translation_.end(), [](std::int64_t v) { return v == 0; });
}

AffineLatticeAutomorphism operator*(const AffineLatticeAutomorphism& g, const AffineLatticeAutomorphism& h) {
  if (g.rank() != h.rank()) throw DimensionMismatch("composing automorphisms of different rank");
  IntVector w = g.linear_.apply(h.translation_);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = checked_mul_add(w[i], 1, g.translation_[i]);
  return AffineLatticeAutomorphism(g.linear_ * h.linear_, std::move(w));
}

std::string AffineLatticeAutomorphism::to_string() const {
  std::ostringstream out;
  out << "{matrix: [";
  auto rows = linear_.to_rows();
  for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? "," : "") << vector_string(rows[i]);
  out << "], translation: " << vector_string(translation_) << "}";
  return out.str();
}

std::size_t ElementKeyHash::operator()(const std::vector<std::int64_t>& v) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto x : v) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

namespace {

std::vector<std::int64_t> element_key(const AffineLatticeAutomorphism& g) {
  std::vector<std::int64_t> key = g.linear().data();
  key.insert(key.end(), g.translation().begin(), g.translation().end());
  return key;
}

constexpr std::size_t table_limit = 1500;

}  // namespace

std::optional<std::size_t> FiniteMatrixGroup::find(const Element& g) const {
  auto it = lookup_.find(element_key(g));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteMatrixGroup::index_of(const Element& g) const {
  auto i = find(g);
  if (!i) throw std::invalid_argument("element is not in the group: " + g.to_string());
  return *i;
}

std::size_t FiniteMatrixGroup::product_slow(std::size_t i, std::size_t j) const {
  return index_of(elements_[i] * elements_[j]);
}

std::size_t FiniteMatrixGroup::multiply(std::size_t i, std::size_t j) const {
  if (!table_.empty()) return table_[i * elements_.size() + j];
  return product_slow(i, j);
}

std::size_t FiniteMatrixGroup::power(std::size_t i, long k) const {
  long ord = static_cast<long>(element_order_[i]);
  long e = ((k % ord) + ord) % ord;
  std::size_t r = 0;
  for (long s = 0; s < e; ++s) r = multiply(r, i);
  return r;
}

std::size_t FiniteMatrixGroup::power_class(std::size_t c, long k) const {
  return class_of_[power(representative_index(c), k)];
}

GroupPtr generate_group(std::size_t rank, std::vector<AffineLatticeAutomorphism> generators, std::size_t cap) {
  auto group = std::shared_ptr<FiniteMatrixGroup>(new FiniteMatrixGroup());
  group->rank_ = rank;
  for (const auto& g : generators) {
    if (g.rank() != rank) throw DimensionMismatch("generator rank differs from lattice rank");
    BigInt det = g.linear().determinant();
    if (det != 1 && det != -1)
      throw NonInvertibleGenerator("generator is not invertible over the integers (det " + det.get_str() + ")");
  }
  group->generators_ = generators;
  auto& elems = group->elements_;
  elems.push_back(AffineLatticeAutomorphism::identity(rank));
  group->lookup_.emplace(element_key(elems[0]), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& gen : generators) {
      AffineLatticeAutomorphism p = elems[i] * gen;
      auto key = element_key(p);
      if (group->lookup_.count(key)) continue;
      if (elems.size() >= cap)
        throw ClosureExceeded("group closure exceeded the cap of " + std::to_string(cap) + " elements");
      group->lookup_.emplace(std::move(key), elems.size());
      elems.push_back(std::move(p));
    }
  }
  const std::size_t n = elems.size();
  if (n <= table_limit) {
    group->table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        group->table_[i * n + j] = static_cast<std::uint32_t>(group->product_slow(i, j));
  }
  group->element_order_.assign(n, 0);
  group->inverse_.assign(n, 0);
  unsigned long expo = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ord = 1;
    std::size_t prev = 0;
    std::size_t cur = i;
    while (cur != 0) {
      prev = cur;
      cur = group->multiply(cur, i);
      ++ord;
    }
    group->element_order_[i] = ord;
    group->inverse_[i] = (i == 0) ? 0 : prev;
    expo = std::lcm(expo, static_cast<unsigned long>(ord));
  }
  group->exponent_ = static_cast<unsigned>(expo);

  std::vector<std::size_t> gen_idx;
  for (const auto& g : generators) gen_idx.push_back(group->index_of(g));
  group->class_of_.assign(n, static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < n; ++x) {
    if (group->class_of_[x] != static_cast<std::size_t>(-1)) continue;
    const std::size_t c = group->classes_.size();
    std::vector<std::size_t> members{x};
    group->class_of_[x] = c;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (std::size_t g : gen_idx) {
        std::size_t y = group->multiply(group->multiply(g, members[k]), group->inverse_[g]);
        if (group->class_of_[y] == static_cast<std::size_t>(-1)) {
          group->class_of_[y] = c;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    group->classes_.push_back(std::move(members));
  }
  return group;
}

unsigned exponent(const FiniteMatrixGroup& g) { return g.exponent(); }

ClassFunction::ClassFunction(GroupPtr group, std::vector<CyclotomicValue> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_) throw std::invalid_argument("class function without a group");
  if (values_.size() != group_->class_count()) throw DimensionMismatch("class function length differs from class count");
}

ClassFunction ClassFunction::constant(GroupPtr group, const CyclotomicValue& v) {
  std::vector<CyclotomicValue> values(group->class_count(), v);
  return ClassFunction(std::move(group), std::move(values));
}

ClassFunction ClassFunction::from_integers(GroupPtr group, const std::vector<BigInt>& values) {
  std::vector<CyclotomicValue> v;
  v.reserve(values.size());
  for (const auto& x : values) v.emplace_back(BigRational(x));
  return ClassFunction(std::move(group), std::move(v));
}

bool ClassFunction::all_integers() const {
  return std::all_of(values_.begin(), values_.end(), [](const CyclotomicValue& v) { return v.is_integer(); });
}

void ClassFunction::require_same_group(const ClassFunction& o) const {
  if (group_ != o.group_) throw std::invalid_argument("class functions on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  require_same_group(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  require_same_group(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& o) {
  require_same_group(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const CyclotomicValue& s) {
  for (auto& v : values_) v *= s;
  return *this;
}

ClassFunction ClassFunction::conj() const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v = v.conj();
  return r;
}

std::string ClassFunction::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) out += (i ? ", " : "") + values_[i].to_string();
  return out + ")";
}

CyclotomicValue inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.group() != b.group()) throw std::invalid_argument("inner product of class functions on different groups");
  const auto& g = *a.group();
  CyclotomicValue sum;
  for (std::size_t c = 0; c < g.class_count(); ++c)
    sum += a[c] * b[c].conj() * CyclotomicValue(static_cast<long>(g.class_size(c)));
  return sum / BigRational(static_cast<long>(g.order()));
}

ClassFunction det_character(const GroupPtr& group) {
  std::vector<BigInt> v;
  for (std::size_t c = 0; c < group->class_count(); ++c) v.push_back(group->representative(c).linear().determinant());
  return ClassFunction::from_integers(group, v);
}

ClassFunction standard_character(const GroupPtr& group) {
  std::vector<BigInt> v;
  for (std::size_t c = 0; c < group->class_count(); ++c) {
    const auto& a = group->representative(c).linear();
    std::int64_t tr = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) tr += a.at(i, i);
    v.emplace_back(static_cast<long>(tr));
  }
  return ClassFunction::from_integers(group, v);
}

ClassFunction permutation_character(const GroupPtr& group, std::size_t npoints,
                                    const std::function<std::size_t(const AffineLatticeAutomorphism&, std::size_t)>& act) {
  std::vector<BigInt> v;
  for (std::size_t c = 0; c < group->class_count(); ++c) {
    long fixed = 0;
    for (std::size_t p = 0; p < npoints; ++p)
      if (act(group->representative(c), p) == p) ++fixed;
    v.emplace_back(fixed);
  }
  return ClassFunction::from_integers(group, v);
}

ClassFunction permutation_character_on_points(const GroupPtr& group, const std::vector<IntVector>& points,
                                              std::int64_t height) {
  std::vector<BigInt> v;
  for (std::size_t c = 0; c < group->class_count(); ++c) {
    long fixed = 0;
    const auto& g = group->representative(c);
    for (const auto& x : points)
      if (g.apply(x, height) == x) ++fixed;
    v.emplace_back(fixed);
  }
  return ClassFunction::from_integers(group, v);
}

std::size_t count_orbits(const GroupPtr& group, const std::vector<IntVector>& points, std::int64_t height) {
  std::unordered_map<std::vector<std::int64_t>, std::size_t, ElementKeyHash> index;
  for (std::size_t i = 0; i < points.size(); ++i) index.emplace(points[i], i);
  std::vector<bool> seen(points.size(), false);
  std::size_t orbits = 0;
  for (std::size_t s = 0; s < points.size(); ++s) {
    if (seen[s]) continue;
    ++orbits;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      std::size_t p = queue.front();
      queue.pop_front();
      for (const auto& g : group->generators()) {
        auto it = index.find(g.apply(points[p], height));
        if (it == index.end()) throw NotInvariant("point set is not invariant under the group");
        if (!seen[it->second]) {
          seen[it->second] = true;
          queue.push_back(it->second);
        }
      }
    }
  }
  return orbits;
}

}  // namespace eqehr
