#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eqehr/bigint.hpp"
#include "eqehr/cyclotomic.hpp"
#include "eqehr/linalg.hpp"
#include "eqehr/polynomial.hpp"

namespace eqehr {

// Small dense integer matrix.  Arithmetic throws std::overflow_error rather than wrapping.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  explicit IntMatrix(const std::vector<IntVector>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<std::int64_t>& data() const { return data_; }

  IntVector apply(const IntVector& x) const;
  RatVector apply(const RatVector& x) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  RatMatrix to_rational() const;
  std::vector<IntVector> to_rows() const;
  BigInt determinant() const;
  // det(I - t A)
  IntPolynomial det_one_minus_t() const;
  std::size_t fixed_space_dimension() const;  // nullity of A - I

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> data_;
};

// u -> A u - lambda * w on the height-lambda slice of M + Z; the lifted
// matrix is [[A, -w], [0, 1]].
class AffineLatticeAutomorphism {
 public:
  AffineLatticeAutomorphism() = default;
  AffineLatticeAutomorphism(IntMatrix linear, IntVector translation);
  static AffineLatticeAutomorphism identity(std::size_t rank);
  static AffineLatticeAutomorphism from_lifted(const IntMatrix& lifted);

  std::size_t rank() const { return linear_.rows(); }
  const IntMatrix& linear() const { return linear_; }
  const IntVector& translation() const { return translation_; }
  IntMatrix lifted() const;

  IntVector apply(const IntVector& x, std::int64_t height = 1) const;
  RatVector apply(const RatVector& x, const BigRational& height = 1) const;
  bool is_identity() const;
  bool is_linear() const;  // zero translation

  friend AffineLatticeAutomorphism operator*(const AffineLatticeAutomorphism& g, const AffineLatticeAutomorphism& h);
  friend bool operator==(const AffineLatticeAutomorphism& a, const AffineLatticeAutomorphism& b) = default;

  std::string to_string() const;

 private:
  IntMatrix linear_;
  IntVector translation_;
};

struct ElementKeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept;
};

class FiniteMatrixGroup {
 public:
  using Element = AffineLatticeAutomorphism;

  std::size_t rank() const { return rank_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Element>& elements() const { return elements_; }
  const Element& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Element>& generators() const { return generators_; }
  std::optional<std::size_t> find(const Element& g) const;
  std::size_t index_of(const Element& g) const;  // throws if absent

  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  std::size_t power(std::size_t i, long k) const;
  std::size_t element_order(std::size_t i) const { return element_order_[i]; }
  unsigned exponent() const { return exponent_; }

  std::size_t class_count() const { return classes_.size(); }
  const std::vector<std::size_t>& class_members(std::size_t c) const { return classes_[c]; }
  std::size_t class_size(std::size_t c) const { return classes_[c].size(); }
  std::size_t class_of(std::size_t i) const { return class_of_[i]; }
  std::size_t representative_index(std::size_t c) const { return classes_[c].front(); }
  const Element& representative(std::size_t c) const { return elements_[classes_[c].front()]; }
  // Class of g^k for the representative of class c.
  std::size_t power_class(std::size_t c, long k) const;

 private:
  friend std::shared_ptr<const FiniteMatrixGroup> generate_group(std::size_t rank, std::vector<AffineLatticeAutomorphism>,
                                                                std::size_t);
  FiniteMatrixGroup() = default;
  std::size_t product_slow(std::size_t i, std::size_t j) const;

  std::size_t rank_ = 0;
  std::vector<Element> generators_;
  std::vector<Element> elements_;
  std::unordered_map<std::vector<std::int64_t>, std::size_t, ElementKeyHash> lookup_;
  std::vector<std::uint32_t> table_;  // full multiplication table for small groups
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> element_order_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
  unsigned exponent_ = 1;
};

using GroupPtr = std::shared_ptr<const FiniteMatrixGroup>;

inline constexpr std::size_t default_group_cap = 10000;

// Closure of the generators; identity is element 0 and classes are ordered by
// their first member in breadth-first closure order.  Throws
// NonInvertibleGenerator or ClosureExceeded.
GroupPtr generate_group(std::size_t rank, std::vector<AffineLatticeAutomorphism> generators,
                        std::size_t cap = default_group_cap);

unsigned exponent(const FiniteMatrixGroup& g);

class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr group, std::vector<CyclotomicValue> values);
  static ClassFunction constant(GroupPtr group, const CyclotomicValue& v);
  static ClassFunction from_integers(GroupPtr group, const std::vector<BigInt>& values);

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return values_.size(); }
  const CyclotomicValue& operator[](std::size_t c) const { return values_[c]; }
  const std::vector<CyclotomicValue>& values() const { return values_; }
  bool all_integers() const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const ClassFunction& o);
  ClassFunction& operator*=(const CyclotomicValue& s);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
  friend ClassFunction operator*(ClassFunction a, const CyclotomicValue& s) { return a *= s; }
  ClassFunction conj() const;
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) { return a.values_ == b.values_; }
  friend bool operator!=(const ClassFunction& a, const ClassFunction& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void require_same_group(const ClassFunction& o) const;
  GroupPtr group_;
  std::vector<CyclotomicValue> values_;
};

// (1/|G|) sum_g a(g) conj(b(g))
CyclotomicValue inner_product(const ClassFunction& a, const ClassFunction& b);

ClassFunction det_character(const GroupPtr& group);
// Trace of the linear part (the character of M tensor C).
ClassFunction standard_character(const GroupPtr& group);

// Permutation character of an action on {0..npoints-1}; act(element, point) -> point.
ClassFunction permutation_character(const GroupPtr& group, std::size_t npoints,
                                    const std::function<std::size_t(const AffineLatticeAutomorphism&, std::size_t)>& act);
// Fixed points of the lifted action at the given height on an explicit point set.
ClassFunction permutation_character_on_points(const GroupPtr& group, const std::vector<IntVector>& points,
                                              std::int64_t height);
// Number of orbits of the lifted action on an invariant point set.
std::size_t count_orbits(const GroupPtr& group, const std::vector<IntVector>& points, std::int64_t height);

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> characters;
  std::vector<std::string> labels;

  std::size_t size() const { return characters.size(); }
  BigInt degree(std::size_t i) const;
  std::size_t trivial_index() const;
  std::optional<std::size_t> find_label(const std::string& label) const;
};

// Dixon-Schneider table over a prime p = 1 mod exponent, lifted to exact
// cyclotomic values.  Ordered by degree, then by eigenvalue exponents of
// successive classes; the trivial character comes first.
CharacterTable character_table(const GroupPtr& group);
// Validates orthonormality and completeness; throws std::invalid_argument.
CharacterTable character_table_from_values(const GroupPtr& group, std::vector<ClassFunction> characters,
                                           std::vector<std::string> labels);
// Multiplicities <f, chi_i> for each irreducible.
std::vector<CyclotomicValue> decompose(const ClassFunction& f, const CharacterTable& table);
bool is_effective(const std::vector<CyclotomicValue>& multiplicities);
std::string format_decomposition(const std::vector<CyclotomicValue>& multiplicities, const CharacterTable& table);

}  // namespace eqehr
