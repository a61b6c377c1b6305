#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "eqehr/bigint.hpp"
#include "eqehr/linalg.hpp"

namespace eqehr {

// normal . x <= rhs (inequality) or normal . x = rhs (equation); the normal is
// a primitive integer vector.
struct LinearConstraint {
  BigIntVector normal;
  BigRational rhs;
  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

struct HDescription {
  std::vector<LinearConstraint> equations;   // affine span
  std::vector<LinearConstraint> facets;      // relative to the affine span
  std::vector<std::vector<std::size_t>> facet_vertices;  // vertex indices tight on each facet
};

struct Face {
  std::vector<std::size_t> vertices;  // sorted vertex indices
  int dim = 0;
};

// Convex hull of finitely many rational points.  Immutable; derived data is
// computed once and shared between copies.
class RationalPolytope {
 public:
  RationalPolytope() = default;
  // Drops repeated and non-extreme points; vertices are sorted lexicographically.
  static RationalPolytope hull(std::size_t ambient_dim, std::vector<RatVector> points);
  static RationalPolytope hull_of_lattice_points(std::size_t ambient_dim, const std::vector<IntVector>& points);

  std::size_t ambient_dim() const;
  int dim() const;
  const std::vector<RatVector>& vertices() const;
  const HDescription& h_description() const;
  const std::vector<Face>& faces() const;

  bool contains(const RatVector& x) const;
  bool contains_in_relative_interior(const RatVector& x) const;
  bool is_lattice() const;
  bool is_full_dimensional() const { return dim() == static_cast<int>(ambient_dim()); }
  bool is_simplex() const { return vertices().size() == static_cast<std::size_t>(dim()) + 1; }
  // Throws NotLattice if some vertex is not integral.
  std::vector<IntVector> lattice_vertices() const;
  BigInt denominator() const;
  BigInt index() const;
  // Rows form a basis of (linear span of P - P) intersected with Z^n.
  const BigIntMatrix& direction_lattice() const;

  friend bool operator==(const RationalPolytope& a, const RationalPolytope& b);

  struct Data;  // opaque

 private:
  friend struct LatticePointAccess;
  std::shared_ptr<const Data> data_;
};

HDescription facet_description(const RationalPolytope& p);
const std::vector<Face>& face_poset(const RationalPolytope& p);

// Lattice points of m P.  m = 0 gives the origin; m < 0 is rejected.
std::vector<IntVector> lattice_points(const RationalPolytope& p, std::int64_t m);
BigInt count_lattice_points(const RationalPolytope& p, std::int64_t m);
std::vector<IntVector> interior_lattice_points(const RationalPolytope& p, std::int64_t m);
BigInt count_interior_lattice_points(const RationalPolytope& p, std::int64_t m);
// Visits lattice points of m P (relative interior only if requested); the
// visitor returns false to stop early.
void for_each_lattice_point(const RationalPolytope& p, std::int64_t m, bool interior,
                            const std::function<bool(const IntVector&)>& visit);
bool has_lattice_point(const RationalPolytope& p, std::int64_t m = 1);

// Euclidean volume inside the affine span, normalized so that a fundamental
// cell of the direction lattice has volume 1.  A point has volume 1.
BigRational normalized_volume(const RationalPolytope& p);
// Sum of the normalized volumes of the facets.
BigRational boundary_volume(const RationalPolytope& p);
// Pulling triangulation; simplices as vertex index lists.
std::vector<std::vector<std::size_t>> triangulation(const RationalPolytope& p);

BigInt denominator(const RationalPolytope& p);
BigInt polytope_index(const RationalPolytope& p);

bool is_reflexive(const RationalPolytope& p);
// Some lattice translate is reflexive (P has one interior lattice point v and P - v is reflexive).
bool is_reflexive_translate(const RationalPolytope& p);

RationalPolytope dilate(const RationalPolytope& p, const BigRational& factor);
RationalPolytope translate(const RationalPolytope& p, const RatVector& shift);
RationalPolytope product(const RationalPolytope& p, const RationalPolytope& q);
// Both polytopes must contain the origin.
RationalPolytope free_sum(const RationalPolytope& p, const RationalPolytope& q);
// conv(P x {1}, origin)
RationalPolytope pyramid(const RationalPolytope& p);
// Projection to the first k coordinates.
RationalPolytope project_prefix(const RationalPolytope& p, std::size_t k);

}  // namespace eqehr
