#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "eqehr/ehrhart.hpp"
#include "eqehr/fixed_locus.hpp"
#include "eqehr/lattice_group.hpp"
#include "eqehr/polytope.hpp"
#include "eqehr/rational_function.hpp"

namespace eqehr {

// Everything computed for one conjugacy class representative g.
struct ClassData {
  std::size_t class_index = 0;
  AffineLatticeAutomorphism rep;
  FixedPolytopeRecord fixed;
  IntPolynomial det_one_minus;  // det(I - A t)
  IntPolynomial det_perp;       // det(I - A t) / (1 - t)^(dim M^g)
  int det_sign = 1;             // det A
  EhrhartSeries series;         // of P_g
  QuasiPolynomial counting;     // f_{P_g}
  QuasiPolynomial interior;     // relative interior counts of m P_g, fitted independently
  RationalFunction phi;         // phi[t](g)
};

// A full-dimensional lattice polytope with a finite group acting on it up to
// translation.  Per-class data is computed eagerly (EQEHR_THREADS workers).
class EquivariantPolytope {
 public:
  EquivariantPolytope(RationalPolytope polytope, GroupPtr group, std::optional<CharacterTable> table = std::nullopt);

  const RationalPolytope& polytope() const;
  const GroupPtr& group() const;
  int dim() const;
  const std::vector<ClassData>& classes() const;
  const ClassData& class_data(std::size_t c) const;
  // Computed on first use unless supplied.
  const CharacterTable& table() const;

  // Values of the fitted per-class quasi-polynomials.
  ClassFunction chi(std::int64_t m) const;
  ClassFunction chi_star(std::int64_t m) const;
  // (d + 1) * exponent + 2
  std::int64_t horizon() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

enum class ChiRoute { FixedPointsOfDilate, FixedPolytope };

// Direct enumeration; both routes are computed and compared unless one is requested.
// Throws InternalMismatch when the routes disagree.
ClassFunction chi_mP(const EquivariantPolytope& ep, std::int64_t m);
ClassFunction chi_star_mP(const EquivariantPolytope& ep, std::int64_t m);
ClassFunction chi_mP_route(const EquivariantPolytope& ep, std::int64_t m, ChiRoute route, bool interior = false);

struct EquivariantHStar {
  GroupPtr group;
  std::vector<RationalFunction> per_class;
  bool polynomial = false;
  // Polynomial case: coefficients phi_i.  Otherwise the numerator coefficients
  // over common_denominator, shared by all classes.
  IntPolynomial common_denominator = IntPolynomial::one();
  std::vector<ClassFunction> coefficients;
  std::vector<std::vector<CyclotomicValue>> multiplicities;
  bool effective = false;
};

EquivariantHStar equivariant_hstar(const EquivariantPolytope& ep);

struct PhiAtOne {
  ClassFunction closed_form;  // D! vol(P_g) det_perp(1) / ind(P_g)
  ClassFunction limit;        // phi[t](g) at t = 1
  bool nonnegative = false;
  bool integral = false;
};
// Throws InternalMismatch when the two routes disagree.
PhiAtOne phi_at_one(const EquivariantPolytope& ep);

struct ReciprocityWitness {
  std::int64_t m = 0;
  std::size_t class_index = 0;
};
struct EquivariantReciprocity {
  bool pointwise = true;
  bool series = true;
  std::optional<ReciprocityWitness> witness;
  bool holds() const { return pointwise && series; }
};
EquivariantReciprocity equivariant_reciprocity_check(const EquivariantPolytope& ep);

struct LeadingCoefficients {
  ClassFunction top;                        // extracted L_d
  ClassFunction top_expected;               // vol(P) / |G| chi_st
  std::vector<ClassFunction> second;        // extracted L_{d-1}(m), m = 0 .. period - 1
  std::vector<ClassFunction> second_expected;
  BigRational surface_area;                 // boundary volume
  BigRational surface_area_from_series;     // twice the second Ehrhart coefficient
  bool top_ok = false;
  bool second_ok = false;
  bool period_divides_two = false;
};
LeadingCoefficients leading_coefficients(const EquivariantPolytope& ep);

struct OrbitQuasiPolynomials {
  QuasiPolynomial orbits;           // <chi_mP, 1>
  QuasiPolynomial det_orbits;       // <chi_mP, det>
  QuasiPolynomial interior_orbits;  // <chi*_mP, 1>
  QuasiPolynomial interior_det_orbits;
  bool reciprocity = false;         // (-1)^d orbits(-m) = interior_det_orbits(m) on the horizon
  bool starts_at_one = false;       // orbits(0) = 1
};
OrbitQuasiPolynomials orbit_quasipolynomials(const EquivariantPolytope& ep);

// Lattice points of the half-open parallelepiped over the lifted vertices, as
// (point, height) pairs.
std::vector<std::pair<IntVector, std::int64_t>> box_points(const RationalPolytope& simplex);
// phi_i as permutation characters of the box points of height i.  Throws NotASimplex.
std::vector<ClassFunction> box_points_hstar(const EquivariantPolytope& ep);

}  // namespace eqehr
