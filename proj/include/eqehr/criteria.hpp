#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqehr/equivariant.hpp"

namespace eqehr {

// Every P_g is a lattice polytope.  When it applies, phi must be a polynomial
// with phi(g) = h*_{P_g}(t) det(I - A t) restricted to the complement of M^g.
struct AllFixedLatticeVerdict {
  bool applies = false;
  bool holds = true;  // the consequence, checked when the criterion applies
  std::vector<std::size_t> non_lattice_classes;
};

// Some g with r = ind(P_g), r P_g lattice and r dim P_g > d - r + 1, or a
// reflection with no fixed point in M x 1.
struct BadElementVerdict {
  bool witnessed = false;
  std::optional<std::size_t> witness_class;
  std::string reason;
};

// Every face Q with dim Q > 1 has a lattice point fixed by its stabilizer.
struct FaceFixedVerdict {
  bool guaranteed = false;
  std::size_t faces_checked = 0;
  std::optional<std::vector<std::size_t>> failing_face;  // vertex indices
};

// The verdicts refer to m P with the action at height m.
AllFixedLatticeVerdict criterion_all_fixed_lattice(const EquivariantPolytope& ep, std::int64_t dilation = 1);
BadElementVerdict criterion_bad_element(const EquivariantPolytope& ep, std::int64_t dilation = 1);
FaceFixedVerdict criterion_face_fixed_points(const EquivariantPolytope& ep, std::int64_t dilation = 1);

struct CriteriaConsistency {
  bool consistent = true;
  std::vector<std::string> problems;
};
// No instance may be both guaranteed and witnessed; each verdict must agree
// with the computed phi.
CriteriaConsistency criteria_consistency(const EquivariantPolytope& ep, const EquivariantHStar& hstar);

struct PalindromeVerdict {
  int degree = 0;
  int codegree = 0;
  bool phi_palindromic = false;
  bool characters_shift = false;
  bool counts_shift = false;
  bool hstar_palindromic = false;
  bool reflexive_translate = false;
  bool agree() const {
    return phi_palindromic == characters_shift && characters_shift == counts_shift &&
           counts_shift == hstar_palindromic && hstar_palindromic == reflexive_translate;
  }
};
PalindromeVerdict palindrome_reflexive_check(const EquivariantPolytope& ep);

// G x H acting block-diagonally on a space of dimension d_P + d_Q.
GroupPtr product_group(const GroupPtr& g, const GroupPtr& h);

struct FreeSumCheck {
  bool free_sum_identity = false;  // phi_{P+Q}(g,h) = phi_P(g) phi_Q(h)
  bool product_identity = false;   // chi_{m(PxQ)} = chi_{mP} chi_{mQ}
  std::optional<std::size_t> failing_class;
};
// P must contain the origin in its interior and Q must contain the origin; both actions linear.
FreeSumCheck free_sum_identity_check(const EquivariantPolytope& p, const EquivariantPolytope& q,
                                     std::int64_t product_terms = 3);

}  // namespace eqehr
