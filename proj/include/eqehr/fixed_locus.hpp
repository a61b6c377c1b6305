#pragma once

#include <cstddef>
#include <vector>

#include "eqehr/lattice_group.hpp"
#include "eqehr/polytope.hpp"

namespace eqehr {

struct FixedPolytopeRecord {
  AffineLatticeAutomorphism element;
  RationalPolytope polytope;   // points of P fixed by the element
  std::size_t fixed_dim = 0;   // dim M^g
  BigInt index;
  BigInt denominator;
};

// Image index of each vertex of p under g at height 1.  Throws NotInvariant.
std::vector<std::size_t> vertex_permutation(const RationalPolytope& p, const AffineLatticeAutomorphism& g);
bool is_invariant(const RationalPolytope& p, const AffineLatticeAutomorphism& g);

std::size_t fixed_subspace_dimension(const AffineLatticeAutomorphism& g);

// Hull of the barycenters of the vertex orbits of g.
FixedPolytopeRecord fixed_polytope(const RationalPolytope& p, const AffineLatticeAutomorphism& g);

// Points of q fixed by every listed element; the elements must permute the
// vertices of q.
RationalPolytope common_fixed_polytope(const RationalPolytope& q, const std::vector<AffineLatticeAutomorphism>& elements);

}  // namespace eqehr
