#pragma once

// Brute-force reference computations that share no code with the library's
// geometry: membership by Caratheodory over vertex subsets, counts by box scan.

#include <cstdint>
#include <vector>

#include "eqehr/bigint.hpp"
#include "eqehr/polynomial.hpp"

namespace oracle {

using eqehr::BigInt;
using eqehr::BigRational;
using eqehr::IntVector;

// x in conv(points), the points spanning their ambient space.
bool in_hull(const std::vector<IntVector>& points, const std::vector<BigRational>& x);
// Supporting hyperplanes through every affinely independent n-subset of the
// points; normal . x <= rhs on the hull.  Points must span their space.
struct Halfspace {
  std::vector<BigRational> normal;
  BigRational rhs;
};
std::vector<Halfspace> brute_force_facets(const std::vector<IntVector>& points);
bool in_halfspaces(const std::vector<Halfspace>& facets, const std::vector<BigRational>& x);
// #(m conv(points) intersected with Z^n)
BigInt count(const std::vector<IntVector>& points, std::int64_t m);
// The lattice points themselves.
std::vector<IntVector> lattice_points(const std::vector<IntVector>& points, std::int64_t m);
// h*_i = sum_j (-1)^j C(d+1, j) f(i - j) from f(0..d).
eqehr::IntPolynomial hstar_from_counts(const std::vector<BigInt>& counts, int d);
// Affine dimension of the point set.
int affine_dimension(const std::vector<IntVector>& points);

// Eulerian polynomial by counting descents over all permutations.
eqehr::IntPolynomial eulerian_by_descents(unsigned d);
// Partitions of m into at most k parts.
BigInt partitions_at_most(long m, long k);
// Partitions of m into exactly k distinct parts.
BigInt partitions_distinct(long m, long k);

}  // namespace oracle
