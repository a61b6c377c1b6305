#include "eqehr/fixed_locus.hpp"

#include <algorithm>
#include <numeric>

#include "eqehr/errors.hpp"

namespace eqehr {

std::vector<std::size_t> vertex_permutation(const RationalPolytope& p, const AffineLatticeAutomorphism& g) {
  if (g.rank() != p.ambient_dim()) throw DimensionMismatch("element rank differs from the ambient dimension");
  const auto& verts = p.vertices();
  std::vector<std::size_t> perm(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    RatVector image = g.apply(verts[i], BigRational(1));
    auto it = std::lower_bound(verts.begin(), verts.end(), image);
    if (it == verts.end() || *it != image)
      throw NotInvariant("element " + g.to_string() + " does not permute the vertices (vertex " + std::to_string(i) + ")");
    perm[i] = static_cast<std::size_t>(it - verts.begin());
  }
  return perm;
}

bool is_invariant(const RationalPolytope& p, const AffineLatticeAutomorphism& g) {
  try {
    vertex_permutation(p, g);
    return true;
  } catch (const NotInvariant&) {
    return false;
  }
}

std::size_t fixed_subspace_dimension(const AffineLatticeAutomorphism& g) { return g.linear().fixed_space_dimension(); }

namespace {

// Union-find over vertex indices joined by each permutation.
std::vector<std::vector<std::size_t>> orbits(std::size_t n, const std::vector<std::vector<std::size_t>>& perms) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& perm : perms)
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t a = find(i), b = find(perm[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<std::size_t>> out;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[root])].push_back(i);
  }
  return out;
}

RationalPolytope barycenter_hull(const RationalPolytope& q, const std::vector<std::vector<std::size_t>>& perms) {
  const auto& verts = q.vertices();
  std::vector<RatVector> centers;
  for (const auto& orbit : orbits(verts.size(), perms)) {
    RatVector c(q.ambient_dim(), BigRational(0));
    for (std::size_t i : orbit)
      for (std::size_t k = 0; k < c.size(); ++k) c[k] += verts[i][k];
    for (auto& x : c) x /= BigRational(static_cast<long>(orbit.size()));
    centers.push_back(std::move(c));
  }
  return RationalPolytope::hull(q.ambient_dim(), std::move(centers));
}

}  // namespace

FixedPolytopeRecord fixed_polytope(const RationalPolytope& p, const AffineLatticeAutomorphism& g) {
  FixedPolytopeRecord rec;
  rec.element = g;
  rec.polytope = barycenter_hull(p, {vertex_permutation(p, g)});
  rec.fixed_dim = fixed_subspace_dimension(g);
  rec.index = rec.polytope.index();
  rec.denominator = rec.polytope.denominator();
  return rec;
}

RationalPolytope common_fixed_polytope(const RationalPolytope& q, const std::vector<AffineLatticeAutomorphism>& elements) {
  std::vector<std::vector<std::size_t>> perms;
  for (const auto& g : elements) perms.push_back(vertex_permutation(q, g));
  return barycenter_hull(q, perms);
}

}  // namespace eqehr
