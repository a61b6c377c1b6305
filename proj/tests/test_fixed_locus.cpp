#include <doctest.h>

#include "eqehr/errors.hpp"
#include "eqehr/fixed_locus.hpp"
#include "eqehr/gallery.hpp"

using namespace eqehr;

namespace {

std::vector<GalleryInstance> small_gallery() {
  return {hexagon_Z6(),
          square_B2(),
          bad_square_Z2(),
          bad_reflexive_Z2(),
          hypercube_instance(3, CubeGroup::Symmetric),
          hypercube_instance(3, CubeGroup::Hyperoctahedral),
          standard_simplex_sym(4),
          standard_reflexive_simplex(2),
          cross_family(1, 3)};
}

}  // namespace

TEST_CASE("identity fixes everything") {
  const auto hex = hexagon_Z6();
  const auto rec = fixed_polytope(hex.polytope, AffineLatticeAutomorphism::identity(2));
  CHECK(rec.polytope == hex.polytope);
  CHECK(rec.fixed_dim == 2);
  CHECK(fixed_subspace_dimension(AffineLatticeAutomorphism::identity(4)) == 4);
}

TEST_CASE("fixed subspace dimensions") {
  CHECK(fixed_subspace_dimension(AffineLatticeAutomorphism(IntMatrix({{-1, 0}, {0, 1}}), {-1, 0})) == 1);
  CHECK(fixed_subspace_dimension(AffineLatticeAutomorphism(IntMatrix({{0, 1}, {-1, 1}}), {0, 0})) == 0);
}

TEST_CASE("hypercube fixed polytopes are cubes of dimension the number of cycles") {
  const auto cube = hypercube_instance(4, CubeGroup::Symmetric);
  for (const auto& g : cube.group->elements()) {
    const auto rec = fixed_polytope(cube.polytope, g);
    const auto cycles = cycle_type_of(g.linear(), false).size();
    CHECK(rec.polytope.dim() == static_cast<int>(cycles));
    CHECK(rec.polytope.vertices().size() == (std::size_t{1} << cycles));
    CHECK(rec.polytope.is_lattice());
  }
}

TEST_CASE("long cycle on the reflexive simplex") {
  for (unsigned n : {2u, 3u}) {
    const auto s = standard_reflexive_simplex(n);
    const std::size_t dim = 2 * n - 1;
    std::vector<RatVector> expected;
    RatVector bary(dim, BigRational(0));
    for (unsigned i = 0; i < n; ++i) bary[i] = BigRational(1, n);
    expected.push_back(bary);
    for (std::size_t i = n; i < dim; ++i) {
      RatVector e(dim, BigRational(0));
      e[i] = 1;
      expected.push_back(e);
    }
    expected.push_back(RatVector(dim, BigRational(-1)));
    const auto p = pip_family(n);
    CHECK(p == RationalPolytope::hull(dim, expected));
    CHECK(p.dim() == static_cast<int>(n));
    CHECK(p.denominator() == n);
  }
}

TEST_CASE("fixed polytope invariants on the gallery") {
  for (const auto& inst : small_gallery()) {
    const auto& g = *inst.group;
    for (std::size_t i = 0; i < g.order(); ++i) {
      const auto rec = fixed_polytope(inst.polytope, g.element(i));
      CAPTURE(inst.name);
      CHECK(rec.polytope.dim() == static_cast<int>(rec.fixed_dim));
      CHECK(BigInt(static_cast<unsigned long>(g.element_order(i))) % rec.denominator == 0);
      CHECK(BigInt(static_cast<unsigned long>(g.element_order(i))) % rec.index == 0);
      for (const auto& v : rec.polytope.vertices()) {
        CHECK(inst.polytope.contains(v));
        CHECK(g.element(i).apply(v) == v);
      }
      if (static_cast<int>(rec.fixed_dim) == inst.polytope.dim() - 1) {
        CHECK(g.element_order(i) == 2);
        CHECK((rec.index == 1 || rec.index == 2));
      }
    }
  }
}

TEST_CASE("fixed polytope of the fixed-point-free reflection") {
  const auto bad = bad_square_Z2();
  const auto rec = fixed_polytope(bad.polytope, bad.group->element(1));
  CHECK(rec.polytope.dim() == 1);
  CHECK(rec.index == 2);
  CHECK(rec.denominator == 2);
  const auto bad2 = bad_reflexive_Z2();
  const auto rec2 = fixed_polytope(bad2.polytope, bad2.group->element(1));
  CHECK(rec2.polytope.dim() == 2);
  CHECK(rec2.denominator == 2);
  CHECK(rec2.index == 1);  // the origin lies in P_tau
}

TEST_CASE("invariance is checked on the lifted action") {
  const auto sq = bad_square_Z2();
  CHECK(is_invariant(sq.polytope, sq.group->element(1)));
  const AffineLatticeAutomorphism wrong(IntMatrix({{-1, 0}, {0, 1}}), {0, 0});
  CHECK_FALSE(is_invariant(sq.polytope, wrong));
  CHECK_THROWS_AS(vertex_permutation(sq.polytope, wrong), NotInvariant);
  CHECK_THROWS_AS(fixed_polytope(sq.polytope, wrong), NotInvariant);
}

TEST_CASE("common fixed polytope of several elements") {
  const auto cube = hypercube_instance(3, CubeGroup::Symmetric);
  const auto diag = common_fixed_polytope(cube.polytope, cube.group->elements());
  CHECK(diag.dim() == 1);
  CHECK(diag.vertices().size() == 2);
}
