#include <doctest.h>

#include "eqehr/criteria.hpp"
#include "eqehr/gallery.hpp"

using namespace eqehr;

namespace {

EquivariantPolytope build(const GalleryInstance& g) { return EquivariantPolytope(g.polytope, g.group, g.table); }

EquivariantPolytope trivial(const RationalPolytope& p) {
  return EquivariantPolytope(p, generate_group(p.ambient_dim(), {}));
}

RationalPolytope triangle(long height) { return RationalPolytope::hull_of_lattice_points(2, {{0, 0}, {1, 0}, {0, height}}); }

}  // namespace

TEST_CASE("hexagon criteria") {
  const auto ep = build(hexagon_Z6());
  const auto all = criterion_all_fixed_lattice(ep);
  CHECK(all.applies);
  CHECK(all.holds);
  CHECK(all.non_lattice_classes.empty());
  CHECK_FALSE(criterion_bad_element(ep).witnessed);
  const auto face = criterion_face_fixed_points(ep);
  CHECK(face.guaranteed);
  CHECK_FALSE(face.failing_face);
  CHECK(criteria_consistency(ep, equivariant_hstar(ep)).consistent);
}

TEST_CASE("fixed-point-free reflection") {
  const auto inst = bad_square_Z2();
  const auto ep = build(inst);
  const std::size_t tau = inst.group->class_of(1);
  const auto all = criterion_all_fixed_lattice(ep);
  CHECK_FALSE(all.applies);
  CHECK(all.non_lattice_classes == std::vector<std::size_t>{tau});
  const auto bad = criterion_bad_element(ep);
  CHECK(bad.witnessed);
  CHECK(bad.witness_class == tau);
  const auto face = criterion_face_fixed_points(ep);
  CHECK_FALSE(face.guaranteed);
  REQUIRE(face.failing_face);
  CHECK(face.failing_face->size() == 4);
  CHECK(criteria_consistency(ep, equivariant_hstar(ep)).consistent);

  // at height 2 the fixed segment has lattice endpoints
  CHECK(criterion_all_fixed_lattice(ep, 2).applies);
  CHECK(criterion_face_fixed_points(ep, 2).guaranteed);
  CHECK_FALSE(criterion_bad_element(ep, 2).witnessed);
}

TEST_CASE("reflexive threefold reflection") {
  // P_tau contains the origin, so its index is 1 and no witness exists,
  // although phi is not a polynomial.
  const auto inst = bad_reflexive_Z2();
  const auto ep = build(inst);
  const std::size_t tau = inst.group->class_of(1);
  const auto& fixed = ep.class_data(tau).fixed;
  CHECK(fixed.polytope.dim() == 2);
  CHECK(fixed.index == 1);
  CHECK(fixed.denominator == 2);
  CHECK_FALSE(criterion_all_fixed_lattice(ep).applies);
  CHECK_FALSE(criterion_bad_element(ep).witnessed);
  CHECK_FALSE(criterion_face_fixed_points(ep).guaranteed);
  const auto hs = equivariant_hstar(ep);
  CHECK_FALSE(hs.polynomial);
  CHECK(criteria_consistency(ep, hs).consistent);
}

TEST_CASE("trivial group always applies") {
  for (const auto& p : {triangle(1), triangle(3), square_B2().polytope}) {
    const auto ep = trivial(p);
    CHECK(criterion_all_fixed_lattice(ep).applies);
    CHECK(criterion_all_fixed_lattice(ep).holds);
    CHECK_FALSE(criterion_bad_element(ep).witnessed);
  }
}

TEST_CASE("centrally symmetric faces") {
  const auto ep = build(cross_family(0, 3));
  const auto face = criterion_face_fixed_points(ep);
  CHECK(face.guaranteed);
  CHECK(face.faces_checked > 0);
  CHECK(equivariant_hstar(ep).effective);
}

TEST_CASE("criteria consistent over the gallery") {
  for (const auto& name : gallery_names()) {
    const auto inst = gallery_instance(name, {});
    const auto ep = build(inst);
    const auto report = criteria_consistency(ep, equivariant_hstar(ep));
    INFO(name);
    CHECK(report.consistent);
  }
}

TEST_CASE("palindromes") {
  const auto hex = palindrome_reflexive_check(build(hexagon_Z6()));
  CHECK(hex.agree());
  CHECK(hex.phi_palindromic);
  CHECK(hex.codegree == 1);
  const auto sq = palindrome_reflexive_check(build(hypercube_instance(2, CubeGroup::Symmetric)));
  CHECK(sq.agree());
  CHECK(sq.hstar_palindromic);
  CHECK(sq.codegree == 2);
  // h* = 1 + t and 2P - (1, 1) is reflexive
  const auto tall = palindrome_reflexive_check(trivial(triangle(2)));
  CHECK(tall.agree());
  CHECK(tall.reflexive_translate);
  const auto taller = palindrome_reflexive_check(trivial(triangle(3)));
  CHECK(taller.agree());
  CHECK_FALSE(taller.hstar_palindromic);
  CHECK_FALSE(taller.phi_palindromic);
  CHECK_FALSE(taller.counts_shift);
}

TEST_CASE("free sums") {
  const auto segment = trivial(RationalPolytope::hull_of_lattice_points(1, {{-1}, {1}}));
  for (unsigned k : {1u}) {
    const auto base = build(cross_family(k, 2 * k));
    const auto check = free_sum_identity_check(base, segment);
    CHECK(check.free_sum_identity);
    CHECK(check.product_identity);
  }
  const auto hex = trivial(hexagon_Z6().polytope);
  const auto scalar = free_sum_identity_check(hex, segment);
  CHECK(scalar.free_sum_identity);
  CHECK(scalar.product_identity);
  const auto g = build(hexagon_Z6());
  CHECK(free_sum_identity_check(g, segment).free_sum_identity);
}

TEST_CASE("product group") {
  const auto g = hexagon_Z6().group;
  const auto h = cross_family(0, 1).group;
  const auto gh = product_group(g, h);
  CHECK(gh->order() == 12);
  CHECK(gh->rank() == 3);
  CHECK(gh->class_count() == 12);
}
