#include <doctest.h>

#include <algorithm>
#include <random>

#include "eqehr/property_suite.hpp"

using namespace eqehr;

namespace {

void require_all(const GalleryInstance& inst, const SuiteOptions& options = {}) {
  const auto report = run_property_suite(inst, options);
  INFO(inst.name);
  for (const auto& r : report.results) {
    INFO(r.name << ": " << r.detail);
    CHECK((r.passed || r.reported_only));
  }
  CHECK(report.all_passed());
  CHECK(report.results.size() > 20);
}

}  // namespace

TEST_CASE("property suite over the gallery") {
  for (const auto& name : gallery_names()) require_all(gallery_instance(name, {}));
}

TEST_CASE("property suite on larger instances") {
  require_all(hypercube_instance(4, CubeGroup::Symmetric));
  require_all(hypercube_instance(3, CubeGroup::Hyperoctahedral));
  require_all(standard_reflexive_simplex(3));
  require_all(standard_simplex_sym(4));
  require_all(cross_family(2, 4));
  require_all(cross_family(0, 3));
}

TEST_CASE("property suite with a small enumeration budget") {
  SuiteOptions options;
  options.enumeration_budget = 10;
  require_all(hexagon_Z6(), options);
  require_all(bad_reflexive_Z2(), options);
}

TEST_CASE("random lattice polytopes with the trivial group") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coord(-2, 2);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t dim = 2 + trial % 2;
    std::vector<IntVector> pts;
    RationalPolytope p;
    do {
      pts.clear();
      for (int i = 0; i < 6; ++i) {
        IntVector v(dim);
        for (auto& x : v) x = coord(rng);
        pts.push_back(v);
      }
      p = RationalPolytope::hull_of_lattice_points(dim, pts);
    } while (!p.is_full_dimensional());
    GalleryInstance inst{"random" + std::to_string(trial), p, generate_group(dim, {}), std::nullopt, std::nullopt};
    require_all(inst);
  }
}

TEST_CASE("a wrong expectation is caught") {
  auto inst = hexagon_Z6();
  inst.expected_hstar = IntPolynomial{1, 5, 1};
  const auto report = run_property_suite(inst);
  CHECK_FALSE(report.all_passed());
  CHECK(report.failures() == 1);
}
