#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqehr/gallery.hpp"

namespace eqehr {

struct PropertyResult {
  std::string name;
  bool passed = true;
  bool reported_only = false;  // probes that never fail the suite
  std::string detail;          // witness on failure, value for probes
};

struct PropertyReport {
  std::string instance;
  std::vector<PropertyResult> results;
  bool all_passed() const;
  std::size_t failures() const;
};

struct SuiteOptions {
  // Lattice points of m P enumerated directly for the two-route cross-check;
  // beyond this the fitted quasi-polynomials (themselves verified on held-out
  // counts) carry the horizon checks.
  std::uint64_t enumeration_budget = 200000;
  bool pyramid = true;   // rebuild on the pyramid and compare phi (d <= 3)
  bool free_sum = true;  // free sum with [-1, 1] when P is reflexive with a linear action (d <= 3)
};

PropertyReport run_property_suite(const GalleryInstance& instance, const SuiteOptions& options = {});

}  // namespace eqehr
