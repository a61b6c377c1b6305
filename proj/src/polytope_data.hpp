#pragma once

#include <memory>
#include <mutex>

#include "eqehr/polytope.hpp"

namespace eqehr {

struct ProjectionChain;

struct RationalPolytope::Data {
  std::size_t ambient = 0;
  int dim = -1;
  std::vector<RatVector> vertices;
  HDescription h;
  RatVector origin;  // first vertex

  mutable std::once_flag faces_once;
  mutable std::vector<Face> faces;
  mutable std::once_flag lattice_once;
  mutable BigIntMatrix lattice;
  mutable std::once_flag chain_once;
  mutable std::shared_ptr<const ProjectionChain> chain;
};

struct LatticePointAccess {
  static const RationalPolytope::Data& data(const RationalPolytope& p);
};

}  // namespace eqehr
