#include <limits>
#include <stdexcept>

#include "eqehr/polytope.hpp"
#include "polytope_data.hpp"

namespace eqehr {

namespace {

using i128 = __int128;

// coeffs . x (<= | =) scale * m, with integer data.
struct IntConstraint {
  std::vector<std::int64_t> coeffs;
  std::int64_t scale = 0;
};

IntConstraint integer_constraint(const LinearConstraint& c) {
  IntConstraint out;
  const BigInt den = c.rhs.get_den();
  for (const auto& a : c.normal) out.coeffs.push_back(to_int64(BigInt(a * den)));
  out.scale = to_int64(BigInt(c.rhs.get_num()));
  return out;
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

}  // namespace

// Level k bounds coordinate k using the projection onto coordinates 0..k.
struct ProjectionChain {
  struct Level {
    std::vector<IntConstraint> equations;
    std::vector<IntConstraint> inequalities;
  };
  std::vector<Level> levels;
  std::vector<IntConstraint> facets;  // of the polytope itself, for interior tests
};

namespace {

std::shared_ptr<const ProjectionChain> build_chain(const RationalPolytope& p) {
  auto chain = std::make_shared<ProjectionChain>();
  const std::size_t n = p.ambient_dim();
  for (std::size_t k = 1; k <= n; ++k) {
    RationalPolytope proj = (k == n) ? p : project_prefix(p, k);
    ProjectionChain::Level level;
    const auto& h = proj.h_description();
    for (const auto& e : h.equations)
      if (e.normal[k - 1] != 0) level.equations.push_back(integer_constraint(e));
    for (const auto& f : h.facets)
      if (f.normal[k - 1] != 0) level.inequalities.push_back(integer_constraint(f));
    chain->levels.push_back(std::move(level));
  }
  for (const auto& f : p.h_description().facets) chain->facets.push_back(integer_constraint(f));
  return chain;
}

const ProjectionChain& chain_of(const RationalPolytope& p) {
  const auto& d = LatticePointAccess::data(p);
  std::call_once(d.chain_once, [&] { d.chain = build_chain(p); });
  return *d.chain;
}

i128 residual(const IntConstraint& c, const IntVector& x, std::size_t k, std::int64_t m) {
  i128 r = static_cast<i128>(c.scale) * m;
  for (std::size_t i = 0; i < k; ++i) r -= static_cast<i128>(c.coeffs[i]) * x[i];
  return r;
}

bool strictly_inside(const ProjectionChain& chain, const IntVector& x, std::int64_t m) {
  for (const auto& f : chain.facets)
    if (residual(f, x, x.size(), m) <= 0) return false;
  return true;
}

}  // namespace

void for_each_lattice_point(const RationalPolytope& p, std::int64_t m, bool interior,
                            const std::function<bool(const IntVector&)>& visit) {
  if (m < 0) throw std::invalid_argument("negative dilation");
  const std::size_t n = p.ambient_dim();
  if (m == 0) {
    if (interior && p.dim() > 0) return;
    visit(IntVector(n, 0));
    return;
  }
  const ProjectionChain& chain = chain_of(p);
  IntVector x(n, 0);
  bool stop = false;
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (stop) return;
    if (k == n) {
      if (interior && !strictly_inside(chain, x, m)) return;
      if (!visit(x)) stop = true;
      return;
    }
    const auto& level = chain.levels[k];
    i128 lo = std::numeric_limits<std::int64_t>::min();
    i128 hi = std::numeric_limits<std::int64_t>::max();
    for (const auto& e : level.equations) {
      i128 r = residual(e, x, k, m);
      i128 a = e.coeffs[k];
      if (r % a != 0) return;
      i128 v = r / a;
      if (v > lo) lo = v;
      if (v < hi) hi = v;
    }
    for (const auto& f : level.inequalities) {
      i128 r = residual(f, x, k, m);
      i128 a = f.coeffs[k];
      if (a > 0) {
        i128 b = floor_div(r, a);
        if (b < hi) hi = b;
      } else {
        i128 b = ceil_div(r, a);
        if (b > lo) lo = b;
      }
    }
    for (i128 v = lo; v <= hi && !stop; ++v) {
      x[k] = static_cast<std::int64_t>(v);
      self(self, k + 1);
    }
  };
  recurse(recurse, 0);
}

std::vector<IntVector> lattice_points(const RationalPolytope& p, std::int64_t m) {
  std::vector<IntVector> out;
  for_each_lattice_point(p, m, false, [&](const IntVector& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

BigInt count_lattice_points(const RationalPolytope& p, std::int64_t m) {
  unsigned long count = 0;
  for_each_lattice_point(p, m, false, [&](const IntVector&) {
    ++count;
    return true;
  });
  return BigInt(count);
}

std::vector<IntVector> interior_lattice_points(const RationalPolytope& p, std::int64_t m) {
  std::vector<IntVector> out;
  for_each_lattice_point(p, m, true, [&](const IntVector& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

BigInt count_interior_lattice_points(const RationalPolytope& p, std::int64_t m) {
  unsigned long count = 0;
  for_each_lattice_point(p, m, true, [&](const IntVector&) {
    ++count;
    return true;
  });
  return BigInt(count);
}

bool has_lattice_point(const RationalPolytope& p, std::int64_t m) {
  bool found = false;
  for_each_lattice_point(p, m, false, [&](const IntVector&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace eqehr
