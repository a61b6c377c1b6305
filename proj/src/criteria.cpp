#include "eqehr/criteria.hpp"

#include <algorithm>
#include <set>

#include "eqehr/errors.hpp"

namespace eqehr {

namespace {

BigIntMatrix fixed_equations(const AffineLatticeAutomorphism& g) {
  BigIntMatrix e(g.rank(), BigIntVector(g.rank()));
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = 0; j < g.rank(); ++j) e[i][j] = g.linear().at(i, j) - (i == j ? 1 : 0);
  return e;
}

bool fixes_point_at_height(const AffineLatticeAutomorphism& g, std::int64_t height) {
  RatVector target;
  for (auto w : g.translation()) target.emplace_back(BigInt(static_cast<long>(w)) * height);
  return solve_integer(fixed_equations(g), target, g.rank()).has_value();
}

RationalPolytope dilated(const RationalPolytope& p, std::int64_t m) {
  return m == 1 ? p : dilate(p, BigRational(static_cast<long>(m)));
}

}  // namespace

AllFixedLatticeVerdict criterion_all_fixed_lattice(const EquivariantPolytope& ep, std::int64_t dilation) {
  AllFixedLatticeVerdict out;
  for (const auto& cd : ep.classes())
    if (BigInt(static_cast<long>(dilation)) % cd.fixed.denominator != 0) out.non_lattice_classes.push_back(cd.class_index);
  out.applies = out.non_lattice_classes.empty();
  if (!out.applies || dilation != 1) return out;
  for (const auto& cd : ep.classes()) {
    const IntPolynomial hstar = ehrhart_series(cd.fixed.polytope).numerator;
    auto phi = cd.phi.as_polynomial();
    if (!phi || *phi != hstar * cd.det_perp) out.holds = false;
  }
  return out;
}

BadElementVerdict criterion_bad_element(const EquivariantPolytope& ep, std::int64_t dilation) {
  BadElementVerdict out;
  const int d = ep.dim();
  for (const auto& cd : ep.classes()) {
    const RationalPolytope fixed = dilated(cd.fixed.polytope, dilation);
    const BigInt r = fixed.index();
    const BigInt den = fixed.denominator();
    const int dim = fixed.dim();
    if (r % den == 0 && r * dim > BigInt(d + 1) - r) {
      out.witnessed = true;
      out.witness_class = cd.class_index;
      out.reason = "index " + to_string(r) + ", dim P_g = " + std::to_string(dim);
      return out;
    }
    if (static_cast<int>(cd.fixed.fixed_dim) == d - 1 && !fixes_point_at_height(cd.rep, dilation)) {
      out.witnessed = true;
      out.witness_class = cd.class_index;
      out.reason = "reflection without a fixed point at height " + std::to_string(dilation);
      return out;
    }
  }
  return out;
}

FaceFixedVerdict criterion_face_fixed_points(const EquivariantPolytope& ep, std::int64_t dilation) {
  FaceFixedVerdict out;
  const auto& p = ep.polytope();
  const auto& group = ep.group();
  std::vector<std::vector<std::size_t>> perms;
  for (const auto& g : group->elements()) perms.push_back(vertex_permutation(p, g));
  for (const auto& face : p.faces()) {
    if (face.dim <= 1) continue;
    ++out.faces_checked;
    const std::set<std::size_t> members(face.vertices.begin(), face.vertices.end());
    std::vector<AffineLatticeAutomorphism> stabilizer;
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (std::all_of(face.vertices.begin(), face.vertices.end(), [&](std::size_t v) { return members.count(perms[i][v]); }))
        stabilizer.push_back(group->element(i));
    std::vector<RatVector> pts;
    for (std::size_t v : face.vertices) pts.push_back(p.vertices()[v]);
    const RationalPolytope q = RationalPolytope::hull(p.ambient_dim(), pts);
    if (!has_lattice_point(common_fixed_polytope(q, stabilizer), dilation)) {
      out.failing_face = face.vertices;
      return out;
    }
  }
  out.guaranteed = true;
  return out;
}

CriteriaConsistency criteria_consistency(const EquivariantPolytope& ep, const EquivariantHStar& hstar) {
  CriteriaConsistency out;
  const auto lattice = criterion_all_fixed_lattice(ep);
  const auto bad = criterion_bad_element(ep);
  const auto faces = criterion_face_fixed_points(ep);
  auto problem = [&](const std::string& s) {
    out.consistent = false;
    out.problems.push_back(s);
  };
  if (lattice.applies && bad.witnessed) problem("all P_g lattice yet a non-polynomial witness exists");
  if (faces.guaranteed && bad.witnessed) problem("face criterion passes yet a non-polynomial witness exists");
  if (lattice.applies && !hstar.polynomial) problem("all P_g lattice but phi is not a polynomial");
  if (lattice.applies && !lattice.holds) problem("phi(g) differs from h*_{P_g} det_perp");
  if (bad.witnessed && hstar.polynomial) problem("witness found but phi is a polynomial");
  if (faces.guaranteed && !hstar.effective) problem("face criterion passes but phi is not effective");
  return out;
}

PalindromeVerdict palindrome_reflexive_check(const EquivariantPolytope& ep) {
  PalindromeVerdict out;
  const std::size_t id = ep.group()->class_of(0);
  const ClassData& ident = ep.class_data(id);
  const IntPolynomial& hstar = ident.series.numerator;
  out.degree = hstar.degree();
  out.codegree = ep.dim() + 1 - out.degree;
  const int s = out.degree;
  const std::int64_t l = out.codegree;

  out.phi_palindromic = true;
  for (const auto& cd : ep.classes()) {
    auto [e, r] = cd.phi.reciprocal(s);
    bool same = e >= 0 ? r.shifted(static_cast<std::size_t>(e)) == cd.phi : r == cd.phi.shifted(static_cast<std::size_t>(-e));
    if (!same) out.phi_palindromic = false;
  }
  auto shift_holds = [&](const ClassData& cd) {
    for (std::int64_t m = 1; m <= ep.horizon(); ++m) {
      BigRational expected = m >= l ? cd.counting(m - l) : BigRational(0);
      if (cd.interior(m) != expected) return false;
    }
    return true;
  };
  out.characters_shift = std::all_of(ep.classes().begin(), ep.classes().end(), shift_holds);
  out.counts_shift = shift_holds(ident);
  out.hstar_palindromic = hstar.is_palindromic(static_cast<std::size_t>(s));
  out.reflexive_translate = is_reflexive_translate(dilated(ep.polytope(), l));
  return out;
}

GroupPtr product_group(const GroupPtr& g, const GroupPtr& h) {
  const std::size_t a = g->rank(), b = h->rank();
  auto embed = [&](const AffineLatticeAutomorphism& x, std::size_t offset) {
    IntMatrix m = IntMatrix::identity(a + b);
    IntVector w(a + b, 0);
    for (std::size_t i = 0; i < x.rank(); ++i) {
      w[offset + i] = x.translation()[i];
      for (std::size_t j = 0; j < x.rank(); ++j) m.at(offset + i, offset + j) = x.linear().at(i, j);
    }
    return AffineLatticeAutomorphism(m, w);
  };
  std::vector<AffineLatticeAutomorphism> gens;
  for (const auto& x : g->generators()) gens.push_back(embed(x, 0));
  for (const auto& y : h->generators()) gens.push_back(embed(y, a));
  return generate_group(a + b, gens, g->order() * h->order());
}

namespace {

// Class indices in G and H of the two diagonal blocks of a product element.
std::pair<std::size_t, std::size_t> split_classes(const AffineLatticeAutomorphism& x, const GroupPtr& g, const GroupPtr& h) {
  const std::size_t a = g->rank(), b = h->rank();
  auto block = [&](std::size_t offset, std::size_t n) {
    IntMatrix m(n, n);
    IntVector w(n);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = x.translation()[offset + i];
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = x.linear().at(offset + i, offset + j);
    }
    return AffineLatticeAutomorphism(m, w);
  };
  return {g->class_of(g->index_of(block(0, a))), h->class_of(h->index_of(block(a, b)))};
}

}  // namespace

FreeSumCheck free_sum_identity_check(const EquivariantPolytope& p, const EquivariantPolytope& q, std::int64_t product_terms) {
  for (const auto* ep : {&p, &q})
    for (const auto& g : ep->group()->generators())
      if (!g.is_linear()) throw std::invalid_argument("free sums need linear actions");
  if (!is_reflexive(p.polytope())) throw std::invalid_argument("the first summand must be reflexive");

  FreeSumCheck out;
  const GroupPtr gh = product_group(p.group(), q.group());
  const EquivariantPolytope sum(free_sum(p.polytope(), q.polytope()), gh);
  out.free_sum_identity = true;
  for (std::size_t c = 0; c < gh->class_count(); ++c) {
    auto [cg, ch] = split_classes(gh->representative(c), p.group(), q.group());
    if (sum.class_data(c).phi != p.class_data(cg).phi * q.class_data(ch).phi) {
      out.free_sum_identity = false;
      out.failing_class = c;
    }
  }

  const RationalPolytope prod = product(p.polytope(), q.polytope());
  out.product_identity = true;
  for (std::int64_t m = 0; m <= product_terms; ++m) {
    std::vector<long> fixed(gh->class_count(), 0);
    for_each_lattice_point(prod, m, false, [&](const IntVector& x) {
      for (std::size_t c = 0; c < gh->class_count(); ++c)
        if (gh->representative(c).apply(x, m) == x) ++fixed[c];
      return true;
    });
    const ClassFunction pm = p.chi(m), qm = q.chi(m);
    for (std::size_t c = 0; c < gh->class_count(); ++c) {
      auto [cg, ch] = split_classes(gh->representative(c), p.group(), q.group());
      if (CyclotomicValue(fixed[c]) != pm[cg] * qm[ch]) {
        out.product_identity = false;
        out.failing_class = c;
      }
    }
  }
  return out;
}

}  // namespace eqehr
