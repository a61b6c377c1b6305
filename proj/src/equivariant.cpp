#include "eqehr/equivariant.hpp"

#include <mutex>
#include <numeric>

#include "eqehr/errors.hpp"
#include "eqehr/parallel.hpp"

namespace eqehr {

struct EquivariantPolytope::State {
  RationalPolytope polytope;
  GroupPtr group;
  std::vector<ClassData> classes;
  std::once_flag table_once;
  std::optional<CharacterTable> table;
};

namespace {

const IntPolynomial& one_minus_t() {
  static const IntPolynomial p = IntPolynomial::one_minus_power(1);
  return p;
}

ClassData analyze_class(const RationalPolytope& p, const GroupPtr& group, std::size_t c) {
  ClassData cd;
  cd.class_index = c;
  cd.rep = group->representative(c);
  cd.fixed = fixed_polytope(p, cd.rep);
  const RationalPolytope& fixed = cd.fixed.polytope;
  if (fixed.dim() != static_cast<int>(cd.fixed.fixed_dim))
    throw InternalMismatch("dim P_g = " + std::to_string(fixed.dim()) + " but dim M^g = " +
                           std::to_string(cd.fixed.fixed_dim) + " for " + cd.rep.to_string());
  cd.det_one_minus = cd.rep.linear().det_one_minus_t();
  auto perp = cd.det_one_minus.exact_quotient(one_minus_t().pow(static_cast<unsigned>(cd.fixed.fixed_dim)));
  if (!perp) throw InternalMismatch("(1 - t)^dim M^g does not divide det(I - A t)");
  cd.det_perp = *perp;
  cd.det_sign = cd.rep.linear().determinant() > 0 ? 1 : -1;

  const int dim = fixed.dim();
  const auto period = static_cast<unsigned>(to_int64(cd.fixed.denominator));
  const auto counts = dilate_counts(fixed);
  cd.series = ehrhart_series_from_counts(dim, period, counts);
  cd.counting = fit_quasi_polynomial(dim, period, 0, counts).reduced();
  cd.interior = fit_quasi_polynomial(dim, period, 1, interior_dilate_counts(fixed)).reduced();
  cd.phi = RationalFunction(cd.series.numerator * one_minus_t() * cd.det_one_minus,
                            {PowerFactor{period, static_cast<unsigned>(dim + 1)}});
  return cd;
}

BigInt integral_value(const BigRational& q) {
  if (!is_integral(q)) throw InternalMismatch("non-integral lattice point count " + to_string(q));
  return q.get_num();
}

std::size_t identity_class(const FiniteMatrixGroup& g) { return g.class_of(0); }

}  // namespace

EquivariantPolytope::EquivariantPolytope(RationalPolytope polytope, GroupPtr group, std::optional<CharacterTable> table)
    : state_(std::make_shared<State>()) {
  if (!group) throw std::invalid_argument("missing group");
  if (group->rank() != polytope.ambient_dim()) throw DimensionMismatch("group rank differs from the ambient dimension");
  if (!polytope.is_full_dimensional()) throw NotFullDimensional("the polytope must be full-dimensional");
  if (!polytope.is_lattice()) throw NotLattice("the polytope must be a lattice polytope");
  for (const auto& g : group->generators()) vertex_permutation(polytope, g);
  if (table && table->group != group) throw std::invalid_argument("character table belongs to another group");
  state_->polytope = std::move(polytope);
  state_->group = std::move(group);
  if (table) {
    state_->table = std::move(table);
    std::call_once(state_->table_once, [] {});
  }
  const std::size_t n = state_->group->class_count();
  state_->classes.resize(n);
  parallel_for(n, [&](std::size_t c) { state_->classes[c] = analyze_class(state_->polytope, state_->group, c); });
}

const RationalPolytope& EquivariantPolytope::polytope() const { return state_->polytope; }
const GroupPtr& EquivariantPolytope::group() const { return state_->group; }
int EquivariantPolytope::dim() const { return state_->polytope.dim(); }
const std::vector<ClassData>& EquivariantPolytope::classes() const { return state_->classes; }
const ClassData& EquivariantPolytope::class_data(std::size_t c) const { return state_->classes[c]; }

const CharacterTable& EquivariantPolytope::table() const {
  std::call_once(state_->table_once, [&] { state_->table = character_table(state_->group); });
  return *state_->table;
}

ClassFunction EquivariantPolytope::chi(std::int64_t m) const {
  std::vector<BigInt> v;
  for (const auto& cd : classes()) v.push_back(integral_value(cd.counting(m)));
  return ClassFunction::from_integers(group(), v);
}

ClassFunction EquivariantPolytope::chi_star(std::int64_t m) const {
  std::vector<BigInt> v;
  for (const auto& cd : classes()) v.push_back(integral_value(cd.interior(m)));
  return ClassFunction::from_integers(group(), v);
}

std::int64_t EquivariantPolytope::horizon() const {
  return static_cast<std::int64_t>(dim() + 1) * static_cast<std::int64_t>(group()->exponent()) + 2;
}

ClassFunction chi_mP_route(const EquivariantPolytope& ep, std::int64_t m, ChiRoute route, bool interior) {
  const auto& classes = ep.classes();
  std::vector<BigInt> v(classes.size(), 0);
  if (interior && m < 1) throw std::invalid_argument("interior counts need m >= 1");
  if (route == ChiRoute::FixedPolytope) {
    for (std::size_t c = 0; c < classes.size(); ++c)
      v[c] = interior ? count_interior_lattice_points(classes[c].fixed.polytope, m)
                      : count_lattice_points(classes[c].fixed.polytope, m);
  } else {
    std::vector<long> fixed(classes.size(), 0);
    for_each_lattice_point(ep.polytope(), m, interior, [&](const IntVector& x) {
      for (std::size_t c = 0; c < classes.size(); ++c)
        if (classes[c].rep.apply(x, m) == x) ++fixed[c];
      return true;
    });
    for (std::size_t c = 0; c < classes.size(); ++c) v[c] = fixed[c];
  }
  return ClassFunction::from_integers(ep.group(), v);
}

namespace {

ClassFunction checked_chi(const EquivariantPolytope& ep, std::int64_t m, bool interior) {
  ClassFunction a = chi_mP_route(ep, m, ChiRoute::FixedPointsOfDilate, interior);
  ClassFunction b = chi_mP_route(ep, m, ChiRoute::FixedPolytope, interior);
  if (a != b)
    throw InternalMismatch("fixed points of mP " + a.to_string() + " differ from points of mP_g " + b.to_string() +
                           " at m = " + std::to_string(m));
  return a;
}

}  // namespace

ClassFunction chi_mP(const EquivariantPolytope& ep, std::int64_t m) { return checked_chi(ep, m, false); }
ClassFunction chi_star_mP(const EquivariantPolytope& ep, std::int64_t m) { return checked_chi(ep, m, true); }

EquivariantHStar equivariant_hstar(const EquivariantPolytope& ep) {
  EquivariantHStar out;
  out.group = ep.group();
  for (const auto& cd : ep.classes()) out.per_class.push_back(cd.phi);
  out.polynomial = std::all_of(out.per_class.begin(), out.per_class.end(),
                               [](const RationalFunction& f) { return f.is_polynomial(); });

  std::vector<IntPolynomial> numerators;
  if (out.polynomial) {
    for (const auto& f : out.per_class) numerators.push_back(*f.as_polynomial());
  } else {
    std::map<unsigned, unsigned> common;
    for (const auto& f : out.per_class)
      for (auto [k, e] : f.cyclotomic_factors()) common[k] = std::max(common[k], e);
    for (auto [k, e] : common) out.common_denominator *= denominator_factor(k).pow(e);
    for (const auto& f : out.per_class) {
      if (f.residual_denominator() != IntPolynomial::one())
        throw InternalMismatch("non-cyclotomic denominator " + f.residual_denominator().to_string());
      auto num = (f * RationalFunction(out.common_denominator)).as_polynomial();
      if (!num) throw InternalMismatch("common denominator does not clear " + f.to_string());
      numerators.push_back(*num);
    }
  }
  int top = -1;
  for (const auto& p : numerators) top = std::max(top, p.degree());
  for (int i = 0; i <= top; ++i) {
    std::vector<BigInt> v;
    for (const auto& p : numerators) v.push_back(p.coeff(static_cast<std::size_t>(i)));
    out.coefficients.push_back(ClassFunction::from_integers(ep.group(), v));
  }
  const CharacterTable& table = ep.table();
  out.effective = out.polynomial;
  for (const auto& c : out.coefficients) {
    out.multiplicities.push_back(decompose(c, table));
    if (!is_effective(out.multiplicities.back())) out.effective = false;
  }
  return out;
}

PhiAtOne phi_at_one(const EquivariantPolytope& ep) {
  std::vector<CyclotomicValue> closed, limit;
  PhiAtOne out;
  out.nonnegative = out.integral = true;
  for (const auto& cd : ep.classes()) {
    const RationalPolytope& fixed = cd.fixed.polytope;
    BigRational value = BigRational(factorial(static_cast<unsigned long>(fixed.dim()))) * normalized_volume(fixed) *
                        cd.det_perp.evaluate(BigRational(1)) / BigRational(cd.fixed.index);
    BigRational lim = cd.phi.value_at_one();
    if (value != lim)
      throw InternalMismatch("phi[1] closed form " + to_string(value) + " differs from the limit " + to_string(lim) +
                             " at " + cd.rep.to_string());
    if (value < 0) out.nonnegative = false;
    if (!is_integral(value)) out.integral = false;
    closed.emplace_back(value);
    limit.emplace_back(lim);
  }
  out.closed_form = ClassFunction(ep.group(), closed);
  out.limit = ClassFunction(ep.group(), limit);
  return out;
}

EquivariantReciprocity equivariant_reciprocity_check(const EquivariantPolytope& ep) {
  EquivariantReciprocity out;
  const std::int64_t horizon = ep.horizon();
  const BigRational sign = (ep.dim() % 2 == 0) ? 1 : -1;
  const int d = ep.dim();
  for (const auto& cd : ep.classes()) {
    for (std::int64_t m = 1; m <= horizon && out.pointwise; ++m)
      if (sign * cd.counting(-m) != cd.interior(m) * BigRational(cd.det_sign)) {
        out.pointwise = false;
        out.witness = ReciprocityWitness{m, cd.class_index};
      }
    auto [e, r] = cd.phi.reciprocal(d + 1);
    if (e < 0) {
      out.series = false;
      if (!out.witness) out.witness = ReciprocityWitness{0, cd.class_index};
      continue;
    }
    RationalFunction rhs = r.shifted(static_cast<std::size_t>(e)).divided_by(one_minus_t() * cd.det_one_minus);
    const auto coeffs = rhs.series(static_cast<std::size_t>(horizon) + 1);
    bool ok = coeffs[0] == 0;
    std::int64_t bad = 0;
    for (std::int64_t m = 1; m <= horizon && ok; ++m)
      if (BigRational(coeffs[static_cast<std::size_t>(m)]) != cd.interior(m)) {
        ok = false;
        bad = m;
      }
    if (!ok) {
      out.series = false;
      if (!out.witness) out.witness = ReciprocityWitness{bad, cd.class_index};
    }
  }
  return out;
}

LeadingCoefficients leading_coefficients(const EquivariantPolytope& ep) {
  LeadingCoefficients out;
  const auto& group = ep.group();
  const auto& classes = ep.classes();
  const int d = ep.dim();
  const std::size_t id = identity_class(*group);
  const BigRational order(static_cast<long>(group->order()));
  const BigRational volume = normalized_volume(ep.polytope());

  std::size_t period = 1;
  for (const auto& cd : classes) period = std::lcm(period, cd.counting.period());

  std::vector<CyclotomicValue> standard(classes.size(), BigRational(0));
  standard[id] = order;
  out.top_expected = ClassFunction(group, standard) * CyclotomicValue(volume / order);
  out.top_ok = true;
  for (std::size_t m = 0; m < period; ++m) {
    std::vector<CyclotomicValue> v;
    for (const auto& cd : classes) v.emplace_back(cd.counting.coefficient(static_cast<std::size_t>(d), static_cast<std::int64_t>(m)));
    ClassFunction f(group, v);
    if (m == 0) out.top = f;
    if (f != out.top_expected) out.top_ok = false;
  }

  out.surface_area = boundary_volume(ep.polytope());
  out.surface_area_from_series = classes[id].counting.coefficient(static_cast<std::size_t>(d - 1), 0) * 2;
  out.second_ok = out.surface_area == out.surface_area_from_series;
  out.period_divides_two = true;
  std::vector<ClassFunction> all;
  for (std::size_t m = 0; m < std::max<std::size_t>(period, 2); ++m) {
    std::vector<CyclotomicValue> got, want;
    for (const auto& cd : classes) {
      got.emplace_back(cd.counting.coefficient(static_cast<std::size_t>(d - 1), static_cast<std::int64_t>(m)));
      BigRational expected = 0;
      if (cd.class_index == id) {
        expected = out.surface_area / 2;
      } else if (static_cast<int>(cd.fixed.fixed_dim) == d - 1 && m % static_cast<std::size_t>(to_int64(cd.fixed.index)) == 0) {
        expected = normalized_volume(cd.fixed.polytope);
      }
      want.emplace_back(expected);
    }
    ClassFunction g(group, got), w(group, want);
    if (g != w) out.second_ok = false;
    all.push_back(g);
    if (m < 2) {
      out.second.push_back(g);
      out.second_expected.push_back(w);
    }
  }
  for (std::size_t m = 2; m < all.size(); ++m)
    if (all[m] != all[m % 2]) out.period_divides_two = false;
  return out;
}

OrbitQuasiPolynomials orbit_quasipolynomials(const EquivariantPolytope& ep) {
  OrbitQuasiPolynomials out;
  const auto& group = ep.group();
  const BigRational order(static_cast<long>(group->order()));
  bool first = true;
  for (const auto& cd : ep.classes()) {
    const BigRational weight = BigRational(static_cast<long>(group->class_size(cd.class_index))) / order;
    const BigRational signed_weight = weight * cd.det_sign;
    if (first) {
      out.orbits = cd.counting * weight;
      out.det_orbits = cd.counting * signed_weight;
      out.interior_orbits = cd.interior * weight;
      out.interior_det_orbits = cd.interior * signed_weight;
      first = false;
    } else {
      out.orbits += cd.counting * weight;
      out.det_orbits += cd.counting * signed_weight;
      out.interior_orbits += cd.interior * weight;
      out.interior_det_orbits += cd.interior * signed_weight;
    }
  }
  out.orbits = out.orbits.reduced();
  out.det_orbits = out.det_orbits.reduced();
  out.interior_orbits = out.interior_orbits.reduced();
  out.interior_det_orbits = out.interior_det_orbits.reduced();
  const BigRational sign = (ep.dim() % 2 == 0) ? 1 : -1;
  out.reciprocity = true;
  for (std::int64_t m = 1; m <= ep.horizon(); ++m)
    if (sign * out.orbits(-m) != out.interior_det_orbits(m)) out.reciprocity = false;
  out.starts_at_one = out.orbits(0) == 1;
  return out;
}

std::vector<std::pair<IntVector, std::int64_t>> box_points(const RationalPolytope& simplex) {
  if (!simplex.is_full_dimensional() || !simplex.is_simplex()) throw NotASimplex("box points need a full-dimensional simplex");
  const auto verts = simplex.lattice_vertices();
  const std::size_t n = simplex.ambient_dim() + 1;
  RatMatrix cols(n, RatVector(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i + 1 < n; ++i) cols[i][j] = verts[j][i];
    cols[n - 1][j] = 1;
  }
  const auto inv = inverse(cols);
  if (!inv) throw InternalMismatch("simplex vertices are affinely dependent");
  std::vector<std::int64_t> lo(n, 0), hi(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t a = to_int64(cols[i][j]);
      (a < 0 ? lo[i] : hi[i]) += a;
    }
  std::vector<std::pair<IntVector, std::int64_t>> out;
  RatVector x(n);
  IntVector cur(n);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      for (std::size_t i = 0; i < n; ++i) x[i] = cur[i];
      const RatVector a = multiply(*inv, x);
      for (const auto& c : a)
        if (c < 0 || c >= 1) return;
      out.emplace_back(IntVector(cur.begin(), cur.end() - 1), cur.back());
      return;
    }
    for (std::int64_t v = lo[k]; v <= hi[k]; ++v) {
      cur[k] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<ClassFunction> box_points_hstar(const EquivariantPolytope& ep) {
  const auto pts = box_points(ep.polytope());
  std::vector<ClassFunction> out;
  for (std::int64_t h = 0; h <= ep.dim(); ++h) {
    std::vector<IntVector> slice;
    for (const auto& [x, height] : pts)
      if (height == h) slice.push_back(x);
    out.push_back(permutation_character_on_points(ep.group(), slice, h));
  }
  return out;
}

}  // namespace eqehr
