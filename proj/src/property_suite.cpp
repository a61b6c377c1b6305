#include "eqehr/property_suite.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "eqehr/criteria.hpp"
#include "eqehr/errors.hpp"

namespace eqehr {

bool PropertyReport::all_passed() const { return failures() == 0; }

std::size_t PropertyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const PropertyResult& r) { return !r.passed && !r.reported_only; }));
}

namespace {

// Outcome of one property: pass flag plus a witness or value.
struct Outcome {
  bool passed = true;
  std::string detail;
};

Outcome ok() { return {}; }
Outcome bad(std::string why) { return {false, std::move(why)}; }

// det(I - t A) from principal minors: sum_i (-1)^i e_i(A) t^i.
IntPolynomial exterior_expansion(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<BigInt> c(n + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    RatMatrix minor(idx.size(), RatVector(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) minor[i][j] = a.at(idx[i], idx[j]);
    const BigRational det = idx.empty() ? BigRational(1) : determinant(minor);
    c[idx.size()] += (idx.size() % 2 == 0 ? det : BigRational(-det)).get_num();
  }
  return IntPolynomial(c);
}

bool is_trivial_character(const ClassFunction& f) {
  for (const auto& v : f.values())
    if (v != CyclotomicValue(1)) return false;
  return true;
}

ClassFunction series_coefficient(const EquivariantPolytope& ep, std::size_t k) {
  std::vector<BigInt> v;
  for (const auto& cd : ep.classes()) v.push_back(cd.phi.series(k + 1)[k]);
  return ClassFunction::from_integers(ep.group(), v);
}

}  // namespace

PropertyReport run_property_suite(const GalleryInstance& instance, const SuiteOptions& options) {
  PropertyReport report;
  report.instance = instance.name;
  auto run = [&](const std::string& name, const std::function<Outcome()>& body, bool reported_only = false) {
    PropertyResult r;
    r.name = name;
    r.reported_only = reported_only;
    try {
      Outcome o = body();
      r.passed = o.passed;
      r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    report.results.push_back(std::move(r));
  };

  std::optional<EquivariantPolytope> built;
  run("pipeline constructs", [&] {
    built.emplace(instance.polytope, instance.group, instance.table);
    return ok();
  });
  if (!built) return report;
  const EquivariantPolytope& ep = *built;
  const GroupPtr& group = ep.group();
  const int d = ep.dim();
  const std::size_t id = group->class_of(0);
  const CharacterTable& table = ep.table();

  run("irreducible characters are orthonormal", [&]() -> Outcome {
    for (std::size_t i = 0; i < table.size(); ++i)
      for (std::size_t j = 0; j < table.size(); ++j)
        if (inner_product(table.characters[i], table.characters[j]) != CyclotomicValue(i == j ? 1 : 0))
          return bad(table.labels[i] + " vs " + table.labels[j]);
    if (table.size() != group->class_count()) return bad("table is not square");
    return ok();
  });

  run("det(g) (-1)^dim M^g = (-1)^d", [&]() -> Outcome {
    for (const auto& cd : ep.classes()) {
      const int lhs = cd.det_sign * ((cd.fixed.fixed_dim % 2 == 0) ? 1 : -1);
      if (lhs != (d % 2 == 0 ? 1 : -1)) return bad(cd.rep.to_string());
    }
    return ok();
  });

  run("det(I - A t) equals the exterior power expansion", [&]() -> Outcome {
    for (const auto& cd : ep.classes()) {
      if (exterior_expansion(cd.rep.linear()) != cd.det_one_minus) return bad(cd.rep.to_string());
      // Reciprocal series: sum_i tr Sym^i A t^i times det(I - A t) is 1.
      const auto inv = series_quotient(IntPolynomial::one(), cd.det_one_minus, static_cast<std::size_t>(d) + 1);
      const auto back = IntPolynomial(inv) * cd.det_one_minus;
      if (back.truncated(static_cast<std::size_t>(d) + 1) != IntPolynomial::one()) return bad("series reciprocal " + cd.rep.to_string());
    }
    return ok();
  });

  run("<chi_P, 1> counts orbits", [&]() -> Outcome {
    const auto pts = lattice_points(ep.polytope(), 1);
    const auto chi = permutation_character_on_points(group, pts, 1);
    const auto orbits = count_orbits(group, pts, 1);
    const auto ip = inner_product(chi, ClassFunction::constant(group, 1));
    if (ip != CyclotomicValue(static_cast<long>(orbits))) return bad(ip.to_string() + " vs " + std::to_string(orbits));
    return ok();
  });

  run("dim P_g = dim M^g", [&]() -> Outcome {
    for (const auto& cd : ep.classes())
      if (cd.fixed.polytope.dim() != static_cast<int>(cd.fixed.fixed_dim)) return bad(cd.rep.to_string());
    return ok();
  });

  run("order(g) P_g is a lattice polytope", [&]() -> Outcome {
    for (const auto& cd : ep.classes()) {
      const BigInt order(static_cast<unsigned long>(group->element_order(group->representative_index(cd.class_index))));
      if (order % cd.fixed.denominator != 0) return bad(cd.rep.to_string());
    }
    return ok();
  });

  run("reflections are involutions with index 1 or 2", [&]() -> Outcome {
    for (const auto& cd : ep.classes()) {
      if (static_cast<int>(cd.fixed.fixed_dim) != d - 1) continue;
      if (group->element_order(group->representative_index(cd.class_index)) != 2) return bad("order " + cd.rep.to_string());
      if (cd.fixed.index != 1 && cd.fixed.index != 2) return bad("index " + to_string(cd.fixed.index));
    }
    return ok();
  });

  run("fixed points of mP agree with points of mP_g and the fitted L(m)", [&]() -> Outcome {
    std::int64_t m = 0;
    for (; m <= ep.horizon(); ++m) {
      if (ep.chi(m)[id].rational() > BigRational(static_cast<unsigned long>(options.enumeration_budget))) break;
      if (chi_mP(ep, m) != ep.chi(m)) return bad("m = " + std::to_string(m));
      if (m >= 1 && chi_star_mP(ep, m) != ep.chi_star(m)) return bad("interior, m = " + std::to_string(m));
    }
    return {true, "enumerated m <= " + std::to_string(m - 1) + " of horizon " + std::to_string(ep.horizon())};
  });

  run("L(0) is the trivial character", [&]() -> Outcome {
    return is_trivial_character(chi_mP(ep, 0)) ? ok() : bad(chi_mP(ep, 0).to_string());
  });

  run("f_{P_g}(0) = 1 and deg f_{P_g} = dim P_g", [&]() -> Outcome {
    for (const auto& cd : ep.classes())
      if (cd.counting(0) != 1 || cd.counting.degree() != cd.fixed.polytope.dim()) return bad(cd.rep.to_string());
    return ok();
  });

  run("h*(1) = d! vol(P) and h* is nonnegative", [&]() -> Outcome {
    const auto h = hstar_data(ep.polytope()).hstar;
    if (BigRational(h.evaluate(BigInt(1))) != BigRational(factorial(static_cast<unsigned long>(d))) * normalized_volume(ep.polytope())) return bad("h*(1) = " + to_string(h.evaluate(BigInt(1))));
    for (const auto& c : h.coefficients())
      if (c < 0) return bad(h.to_string());
    return ok();
  });

  run("Ehrhart reciprocity for P", [&]() -> Outcome {
    auto r = reciprocity_check(ep.polytope());
    return r.holds ? ok() : bad("m = " + std::to_string(*r.witness));
  });

  if (instance.expected_hstar)
    run("h* matches the expected polynomial", [&]() -> Outcome {
      const auto h = hstar_data(ep.polytope()).hstar;
      return h == *instance.expected_hstar ? ok() : bad(h.to_string() + " vs " + instance.expected_hstar->to_string());
    });

  run("equivariant reciprocity on the horizon", [&]() -> Outcome {
    auto r = equivariant_reciprocity_check(ep);
    if (r.holds()) return ok();
    return bad(std::string(r.pointwise ? "series" : "pointwise") + " fails at m = " + std::to_string(r.witness->m) +
               ", class " + std::to_string(r.witness->class_index));
  });

  const EquivariantHStar hs = equivariant_hstar(ep);

  run("phi_0 = 1", [&]() -> Outcome {
    auto c0 = series_coefficient(ep, 0);
    return is_trivial_character(c0) ? ok() : bad(c0.to_string());
  });

  run("phi_1 is effective", [&]() -> Outcome {
    const auto dec = decompose(series_coefficient(ep, 1), table);
    return is_effective(dec) ? ok() : bad(format_decomposition(dec, table));
  });

  if (hs.polynomial) {
    run("phi_1 - phi_d is effective", [&]() -> Outcome {
      const ClassFunction top = static_cast<std::size_t>(d) < hs.coefficients.size()
                                    ? hs.coefficients[static_cast<std::size_t>(d)]
                                    : ClassFunction::constant(group, 0);
      const auto dec = decompose(hs.coefficients.at(1 < hs.coefficients.size() ? 1 : 0) - top, table);
      if (hs.coefficients.size() < 2) return ok();
      return is_effective(dec) ? ok() : bad(format_decomposition(dec, table));
    });

    run("deg phi = s and phi_s = chi*_{lP}", [&]() -> Outcome {
      const auto hd = hstar_data(ep.polytope());
      const int s = static_cast<int>(hs.coefficients.size()) - 1;
      if (s != hd.degree) return bad("deg phi = " + std::to_string(s) + ", s = " + std::to_string(hd.degree));
      const auto interior = chi_star_mP(ep, hd.codegree);
      if (interior != hs.coefficients.back()) return bad(interior.to_string() + " vs " + hs.coefficients.back().to_string());
      return ok();
    });

    if (ep.polytope().is_simplex())
      run("box points reproduce phi", [&]() -> Outcome {
        auto box = box_points_hstar(ep);
        while (!box.empty() && std::all_of(box.back().values().begin(), box.back().values().end(),
                                           [](const CyclotomicValue& v) { return v.is_zero(); }))
          box.pop_back();
        return box == hs.coefficients ? ok() : bad("box point characters differ");
      });
  }

  run("phi at the identity is h*", [&]() -> Outcome {
    const auto h = hstar_data(ep.polytope()).hstar;
    return hs.per_class[id] == RationalFunction(h) ? ok() : bad(hs.per_class[id].to_string());
  });

  run("phi[1] closed form equals the limit and is nonnegative", [&]() -> Outcome {
    auto p = phi_at_one(ep);
    return p.nonnegative ? ok() : bad(p.limit.to_string());
  });
  run("phi[1] is integral", [&]() -> Outcome {
    auto p = phi_at_one(ep);
    return {p.integral, p.limit.to_string()};
  }, true);

  const LeadingCoefficients lead = leading_coefficients(ep);
  run("L_d = vol(P)/|G| times the regular character", [&]() -> Outcome {
    return lead.top_ok ? ok() : bad(lead.top.to_string() + " vs " + lead.top_expected.to_string());
  });
  run("L_{d-1} matches surface area and reflections", [&]() -> Outcome {
    if (lead.surface_area != lead.surface_area_from_series)
      return bad("surface " + to_string(lead.surface_area) + " vs " + to_string(lead.surface_area_from_series));
    if (!lead.second_ok) return bad(lead.second[0].to_string() + " vs " + lead.second_expected[0].to_string());
    return ok();
  });
  run("L_{d-1} has period dividing 2", [&]() -> Outcome { return lead.period_divides_two ? ok() : bad("period > 2"); });

  run("orbit counts: reciprocity, f(0) = 1, leading coefficient vol/|G|", [&]() -> Outcome {
    const auto o = orbit_quasipolynomials(ep);
    if (!o.reciprocity) return bad("reciprocity");
    if (!o.starts_at_one) return bad("f(0) = " + to_string(o.orbits(0)));
    const BigRational want = normalized_volume(ep.polytope()) / BigRational(static_cast<long>(group->order()));
    for (std::int64_t m = 0; m < static_cast<std::int64_t>(o.orbits.period()); ++m)
      if (o.orbits.coefficient(static_cast<std::size_t>(d), m) != want || o.orbits.degree() != d) return bad("leading coefficient");
    return ok();
  });

  run("palindromic phi iff reflexive translate (five ways)", [&]() -> Outcome {
    const auto v = palindrome_reflexive_check(ep);
    std::ostringstream s;
    s << "phi " << v.phi_palindromic << ", characters " << v.characters_shift << ", counts " << v.counts_shift << ", h* "
      << v.hstar_palindromic << ", reflexive " << v.reflexive_translate;
    return {v.agree(), s.str()};
  });

  run("criteria verdicts are consistent with phi", [&]() -> Outcome {
    const auto c = criteria_consistency(ep, hs);
    if (c.consistent) return ok();
    std::string all;
    for (const auto& p : c.problems) all += (all.empty() ? "" : "; ") + p;
    return bad(all);
  });

  run("exponent(G) P has lattice fixed polytopes", [&]() -> Outcome {
    const auto v = criterion_all_fixed_lattice(ep, group->exponent());
    return v.applies ? ok() : bad("class " + std::to_string(v.non_lattice_classes.front()));
  });
  run("|G| P passes the face criterion", [&]() -> Outcome {
    const auto v = criterion_face_fixed_points(ep, static_cast<std::int64_t>(group->order()));
    return v.guaranteed ? ok() : bad("face without a fixed lattice point");
  });

  if (options.pyramid && d <= 3)
    run("phi is unchanged under the pyramid", [&]() -> Outcome {
      const GalleryInstance pyr = pyramid_instance(instance);
      const EquivariantPolytope pe(pyr.polytope, pyr.group);
      for (const auto& cd : ep.classes()) {
        const auto idx = pyr.group->index_of(AffineLatticeAutomorphism(cd.rep.lifted(), IntVector(d + 1, 0)));
        const auto& phi = pe.class_data(pyr.group->class_of(idx)).phi;
        if (phi != cd.phi) return bad(cd.rep.to_string() + ": " + phi.to_string() + " vs " + cd.phi.to_string());
      }
      return ok();
    });

  const bool linear = std::all_of(group->generators().begin(), group->generators().end(),
                                  [](const AffineLatticeAutomorphism& g) { return g.is_linear(); });
  if (options.free_sum && d <= 3 && linear && is_reflexive(ep.polytope()))
    run("free sum with [-1, 1] multiplies phi and product multiplies characters", [&]() -> Outcome {
      const auto segment = RationalPolytope::hull_of_lattice_points(1, {{-1}, {1}});
      const EquivariantPolytope q(segment, generate_group(1, {}));
      const auto r = free_sum_identity_check(ep, q);
      if (!r.free_sum_identity) return bad("free sum, class " + std::to_string(r.failing_class.value_or(0)));
      if (!r.product_identity) return bad("product, class " + std::to_string(r.failing_class.value_or(0)));
      return ok();
    });

  return report;
}

}  // namespace eqehr
