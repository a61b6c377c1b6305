#include "eqehr/reports.hpp"

#include <sstream>

#include "eqehr/criteria.hpp"
#include "json_values.hpp"

namespace eqehr {

using detail::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json quasi_json(const QuasiPolynomial& q) {
  json out = json::object();
  out["period"] = q.period();
  json parts = json::array();
  for (const auto& c : q.constituents()) {
    json coeffs = json::array();
    for (const auto& x : c.coefficients()) coeffs.push_back(detail::rat_json(x));
    parts.push_back(coeffs);
  }
  out["constituents"] = parts;
  out["formula"] = q.to_string();
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string value_text(const CyclotomicValue& v) { return v.to_string(); }

std::string row_text(const ClassFunction& f) {
  std::string s;
  for (std::size_t c = 0; c < f.size(); ++c) s += (c ? ", " : "") + value_text(f[c]);
  return s;
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "text") return ReportFormat::Text;
  if (name == "csv") return ReportFormat::Csv;
  throw std::invalid_argument("unknown format '" + name + "' (json, text or csv)");
}

std::string criteria_verdict(const EquivariantPolytope& ep) {
  if (criterion_bad_element(ep).witnessed) return "NonPolynomial";
  if (criterion_face_fixed_points(ep).guaranteed) return "EffectiveGuaranteed";
  if (criterion_all_fixed_lattice(ep).applies) return "PolynomialGuaranteed";
  return "Undecided";
}

std::string analyze_report(const GalleryInstance& instance, ReportFormat format) {
  const EquivariantPolytope ep(instance.polytope, instance.group, instance.table);
  const auto& group = *ep.group();
  const RationalPolytope& p = ep.polytope();
  const auto lattice = criterion_all_fixed_lattice(ep);
  const auto bad = criterion_bad_element(ep);
  const auto faces = criterion_face_fixed_points(ep);
  const std::string verdict = criteria_verdict(ep);

  json root = json::object();
  root["instance"] = instance.name;
  json g = json::object();
  g["order"] = group.order();
  g["exponent"] = group.exponent();
  json classes = json::array();
  for (const auto& cd : ep.classes()) {
    json c = json::object();
    c["class"] = cd.class_index;
    c["size"] = group.class_size(cd.class_index);
    c["element_order"] = group.element_order(group.representative_index(cd.class_index));
    c["representative"] = detail::element_json(cd.rep);
    c["fixed_space_dim"] = cd.fixed.fixed_dim;
    c["fixed_polytope_dim"] = cd.fixed.polytope.dim();
    c["denominator"] = detail::big_json(cd.fixed.denominator);
    c["index"] = detail::big_json(cd.fixed.index);
    c["lattice"] = cd.fixed.polytope.is_lattice();
    json verts = json::array();
    for (const auto& v : cd.fixed.polytope.vertices()) {
      json row = json::array();
      for (const auto& x : v) row.push_back(detail::rat_json(x));
      verts.push_back(row);
    }
    c["fixed_polytope_vertices"] = verts;
    classes.push_back(c);
  }
  g["classes"] = classes;
  root["group"] = g;
  json poly = json::object();
  poly["dim"] = p.dim();
  poly["vertex_count"] = p.vertices().size();
  poly["volume"] = detail::rat_json(normalized_volume(p));
  poly["reflexive"] = is_reflexive(p);
  poly["reflexive_translate"] = is_reflexive_translate(p);
  root["polytope"] = poly;
  json crit = json::object();
  crit["all_fixed_lattice"] = json{{"applies", lattice.applies}, {"holds", lattice.holds}, {"non_lattice_classes", lattice.non_lattice_classes}};
  json b = json::object();
  b["witnessed"] = bad.witnessed;
  b["witness_class"] = bad.witness_class ? json(*bad.witness_class) : json(nullptr);
  b["reason"] = bad.reason;
  crit["bad_element"] = b;
  json f = json::object();
  f["guaranteed"] = faces.guaranteed;
  f["faces_checked"] = faces.faces_checked;
  f["failing_face"] = faces.failing_face ? json(*faces.failing_face) : json(nullptr);
  crit["face_fixed_points"] = f;
  crit["verdict"] = verdict;
  root["criteria"] = crit;

  if (format == ReportFormat::Json) return dump(root);
  std::ostringstream out;
  if (format == ReportFormat::Csv) {
    out << "class,size,element_order,fixed_space_dim,fixed_polytope_dim,denominator,index,lattice\n";
    for (const auto& cd : ep.classes())
      out << cd.class_index << ',' << group.class_size(cd.class_index) << ','
          << group.element_order(group.representative_index(cd.class_index)) << ',' << cd.fixed.fixed_dim << ','
          << cd.fixed.polytope.dim() << ',' << cd.fixed.denominator << ',' << cd.fixed.index << ','
          << (cd.fixed.polytope.is_lattice() ? 1 : 0) << '\n';
    return out.str();
  }
  out << instance.name << "\n";
  out << "group: order " << group.order() << ", exponent " << group.exponent() << ", " << group.class_count() << " classes\n";
  out << "polytope: dim " << p.dim() << ", " << p.vertices().size() << " vertices, volume " << to_string(normalized_volume(p))
      << (is_reflexive(p) ? ", reflexive" : "") << (is_reflexive_translate(p) ? ", reflexive translate" : "") << "\n";
  for (const auto& cd : ep.classes())
    out << "  class " << cd.class_index << " [" << group.class_size(cd.class_index) << "] " << cd.rep.to_string()
        << ": dim P_g " << cd.fixed.polytope.dim() << ", denominator " << cd.fixed.denominator << ", index " << cd.fixed.index
        << "\n";
  out << "all P_g lattice: " << (lattice.applies ? "yes" : "no") << "\n";
  out << "non-polynomial witness: " << (bad.witnessed ? "class " + std::to_string(*bad.witness_class) + " (" + bad.reason + ")" : "none") << "\n";
  out << "face criterion: " << (faces.guaranteed ? "passes" : "fails") << " (" << faces.faces_checked << " faces)\n";
  out << "verdict: " << verdict << "\n";
  return out.str();
}

std::string hstar_report(const GalleryInstance& instance, ReportFormat format) {
  const EquivariantPolytope ep(instance.polytope, instance.group, instance.table);
  const EquivariantHStar hs = equivariant_hstar(ep);
  const CharacterTable& table = ep.table();
  const PhiAtOne at_one = phi_at_one(ep);

  if (format == ReportFormat::Csv) {
    std::ostringstream out;
    out << "coefficient";
    for (const auto& l : table.labels) out << ',' << csv_escape(l);
    out << '\n';
    for (std::size_t i = 0; i < hs.multiplicities.size(); ++i) {
      out << "t^" << i;
      for (const auto& m : hs.multiplicities[i]) out << ',' << csv_escape(m.to_string());
      out << '\n';
    }
    return out.str();
  }

  json root = json::object();
  root["instance"] = instance.name;
  root["polynomial"] = hs.polynomial;
  root["effective"] = hs.effective;
  json irr = json::array();
  for (std::size_t i = 0; i < table.size(); ++i)
    irr.push_back(json{{"label", table.labels[i]}, {"degree", detail::big_json(table.degree(i))}});
  root["irreducibles"] = irr;
  root["common_denominator"] = detail::polynomial_json(hs.common_denominator);
  json mult = json::array();
  for (const auto& row : hs.multiplicities) {
    json r = json::array();
    for (const auto& m : row) r.push_back(detail::cyclotomic_json(m));
    mult.push_back(r);
  }
  root["multiplicities"] = mult;
  json coeffs = json::array();
  for (const auto& c : hs.coefficients) coeffs.push_back(detail::class_function_json(c));
  root["coefficients"] = coeffs;
  json per = json::array();
  for (std::size_t c = 0; c < hs.per_class.size(); ++c) {
    json e = json::object();
    e["class"] = c;
    e["representative"] = detail::element_json(ep.class_data(c).rep);
    e["phi"] = hs.per_class[c].to_string();
    e["numerator"] = detail::polynomial_json(hs.per_class[c].numerator());
    e["denominator"] = detail::polynomial_json(hs.per_class[c].denominator());
    per.push_back(e);
  }
  root["per_class"] = per;
  json one = json::object();
  one["values"] = detail::class_function_json(at_one.limit);
  one["nonnegative"] = at_one.nonnegative;
  one["integral"] = at_one.integral;
  root["phi_at_one"] = one;
  if (format == ReportFormat::Json) return dump(root);

  std::ostringstream out;
  out << instance.name << ": phi is " << (hs.polynomial ? "a polynomial" : "not a polynomial")
      << (hs.effective ? ", effective" : "") << "\n";
  if (!hs.polynomial) out << "common denominator: " << hs.common_denominator.to_string() << "\n";
  for (std::size_t i = 0; i < hs.multiplicities.size(); ++i)
    out << (hs.polynomial ? "phi_" : "numerator t^") << i << " = " << format_decomposition(hs.multiplicities[i], table) << "\n";
  for (std::size_t c = 0; c < hs.per_class.size(); ++c)
    out << "  class " << c << " " << ep.class_data(c).rep.to_string() << ": " << hs.per_class[c].to_string() << "\n";
  out << "phi[1] = (" << row_text(at_one.limit) << ")" << (at_one.integral ? "" : ", not integral") << "\n";
  return out.str();
}

std::string series_report(const GalleryInstance& instance, std::int64_t terms, ReportFormat format) {
  if (terms < 0) throw std::invalid_argument("--terms must be nonnegative");
  const EquivariantPolytope ep(instance.polytope, instance.group, instance.table);
  const auto orbits = orbit_quasipolynomials(ep);
  const std::size_t classes = ep.classes().size();

  if (format == ReportFormat::Csv) {
    std::ostringstream out;
    out << "m";
    for (std::size_t c = 0; c < classes; ++c) out << ",chi_" << c;
    for (std::size_t c = 0; c < classes; ++c) out << ",chi_star_" << c;
    out << ",orbits,interior_orbits\n";
    for (std::int64_t m = 0; m <= terms; ++m) {
      out << m;
      const auto chi = ep.chi(m);
      for (std::size_t c = 0; c < classes; ++c) out << ',' << chi[c].to_string();
      for (std::size_t c = 0; c < classes; ++c) out << ',' << (m >= 1 ? ep.chi_star(m)[c].to_string() : std::string("0"));
      out << ',' << to_string(orbits.orbits(m)) << ',' << (m >= 1 ? to_string(orbits.interior_orbits(m)) : std::string("0")) << '\n';
    }
    return out.str();
  }

  json root = json::object();
  root["instance"] = instance.name;
  json reps = json::array();
  for (const auto& cd : ep.classes()) reps.push_back(detail::element_json(cd.rep));
  root["class_representatives"] = reps;
  json rows = json::array();
  for (std::int64_t m = 0; m <= terms; ++m) {
    json r = json::object();
    r["m"] = m;
    r["chi"] = detail::class_function_json(ep.chi(m));
    r["chi_star"] = m >= 1 ? detail::class_function_json(ep.chi_star(m)) : json(nullptr);
    rows.push_back(r);
  }
  root["values"] = rows;
  json per = json::array();
  for (const auto& cd : ep.classes()) per.push_back(json{{"class", cd.class_index}, {"counting", quasi_json(cd.counting)}});
  root["fixed_polytope_quasi_polynomials"] = per;
  json o = json::object();
  o["orbits"] = quasi_json(orbits.orbits);
  o["det_orbits"] = quasi_json(orbits.det_orbits);
  o["interior_orbits"] = quasi_json(orbits.interior_orbits);
  o["interior_det_orbits"] = quasi_json(orbits.interior_det_orbits);
  o["reciprocity"] = orbits.reciprocity;
  root["orbit_counts"] = o;
  if (format == ReportFormat::Json) return dump(root);

  std::ostringstream out;
  out << instance.name << "\n";
  for (std::int64_t m = 0; m <= terms; ++m) {
    out << "m = " << m << ": chi = (" << row_text(ep.chi(m)) << ")";
    if (m >= 1) out << ", chi* = (" << row_text(ep.chi_star(m)) << ")";
    out << "\n";
  }
  out << "orbits: " << orbits.orbits.to_string() << " (period " << orbits.orbits.period() << ")\n";
  out << "det-twisted orbits: " << orbits.det_orbits.to_string() << " (period " << orbits.det_orbits.period() << ")\n";
  out << "interior orbits: " << orbits.interior_orbits.to_string() << " (period " << orbits.interior_orbits.period() << ")\n";
  out << "interior det-twisted orbits: " << orbits.interior_det_orbits.to_string() << " (period "
      << orbits.interior_det_orbits.period() << ")\n";
  return out.str();
}

std::string check_report(const PropertyReport& report, ReportFormat format) {
  auto status = [](const PropertyResult& r) { return r.reported_only ? "INFO" : (r.passed ? "PASS" : "FAIL"); };
  if (format == ReportFormat::Json) {
    json root = json::object();
    root["instance"] = report.instance;
    root["passed"] = report.all_passed();
    root["failures"] = report.failures();
    json rs = json::array();
    for (const auto& r : report.results) rs.push_back(json{{"name", r.name}, {"status", status(r)}, {"detail", r.detail}});
    root["results"] = rs;
    return dump(root);
  }
  std::ostringstream out;
  if (format == ReportFormat::Csv) {
    out << "status,property,detail\n";
    for (const auto& r : report.results) out << status(r) << ',' << csv_escape(r.name) << ',' << csv_escape(r.detail) << '\n';
    return out.str();
  }
  for (const auto& r : report.results) {
    out << status(r) << "  " << r.name;
    if (!r.detail.empty()) out << "  [" << r.detail << "]";
    out << "\n";
  }
  out << report.instance << ": " << (report.all_passed() ? "all properties hold" : std::to_string(report.failures()) + " failed") << "\n";
  return out.str();
}

}  // namespace eqehr
