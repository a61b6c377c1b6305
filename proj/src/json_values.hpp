#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "eqehr/cyclotomic.hpp"
#include "eqehr/lattice_group.hpp"

namespace eqehr::detail {

using json = nlohmann::ordered_json;

// Integers inside the double-exact range stay numbers, larger ones become strings.
inline json big_json(const BigInt& v) {
  if (abs(v) < BigInt("9007199254740992")) return v.get_si();
  return v.get_str();
}

inline json int_json(std::int64_t v) {
  constexpr std::int64_t exact = std::int64_t{1} << 53;
  if (v > -exact && v < exact) return v;
  return std::to_string(v);
}

inline json int_vector_json(const IntVector& v) {
  json out = json::array();
  for (auto x : v) out.push_back(int_json(x));
  return out;
}

inline json int_rows_json(const std::vector<IntVector>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(int_vector_json(r));
  return out;
}

inline json rat_json(const BigRational& q) {
  if (q.get_den() == 1) return big_json(q.get_num());
  return to_string(q);
}

inline json cyclotomic_json(const CyclotomicValue& v) {
  if (v.is_rational()) return rat_json(v.rational());
  json coords = json::array();
  for (const auto& c : v.coordinates()) coords.push_back(rat_json(c));
  json out = json::object();
  out["order"] = v.order();
  out["coords"] = coords;
  return out;
}

inline json class_function_json(const ClassFunction& f) {
  json out = json::array();
  for (const auto& v : f.values()) out.push_back(cyclotomic_json(v));
  return out;
}

inline json polynomial_json(const IntPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(big_json(c));
  return out;
}

inline json element_json(const AffineLatticeAutomorphism& g) {
  json out = json::object();
  out["matrix"] = int_rows_json(g.linear().to_rows());
  out["translation"] = int_vector_json(g.translation());
  return out;
}

}  // namespace eqehr::detail
