#include "eqehr/instance_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "eqehr/errors.hpp"
#include "eqehr/fixed_locus.hpp"
#include "json_values.hpp"

namespace eqehr {

using detail::cyclotomic_json;
using detail::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError("at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

BigInt parse_big(const json& v, const std::string& path) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? BigInt(std::to_string(v.get<std::uint64_t>()))
                                                            : BigInt(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    try {
      return parse_integer(v.get<std::string>());
    } catch (const std::exception&) {
      fail(path, "malformed integer string '" + v.get<std::string>() + "'");
    }
  }
  fail(path, "expected an integer or a decimal string");
}

std::int64_t parse_small(const json& v, const std::string& path) {
  const BigInt b = parse_big(v, path);
  try {
    return to_int64(b);
  } catch (const std::overflow_error&) {
    fail(path, "integer does not fit in 64 bits");
  }
}

BigRational parse_rat(const json& v, const std::string& path) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception&) {
      fail(path, "malformed rational '" + v.get<std::string>() + "'");
    }
  }
  return BigRational(parse_big(v, path));
}

IntVector parse_int_vector(const json& v, const std::string& path, std::size_t expected) {
  if (!v.is_array()) fail(path, "expected an array");
  if (v.size() != expected) fail(path, "expected " + std::to_string(expected) + " entries, found " + std::to_string(v.size()));
  IntVector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(parse_small(v[i], path + "/" + std::to_string(i)));
  return out;
}

GeneratorSpec parse_generator(const json& v, const std::string& path, std::size_t rank) {
  GeneratorSpec g;
  const json& m = field(v, "matrix", path);
  if (!m.is_array() || m.size() != rank) fail(path + "/matrix", "expected " + std::to_string(rank) + " rows");
  for (std::size_t i = 0; i < rank; ++i) g.matrix.push_back(parse_int_vector(m[i], path + "/matrix/" + std::to_string(i), rank));
  if (v.contains("translation"))
    g.translation = parse_int_vector(v["translation"], path + "/translation", rank);
  else
    g.translation.assign(rank, 0);
  return g;
}

CyclotomicValue parse_cyclotomic(const json& v, const std::string& path) {
  if (!v.is_object()) return CyclotomicValue(parse_rat(v, path));
  const json& order = field(v, "order", path);
  const json& coords = field(v, "coords", path);
  const std::int64_t n = parse_small(order, path + "/order");
  if (n < 1) fail(path + "/order", "order must be positive");
  if (!coords.is_array()) fail(path + "/coords", "expected an array");
  std::vector<BigRational> c;
  for (std::size_t i = 0; i < coords.size(); ++i) c.push_back(parse_rat(coords[i], path + "/coords/" + std::to_string(i)));
  return CyclotomicValue::from_polynomial(static_cast<unsigned>(n), RatPolynomial(std::move(c)));
}

CharacterTableSpec parse_table_json(const json& v, const std::string& path, std::size_t rank) {
  CharacterTableSpec spec;
  const json& reps = field(v, "class_representatives", path);
  if (!reps.is_array()) fail(path + "/class_representatives", "expected an array");
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const std::string p = path + "/class_representatives/" + std::to_string(i);
    std::size_t r = rank;
    if (r == 0) {
      const json& m = field(reps[i], "matrix", p);
      r = m.is_array() ? m.size() : 0;
    }
    spec.class_representatives.push_back(parse_generator(reps[i], p, r));
  }
  const json& chars = field(v, "characters", path);
  if (!chars.is_array()) fail(path + "/characters", "expected an array");
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const std::string p = path + "/characters/" + std::to_string(i);
    CharacterSpec c;
    if (chars[i].contains("label")) {
      if (!chars[i]["label"].is_string()) fail(p + "/label", "expected a string");
      c.label = chars[i]["label"].get<std::string>();
    } else {
      c.label = "chi" + std::to_string(i);
    }
    const json& vals = field(chars[i], "values", p);
    if (!vals.is_array() || vals.size() != spec.class_representatives.size())
      fail(p + "/values", "expected one value per class representative");
    for (std::size_t j = 0; j < vals.size(); ++j) c.values.push_back(parse_cyclotomic(vals[j], p + "/values/" + std::to_string(j)));
    spec.characters.push_back(std::move(c));
  }
  return spec;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
}

json generator_json(const GeneratorSpec& g) {
  json out = json::object();
  out["matrix"] = detail::int_rows_json(g.matrix);
  out["translation"] = detail::int_vector_json(g.translation);
  return out;
}

GeneratorSpec spec_of(const AffineLatticeAutomorphism& g) { return GeneratorSpec{g.linear().to_rows(), g.translation()}; }

AffineLatticeAutomorphism element_of(const GeneratorSpec& g) {
  return AffineLatticeAutomorphism(IntMatrix(g.matrix), g.translation);
}

}  // namespace

InstanceDocument parse_instance(const std::string& text) {
  const json root = parse_json_text(text);
  InstanceDocument doc;
  const std::int64_t rank = parse_small(field(root, "lattice_rank", ""), "/lattice_rank");
  if (rank < 1) fail("/lattice_rank", "must be positive");
  doc.lattice_rank = static_cast<std::size_t>(rank);
  const json& gens = field(root, "generators", "");
  if (!gens.is_array()) fail("/generators", "expected an array");
  for (std::size_t i = 0; i < gens.size(); ++i)
    doc.generators.push_back(parse_generator(gens[i], "/generators/" + std::to_string(i), doc.lattice_rank));
  const json& verts = field(root, "vertices", "");
  if (!verts.is_array() || verts.empty()) fail("/vertices", "expected a nonempty array");
  for (std::size_t i = 0; i < verts.size(); ++i)
    doc.vertices.push_back(parse_int_vector(verts[i], "/vertices/" + std::to_string(i), doc.lattice_rank));
  if (root.contains("character_table"))
    doc.character_table = parse_table_json(root["character_table"], "/character_table", doc.lattice_rank);
  if (root.contains("labels")) {
    const json& labels = root["labels"];
    if (!labels.is_object()) fail("/labels", "expected an object of strings");
    for (auto it = labels.begin(); it != labels.end(); ++it) {
      if (!it.value().is_string()) fail("/labels/" + it.key(), "expected a string");
      doc.labels[it.key()] = it.value().get<std::string>();
    }
  }
  return doc;
}

CharacterTableSpec parse_character_table(const std::string& text) {
  const json root = parse_json_text(text);
  const json& t = root.contains("character_table") ? root["character_table"] : root;
  return parse_table_json(t, root.contains("character_table") ? "/character_table" : "", 0);
}

std::string write_instance(const InstanceDocument& doc) {
  json root = json::object();
  root["lattice_rank"] = doc.lattice_rank;
  json gens = json::array();
  for (const auto& g : doc.generators) gens.push_back(generator_json(g));
  root["generators"] = gens;
  root["vertices"] = detail::int_rows_json(doc.vertices);
  if (doc.character_table) {
    json t = json::object();
    json reps = json::array();
    for (const auto& g : doc.character_table->class_representatives) reps.push_back(generator_json(g));
    t["class_representatives"] = reps;
    json chars = json::array();
    for (const auto& c : doc.character_table->characters) {
      json entry = json::object();
      entry["label"] = c.label;
      json vals = json::array();
      for (const auto& v : c.values) vals.push_back(cyclotomic_json(v));
      entry["values"] = vals;
      chars.push_back(entry);
    }
    t["characters"] = chars;
    root["character_table"] = t;
  }
  if (!doc.labels.empty()) root["labels"] = doc.labels;
  return root.dump(2) + "\n";
}

CharacterTableSpec spec_from_table(const CharacterTable& table) {
  CharacterTableSpec spec;
  const auto& g = *table.group;
  for (std::size_t c = 0; c < g.class_count(); ++c) spec.class_representatives.push_back(spec_of(g.representative(c)));
  for (std::size_t i = 0; i < table.size(); ++i)
    spec.characters.push_back(CharacterSpec{table.labels[i], table.characters[i].values()});
  return spec;
}

InstanceDocument document_from(const GalleryInstance& instance) {
  InstanceDocument doc;
  doc.lattice_rank = instance.polytope.ambient_dim();
  for (const auto& g : instance.group->generators()) doc.generators.push_back(spec_of(g));
  doc.vertices = instance.polytope.lattice_vertices();
  if (instance.table) doc.character_table = spec_from_table(*instance.table);
  doc.labels["name"] = instance.name;
  return doc;
}

CharacterTable table_from_spec(const GroupPtr& group, const CharacterTableSpec& spec) {
  const auto& g = *group;
  std::vector<std::optional<std::size_t>> column(g.class_count());
  for (std::size_t k = 0; k < spec.class_representatives.size(); ++k) {
    const GeneratorSpec& r = spec.class_representatives[k];
    if (r.matrix.size() != g.rank()) throw std::invalid_argument("class representative " + std::to_string(k) + " has the wrong rank");
    auto idx = g.find(element_of(r));
    if (!idx) throw std::invalid_argument("class representative " + std::to_string(k) + " is not in the group");
    auto& slot = column[g.class_of(*idx)];
    if (slot) throw std::invalid_argument("class representatives " + std::to_string(*slot) + " and " + std::to_string(k) + " are conjugate");
    slot = k;
  }
  for (std::size_t c = 0; c < column.size(); ++c)
    if (!column[c]) throw std::invalid_argument("no representative given for conjugacy class " + std::to_string(c));
  std::vector<ClassFunction> chars;
  std::vector<std::string> labels;
  for (const auto& ch : spec.characters) {
    std::vector<CyclotomicValue> vals;
    for (std::size_t c = 0; c < column.size(); ++c) vals.push_back(ch.values[*column[c]]);
    chars.emplace_back(group, std::move(vals));
    labels.push_back(ch.label);
  }
  return character_table_from_values(group, std::move(chars), std::move(labels));
}

GalleryInstance instantiate(const InstanceDocument& doc, std::size_t cap) {
  GalleryInstance out;
  auto name = doc.labels.find("name");
  out.name = name == doc.labels.end() ? "instance" : name->second;
  std::vector<AffineLatticeAutomorphism> gens;
  for (const auto& g : doc.generators) gens.push_back(element_of(g));
  out.polytope = RationalPolytope::hull_of_lattice_points(doc.lattice_rank, doc.vertices);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& v : out.polytope.lattice_vertices()) {
      const IntVector image = gens[i].apply(v);
      RatVector q(image.begin(), image.end());
      const auto& vs = out.polytope.vertices();
      if (!std::binary_search(vs.begin(), vs.end(), q)) {
        std::ostringstream msg;
        msg << "generator " << i << " sends vertex (";
        for (std::size_t k = 0; k < v.size(); ++k) msg << (k ? "," : "") << v[k];
        msg << ") to a non-vertex";
        throw NotInvariant(msg.str());
      }
    }
  }
  out.group = generate_group(doc.lattice_rank, gens, cap);
  if (doc.character_table) out.table = table_from_spec(out.group, *doc.character_table);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace eqehr
