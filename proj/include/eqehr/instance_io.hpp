#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqehr/gallery.hpp"

namespace eqehr {

struct GeneratorSpec {
  std::vector<IntVector> matrix;  // rows
  IntVector translation;
  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

struct CharacterSpec {
  std::string label;
  std::vector<CyclotomicValue> values;  // one per listed class representative
  friend bool operator==(const CharacterSpec&, const CharacterSpec&) = default;
};

struct CharacterTableSpec {
  std::vector<GeneratorSpec> class_representatives;
  std::vector<CharacterSpec> characters;
  friend bool operator==(const CharacterTableSpec&, const CharacterTableSpec&) = default;
};

// JSON document describing P and G.  Integers are JSON numbers or decimal
// strings; cyclotomic values are integers, "p/q" strings or
// {"order": N, "coords": [...]} in the power basis of Q(zeta_N).
struct InstanceDocument {
  std::size_t lattice_rank = 0;
  std::vector<GeneratorSpec> generators;
  std::vector<IntVector> vertices;
  std::optional<CharacterTableSpec> character_table;
  std::map<std::string, std::string> labels;
  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

// Throws ParseError naming the line (syntax) or the JSON path (structure).
InstanceDocument parse_instance(const std::string& text);
CharacterTableSpec parse_character_table(const std::string& text);
std::string write_instance(const InstanceDocument& doc);

InstanceDocument document_from(const GalleryInstance& instance);
// Builds the group (within cap), the polytope and the optional table.
// Throws NotInvariant with the offending generator and vertex.
GalleryInstance instantiate(const InstanceDocument& doc, std::size_t cap = default_group_cap);
CharacterTable table_from_spec(const GroupPtr& group, const CharacterTableSpec& spec);
CharacterTableSpec spec_from_table(const CharacterTable& table);

std::string read_file(const std::string& path);

}  // namespace eqehr
