#ifndef PRENICHOLS_IO_HPP
#define PRENICHOLS_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "prenichols/catalog.hpp"

namespace prenichols {

/*
 * JSON input file:
 *   {"zeta_order": 5, "size": 2, "matrix": [["z", "z"], ["z", "-1"]],
 *    "relations": ["22", ...], "recipes": [{"root": [2, 1], "recipe": "(ad 1 (ad 1 2))"}],
 *    "caps": {"max_words": 200000, "max_length": 10000, "max_objects": 1000}}
 * relations, recipes and caps are optional; name and description are carried
 * through when present.
 */
struct InputCaps {
  std::optional<std::size_t> max_words;
  std::optional<std::size_t> max_length;
  std::optional<std::size_t> max_objects;
};

struct InputDocument {
  int zeta_order = 0;
  int size = 0;
  std::vector<std::vector<std::string>> matrix;
  std::optional<std::vector<std::string>> relations;
  std::vector<std::pair<IntVector, std::string>> recipes;
  InputCaps caps;
  std::string name;
  std::string description;
};

// Throws ParseError on missing or mistyped fields.
InputDocument parse_input_document(const nlohmann::json& j);
nlohmann::json to_json(const InputDocument& doc);

InputDocument document_from_braiding(const BraidingMatrix& b);
InputDocument document_from_entry(const CatalogEntry& e);

// An input document resolved into library objects.
struct LoadedInput {
  std::string name;
  BraidingMatrix braiding;
  std::optional<RelationSet> relations;
  std::map<IntVector, Recipe> recipes;
  QuotientCaps quotient_caps;
  RootCaps root_caps;
};

// Throws ParseError or ValidationError.
LoadedInput load_input(const InputDocument& doc);

nlohmann::json to_json(const RootSystemReport& r);

// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

}  // namespace prenichols

#endif  // PRENICHOLS_IO_HPP
