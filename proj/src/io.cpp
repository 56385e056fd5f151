#include "prenichols/io.hpp"

#include <cstdio>

#include "prenichols/errors.hpp"

namespace prenichols {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("input document: missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ParseError("input document: field '" + what + "' has the wrong type");
  }
}

json vector_json(const IntVector& v) { return json(v); }

}  // namespace

InputDocument parse_input_document(const json& j) {
  if (!j.is_object()) throw ParseError("input document must be a JSON object");
  InputDocument d;
  d.zeta_order = get_as<int>(field(j, "zeta_order"), "zeta_order");
  d.size = get_as<int>(field(j, "size"), "size");
  d.matrix = get_as<std::vector<std::vector<std::string>>>(field(j, "matrix"), "matrix");
  if (d.zeta_order < 1) throw ParseError("input document: zeta_order must be positive");
  if (d.size < 1) throw ParseError("input document: size must be positive");
  if (d.matrix.size() != static_cast<std::size_t>(d.size))
    throw ParseError("input document: matrix must have 'size' rows");
  for (const auto& row : d.matrix)
    if (row.size() != static_cast<std::size_t>(d.size)) throw ParseError("input document: matrix must be square");
  if (j.contains("relations")) d.relations = get_as<std::vector<std::string>>(j.at("relations"), "relations");
  if (j.contains("recipes")) {
    for (const auto& r : get_as<std::vector<json>>(j.at("recipes"), "recipes")) {
      const IntVector root = get_as<IntVector>(field(r, "root"), "recipes.root");
      if (root.size() != static_cast<std::size_t>(d.size)) throw ParseError("input document: recipe root has wrong length");
      d.recipes.emplace_back(root, get_as<std::string>(field(r, "recipe"), "recipes.recipe"));
    }
  }
  if (j.contains("caps")) {
    const json& c = j.at("caps");
    if (!c.is_object()) throw ParseError("input document: caps must be an object");
    if (c.contains("max_words")) d.caps.max_words = get_as<std::size_t>(c.at("max_words"), "caps.max_words");
    if (c.contains("max_length")) d.caps.max_length = get_as<std::size_t>(c.at("max_length"), "caps.max_length");
    if (c.contains("max_objects")) d.caps.max_objects = get_as<std::size_t>(c.at("max_objects"), "caps.max_objects");
  }
  if (j.contains("name")) d.name = get_as<std::string>(j.at("name"), "name");
  if (j.contains("description")) d.description = get_as<std::string>(j.at("description"), "description");
  return d;
}

json to_json(const InputDocument& d) {
  json j = json::object();
  if (!d.name.empty()) j["name"] = d.name;
  if (!d.description.empty()) j["description"] = d.description;
  j["zeta_order"] = d.zeta_order;
  j["size"] = d.size;
  j["matrix"] = d.matrix;
  if (d.relations) j["relations"] = *d.relations;
  if (!d.recipes.empty()) {
    json rs = json::array();
    for (const auto& [root, text] : d.recipes) rs.push_back({{"root", vector_json(root)}, {"recipe", text}});
    j["recipes"] = rs;
  }
  json caps = json::object();
  if (d.caps.max_words) caps["max_words"] = *d.caps.max_words;
  if (d.caps.max_length) caps["max_length"] = *d.caps.max_length;
  if (d.caps.max_objects) caps["max_objects"] = *d.caps.max_objects;
  if (!caps.empty()) j["caps"] = caps;
  return j;
}

InputDocument document_from_braiding(const BraidingMatrix& b) {
  InputDocument d;
  d.zeta_order = b.ctx()->order();
  d.size = b.theta();
  d.matrix.assign(static_cast<std::size_t>(b.theta()), {});
  for (int i = 0; i < b.theta(); ++i)
    for (int j = 0; j < b.theta(); ++j) d.matrix[static_cast<std::size_t>(i)].push_back(b.q(i, j).to_string());
  return d;
}

InputDocument document_from_entry(const CatalogEntry& e) {
  InputDocument d = document_from_braiding(e.braiding);
  d.name = e.name;
  d.description = e.description;
  std::vector<std::string> rels;
  for (const auto& g : e.relations.generators) rels.push_back(to_string(g));
  d.relations = rels;
  for (const auto& [root, rec] : e.recipes) d.recipes.emplace_back(root, rec.to_string());
  return d;
}

LoadedInput load_input(const InputDocument& d) {
  const ContextPtr ctx = context(d.zeta_order);
  std::vector<CycNum> entries;
  for (const auto& row : d.matrix)
    for (const auto& s : row) entries.push_back(parse_cyclo(s, ctx));
  LoadedInput in{d.name, BraidingMatrix(ctx, d.size, std::move(entries)), std::nullopt, {}, {}, {}};
  if (d.relations) {
    RelationSet rels;
    for (const auto& s : *d.relations) rels.generators.push_back(parse_element(s, ctx, d.size));
    rels.label = d.name.empty() ? "input relations" : d.name + " relations";
    rels.validate(d.size);
    in.relations = std::move(rels);
  }
  for (const auto& [root, text] : d.recipes) in.recipes.insert_or_assign(root, parse_recipe(text, ctx, d.size));
  if (d.caps.max_words) in.quotient_caps.max_words = *d.caps.max_words;
  if (d.caps.max_length) in.root_caps.max_length = *d.caps.max_length;
  if (d.caps.max_objects) in.root_caps.max_objects = *d.caps.max_objects;
  return in;
}

json to_json(const RootSystemReport& r) {
  json j = json::object();
  j["theta"] = r.theta;
  json c = json::array();
  for (int i = 0; i < r.cartan_matrix.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < r.cartan_matrix.size(); ++k) row.push_back(r.cartan_matrix.at(i, k));
    c.push_back(row);
  }
  j["cartan_matrix"] = c;
  json roots = json::array();
  for (const auto& root : r.roots) {
    json x = {{"beta", vector_json(root.beta)}, {"cartan", root.cartan}, {"self_braiding", root.self_braiding.to_string()}};
    x["height"] = root.height ? json(*root.height) : json(nullptr);
    roots.push_back(x);
  }
  j["roots"] = roots;
  json word = json::array();
  for (int v : r.longest_word) word.push_back(v + 1);
  j["longest_word"] = word;
  j["groupoid_object_count"] = r.groupoid_object_count;
  j["groupoid_morphism_count"] = r.groupoid_morphism_count;
  json m = json::array();
  for (int i = 0; i < r.coxeter_m.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < r.coxeter_m.size(); ++k) row.push_back(r.coxeter_m.at(i, k));
    m.push_back(row);
  }
  j["coxeter_m"] = m;
  j["gk_dims"] = r.gk_dims;
  json lattice = json::array();
  for (const auto& v : r.z_lattice_basis) lattice.push_back(vector_json(v));
  j["z_lattice_basis"] = lattice;
  j["z_lattice_index"] = r.z_lattice_index ? json(*r.z_lattice_index) : json(nullptr);
  return j;
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace prenichols
