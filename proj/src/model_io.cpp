#include "lefschetz/model_io.hpp"

#include <fstream>
#include <sstream>

namespace lefschetz {

namespace {

using nlohmann::json;

const json& require_field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

int require_int(const json& doc, const char* key) {
  const auto& v = require_field(doc, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Rational require_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) throw ParseError("rational at " + where + " must be an \"a/b\" string");
  const auto parsed = parse_rational(v.get<std::string>());
  if (!parsed) throw ParseError("malformed rational \"" + v.get<std::string>() + "\" at " + where);
  return *parsed;
}

/// 1-based index from the file, returned 0-based.
int require_index(const json& doc, const char* key, int m, const std::string& where) {
  const auto& v = require_field(doc, key);
  if (!v.is_number_integer()) throw ParseError("index '" + std::string(key) + "' at " + where + " must be an integer");
  const int i = v.get<int>();
  if (i < 1 || i > m) throw ParseError("index " + std::to_string(i) + " at " + where + " out of range 1.." + std::to_string(m));
  return i - 1;
}

} // namespace

LieModel model_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("model file must be a JSON object");
  const auto& name_field = require_field(doc, "name");
  if (!name_field.is_string()) throw ParseError("field 'name' must be a string");
  const int m = require_int(doc, "dimension");
  const int p = require_int(doc, "p");
  const int n = require_int(doc, "n");
  if (p < 0 || n < 0 || m != p + 2 * n)
    throw ParseError("dimension must equal p + 2n");
  if (n < 1) throw ParseError("n must be at least 1 (omega lives on 2n transverse directions)");
  if (m > 30) throw ParseError("dimension too large (at most 30)");

  std::vector<std::string> names;
  const auto& names_field = require_field(doc, "basis_names");
  if (!names_field.is_array() || static_cast<int>(names_field.size()) != m)
    throw ParseError("basis_names must list exactly " + std::to_string(m) + " labels");
  for (const auto& nm : names_field) {
    if (!nm.is_string()) throw ParseError("basis_names entries must be strings");
    names.push_back(nm.get<std::string>());
  }

  LieModel model(name_field.get<std::string>(), make_frame(p, n, std::move(names)));

  const auto& brackets = require_field(doc, "brackets");
  if (!brackets.is_array()) throw ParseError("brackets must be an array");
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string where = "brackets[" + std::to_string(b) + "]";
    const auto& entry = brackets[b];
    const int i = require_index(entry, "i", m, where);
    const int j = require_index(entry, "j", m, where);
    if (i >= j) throw ParseError("need i < j at " + where);
    const auto& coeffs = require_field(entry, "coeffs");
    if (!coeffs.is_object()) throw ParseError("coeffs at " + where + " must be an object");
    std::map<int, Rational> table;
    for (const auto& [key, value] : coeffs.items()) {
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ParseError("coefficient key \"" + key + "\" at " + where + " is not an index");
      }
      if (k < 1 || k > m) throw ParseError("coefficient index " + key + " at " + where + " out of range");
      table[k - 1] = require_rational(value, where + ".coeffs." + key);
    }
    if (model.brackets.count({i, j})) throw ParseError("duplicate bracket at " + where);
    model.set_bracket(i, j, std::move(table));
  }

  Form omega(model.frame, 2);
  const auto& omega_field = require_field(doc, "omega");
  if (!omega_field.is_array()) throw ParseError("omega must be an array");
  for (std::size_t t = 0; t < omega_field.size(); ++t) {
    const std::string where = "omega[" + std::to_string(t) + "]";
    const auto& entry = omega_field[t];
    const int i = require_index(entry, "i", m, where);
    const int j = require_index(entry, "j", m, where);
    if (i >= j) throw ParseError("need i < j at " + where);
    omega.add_term((Mask(1) << i) | (Mask(1) << j),
                   require_rational(require_field(entry, "coeff"), where + ".coeff"));
  }
  model.omega = std::move(omega);
  return model;
}

LieModel parse_model(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return model_from_json(doc);
}

LieModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read model file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

nlohmann::ordered_json model_to_json(const LieModel& model) {
  nlohmann::ordered_json doc;
  doc["name"] = model.name;
  doc["dimension"] = model.frame->dim();
  doc["p"] = model.frame->leaf_dim;
  doc["n"] = model.frame->half_transverse;
  doc["basis_names"] = model.frame->names;
  auto brackets = nlohmann::ordered_json::array();
  for (const auto& [ij, coeffs] : model.brackets) {
    nlohmann::ordered_json entry;
    entry["i"] = ij.first + 1;
    entry["j"] = ij.second + 1;
    nlohmann::ordered_json table = nlohmann::ordered_json::object();
    for (const auto& [k, c] : coeffs) table[std::to_string(k + 1)] = to_string(c);
    entry["coeffs"] = std::move(table);
    brackets.push_back(std::move(entry));
  }
  doc["brackets"] = std::move(brackets);
  auto omega = nlohmann::ordered_json::array();
  for (const auto& [key, c] : model.omega.terms()) {
    nlohmann::ordered_json entry;
    Mask rest = key;
    entry["i"] = std::countr_zero(rest) + 1;
    rest &= rest - 1;
    entry["j"] = std::countr_zero(rest) + 1;
    entry["coeff"] = to_string(c);
    omega.push_back(std::move(entry));
  }
  doc["omega"] = std::move(omega);
  return doc;
}

} // namespace lefschetz
