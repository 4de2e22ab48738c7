#pragma once

#include "lefschetz/lie_model.hpp"

#include <json.hpp>
#include <stdexcept>
#include <string>

namespace lefschetz {

/// Malformed model file (bad JSON, bad schema, bad rational, bad index).
/// The CLI maps this to exit code 2; mathematical failures are exit 1.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Model file schema (UTF-8 JSON, 1-based indices, i < j everywhere,
/// rationals as "a/b" or "a" strings; foliation = first p indices):
/// {
///   "name": "...", "dimension": m, "p": p, "n": n,
///   "basis_names": ["...", ...],
///   "brackets": [{"i": 1, "j": 2, "coeffs": {"3": "1/2"}}, ...],
///   "omega": [{"i": 2, "j": 3, "coeff": "1"}, ...]
/// }
LieModel model_from_json(const nlohmann::json& doc);
LieModel parse_model(const std::string& text);
LieModel load_model_file(const std::string& path);

nlohmann::ordered_json model_to_json(const LieModel& model);

} // namespace lefschetz
