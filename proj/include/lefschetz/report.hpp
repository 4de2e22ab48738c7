#pragma once

#include "lefschetz/cohomology.hpp"
#include "lefschetz/identities.hpp"

#include <json.hpp>

namespace lefschetz {

/// Full pipeline output for one model. Every scalar in the JSON rendering is
/// an "a/b" string or an integer; the text rendering is human-oriented and
/// not a stability contract.
struct Report {
  LieModel model;
  ValidationReport validation;
  MeanCurvatureData mc;
  bool taut = false;
  bool taut_known = false; // tautness needs κ basic
  std::vector<int> basic_dims;
  std::vector<int> h_b_dims;
  std::vector<int> h_kappa_dims; // empty when H_κ is not defined
  bool h_kappa_defined = false;
  EvenBettiReport even_betti;
  HardLefschetzReport hard_lefschetz;
  IdentitySuiteSummary identities;

  Report(LieModel m) : model(std::move(m)) {}
};

/// Runs validation, mean curvature, cohomology, the Lefschetz/harmonic
/// equivalence and the identity suite. Throws std::invalid_argument when the
/// model fails structural validation.
Report build_report(const LieModel& model, std::uint64_t identity_seed = 1,
                    int identity_count = 16);

nlohmann::ordered_json report_to_json(const Report& report);

enum class ColorMode { automatic, never, always };
/// Reads LEFSCHETZ_LAB_COLOR ∈ {auto, never, always}; default auto.
ColorMode color_mode_from_env();

std::string report_to_text(const Report& report, ColorMode color, bool stdout_is_tty);

} // namespace lefschetz
