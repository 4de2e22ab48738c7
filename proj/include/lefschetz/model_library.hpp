#pragma once

#include "lefschetz/lie_model.hpp"

#include <optional>

namespace lefschetz {

/// Hand-verified expected pipeline outputs for a built-in model; golden
/// values asserted by the test suite.
struct ModelExpectations {
  std::string kappa_display;
  std::string phi0_display;
  bool taut = false;
  bool unimodular = true;
  std::vector<int> h_b_dims;
  std::vector<int> h_kappa_dims;
  bool harmonic_in_every_class = false;
  bool lefschetz_surjective_all_r = false;
};

struct ModelCatalogEntry {
  LieModel model;
  ModelExpectations expected;
};

/// Built-in models:
///   heisenberg_contact  — contact flow on the Heisenberg algebra (κ = 0)
///   abelian_cosymplectic — cosymplectic flow on the abelian algebra
///   sol_hyperbolic      — suspension flow on the solvable algebra,
///                         nontaut with vanishing top basic cohomology
///   kt_product          — nilpotent contrast case where the Lefschetz map
///                         on cohomology fails to be surjective
std::vector<std::string> catalog_names();
ModelCatalogEntry get_model(const std::string& name);

} // namespace lefschetz
