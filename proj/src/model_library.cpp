#include "lefschetz/model_library.hpp"

#include <stdexcept>

namespace lefschetz {

namespace {

Form two_form(const FramePtr& frame,
              const std::vector<std::tuple<int, int, Rational>>& entries) {
  Form omega(frame, 2);
  for (const auto& [i, j, c] : entries)
    omega.add_term((Mask(1) << i) | (Mask(1) << j), c);
  return omega;
}

/// Frame order puts the foliation direction first; the names keep the
/// conventional labels, so printed forms match the usual presentation.
ModelCatalogEntry heisenberg_contact() {
  auto frame = make_frame(1, 1, {"e3", "e1", "e2"});
  LieModel model("heisenberg_contact", frame);
  model.set_bracket(1, 2, {{0, Rational(1)}}); // [e1, e2] = e3
  model.omega = two_form(frame, {{1, 2, Rational(-1)}}); // ω = d e3* = −e1*∧e2*
  ModelExpectations exp;
  exp.kappa_display = "0";
  exp.phi0_display = "-e1*∧e2*";
  exp.taut = true;
  exp.h_b_dims = {1, 2, 1};
  exp.h_kappa_dims = {1, 2, 1};
  exp.harmonic_in_every_class = true;
  exp.lefschetz_surjective_all_r = true;
  return {std::move(model), std::move(exp)};
}

ModelCatalogEntry abelian_cosymplectic() {
  auto frame = make_frame(1, 1, {"e1", "e2", "e3"});
  LieModel model("abelian_cosymplectic", frame);
  model.omega = two_form(frame, {{1, 2, Rational(1)}}); // ω = e2*∧e3*
  ModelExpectations exp;
  exp.kappa_display = "0";
  exp.phi0_display = "0";
  exp.taut = true;
  exp.h_b_dims = {1, 2, 1};
  exp.h_kappa_dims = {1, 2, 1};
  exp.harmonic_in_every_class = true;
  exp.lefschetz_surjective_all_r = true;
  return {std::move(model), std::move(exp)};
}

ModelCatalogEntry sol_hyperbolic() {
  auto frame = make_frame(1, 1, {"e2", "e1", "e3"});
  LieModel model("sol_hyperbolic", frame);
  model.set_bracket(0, 1, {{0, Rational(-1)}}); // [e1, e2] = e2
  model.set_bracket(1, 2, {{2, Rational(-1)}}); // [e1, e3] = −e3
  model.omega = two_form(frame, {{1, 2, Rational(1)}}); // ω = e1*∧e3*
  ModelExpectations exp;
  exp.kappa_display = "e1*";
  exp.phi0_display = "0";
  exp.taut = false;
  exp.h_b_dims = {1, 1, 0};
  exp.h_kappa_dims = {0, 0, 0};
  exp.harmonic_in_every_class = true; // vacuously: H_κ = 0
  exp.lefschetz_surjective_all_r = true;
  return {std::move(model), std::move(exp)};
}

ModelCatalogEntry kt_product() {
  auto frame = make_frame(1, 2, {"e0", "e1", "e2", "e3", "e4"});
  LieModel model("kt_product", frame);
  model.set_bracket(1, 2, {{4, Rational(1)}}); // [e1, e2] = e4
  model.omega = two_form(frame, {{1, 3, Rational(1)}, {2, 4, Rational(1)}});
  ModelExpectations exp;
  exp.kappa_display = "0";
  exp.phi0_display = "0";
  exp.taut = true;
  exp.h_b_dims = {1, 3, 4, 3, 1};
  exp.h_kappa_dims = {1, 3, 4, 3, 1};
  exp.harmonic_in_every_class = false;
  exp.lefschetz_surjective_all_r = false;
  return {std::move(model), std::move(exp)};
}

} // namespace

std::vector<std::string> catalog_names() {
  return {"heisenberg_contact", "abelian_cosymplectic", "sol_hyperbolic", "kt_product"};
}

ModelCatalogEntry get_model(const std::string& name) {
  if (name == "heisenberg_contact") return heisenberg_contact();
  if (name == "abelian_cosymplectic") return abelian_cosymplectic();
  if (name == "sol_hyperbolic") return sol_hyperbolic();
  if (name == "kt_product") return kt_product();
  throw std::invalid_argument("unknown model '" + name + "'");
}

} // namespace lefschetz
