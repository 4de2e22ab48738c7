#pragma once

#include "lefschetz/lie_model.hpp"

#include <optional>

namespace lefschetz {

/// Per-degree exact bases of the basic forms: transverse-supported φ with
/// θ(E_j)φ = 0 for every foliation direction. Degrees run 0..2n.
struct BasicComplex {
  FramePtr frame;
  std::vector<std::vector<Mask>> monomials_by_degree; // transverse monomials
  std::vector<std::vector<Form>> bases;               // basic basis per degree
  std::vector<RatMatrix> basis_matrices;              // monomials × basis columns

  int top_degree() const { return 2 * frame->half_transverse; }
  int dim(int r) const {
    return (r < 0 || r > top_degree()) ? 0 : static_cast<int>(bases[r].size());
  }
};

BasicComplex build_basic_complex(const LieModel& model);

/// True when φ is transverse-supported and θ(E_j)φ = 0 for all leaf E_j.
bool is_basic(const LieModel& model, const Form& phi);

/// Coordinates of φ in the degree-r basic basis, or nullopt when φ is not in
/// the span.
std::optional<std::vector<Rational>> basic_coordinates(const BasicComplex& complex,
                                                       int r, const Form& phi);

Form from_basic_coordinates(const BasicComplex& complex, int r,
                            const std::vector<Rational>& coords);

/// Characteristic form, mean curvature and the curvature defect:
///   χ = e_1*∧…∧e_p*,  κ = (−1)^{p+1} i(E_p)…i(E_1)dχ,  φ₀ = dχ + κ∧χ.
/// The structural identities dχ = −κ∧χ + φ₀ and i(E_p)…i(E_1)φ₀ = 0 are
/// verified on construction; the two flags record whether κ is basic
/// (isoparametric model) and whether dκ = 0.
struct MeanCurvatureData {
  Form chi;
  Form kappa;
  Form phi0;
  bool kappa_basic = false;
  bool dkappa_zero = false;
  bool rummler_identity = false;
  bool phi0_filtration = false;
};

MeanCurvatureData mean_curvature(const LieModel& model);

} // namespace lefschetz
