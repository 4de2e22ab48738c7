#pragma once

#include "lefschetz/symplectic.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lefschetz {

/// Finite-dimensional model of a transversely symplectic foliation: a Lie
/// algebra given by structure constants on the frame, a foliation spanned by
/// the first p directions, and a transverse symplectic form. Basic forms of
/// the foliation are modeled by the invariant basic forms of this algebra.
struct LieModel {
  std::string name;
  FramePtr frame;
  /// [e_i, e_j] = Σ_k c_{ij}^k e_k, keyed by (i, j) with i < j (0-based).
  std::map<std::pair<int, int>, std::map<int, Rational>> brackets;
  Form omega;

  LieModel(std::string model_name, FramePtr f)
      : name(std::move(model_name)), frame(std::move(f)), omega(frame, 0) {}

  void set_bracket(int i, int j, std::map<int, Rational> coeffs);
  /// Coefficients of [x, y] for coefficient vectors x, y over the frame.
  std::vector<Rational> bracket(const std::vector<Rational>& x,
                                const std::vector<Rational>& y) const;
};

struct ValidationReport {
  bool jacobi = false;
  bool foliation_subalgebra = false;
  bool omega_closed = false;
  bool omega_foliation_kernel = false;
  bool omega_nondegenerate = false;
  bool unimodular = false;
  std::vector<std::string> failures;

  bool passed() const {
    return jacobi && foliation_subalgebra && omega_closed &&
           omega_foliation_kernel && omega_nondegenerate;
  }
};

/// Structural checks on a model: Jacobi identity, bracket-closure of the
/// foliation span, dω = 0, ker ω ⊇ TF, nondegeneracy of ω on Q, and
/// unimodularity (tr ad = 0, reported but not required).
ValidationReport validate_model(const LieModel& model);

/// Invariant-forms differential, fixed by dα(X,Y) = −α([X,Y]) on degree 1
/// and extended as an antiderivation; d² = 0 is equivalent to Jacobi.
Form ce_differential(const LieModel& model, const Form& phi);

/// Lie derivative θ(X) = d∘i(X) + i(X)∘d along an invariant vector field.
Form lie_derivative(const LieModel& model, const Multivector& x, const Form& phi);

} // namespace lefschetz
