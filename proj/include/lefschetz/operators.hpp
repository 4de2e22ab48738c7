#pragma once

#include "lefschetz/basic_complex.hpp"

namespace lefschetz {

/// Everything operator assembly needs about one validated model. Immutable
/// after construction; all member functions are const and pure.
struct FoliationContext {
  LieModel model;
  SymplecticStructure symp;
  MeanCurvatureData mc;
  BasicComplex complex;
  bool unimodular = false;

  const FramePtr& frame() const { return model.frame; }
  int n() const { return model.frame->half_transverse; }
};

FoliationContext make_context(const LieModel& model);

// Form-level operators on basic forms. All of them keep the basic complex
// invariant, which the degree-matrix assembly below relies on.

/// d_B: the invariant differential restricted to basic forms.
Form d_B(const FoliationContext& ctx, const Form& phi);
/// δ_T = (−1)^r ⋆ d_B ⋆.
Form delta_T(const FoliationContext& ctx, const Form& phi);
/// δ_B = (−1)^r ⋆ (d_B − κ∧) ⋆, the symplectic adjoint of d_B.
Form delta_B(const FoliationContext& ctx, const Form& phi);
/// d_κ = d_B − ½ κ∧.
Form d_kappa(const FoliationContext& ctx, const Form& phi);
/// δ_κ = δ_B + ½ i(κ♯).
Form delta_kappa(const FoliationContext& ctx, const Form& phi);
/// θ(κ♯), via the Cartan formula.
Form theta_kappa_sharp(const FoliationContext& ctx, const Form& phi);
/// ε(κ) = κ∧·.
Form epsilon_kappa(const FoliationContext& ctx, const Form& phi);
/// i(κ♯).
Form i_kappa_sharp(const FoliationContext& ctx, const Form& phi);

enum class OperatorKind {
  dB,
  deltaT,
  deltaB,
  dKappa,
  deltaKappa,
  L,
  Lambda,
  A,
  thetaKappaSharp,
  epsilonKappa,
  iKappaSharp,
};

const char* kind_name(OperatorKind kind);
/// target_degree − source_degree for the kind.
int kind_degree_shift(OperatorKind kind);
/// Kinds built from κ require the model to be isoparametric.
bool kind_needs_kappa(OperatorKind kind);

/// Exact matrix of one operator between two graded pieces of the basic
/// complex, columns indexed by the source basic basis.
struct DegreeOperator {
  OperatorKind kind;
  int source_degree = 0;
  int target_degree = 0;
  RatMatrix matrix;
};

/// Assembles the matrix of `kind` on basic degree r. Throws
/// std::invalid_argument for κ-kinds on a non-isoparametric model
/// ("not isoparametric") and for r outside 0..2n.
DegreeOperator operator_matrix(const FoliationContext& ctx, OperatorKind kind, int r);

/// Form-level dispatch used by operator_matrix and the identity suite.
Form apply_operator(const FoliationContext& ctx, OperatorKind kind, const Form& phi);

/// Matrix of L^r between basic degrees n−r and n+r in the basic bases (the
/// restriction of the pointwise Lefschetz power to the basic complex).
struct BasicLefschetzPower {
  int r = 0;
  int source_degree = 0;
  int target_degree = 0;
  RatMatrix matrix;
  std::size_t rank = 0;
  bool bijective = false;
};
BasicLefschetzPower basic_lefschetz_power_matrix(const FoliationContext& ctx, int r);

} // namespace lefschetz
