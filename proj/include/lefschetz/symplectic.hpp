#pragma once

#include "lefschetz/form.hpp"
#include "lefschetz/matrix.hpp"

namespace lefschetz {

/// The transverse symplectic form ω together with the derived data every
/// operator needs: its matrix on the transverse directions, the inverse
/// (for ♯), the pairing Gram matrix G_ij = ω(e_i*♯, e_j*♯), the volume
/// ν = ωⁿ/n!, and ω♯.
///
/// ω must be a degree-2 form supported on transverse indices and
/// nondegenerate there; construction fails loudly otherwise. Closedness is
/// a property of the model differential and is checked by validate_model.
struct SymplecticStructure {
  FramePtr frame;
  Form omega;              // degree 2, transverse support
  RatMatrix omega_matrix;  // 2n×2n, entries ω(e_i, e_j) over transverse indices
  RatMatrix omega_inverse;
  RatMatrix pairing_gram;  // 2n×2n, entries ω(e_i*♯, e_j*♯)
  Form volume;             // ν = ωⁿ/n!
  Multivector omega_sharp; // ♯ω
  std::vector<int> transverse; // frame indices p..m-1, in order

  int n() const { return frame->half_transverse; }
};

SymplecticStructure make_symplectic(const FramePtr& frame, const Form& omega);

/// ♭: multivectors on Q to transverse forms; degree 1 is X ↦ i(X)ω, higher
/// degrees the exterior power. Errors if the support touches the foliation.
Form flat(const SymplecticStructure& s, const Multivector& p);

/// ♯ = ♭⁻¹, computed from the inverse matrix of ω on degree 1 and extended
/// as an exterior power.
Multivector sharp(const SymplecticStructure& s, const Form& phi);

/// ω(φ,ψ) for equal-degree transverse forms: bilinear extension of
/// det(ω(φ_i,ψ_j)) over decomposables; plain product in degree 0.
Rational omega_pair(const SymplecticStructure& s, const Form& phi, const Form& psi);

/// Symplectic star, ⋆φ = i(φ♯)ν. Degree r goes to 2n−r, and ⋆⋆ = id.
Form star(const SymplecticStructure& s, const Form& phi);

/// Coefficient c with φ = c·model_volume; both must be top-degree.
Rational integrate(const Form& phi, const Form& model_volume);

} // namespace lefschetz
