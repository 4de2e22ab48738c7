#include "lefschetz/symplectic.hpp"

#include <stdexcept>

namespace lefschetz {

namespace {

void require_transverse(const SymplecticStructure& s, Mask support, const char* op) {
  if (support & s.frame->leaf_mask())
    throw std::invalid_argument(std::string(op) + ": support touches a foliation index");
}

int transverse_slot(const SymplecticStructure& s, int frame_index) {
  return frame_index - s.frame->leaf_dim;
}

} // namespace

SymplecticStructure make_symplectic(const FramePtr& frame, const Form& omega) {
  if (!same_frame(frame, omega.frame()))
    throw std::invalid_argument("make_symplectic: frame mismatch");
  if (!omega.is_zero() && omega.degree() != 2)
    throw std::invalid_argument("make_symplectic: omega must have degree 2");
  if (omega.support() & frame->leaf_mask())
    throw std::invalid_argument("make_symplectic: omega must be supported on transverse indices");

  SymplecticStructure s;
  s.frame = frame;
  s.omega = omega;
  const int p = frame->leaf_dim;
  const int q = 2 * frame->half_transverse;
  for (int i = 0; i < q; ++i) s.transverse.push_back(p + i);

  // fill ω(e_i, e_j) from the coefficient table: key {i,j} with i<j has ω_ij = c
  s.omega_matrix = RatMatrix(q, q);
  for (const auto& [key, c] : omega.terms()) {
    Mask rest = key;
    const int i = std::countr_zero(rest);
    rest &= rest - 1;
    const int j = std::countr_zero(rest);
    s.omega_matrix.at(transverse_slot(s, i), transverse_slot(s, j)) = c;
    s.omega_matrix.at(transverse_slot(s, j), transverse_slot(s, i)) = -c;
  }

  auto inv = s.omega_matrix.inverse();
  if (!inv) throw std::invalid_argument("make_symplectic: omega is degenerate on Q");
  s.omega_inverse = *inv;

  // G = W⁻¹ W (W⁻¹)ᵀ = (W⁻¹)ᵀ = −W⁻¹ for antisymmetric W
  s.pairing_gram = s.omega_inverse.scaled(Rational(-1));

  // ν = ωⁿ/n!
  Form nu = Form::unit(frame);
  Rational fact(1);
  for (int k = 1; k <= frame->half_transverse; ++k) {
    nu = wedge(nu, omega);
    fact *= k;
  }
  s.volume = (Rational(1) / fact) * nu;
  if (s.volume.is_zero())
    throw std::invalid_argument("make_symplectic: omega^n vanishes");

  // built after omega_inverse so sharp() can use it
  s.omega_sharp = sharp(s, omega);
  return s;
}

Form flat(const SymplecticStructure& s, const Multivector& p) {
  if (!same_frame(s.frame, p.frame())) throw std::invalid_argument("flat: frame mismatch");
  require_transverse(s, p.support(), "flat");
  Form out(s.frame, p.degree());
  for (const auto& [key, c] : p.terms()) {
    Form acc = Form::unit(s.frame, c);
    for (Mask rest = key; rest && !acc.is_zero();) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      // ♭(e_i) = i(e_i)ω = Σ_j ω_ij e_j*
      Form image(s.frame, 1);
      const int a = transverse_slot(s, i);
      for (int b = 0; b < static_cast<int>(s.omega_matrix.cols()); ++b) {
        const Rational& w = s.omega_matrix.at(a, b);
        if (w != 0) image.add_term(Mask(1) << s.transverse[b], w);
      }
      acc = wedge(acc, image);
    }
    out += acc;
  }
  return out;
}

Multivector sharp(const SymplecticStructure& s, const Form& phi) {
  if (!same_frame(s.frame, phi.frame())) throw std::invalid_argument("sharp: frame mismatch");
  require_transverse(s, phi.support(), "sharp");
  Multivector out(s.frame, phi.degree());
  for (const auto& [key, c] : phi.terms()) {
    Multivector acc = Multivector::unit(s.frame, c);
    for (Mask rest = key; rest && !acc.is_zero();) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      // ♯(e_k*) = Σ_i (W⁻¹)_ki e_i
      Multivector image(s.frame, 1);
      const int a = transverse_slot(s, i);
      for (int b = 0; b < static_cast<int>(s.omega_inverse.cols()); ++b) {
        const Rational& w = s.omega_inverse.at(a, b);
        if (w != 0) image.add_term(Mask(1) << s.transverse[b], w);
      }
      acc = wedge(acc, image);
    }
    out += acc;
  }
  return out;
}

Rational omega_pair(const SymplecticStructure& s, const Form& phi, const Form& psi) {
  if (!same_frame(s.frame, phi.frame()) || !same_frame(s.frame, psi.frame()))
    throw std::invalid_argument("omega_pair: frame mismatch");
  if (!phi.is_zero() && !psi.is_zero() && phi.degree() != psi.degree())
    throw std::invalid_argument("omega_pair: degree mismatch");
  require_transverse(s, phi.support() | psi.support(), "omega_pair");
  if (phi.is_zero() || psi.is_zero()) return Rational(0);
  const int r = phi.degree();
  if (r == 0) return phi.coeff(0) * psi.coeff(0);

  Rational total(0);
  for (const auto& [ka, ca] : phi.terms())
    for (const auto& [kb, cb] : psi.terms()) {
      // det of the Gram block picked out by the two index sets
      RatMatrix block(r, r);
      int row = 0;
      for (Mask ra = ka; ra; ra &= ra - 1, ++row) {
        const int i = transverse_slot(s, std::countr_zero(ra));
        int col = 0;
        for (Mask rb = kb; rb; rb &= rb - 1, ++col)
          block.at(row, col) = s.pairing_gram.at(i, transverse_slot(s, std::countr_zero(rb)));
      }
      total += ca * cb * block.determinant();
    }
  return total;
}

Form star(const SymplecticStructure& s, const Form& phi) {
  if (!same_frame(s.frame, phi.frame())) throw std::invalid_argument("star: frame mismatch");
  require_transverse(s, phi.support(), "star");
  if (!phi.is_zero() && phi.degree() > 2 * s.n())
    throw std::invalid_argument("star: degree exceeds transverse dimension");
  return contract(sharp(s, phi), s.volume);
}

Rational integrate(const Form& phi, const Form& model_volume) {
  if (!same_frame(phi.frame(), model_volume.frame()))
    throw std::invalid_argument("integrate: frame mismatch");
  const int m = phi.frame()->dim();
  if (model_volume.is_zero() || model_volume.degree() != m)
    throw std::invalid_argument("integrate: model volume must be a nonzero top form");
  if (!phi.is_zero() && phi.degree() != m)
    throw std::invalid_argument("integrate: form must be top degree");
  const Mask top = (Mask(1) << m) - 1;
  const Rational denom = model_volume.coeff(top);
  if (denom == 0) throw std::invalid_argument("integrate: model volume has no top coefficient");
  return phi.coeff(top) / denom;
}

} // namespace lefschetz
