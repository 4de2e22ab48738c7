#include "lefschetz/random_forms.hpp"

namespace lefschetz {

Form random_transverse_form(Rng& rng, const SymplecticStructure& s, int degree) {
  Form out(s.frame, degree);
  for (const Mask key : monomials(s.frame->transverse_mask(), degree)) {
    if (rng.next() % 2) continue;
    out.add_term(key, Rational(rng.uniform(-3, 3)));
  }
  return out;
}

Form random_basic_form(Rng& rng, const BasicComplex& complex, int degree) {
  Form out(complex.frame, degree);
  if (degree < 0 || degree > complex.top_degree()) return Form(complex.frame, 0);
  for (const auto& basis_form : complex.bases[degree]) {
    if (rng.next() % 2) continue;
    out += Rational(rng.uniform(-3, 3)) * basis_form;
  }
  return out;
}

Multivector random_transverse_vector(Rng& rng, const SymplecticStructure& s) {
  Multivector out(s.frame, 1);
  for (const int i : s.transverse) {
    if (rng.next() % 2) continue;
    out.add_term(Mask(1) << i, Rational(rng.uniform(-3, 3)));
  }
  return out;
}

} // namespace lefschetz
