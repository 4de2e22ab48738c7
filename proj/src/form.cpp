#include "lefschetz/form.hpp"

namespace lefschetz {

int merge_sign(Mask a, Mask b) {
  // parity of #{(i, j) : i in a, j in b, i > j}
  int inversions = 0;
  for (Mask rest = a; rest;) {
    const int i = std::countr_zero(rest);
    rest &= rest - 1;
    inversions += std::popcount(b & ((Mask(1) << i) - 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

Form contract_dir(int index, const Form& phi) {
  Form out(phi.frame(), phi.is_zero() || phi.degree() == 0 ? 0 : phi.degree() - 1);
  const Mask bit = Mask(1) << index;
  for (const auto& [k, c] : phi.terms()) {
    if (!(k & bit)) continue;
    const int below = std::popcount(k & (bit - 1));
    out.add_term(k & ~bit, (below % 2 == 0) ? c : -c);
  }
  return out;
}

Form contract(const Multivector& p, const Form& phi) {
  if (!same_frame(p.frame(), phi.frame()))
    throw std::invalid_argument("contract: frame mismatch");
  if (p.is_zero() || phi.is_zero()) return Form(phi.frame(), 0);
  if (p.degree() > phi.degree()) return Form(phi.frame(), 0);
  Form out(phi.frame(), phi.degree() - p.degree());
  for (const auto& [kp, cp] : p.terms()) {
    // i(e_{i1}∧…∧e_{ir}) = i(e_{ir})…i(e_{i1}): fold over indices ascending
    Form acc = cp * phi;
    for (Mask rest = kp; rest && !acc.is_zero();) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      acc = contract_dir(i, acc);
    }
    out += acc;
  }
  return out;
}

std::string mask_to_string(const Frame& frame, Mask key, bool covariant) {
  std::string out;
  bool first = true;
  for (Mask rest = key; rest;) {
    const int i = std::countr_zero(rest);
    rest &= rest - 1;
    if (!first) out += "∧";
    first = false;
    out += frame.names[i];
    if (covariant) out += "*";
  }
  return out;
}

} // namespace lefschetz
