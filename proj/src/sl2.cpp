#include "lefschetz/sl2.hpp"

#include <stdexcept>

namespace lefschetz {
namespace sl2 {

Form L(const SymplecticStructure& s, const Form& phi) {
  if (!same_frame(s.frame, phi.frame())) throw std::invalid_argument("L: frame mismatch");
  return wedge(s.omega, phi);
}

Form Lambda(const SymplecticStructure& s, const Form& phi) {
  if (!same_frame(s.frame, phi.frame())) throw std::invalid_argument("Lambda: frame mismatch");
  return contract(s.omega_sharp, phi);
}

Form A(const SymplecticStructure& s, const Form& phi) {
  if (!same_frame(s.frame, phi.frame())) throw std::invalid_argument("A: frame mismatch");
  return Rational(s.n() - phi.degree()) * phi;
}

Form L_power(const SymplecticStructure& s, const Form& phi, int k) {
  Form out = phi;
  for (int i = 0; i < k; ++i) out = L(s, out);
  return out;
}

namespace {

RatMatrix operator_matrix_on_monomials(const SymplecticStructure& s,
                                       const std::vector<Mask>& source,
                                       const std::vector<Mask>& target,
                                       int power) {
  RatMatrix m(target.size(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    const Form img = L_power(s, Form::monomial(s.frame, source[j]), power);
    for (std::size_t i = 0; i < target.size(); ++i) m.at(i, j) = img.coeff(target[i]);
  }
  return m;
}

} // namespace

LefschetzPowerMatrix lefschetz_power_matrix(const SymplecticStructure& s, int r) {
  const int n = s.n();
  if (r < 0 || r > n) throw std::invalid_argument("lefschetz_power_matrix: r out of range");
  LefschetzPowerMatrix out;
  out.r = r;
  out.source_degree = n - r;
  out.target_degree = n + r;
  const auto src = monomials(s.frame->transverse_mask(), out.source_degree);
  const auto dst = monomials(s.frame->transverse_mask(), out.target_degree);
  out.matrix = operator_matrix_on_monomials(s, src, dst, r);
  out.rank = out.matrix.rank();
  out.bijective = out.matrix.rows() == out.matrix.cols() && out.rank == out.matrix.rows();
  return out;
}

bool is_primitive(const SymplecticStructure& s, const Form& phi) {
  return Lambda(s, phi).is_zero();
}

PrimitiveDecomposition primitive_decompose(const SymplecticStructure& s, const Form& phi) {
  if (!same_frame(s.frame, phi.frame()))
    throw std::invalid_argument("primitive_decompose: frame mismatch");
  if (phi.support() & s.frame->leaf_mask())
    throw std::invalid_argument("primitive_decompose: transverse support required");

  PrimitiveDecomposition out;
  out.source = phi;
  if (phi.is_zero()) return out;

  const int n = s.n();
  const int r = phi.degree();
  const int k_min = std::max(0, r - n);
  const int k_max = r / 2;
  const Mask allowed = s.frame->transverse_mask();

  // Unknowns: coefficients of each β_k over the degree r−2k monomials.
  // Rows: reconstruction Σ L^k β_k = φ, plus Λβ_k = 0 per component.
  std::vector<std::vector<Mask>> comp_basis;
  std::vector<int> offsets;
  int cols = 0;
  for (int k = k_min; k <= k_max; ++k) {
    comp_basis.push_back(monomials(allowed, r - 2 * k));
    offsets.push_back(cols);
    cols += static_cast<int>(comp_basis.back().size());
  }

  const auto target = monomials(allowed, r);
  int rows = static_cast<int>(target.size());
  std::vector<std::vector<Mask>> lowered;
  for (int k = k_min; k <= k_max; ++k) {
    lowered.push_back(monomials(allowed, r - 2 * k - 2));
    rows += static_cast<int>(lowered.back().size());
  }

  RatMatrix system(rows, cols);
  std::vector<Rational> rhs(rows);
  for (std::size_t i = 0; i < target.size(); ++i) rhs[i] = phi.coeff(target[i]);

  int row_base = static_cast<int>(target.size());
  for (int idx = 0; idx <= k_max - k_min; ++idx) {
    const int k = k_min + idx;
    const auto& basis = comp_basis[idx];
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Form unit = Form::monomial(s.frame, basis[j]);
      const Form raised = L_power(s, unit, k);
      for (std::size_t i = 0; i < target.size(); ++i)
        system.at(i, offsets[idx] + j) = raised.coeff(target[i]);
      const Form low = Lambda(s, unit);
      const auto& low_basis = lowered[idx];
      for (std::size_t i = 0; i < low_basis.size(); ++i)
        system.at(row_base + i, offsets[idx] + j) = low.coeff(low_basis[i]);
    }
    row_base += static_cast<int>(lowered[idx].size());
  }

  auto sol = system.solve(rhs);
  if (!sol || system.rank() != static_cast<std::size_t>(cols))
    throw std::logic_error("primitive_decompose: decomposition system is not uniquely solvable");

  for (int idx = 0; idx <= k_max - k_min; ++idx) {
    const int k = k_min + idx;
    Form beta(s.frame, r - 2 * k);
    for (std::size_t j = 0; j < comp_basis[idx].size(); ++j)
      beta.add_term(comp_basis[idx][j], (*sol)[offsets[idx] + j]);
    if (!beta.is_zero()) out.components.emplace_back(k, std::move(beta));
  }
  return out;
}

} // namespace sl2
} // namespace lefschetz
