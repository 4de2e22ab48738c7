#include "lefschetz/basic_complex.hpp"

#include <stdexcept>

namespace lefschetz {

bool is_basic(const LieModel& model, const Form& phi) {
  if (phi.support() & model.frame->leaf_mask()) return false;
  for (int j = 0; j < model.frame->leaf_dim; ++j) {
    const auto dir = Multivector::monomial(model.frame, Mask(1) << j);
    if (!lie_derivative(model, dir, phi).is_zero()) return false;
  }
  return true;
}

BasicComplex build_basic_complex(const LieModel& model) {
  BasicComplex bc;
  bc.frame = model.frame;
  const int p = model.frame->leaf_dim;
  const int q = 2 * model.frame->half_transverse;
  const Mask tmask = model.frame->transverse_mask();

  for (int r = 0; r <= q; ++r) {
    const auto mons = monomials(tmask, r);
    // constraint rows: coefficients of θ(E_j)(e_K*) over the full degree-r
    // monomials of the ambient frame, one block per leaf direction
    const auto full = monomials((Mask(1) << model.frame->dim()) - 1, r);
    RatMatrix constraints(full.size() * std::max(p, 1), mons.size());
    if (p > 0) {
      for (std::size_t col = 0; col < mons.size(); ++col) {
        const Form unit = Form::monomial(model.frame, mons[col]);
        for (int j = 0; j < p; ++j) {
          const auto dir = Multivector::monomial(model.frame, Mask(1) << j);
          const Form theta = lie_derivative(model, dir, unit);
          for (std::size_t row = 0; row < full.size(); ++row)
            constraints.at(j * full.size() + row, col) = theta.coeff(full[row]);
        }
      }
    }
    const auto kernel = constraints.kernel_basis();
    std::vector<Form> basis;
    for (const auto& vec : kernel) {
      Form phi(model.frame, r);
      for (std::size_t i = 0; i < mons.size(); ++i) phi.add_term(mons[i], vec[i]);
      basis.push_back(std::move(phi));
    }
    bc.monomials_by_degree.push_back(mons);
    bc.basis_matrices.push_back(RatMatrix::from_columns(mons.size(), kernel));
    bc.bases.push_back(std::move(basis));
  }
  return bc;
}

std::optional<std::vector<Rational>> basic_coordinates(const BasicComplex& complex,
                                                       int r, const Form& phi) {
  if (r < 0 || r > complex.top_degree()) {
    if (phi.is_zero()) return std::vector<Rational>{};
    return std::nullopt;
  }
  if (!phi.is_zero() && phi.degree() != r) return std::nullopt;
  const auto& mons = complex.monomials_by_degree[r];
  if (phi.support() & ~complex.frame->transverse_mask()) return std::nullopt;
  std::vector<Rational> vec(mons.size());
  for (std::size_t i = 0; i < mons.size(); ++i) vec[i] = phi.coeff(mons[i]);
  return complex.basis_matrices[r].solve(vec);
}

Form from_basic_coordinates(const BasicComplex& complex, int r,
                            const std::vector<Rational>& coords) {
  if (r < 0 || r > complex.top_degree())
    throw std::invalid_argument("from_basic_coordinates: degree out of range");
  const auto& basis = complex.bases[r];
  if (coords.size() != basis.size())
    throw std::invalid_argument("from_basic_coordinates: coordinate size mismatch");
  Form out(complex.frame, r);
  for (std::size_t i = 0; i < basis.size(); ++i) out += coords[i] * basis[i];
  return out;
}

MeanCurvatureData mean_curvature(const LieModel& model) {
  const int p = model.frame->leaf_dim;
  MeanCurvatureData mc;

  mc.chi = Form::monomial(model.frame, model.frame->leaf_mask());
  const Form dchi = ce_differential(model, mc.chi);

  const auto leaf_top = Multivector::monomial(model.frame, model.frame->leaf_mask());
  const Rational sign = (p % 2 == 0) ? Rational(-1) : Rational(1); // (−1)^{p+1}
  mc.kappa = sign * contract(leaf_top, dchi);
  mc.phi0 = dchi + wedge(mc.kappa, mc.chi);

  mc.rummler_identity = (dchi == -wedge(mc.kappa, mc.chi) + mc.phi0);
  mc.phi0_filtration = contract(leaf_top, mc.phi0).is_zero();
  mc.kappa_basic = is_basic(model, mc.kappa);
  mc.dkappa_zero = ce_differential(model, mc.kappa).is_zero();
  return mc;
}

} // namespace lefschetz
