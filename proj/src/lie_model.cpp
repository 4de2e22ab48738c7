#include "lefschetz/lie_model.hpp"

#include <stdexcept>

namespace lefschetz {

void LieModel::set_bracket(int i, int j, std::map<int, Rational> coeffs) {
  if (i >= j) throw std::invalid_argument("set_bracket: need i < j");
  if (j >= frame->dim()) throw std::invalid_argument("set_bracket: index out of range");
  for (auto& [k, c] : coeffs)
    if (k < 0 || k >= frame->dim())
      throw std::invalid_argument("set_bracket: target index out of range");
  std::erase_if(coeffs, [](const auto& kv) { return kv.second == 0; });
  if (coeffs.empty())
    brackets.erase({i, j});
  else
    brackets[{i, j}] = std::move(coeffs);
}

std::vector<Rational> LieModel::bracket(const std::vector<Rational>& x,
                                        const std::vector<Rational>& y) const {
  const int m = frame->dim();
  if (static_cast<int>(x.size()) != m || static_cast<int>(y.size()) != m)
    throw std::invalid_argument("bracket: coefficient vector size mismatch");
  std::vector<Rational> out(m);
  for (const auto& [ij, coeffs] : brackets) {
    const auto [i, j] = ij;
    const Rational cross = x[i] * y[j] - x[j] * y[i];
    if (cross == 0) continue;
    for (const auto& [k, c] : coeffs) out[k] += cross * c;
  }
  return out;
}

namespace {

std::vector<Rational> basis_vector(int m, int i) {
  std::vector<Rational> v(m);
  v[i] = 1;
  return v;
}

} // namespace

ValidationReport validate_model(const LieModel& model) {
  ValidationReport rep;
  const int m = model.frame->dim();
  const int p = model.frame->leaf_dim;

  rep.jacobi = true;
  for (int i = 0; i < m && rep.jacobi; ++i)
    for (int j = i + 1; j < m && rep.jacobi; ++j)
      for (int k = j + 1; k < m; ++k) {
        const auto ei = basis_vector(m, i), ej = basis_vector(m, j), ek = basis_vector(m, k);
        auto sum = model.bracket(model.bracket(ei, ej), ek);
        const auto t2 = model.bracket(model.bracket(ej, ek), ei);
        const auto t3 = model.bracket(model.bracket(ek, ei), ej);
        bool zero = true;
        for (int t = 0; t < m; ++t) {
          sum[t] += t2[t] + t3[t];
          if (sum[t] != 0) zero = false;
        }
        if (!zero) {
          rep.jacobi = false;
          rep.failures.push_back("Jacobi identity fails on triple (" + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
          break;
        }
      }

  rep.foliation_subalgebra = true;
  for (int i = 0; i < p && rep.foliation_subalgebra; ++i)
    for (int j = i + 1; j < p; ++j) {
      const auto br = model.bracket(basis_vector(m, i), basis_vector(m, j));
      for (int k = p; k < m; ++k)
        if (br[k] != 0) {
          rep.foliation_subalgebra = false;
          rep.failures.push_back("foliation span is not closed under the bracket: [" +
                                 model.frame->names[i] + "," + model.frame->names[j] +
                                 "] leaves it");
          break;
        }
    }

  rep.omega_closed = ce_differential(model, model.omega).is_zero();
  if (!rep.omega_closed) rep.failures.push_back("omega is not closed");

  // i(E_j)omega = 0 for every leaf direction, i.e. no key of omega touches
  // a foliation index
  rep.omega_foliation_kernel = true;
  for (int j = 0; j < p; ++j)
    if (!contract_dir(j, model.omega).is_zero()) {
      rep.omega_foliation_kernel = false;
      rep.failures.push_back("ker omega does not contain the foliation direction " +
                             model.frame->names[j] + " (i(" + model.frame->names[j] +
                             ")omega != 0)");
      break;
    }

  rep.omega_nondegenerate = false;
  if (model.frame->half_transverse == 0) {
    rep.omega_nondegenerate = model.omega.is_zero();
  } else if (!model.omega.is_zero() && model.omega.degree() == 2 &&
             (model.omega.support() & model.frame->leaf_mask()) == 0) {
    try {
      make_symplectic(model.frame, model.omega);
      rep.omega_nondegenerate = true;
    } catch (const std::invalid_argument&) {
    }
  }
  if (!rep.omega_nondegenerate) rep.failures.push_back("omega is degenerate on Q");

  rep.unimodular = true;
  for (int i = 0; i < m; ++i) {
    Rational trace(0);
    const auto ei = basis_vector(m, i);
    for (int j = 0; j < m; ++j) trace += model.bracket(ei, basis_vector(m, j))[j];
    if (trace != 0) {
      rep.unimodular = false;
      break;
    }
  }

  return rep;
}

Form ce_differential(const LieModel& model, const Form& phi) {
  if (!same_frame(model.frame, phi.frame()))
    throw std::invalid_argument("ce_differential: frame mismatch");
  if (phi.is_zero()) return Form(model.frame, 0);
  Form out(model.frame, std::min(phi.degree() + 1, model.frame->dim()));
  if (phi.degree() + 1 > model.frame->dim()) return Form(model.frame, 0);
  for (const auto& [key, c] : phi.terms()) {
    int pos = 0;
    for (Mask rest = key; rest; rest &= rest - 1, ++pos) {
      const int t = std::countr_zero(rest);
      // d(e_t*) = −Σ_{i<j} c_{ij}^t e_i*∧e_j*, inserted at slot `pos`
      for (const auto& [ij, coeffs] : model.brackets) {
        const auto it = coeffs.find(t);
        if (it == coeffs.end()) continue;
        const Mask pair_mask = (Mask(1) << ij.first) | (Mask(1) << ij.second);
        const Mask remainder = key & ~(Mask(1) << t);
        if (pair_mask & remainder) continue;
        const int slot_sign = (pos % 2 == 0) ? 1 : -1;
        const int s = merge_sign(pair_mask, remainder);
        const Rational v = c * it->second * slot_sign * s;
        out.add_term(pair_mask | remainder, -v);
      }
    }
  }
  return out;
}

Form lie_derivative(const LieModel& model, const Multivector& x, const Form& phi) {
  if (!x.is_zero() && x.degree() != 1)
    throw std::invalid_argument("lie_derivative: direction must have degree 1");
  return ce_differential(model, contract(x, phi)) + contract(x, ce_differential(model, phi));
}

} // namespace lefschetz
