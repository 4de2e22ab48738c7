#include "lefschetz/operators.hpp"

#include "lefschetz/sl2.hpp"

#include <stdexcept>

namespace lefschetz {

FoliationContext make_context(const LieModel& model) {
  const auto report = validate_model(model);
  if (!report.passed()) {
    std::string msg = "model '" + model.name + "' fails validation:";
    for (const auto& f : report.failures) msg += " " + f + ";";
    throw std::invalid_argument(msg);
  }
  FoliationContext ctx{model,
                       make_symplectic(model.frame, model.omega),
                       mean_curvature(model),
                       build_basic_complex(model),
                       report.unimodular};
  return ctx;
}

namespace {

int sign_pow(int r) { return (r % 2 == 0) ? 1 : -1; }

void require_kappa(const FoliationContext& ctx, const char* op) {
  if (!ctx.mc.kappa_basic)
    throw std::invalid_argument(std::string(op) +
                                ": not isoparametric (mean curvature form is not basic)");
}

} // namespace

Form d_B(const FoliationContext& ctx, const Form& phi) {
  return ce_differential(ctx.model, phi);
}

Form delta_T(const FoliationContext& ctx, const Form& phi) {
  if (phi.is_zero()) return phi;
  const int r = phi.degree();
  return Rational(sign_pow(r)) * star(ctx.symp, d_B(ctx, star(ctx.symp, phi)));
}

Form delta_B(const FoliationContext& ctx, const Form& phi) {
  require_kappa(ctx, "delta_B");
  if (phi.is_zero()) return phi;
  const int r = phi.degree();
  const Form starred = star(ctx.symp, phi);
  const Form inner = d_B(ctx, starred) - wedge(ctx.mc.kappa, starred);
  return Rational(sign_pow(r)) * star(ctx.symp, inner);
}

Form d_kappa(const FoliationContext& ctx, const Form& phi) {
  require_kappa(ctx, "d_kappa");
  return d_B(ctx, phi) - Rational(1, 2) * wedge(ctx.mc.kappa, phi);
}

Form delta_kappa(const FoliationContext& ctx, const Form& phi) {
  require_kappa(ctx, "delta_kappa");
  return delta_B(ctx, phi) + Rational(1, 2) * i_kappa_sharp(ctx, phi);
}

Form theta_kappa_sharp(const FoliationContext& ctx, const Form& phi) {
  require_kappa(ctx, "theta_kappa_sharp");
  return lie_derivative(ctx.model, sharp(ctx.symp, ctx.mc.kappa), phi);
}

Form epsilon_kappa(const FoliationContext& ctx, const Form& phi) {
  require_kappa(ctx, "epsilon_kappa");
  return wedge(ctx.mc.kappa, phi);
}

Form i_kappa_sharp(const FoliationContext& ctx, const Form& phi) {
  require_kappa(ctx, "i_kappa_sharp");
  return contract(sharp(ctx.symp, ctx.mc.kappa), phi);
}

const char* kind_name(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::dB: return "dB";
    case OperatorKind::deltaT: return "deltaT";
    case OperatorKind::deltaB: return "deltaB";
    case OperatorKind::dKappa: return "dKappa";
    case OperatorKind::deltaKappa: return "deltaKappa";
    case OperatorKind::L: return "L";
    case OperatorKind::Lambda: return "Lambda";
    case OperatorKind::A: return "A";
    case OperatorKind::thetaKappaSharp: return "thetaKappaSharp";
    case OperatorKind::epsilonKappa: return "epsilonKappa";
    case OperatorKind::iKappaSharp: return "iKappaSharp";
  }
  return "?";
}

int kind_degree_shift(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::dB:
    case OperatorKind::dKappa:
    case OperatorKind::epsilonKappa: return 1;
    case OperatorKind::deltaT:
    case OperatorKind::deltaB:
    case OperatorKind::deltaKappa:
    case OperatorKind::iKappaSharp: return -1;
    case OperatorKind::L: return 2;
    case OperatorKind::Lambda: return -2;
    case OperatorKind::A:
    case OperatorKind::thetaKappaSharp: return 0;
  }
  return 0;
}

bool kind_needs_kappa(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::deltaB:
    case OperatorKind::dKappa:
    case OperatorKind::deltaKappa:
    case OperatorKind::thetaKappaSharp:
    case OperatorKind::epsilonKappa:
    case OperatorKind::iKappaSharp: return true;
    default: return false;
  }
}

Form apply_operator(const FoliationContext& ctx, OperatorKind kind, const Form& phi) {
  switch (kind) {
    case OperatorKind::dB: return d_B(ctx, phi);
    case OperatorKind::deltaT: return delta_T(ctx, phi);
    case OperatorKind::deltaB: return delta_B(ctx, phi);
    case OperatorKind::dKappa: return d_kappa(ctx, phi);
    case OperatorKind::deltaKappa: return delta_kappa(ctx, phi);
    case OperatorKind::L: return sl2::L(ctx.symp, phi);
    case OperatorKind::Lambda: return sl2::Lambda(ctx.symp, phi);
    case OperatorKind::A: return sl2::A(ctx.symp, phi);
    case OperatorKind::thetaKappaSharp: return theta_kappa_sharp(ctx, phi);
    case OperatorKind::epsilonKappa: return epsilon_kappa(ctx, phi);
    case OperatorKind::iKappaSharp: return i_kappa_sharp(ctx, phi);
  }
  throw std::logic_error("apply_operator: unknown kind");
}

BasicLefschetzPower basic_lefschetz_power_matrix(const FoliationContext& ctx, int r) {
  const int n = ctx.n();
  if (r < 0 || r > n)
    throw std::invalid_argument("basic_lefschetz_power_matrix: r out of range");
  BasicLefschetzPower out;
  out.r = r;
  out.source_degree = n - r;
  out.target_degree = n + r;
  const auto& basis = ctx.complex.bases[out.source_degree];
  const int target_dim = ctx.complex.dim(out.target_degree);
  out.matrix = RatMatrix(target_dim, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Form img = sl2::L_power(ctx.symp, basis[j], r);
    if (img.is_zero()) continue;
    const auto coords = basic_coordinates(ctx.complex, out.target_degree, img);
    if (!coords)
      throw std::logic_error("basic_lefschetz_power_matrix: image left the basic complex");
    for (int i = 0; i < target_dim; ++i) out.matrix.at(i, j) = (*coords)[i];
  }
  out.rank = out.matrix.rank();
  out.bijective = out.matrix.rows() == out.matrix.cols() && out.rank == out.matrix.rows();
  return out;
}

DegreeOperator operator_matrix(const FoliationContext& ctx, OperatorKind kind, int r) {
  const int top = ctx.complex.top_degree();
  if (r < 0 || r > top) throw std::invalid_argument("operator_matrix: degree out of range");
  if (kind_needs_kappa(kind)) require_kappa(ctx, kind_name(kind));

  DegreeOperator op;
  op.kind = kind;
  op.source_degree = r;
  op.target_degree = r + kind_degree_shift(kind);

  const auto& basis = ctx.complex.bases[r];
  const int target_dim = ctx.complex.dim(op.target_degree);
  op.matrix = RatMatrix(target_dim, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Form img = apply_operator(ctx, kind, basis[j]);
    if (img.is_zero()) continue;
    const auto coords = basic_coordinates(ctx.complex, op.target_degree, img);
    if (!coords)
      throw std::logic_error(std::string("operator_matrix: image of ") + kind_name(kind) +
                             " left the basic complex");
    for (int i = 0; i < target_dim; ++i) op.matrix.at(i, j) = (*coords)[i];
  }
  return op;
}

} // namespace lefschetz
