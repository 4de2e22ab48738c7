#include "lefschetz/cohomology.hpp"

#include "lefschetz/sl2.hpp"

#include <stdexcept>

namespace lefschetz {

std::vector<RatMatrix> differential_matrices(const FoliationContext& ctx, OperatorKind kind) {
  if (kind != OperatorKind::dB && kind != OperatorKind::dKappa)
    throw std::invalid_argument("differential_matrices: kind must be dB or dKappa");
  if (kind == OperatorKind::dKappa && !ctx.mc.dkappa_zero)
    throw std::invalid_argument("differential_matrices: dKappa requires d(kappa) = 0");
  const int top = ctx.complex.top_degree();
  std::vector<RatMatrix> d;
  for (int r = 0; r <= top; ++r) d.push_back(operator_matrix(ctx, kind, r).matrix);
  for (int r = 0; r + 1 <= top; ++r)
    if (!(d[r + 1] * d[r]).is_zero())
      throw std::invalid_argument(std::string("differential_matrices: ") + kind_name(kind) +
                                  " does not square to zero");
  return d;
}

namespace {

CohomologyGroup group_from_matrices(const FoliationContext& ctx, OperatorKind kind, int r,
                                    const std::vector<RatMatrix>& d) {
  CohomologyGroup g;
  g.kind = kind;
  g.degree = r;
  const int dim_r = ctx.complex.dim(r);
  if (dim_r == 0) return g;

  const auto kernel = d[r].kernel_basis();
  const RatMatrix boundary =
      (r == 0) ? RatMatrix(dim_r, 0) : d[r - 1];

  // greedy complement of im inside ker, walking the kernel basis in order
  RatMatrix chosen = boundary;
  const std::size_t boundary_rank = boundary.rank();
  std::size_t current_rank = boundary_rank;
  for (const auto& vec : kernel) {
    RatMatrix trial = RatMatrix::hconcat(chosen, RatMatrix::from_columns(dim_r, {vec}));
    const std::size_t rank = trial.rank();
    if (rank > current_rank) {
      chosen = std::move(trial);
      current_rank = rank;
      g.representative_coords.push_back(vec);
      g.representatives.push_back(from_basic_coordinates(ctx.complex, r, vec));
    }
  }
  g.dimension = static_cast<int>(kernel.size() - boundary_rank);
  if (g.dimension != static_cast<int>(g.representatives.size()))
    throw std::logic_error("cohomology: representative count disagrees with rank computation");
  return g;
}

} // namespace

CohomologyGroup cohomology_group(const FoliationContext& ctx, OperatorKind kind, int r) {
  if (r < 0 || r > ctx.complex.top_degree())
    throw std::invalid_argument("cohomology_group: degree out of range");
  return group_from_matrices(ctx, kind, r, differential_matrices(ctx, kind));
}

std::vector<CohomologyGroup> cohomology(const FoliationContext& ctx, OperatorKind kind) {
  const auto d = differential_matrices(ctx, kind);
  std::vector<CohomologyGroup> out;
  for (int r = 0; r <= ctx.complex.top_degree(); ++r)
    out.push_back(group_from_matrices(ctx, kind, r, d));
  return out;
}

LefschetzOnCohomology lefschetz_on_cohomology(const FoliationContext& ctx,
                                              const std::vector<CohomologyGroup>& groups,
                                              int r) {
  const int n = ctx.n();
  if (r < 0 || r > n) throw std::invalid_argument("lefschetz_on_cohomology: r out of range");
  LefschetzOnCohomology out;
  out.r = r;
  out.source_degree = n - r;
  out.target_degree = n + r;

  const auto& src = groups[out.source_degree];
  const auto& dst = groups[out.target_degree];
  const int target_space_dim = ctx.complex.dim(out.target_degree);

  const auto d = differential_matrices(ctx, groups.front().kind);
  const RatMatrix boundary = (out.target_degree == 0)
                                 ? RatMatrix(target_space_dim, 0)
                                 : d[out.target_degree - 1];
  RatMatrix reps(target_space_dim, dst.dimension);
  for (int j = 0; j < dst.dimension; ++j)
    for (int i = 0; i < target_space_dim; ++i)
      reps.at(i, j) = dst.representative_coords[j][i];
  const RatMatrix solver = RatMatrix::hconcat(reps, boundary);

  out.matrix = RatMatrix(dst.dimension, src.dimension);
  for (int j = 0; j < src.dimension; ++j) {
    const Form image = sl2::L_power(ctx.symp, src.representatives[j], r);
    const auto coords = basic_coordinates(ctx.complex, out.target_degree, image);
    if (!coords) throw std::logic_error("lefschetz_on_cohomology: image left the basic complex");
    const auto sol = solver.solve(*coords);
    if (!sol)
      throw std::logic_error("lefschetz_on_cohomology: image is not a cocycle class");
    for (int i = 0; i < dst.dimension; ++i) out.matrix.at(i, j) = (*sol)[i];
  }
  out.surjective = out.matrix.rank() == static_cast<std::size_t>(dst.dimension);
  return out;
}

const char* harmonic_kind_name(HarmonicKind kind) {
  switch (kind) {
    case HarmonicKind::SB: return "SB";
    case HarmonicKind::ST: return "ST";
    case HarmonicKind::SK: return "SK";
  }
  return "?";
}

namespace {

std::pair<OperatorKind, OperatorKind> harmonic_operator_pair(HarmonicKind kind) {
  switch (kind) {
    case HarmonicKind::SB: return {OperatorKind::dB, OperatorKind::deltaB};
    case HarmonicKind::ST: return {OperatorKind::dB, OperatorKind::deltaT};
    case HarmonicKind::SK: return {OperatorKind::dKappa, OperatorKind::deltaKappa};
  }
  throw std::logic_error("harmonic_operator_pair: unknown kind");
}

} // namespace

HarmonicSpace harmonic_space(const FoliationContext& ctx, HarmonicKind kind, int r) {
  if (r < 0 || r > ctx.complex.top_degree())
    throw std::invalid_argument("harmonic_space: degree out of range");
  const auto [up, down] = harmonic_operator_pair(kind);
  const RatMatrix stacked = RatMatrix::vconcat(operator_matrix(ctx, up, r).matrix,
                                               operator_matrix(ctx, down, r).matrix);
  HarmonicSpace out;
  out.kind = kind;
  out.degree = r;
  for (auto& vec : stacked.kernel_basis()) {
    out.basis.push_back(from_basic_coordinates(ctx.complex, r, vec));
    out.basis_coords.push_back(std::move(vec));
  }
  return out;
}

HarmonicLefschetzCheck harmonic_lefschetz_check(const FoliationContext& ctx,
                                                HarmonicKind kind, int r) {
  const int n = ctx.n();
  if (r < 0 || r > n) throw std::invalid_argument("harmonic_lefschetz_check: r out of range");
  const auto src = harmonic_space(ctx, kind, n - r);
  const auto dst = harmonic_space(ctx, kind, n + r);

  HarmonicLefschetzCheck out;
  out.kind = kind;
  out.r = r;
  out.source_dim = static_cast<int>(src.basis.size());
  out.target_dim = static_cast<int>(dst.basis.size());

  const int ambient = ctx.complex.dim(n + r);
  RatMatrix target(ambient, dst.basis.size());
  for (std::size_t j = 0; j < dst.basis_coords.size(); ++j)
    for (int i = 0; i < ambient; ++i) target.at(i, j) = dst.basis_coords[j][i];

  out.images_in_target = true;
  RatMatrix images(static_cast<std::size_t>(out.target_dim), src.basis.size());
  for (std::size_t j = 0; j < src.basis.size(); ++j) {
    const Form img = sl2::L_power(ctx.symp, src.basis[j], r);
    const auto coords = basic_coordinates(ctx.complex, n + r, img);
    if (!coords) {
      out.images_in_target = false;
      break;
    }
    const auto sol = target.solve(*coords);
    if (!sol) {
      out.images_in_target = false;
      break;
    }
    for (int i = 0; i < out.target_dim; ++i) images.at(i, j) = (*sol)[i];
  }
  if (out.images_in_target) {
    out.rank = images.rank();
    out.bijective = out.source_dim == out.target_dim &&
                    out.rank == static_cast<std::size_t>(out.target_dim);
  }
  return out;
}

std::optional<Form> harmonic_representative(const FoliationContext& ctx, const Form& phi) {
  if (!ctx.mc.kappa_basic)
    throw std::invalid_argument("harmonic_representative: not isoparametric");
  if (!d_kappa(ctx, phi).is_zero())
    throw std::invalid_argument("harmonic_representative: input is not d_kappa-closed");
  if (phi.is_zero()) return phi;
  const int r = phi.degree();

  if (delta_kappa(ctx, phi).is_zero()) return phi;
  if (r == 0) return std::nullopt;

  // δ_κ(φ − d_κη) = 0  ⇔  (δ_κ ∘ d_κ) η = δ_κ φ
  const RatMatrix dk = operator_matrix(ctx, OperatorKind::dKappa, r - 1).matrix;
  const RatMatrix del = operator_matrix(ctx, OperatorKind::deltaKappa, r).matrix;
  const auto phi_coords = basic_coordinates(ctx.complex, r, phi);
  if (!phi_coords) throw std::invalid_argument("harmonic_representative: input is not basic");
  const auto rhs = del.apply(*phi_coords);
  const auto eta = (del * dk).solve(rhs);
  if (!eta) return std::nullopt;
  const Form eta_form = from_basic_coordinates(ctx.complex, r - 1, *eta);
  return phi - d_kappa(ctx, eta_form);
}

HardLefschetzReport hard_lefschetz_equivalence(const FoliationContext& ctx) {
  HardLefschetzReport rep;
  if (!ctx.mc.kappa_basic) {
    rep.reason = "not isoparametric: mean curvature form is not basic";
    return rep;
  }
  if (!ctx.mc.dkappa_zero) {
    rep.reason = "d(kappa) != 0: modified cohomology undefined";
    return rep;
  }
  if (!basic_complex_sl2_closed(ctx)) {
    rep.reason = "basic complex is not closed under L and Lambda";
    return rep;
  }
  rep.applicable = true;

  const auto groups = cohomology(ctx, OperatorKind::dKappa);

  rep.harmonic_in_every_class = true;
  for (const auto& g : groups)
    for (int j = 0; j < g.dimension; ++j)
      if (!harmonic_representative(ctx, g.representatives[j])) {
        rep.harmonic_in_every_class = false;
        rep.classes_without_representative.emplace_back(g.degree, j);
      }

  rep.lefschetz_surjective_all_r = true;
  for (int r = 0; r <= ctx.n(); ++r) {
    rep.lefschetz.push_back(lefschetz_on_cohomology(ctx, groups, r));
    if (!rep.lefschetz.back().surjective) rep.lefschetz_surjective_all_r = false;
  }

  rep.equivalent = rep.harmonic_in_every_class == rep.lefschetz_surjective_all_r;
  return rep;
}

bool tautness_check(const FoliationContext& ctx) {
  if (!ctx.mc.kappa_basic)
    throw std::invalid_argument("tautness_check: not isoparametric");
  if (ctx.mc.kappa.is_zero()) return true;
  const auto d0 = operator_matrix(ctx, OperatorKind::dB, 0).matrix;
  const auto coords = basic_coordinates(ctx.complex, 1, ctx.mc.kappa);
  if (!coords) throw std::logic_error("tautness_check: basic kappa has no coordinates");
  return d0.solve(*coords).has_value();
}

EvenBettiReport even_betti_check(const FoliationContext& ctx,
                                 const std::vector<CohomologyGroup>& h_b, bool taut) {
  EvenBettiReport rep;
  rep.taut = taut;
  rep.asserted = taut;
  rep.all_nonzero = true;
  for (int r = 0; r <= ctx.n(); ++r) {
    rep.even_dims.push_back(h_b[2 * r].dimension);
    if (h_b[2 * r].dimension == 0) rep.all_nonzero = false;
  }
  return rep;
}

bool basic_complex_sl2_closed(const FoliationContext& ctx) {
  for (int r = 0; r <= ctx.complex.top_degree(); ++r)
    for (const auto& phi : ctx.complex.bases[r]) {
      const Form up = sl2::L(ctx.symp, phi);
      if (!up.is_zero() && !basic_coordinates(ctx.complex, r + 2, up)) return false;
      const Form down = sl2::Lambda(ctx.symp, phi);
      if (!down.is_zero() && !basic_coordinates(ctx.complex, r - 2, down)) return false;
    }
  return true;
}

} // namespace lefschetz
