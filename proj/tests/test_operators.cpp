#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lefschetz/operators.hpp"
#include "lefschetz/sl2.hpp"

#include "support.hpp"

using namespace lefschetz;
using namespace testsupport;

namespace {

/// Operator matrix with out-of-range source degrees treated as the zero
/// space, so commutator compositions can be written uniformly.
RatMatrix safe_op(const FoliationContext& ctx, OperatorKind kind, int r) {
  const int top = ctx.complex.top_degree();
  if (r < 0 || r > top) {
    const int target = r + kind_degree_shift(kind);
    const int rows = (target < 0 || target > top) ? 0 : ctx.complex.dim(target);
    return RatMatrix(rows, 0);
  }
  return operator_matrix(ctx, kind, r).matrix;
}

std::vector<LieModel> operator_test_models() {
  std::vector<LieModel> models;
  for (const auto& name : catalog_names()) models.push_back(get_model(name).model);
  models.push_back(nil_twist());
  models.push_back(sol_torus_product(2));
  return models;
}

} // namespace

TEST_CASE("hand-checked operator tables on sol") {
  const auto ctx = make_context(get_model("sol_hyperbolic").model);
  // basic bases in monomial order: degree 1 = [e1*, e3*], degree 2 = [e1*∧e3*]

  SUBCASE("modified differential") {
    const auto d0 = operator_matrix(ctx, OperatorKind::dKappa, 0);
    REQUIRE(d0.matrix.rows() == 2);
    CHECK(d0.matrix.at(0, 0) == Rational(-1, 2)); // 1 ↦ −½ e1*
    CHECK(d0.matrix.at(1, 0) == 0);

    const auto d1 = operator_matrix(ctx, OperatorKind::dKappa, 1);
    REQUIRE(d1.matrix.rows() == 1);
    CHECK(d1.matrix.at(0, 0) == 0);               // e1* ↦ 0
    CHECK(d1.matrix.at(0, 1) == Rational(1, 2));  // e3* ↦ ½ e1*∧e3*
  }

  SUBCASE("transversal and symplectic codifferentials") {
    const auto dt1 = operator_matrix(ctx, OperatorKind::deltaT, 1);
    CHECK(dt1.matrix.at(0, 0) == 0);
    CHECK(dt1.matrix.at(0, 1) == Rational(-1)); // δ_T e3* = −1

    const auto db2 = operator_matrix(ctx, OperatorKind::deltaB, 2);
    CHECK(db2.matrix.at(0, 0) == Rational(-1)); // δ_B(e1*∧e3*) = −e1*
    CHECK(db2.matrix.at(1, 0) == 0);

    const auto dk2 = operator_matrix(ctx, OperatorKind::deltaKappa, 2);
    CHECK(dk2.matrix.at(0, 0) == Rational(-1, 2)); // δ_κ(e1*∧e3*) = −½ e1*
  }

  SUBCASE("form-level values") {
    const Form one = Form::unit(ctx.frame());
    CHECK(d_kappa(ctx, one) ==
          Rational(-1, 2) * monomial_by_names(ctx.frame(), {"e1"}));
    const Form e3 = monomial_by_names(ctx.frame(), {"e3"});
    CHECK(delta_T(ctx, e3) == Form::unit(ctx.frame(), Rational(-1)));
    CHECK(delta_B(ctx, e3).is_zero());
    CHECK(theta_kappa_sharp(ctx, e3) == monomial_by_names(ctx.frame(), {"e1"}));
  }
}

TEST_CASE("deltaT vanishes identically on heisenberg") {
  const auto ctx = make_context(get_model("heisenberg_contact").model);
  for (int r = 0; r <= 2; ++r) {
    CHECK(operator_matrix(ctx, OperatorKind::dB, r).matrix.is_zero());
    CHECK(operator_matrix(ctx, OperatorKind::deltaT, r).matrix.is_zero());
  }
}

TEST_CASE("operator matrices have the declared shapes") {
  const auto ctx = make_context(get_model("kt_product").model);
  for (const auto kind :
       {OperatorKind::dB, OperatorKind::deltaT, OperatorKind::deltaB, OperatorKind::dKappa,
        OperatorKind::deltaKappa, OperatorKind::L, OperatorKind::Lambda, OperatorKind::A,
        OperatorKind::thetaKappaSharp, OperatorKind::epsilonKappa, OperatorKind::iKappaSharp}) {
    for (int r = 0; r <= ctx.complex.top_degree(); ++r) {
      const auto op = operator_matrix(ctx, kind, r);
      CHECK(op.target_degree - op.source_degree == kind_degree_shift(kind));
      CHECK(op.matrix.cols() == static_cast<std::size_t>(ctx.complex.dim(r)));
      CHECK(op.matrix.rows() == static_cast<std::size_t>(ctx.complex.dim(op.target_degree)));
    }
  }
  CHECK_THROWS_AS(operator_matrix(ctx, OperatorKind::dB, 5), std::invalid_argument);
  CHECK_THROWS_AS(operator_matrix(ctx, OperatorKind::dB, -1), std::invalid_argument);
}

TEST_CASE("differential and codifferential identities as exact matrices") {
  for (const auto& model : operator_test_models()) {
    CAPTURE(model.name);
    const auto ctx = make_context(model);
    const int top = ctx.complex.top_degree();

    for (int r = 0; r <= top; ++r) {
      // [d_B, Λ] = δ_T
      const auto lhs = safe_op(ctx, OperatorKind::dB, r - 2) * safe_op(ctx, OperatorKind::Lambda, r) -
                       safe_op(ctx, OperatorKind::Lambda, r + 1) * safe_op(ctx, OperatorKind::dB, r);
      CHECK(lhs == safe_op(ctx, OperatorKind::deltaT, r));

      // d_B δ_T + δ_T d_B = 0
      CHECK((safe_op(ctx, OperatorKind::dB, r - 1) * safe_op(ctx, OperatorKind::deltaT, r) +
             safe_op(ctx, OperatorKind::deltaT, r + 1) * safe_op(ctx, OperatorKind::dB, r))
                .is_zero());

      if (!ctx.mc.kappa_basic) continue;

      // δ_B = δ_T − i(κ♯)
      CHECK(safe_op(ctx, OperatorKind::deltaB, r) ==
            safe_op(ctx, OperatorKind::deltaT, r) - safe_op(ctx, OperatorKind::iKappaSharp, r));

      // Δ_B = −θ(κ♯)
      const auto laplacian =
          safe_op(ctx, OperatorKind::dB, r - 1) * safe_op(ctx, OperatorKind::deltaB, r) +
          safe_op(ctx, OperatorKind::deltaB, r + 1) * safe_op(ctx, OperatorKind::dB, r);
      CHECK(laplacian == safe_op(ctx, OperatorKind::thetaKappaSharp, r).scaled(Rational(-1)));

      // modified commutators
      const auto dk = [&](int rr) { return safe_op(ctx, OperatorKind::dKappa, rr); };
      const auto del = [&](int rr) { return safe_op(ctx, OperatorKind::deltaKappa, rr); };
      const auto Lm = [&](int rr) { return safe_op(ctx, OperatorKind::L, rr); };
      const auto Gm = [&](int rr) { return safe_op(ctx, OperatorKind::Lambda, rr); };
      const auto Am = [&](int rr) { return safe_op(ctx, OperatorKind::A, rr); };

      CHECK(Am(r + 1) * dk(r) - dk(r) * Am(r) == dk(r).scaled(Rational(-1)));
      CHECK(Lm(r - 1) * del(r) - del(r + 2) * Lm(r) == dk(r).scaled(Rational(-1)));
      CHECK(Am(r - 1) * del(r) - del(r) * Am(r) == del(r));
      CHECK(dk(r - 2) * Gm(r) - Gm(r + 1) * dk(r) == del(r));
      CHECK((Lm(r + 1) * dk(r) - dk(r + 2) * Lm(r)).is_zero());
      CHECK((Gm(r - 1) * del(r) - del(r - 2) * Gm(r)).is_zero());

      if (ctx.mc.dkappa_zero) {
        CHECK((dk(r + 1) * dk(r)).is_zero());
        CHECK((del(r - 1) * del(r)).is_zero());
        CHECK((dk(r - 1) * del(r) + del(r + 1) * dk(r)).is_zero());
      }
    }
  }
}

TEST_CASE("adjointness of the pairings on unimodular isoparametric models") {
  for (const auto& model : operator_test_models()) {
    const auto ctx = make_context(model);
    if (!ctx.unimodular || !ctx.mc.kappa_basic) continue;
    CAPTURE(model.name);
    const Form mu = wedge(ctx.symp.volume, ctx.mc.chi);
    for (int r = 1; r <= ctx.complex.top_degree(); ++r) {
      for (const auto& phi : ctx.complex.bases[r - 1])
        for (const auto& psi : ctx.complex.bases[r]) {
          CHECK(integrate(wedge(wedge(d_B(ctx, phi), star(ctx.symp, psi)), ctx.mc.chi), mu) ==
                integrate(wedge(wedge(phi, star(ctx.symp, delta_B(ctx, psi))), ctx.mc.chi), mu));
          CHECK(integrate(wedge(wedge(d_kappa(ctx, phi), star(ctx.symp, psi)), ctx.mc.chi), mu) ==
                integrate(wedge(wedge(phi, star(ctx.symp, delta_kappa(ctx, psi))), ctx.mc.chi),
                          mu));
        }
    }
  }
}

TEST_CASE("Lefschetz powers restricted to the basic complex stay bijective") {
  for (const auto& model : operator_test_models()) {
    CAPTURE(model.name);
    const auto ctx = make_context(model);
    for (int r = 0; r <= ctx.n(); ++r) {
      const auto power = basic_lefschetz_power_matrix(ctx, r);
      CHECK(power.matrix.rows() == power.matrix.cols());
      CHECK(power.bijective);
    }
  }
  CHECK_THROWS_AS(basic_lefschetz_power_matrix(make_context(nil_twist()), 3),
                  std::invalid_argument);
}

TEST_CASE("images of basis forms stay basic under every operator") {
  for (const auto& model : operator_test_models()) {
    const auto ctx = make_context(model);
    CAPTURE(model.name);
    for (int r = 0; r <= ctx.complex.top_degree(); ++r)
      for (const auto& phi : ctx.complex.bases[r]) {
        CHECK(is_basic(ctx.model, d_B(ctx, phi)));
        CHECK(is_basic(ctx.model, star(ctx.symp, phi)));
        CHECK(is_basic(ctx.model, sl2::L(ctx.symp, phi)));
        CHECK(is_basic(ctx.model, sl2::Lambda(ctx.symp, phi)));
        if (ctx.mc.kappa_basic) {
          CHECK(is_basic(ctx.model, delta_B(ctx, phi)));
          CHECK(is_basic(ctx.model, d_kappa(ctx, phi)));
          CHECK(is_basic(ctx.model, delta_kappa(ctx, phi)));
        }
      }
  }
}
