#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lefschetz/cohomology.hpp"
#include "lefschetz/model_library.hpp"
#include "lefschetz/operators.hpp"

#include "support.hpp"

using namespace lefschetz;
using namespace testsupport;

TEST_CASE("catalog models validate as unimodular") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto entry = get_model(name);
    const auto report = validate_model(entry.model);
    CHECK(report.passed());
    CHECK(report.unimodular == entry.expected.unimodular);
    CHECK(report.failures.empty());
  }
}

TEST_CASE("jacobi violation is reported with the failing triple") {
  auto frame = make_frame(1, 1, {"e1", "e2", "e3"});
  LieModel model("broken", frame);
  // [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = [e3,e3] + 0 − [e1,e2] = −e3
  model.set_bracket(0, 1, {{2, Rational(1)}});
  model.set_bracket(0, 2, {{0, Rational(1)}});
  model.omega = omega_entry(frame, {{1, 2, Rational(1)}});
  const auto report = validate_model(model);
  CHECK(!report.jacobi);
  REQUIRE(!report.failures.empty());
  CHECK(report.failures.front().find("(1,2,3)") != std::string::npos);
}

TEST_CASE("omega with foliation support fails the kernel check") {
  auto frame = make_frame(1, 1, {"e1", "e2", "e3"});
  LieModel model("bad_kernel", frame);
  model.omega = omega_entry(frame, {{0, 1, Rational(1)}}); // e1*∧e2*, e1 leafwise
  const auto report = validate_model(model);
  CHECK(!report.omega_foliation_kernel);
  CHECK(!report.passed());
}

TEST_CASE("nonclosed omega fails validation") {
  // [e1, e2] = e2 with foliation e1 makes d(e2*∧e3*) = −e1*∧e2*∧e3* ≠ 0
  auto frame = make_frame(1, 1, {"e1", "e2", "e3"});
  LieModel model("nonclosed", frame);
  model.set_bracket(0, 1, {{1, Rational(1)}});
  model.omega = omega_entry(frame, {{1, 2, Rational(1)}});
  const auto report = validate_model(model);
  CHECK(!report.omega_closed);
  CHECK(!report.passed());
}

TEST_CASE("non-unimodular algebra is flagged but passes structure") {
  auto frame = make_frame(1, 1, {"e3", "e1", "e2"});
  LieModel model("affine_like", frame);
  model.set_bracket(1, 2, {{2, Rational(1)}}); // [e1, e2] = e2: tr ad_{e1} = 1
  model.omega = omega_entry(frame, {{1, 2, Rational(1)}});
  const auto report = validate_model(model);
  CHECK(report.jacobi);
  CHECK(!report.unimodular);
}

TEST_CASE("invariant differential on the catalog brackets") {
  const auto heis = get_model("heisenberg_contact").model;
  CHECK(ce_differential(heis, monomial_by_names(heis.frame, {"e3"})) ==
        -monomial_by_names(heis.frame, {"e1", "e2"}));
  CHECK(ce_differential(heis, monomial_by_names(heis.frame, {"e1"})).is_zero());

  const auto sol = get_model("sol_hyperbolic").model;
  CHECK(ce_differential(sol, monomial_by_names(sol.frame, {"e3"})) ==
        monomial_by_names(sol.frame, {"e1", "e3"}));
  CHECK(ce_differential(sol, monomial_by_names(sol.frame, {"e2"})) ==
        -monomial_by_names(sol.frame, {"e1", "e2"}));

  const auto abelian = get_model("abelian_cosymplectic").model;
  for (int i = 0; i < 3; ++i)
    CHECK(ce_differential(abelian, Form::monomial(abelian.frame, Mask(1) << i)).is_zero());
}

TEST_CASE("differential squares to zero on full invariant algebras") {
  for (const auto& name : catalog_names()) {
    const auto model = get_model(name).model;
    for (int r = 0; r <= model.frame->dim(); ++r)
      for (const Mask key : monomials((Mask(1) << model.frame->dim()) - 1, r)) {
        const Form phi = Form::monomial(model.frame, key);
        CHECK(ce_differential(model, ce_differential(model, phi)).is_zero());
      }
  }
}

TEST_CASE("basic bases of the catalog models") {
  const auto heis = make_context(get_model("heisenberg_contact").model);
  CHECK(heis.complex.dim(0) == 1);
  CHECK(heis.complex.dim(1) == 2);
  CHECK(heis.complex.dim(2) == 1);
  const auto coords = basic_coordinates(heis.complex, 1,
                                        monomial_by_names(heis.frame(), {"e1"}));
  CHECK(coords.has_value());

  const auto sol = make_context(get_model("sol_hyperbolic").model);
  CHECK(sol.complex.dim(0) == 1);
  CHECK(sol.complex.dim(1) == 2);
  CHECK(sol.complex.dim(2) == 1);
  CHECK(basic_coordinates(sol.complex, 1, monomial_by_names(sol.frame(), {"e3"})).has_value());

  const auto kt = make_context(get_model("kt_product").model);
  CHECK(kt.complex.dim(0) == 1);
  CHECK(kt.complex.dim(1) == 4);
  CHECK(kt.complex.dim(2) == 6);
  CHECK(kt.complex.dim(3) == 4);
  CHECK(kt.complex.dim(4) == 1);
}

TEST_CASE("a twisted direction cuts the basic complex down") {
  const auto ctx = make_context(nil_twist());
  CHECK(ctx.complex.dim(0) == 1);
  CHECK(ctx.complex.dim(1) == 3);
  CHECK(ctx.complex.dim(2) == 4);
  CHECK(ctx.complex.dim(3) == 3);
  CHECK(ctx.complex.dim(4) == 1);

  // e2* is transverse but not basic; e1* is basic
  CHECK(!is_basic(ctx.model, monomial_by_names(ctx.frame(), {"e2"})));
  CHECK(is_basic(ctx.model, monomial_by_names(ctx.frame(), {"e1"})));
  CHECK(!basic_coordinates(ctx.complex, 1, monomial_by_names(ctx.frame(), {"e2"})));
}

TEST_CASE("mean curvature of the catalog models") {
  SUBCASE("heisenberg: geodesible with nonvanishing curvature defect") {
    const auto model = get_model("heisenberg_contact").model;
    const auto mc = mean_curvature(model);
    CHECK(mc.chi == monomial_by_names(model.frame, {"e3"}));
    CHECK(mc.kappa.is_zero());
    CHECK(mc.phi0 == -monomial_by_names(model.frame, {"e1", "e2"}));
    CHECK(mc.phi0 == model.omega);
    CHECK(mc.kappa_basic);
    CHECK(mc.dkappa_zero);
    CHECK(mc.rummler_identity);
    CHECK(mc.phi0_filtration);
  }

  SUBCASE("abelian: flat in every sense") {
    const auto mc = mean_curvature(get_model("abelian_cosymplectic").model);
    CHECK(mc.kappa.is_zero());
    CHECK(mc.phi0.is_zero());
  }

  SUBCASE("sol: basic closed nonzero curvature") {
    const auto model = get_model("sol_hyperbolic").model;
    const auto mc = mean_curvature(model);
    CHECK(mc.chi == monomial_by_names(model.frame, {"e2"}));
    CHECK(mc.kappa == monomial_by_names(model.frame, {"e1"}));
    CHECK(mc.phi0.is_zero());
    CHECK(mc.kappa_basic);
    CHECK(mc.dkappa_zero);
    CHECK(mc.rummler_identity);
    CHECK(mc.phi0_filtration);
  }

  SUBCASE("kt_product: minimal") {
    const auto mc = mean_curvature(get_model("kt_product").model);
    CHECK(mc.kappa.is_zero());
    CHECK(mc.phi0.is_zero());
  }
}

TEST_CASE("sl2_twisted validates but is not isoparametric") {
  const auto model = sl2_twisted();
  const auto report = validate_model(model);
  CHECK(report.passed());
  CHECK(report.unimodular);

  const auto ctx = make_context(model);
  CHECK(ctx.mc.kappa == -monomial_by_names(ctx.frame(), {"e2"}));
  CHECK(!ctx.mc.kappa_basic);

  CHECK_THROWS_WITH_AS(operator_matrix(ctx, OperatorKind::dKappa, 0),
                       doctest::Contains("not isoparametric"), std::invalid_argument);
  CHECK_THROWS_AS(delta_B(ctx, Form::unit(ctx.frame())), std::invalid_argument);
  // κ-free operators still work
  CHECK_NOTHROW(operator_matrix(ctx, OperatorKind::dB, 0));
  CHECK_NOTHROW(operator_matrix(ctx, OperatorKind::deltaT, 1));
}

TEST_CASE("two-dimensional foliation: multi-contraction mean curvature") {
  const auto model = affine_twist_p2();
  const auto report = validate_model(model);
  CHECK(report.passed());
  CHECK(!report.unimodular);

  const auto ctx = make_context(model);
  CHECK(ctx.mc.chi == monomial_by_names(ctx.frame(), {"f1", "f2"}));
  CHECK(ctx.mc.kappa == -monomial_by_names(ctx.frame(), {"a"}));
  CHECK(ctx.mc.phi0.is_zero());
  CHECK(ctx.mc.kappa_basic);
  CHECK(ctx.mc.dkappa_zero);
  CHECK(ctx.mc.rummler_identity);
  CHECK(ctx.mc.phi0_filtration);

  // the full basic pipeline runs: H_B = (1,2,1), H_kappa = 0, verdict vacuous
  CHECK(ctx.complex.dim(1) == 2);
  const auto verdict = hard_lefschetz_equivalence(ctx);
  CHECK(verdict.applicable);
  CHECK(verdict.harmonic_in_every_class);
  CHECK(verdict.lefschetz_surjective_all_r);
  CHECK(verdict.equivalent);
  CHECK(!tautness_check(ctx));
}

TEST_CASE("sol-torus products stay valid for n = 2 and n = 3") {
  for (int n = 2; n <= 3; ++n) {
    const auto model = sol_torus_product(n);
    const auto report = validate_model(model);
    CHECK(report.passed());
    CHECK(report.unimodular);
    const auto ctx = make_context(model);
    CHECK(ctx.mc.kappa == monomial_by_names(ctx.frame(), {"e1"}));
    CHECK(ctx.mc.kappa_basic);
    CHECK(ctx.mc.dkappa_zero);
  }
}
