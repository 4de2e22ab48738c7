#include "lefschetz/identities.hpp"

#include "lefschetz/random_forms.hpp"
#include "lefschetz/sl2.hpp"

#include <functional>

namespace lefschetz {

int IdentitySuiteSummary::passed_count() const {
  int n = 0;
  for (const auto& r : results) n += r.status == IdentityStatus::passed;
  return n;
}
int IdentitySuiteSummary::failed_count() const {
  int n = 0;
  for (const auto& r : results) n += r.status == IdentityStatus::failed;
  return n;
}
int IdentitySuiteSummary::skipped_count() const {
  int n = 0;
  for (const auto& r : results) n += r.status == IdentityStatus::skipped;
  return n;
}

namespace {

enum class Gate { none, isoparametric, isoparametric_closed, unimodular_isoparametric };

struct IdentityCheck {
  std::string name;
  Gate gate = Gate::none;
  // nullopt = pass; string = counterexample description
  std::function<std::optional<std::string>(const FoliationContext&, Rng&)> run;
};

std::optional<std::string> gate_reason(const FoliationContext& ctx, Gate gate) {
  const bool iso = ctx.mc.kappa_basic;
  switch (gate) {
    case Gate::none: return std::nullopt;
    case Gate::isoparametric:
      if (!iso) return "not isoparametric (mean curvature form is not basic)";
      return std::nullopt;
    case Gate::isoparametric_closed:
      if (!iso) return "not isoparametric (mean curvature form is not basic)";
      if (!ctx.mc.dkappa_zero) return "d(kappa) != 0";
      return std::nullopt;
    case Gate::unimodular_isoparametric:
      if (!ctx.unimodular) return "model is not unimodular";
      if (!iso) return "not isoparametric (mean curvature form is not basic)";
      return std::nullopt;
  }
  return std::nullopt;
}

/// Greedily drops terms of φ while `fails` still holds, so reported
/// counterexamples stay small.
Form minimize_form(const std::function<bool(const Form&)>& fails, Form phi) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (const auto& [key, c] : phi.terms()) {
      Form trial = phi;
      trial.add_term(key, -c);
      if (!trial.is_zero() && fails(trial)) {
        phi = std::move(trial);
        shrunk = true;
        break;
      }
    }
  }
  return phi;
}

using Prop1 = std::function<bool(const Form&)>;
using Prop2 = std::function<bool(const Form&, const Form&)>;

std::optional<std::string> check_one(const Form& phi, const Prop1& holds,
                                     const std::string& label) {
  if (holds(phi)) return std::nullopt;
  const Form minimal = minimize_form([&](const Form& f) { return !holds(f); }, phi);
  return label + " fails on " + minimal.to_string();
}

std::optional<std::string> check_two(const Form& phi, const Form& psi, const Prop2& holds,
                                     const std::string& label) {
  if (holds(phi, psi)) return std::nullopt;
  Form a = minimize_form([&](const Form& f) { return !holds(f, psi); }, phi);
  Form b = minimize_form([&](const Form& f) { return !holds(a, f); }, psi);
  return label + " fails on (" + a.to_string() + ", " + b.to_string() + ")";
}

int rand_degree(Rng& rng, int lo, int hi) {
  return static_cast<int>(rng.uniform(lo, hi));
}

std::vector<IdentityCheck> build_checks() {
  std::vector<IdentityCheck> checks;

  auto add = [&](std::string name, Gate gate,
                 std::function<std::optional<std::string>(const FoliationContext&, Rng&)> f) {
    checks.push_back({std::move(name), gate, std::move(f)});
  };

  // ----- pointwise identities on random transverse forms -----

  add("star_involution", Gate::none, [](const FoliationContext& ctx, Rng& rng) {
    const Form phi = random_transverse_form(rng, ctx.symp, rand_degree(rng, 0, 2 * ctx.n()));
    return check_one(phi, [&](const Form& f) { return star(ctx.symp, star(ctx.symp, f)) == f; },
                     "star(star(phi)) == phi");
  });

  add("star_defining_pairing", Gate::none, [](const FoliationContext& ctx, Rng& rng) {
    const int r = rand_degree(rng, 0, 2 * ctx.n());
    const Form phi = random_transverse_form(rng, ctx.symp, r);
    const Form psi = random_transverse_form(rng, ctx.symp, r);
    return check_two(phi, psi,
                     [&](const Form& f, const Form& g) {
                       return wedge(f, star(ctx.symp, g)) ==
                              omega_pair(ctx.symp, f, g) * ctx.symp.volume;
                     },
                     "phi ∧ star(psi) == omega(phi,psi)·nu");
  });

  add("star_contract_conjugation", Gate::none, [](const FoliationContext& ctx, Rng& rng) {
    const int r = rand_degree(rng, 0, 2 * ctx.n());
    const Form phi = random_transverse_form(rng, ctx.symp, r);
    const Multivector x = random_transverse_vector(rng, ctx.symp);
    const Rational sign = (r % 2 == 0) ? 1 : -1;
    return check_one(phi,
                     [&](const Form& f) {
                       return star(ctx.symp, wedge(flat(ctx.symp, x), f)) ==
                              sign * contract(x, star(ctx.symp, f));
                     },
                     "star(flat(X) ∧ phi) == (−1)^r i(X) star(phi)");
  });

  add("wedge_contract_adjoint", Gate::none, [](const FoliationContext& ctx, Rng& rng) {
    const int r = rand_degree(rng, 1, 2 * ctx.n());
    const Form alpha = random_transverse_form(rng, ctx.symp, 1);
    const Form phi = random_transverse_form(rng, ctx.symp, r - 1);
    const Form psi = random_transverse_form(rng, ctx.symp, r);
    return check_two(phi, psi,
                     [&](const Form& f, const Form& g) {
                       return omega_pair(ctx.symp, wedge(alpha, f), g) ==
                              -omega_pair(ctx.symp, f, contract(sharp(ctx.symp, alpha), g));
                     },
                     "omega(alpha∧phi, psi) == −omega(phi, i(sharp(alpha))psi) [alpha = " +
                         alpha.to_string() + "]");
  });

  add("pairing_graded_symmetry", Gate::none, [](const FoliationContext& ctx, Rng& rng) {
    const int r = rand_degree(rng, 0, 2 * ctx.n());
    const Form phi = random_transverse_form(rng, ctx.symp, r);
    const Form psi = random_transverse_form(rng, ctx.symp, r);
    const Rational sign = (r % 2 == 0) ? 1 : -1;
    return check_two(phi, psi,
                     [&](const Form& f, const Form& g) {
                       return omega_pair(ctx.symp, f, g) == sign * omega_pair(ctx.symp, g, f);
                     },
                     "omega(phi,psi) == (−1)^r omega(psi,phi)");
  });

  add("pairing_via_contraction", Gate::none, [](const FoliationContext& ctx, Rng& rng) {
    const int r = rand_degree(rng, 0, 2 * ctx.n());
    const Form phi = random_transverse_form(rng, ctx.symp, r);
    const Form psi = random_transverse_form(rng, ctx.symp, r);
    return check_two(phi, psi,
                     [&](const Form& f, const Form& g) {
                       const Form full = contract(sharp(ctx.symp, f), g);
                       return full.coeff(0) == omega_pair(ctx.symp, g, f);
                     },
                     "i(sharp(phi))psi == omega(psi,phi)");
  });

  add("musical_maps_inverse", Gate::none, [](const FoliationContext& ctx, Rng& rng) {
    const Form phi = random_transverse_form(rng, ctx.symp, rand_degree(rng, 0, 2 * ctx.n()));
    return check_one(phi,
                     [&](const Form& f) { return flat(ctx.symp, sharp(ctx.symp, f)) == f; },
                     "flat(sharp(phi)) == phi");
  });

  add("wedge_graded_commutativity", Gate::none, [](const FoliationContext& ctx, Rng& rng) {
    const int r = rand_degree(rng, 0, 2 * ctx.n());
    const int s = rand_degree(rng, 0, 2 * ctx.n());
    const Form phi = random_transverse_form(rng, ctx.symp, r);
    const Form psi = random_transverse_form(rng, ctx.symp, s);
    const Rational sign = ((r * s) % 2 == 0) ? 1 : -1;
    return check_two(phi, psi,
                     [&](const Form& f, const Form& g) {
                       return wedge(f, g) == sign * wedge(g, f);
                     },
                     "phi∧psi == (−1)^{rs} psi∧phi");
  });

  add("lambda_equals_star_L_star", Gate::none, [](const FoliationContext& ctx, Rng& rng) {
    const Form phi = random_transverse_form(rng, ctx.symp, rand_degree(rng, 0, 2 * ctx.n()));
    return check_one(phi,
                     [&](const Form& f) {
                       return sl2::Lambda(ctx.symp, f) ==
                              star(ctx.symp, sl2::L(ctx.symp, star(ctx.symp, f)));
                     },
                     "Lambda(phi) == star(L(star(phi)))");
  });

  add("L_star_equals_star_lambda", Gate::none, [](const FoliationContext& ctx, Rng& rng) {
    const Form phi = random_transverse_form(rng, ctx.symp, rand_degree(rng, 0, 2 * ctx.n()));
    return check_one(phi,
                     [&](const Form& f) {
                       return sl2::L(ctx.symp, star(ctx.symp, f)) ==
                              star(ctx.symp, sl2::Lambda(ctx.symp, f));
                     },
                     "L(star(phi)) == star(Lambda(phi))");
  });

  add("sl2_commutation_relations", Gate::none, [](const FoliationContext& ctx, Rng& rng) {
    const Form phi = random_transverse_form(rng, ctx.symp, rand_degree(rng, 0, 2 * ctx.n()));
    const auto& s = ctx.symp;
    return check_one(phi,
                     [&](const Form& f) {
                       const bool c1 = sl2::Lambda(s, sl2::L(s, f)) - sl2::L(s, sl2::Lambda(s, f)) ==
                                       sl2::A(s, f);
                       const bool c2 = sl2::A(s, sl2::L(s, f)) - sl2::L(s, sl2::A(s, f)) ==
                                       Rational(-2) * sl2::L(s, f);
                       const bool c3 = sl2::A(s, sl2::Lambda(s, f)) - sl2::Lambda(s, sl2::A(s, f)) ==
                                       Rational(2) * sl2::Lambda(s, f);
                       return c1 && c2 && c3;
                     },
                     "[Lambda,L] == A, [A,L] == −2L, [A,Lambda] == 2Lambda");
  });

  add("L_contract_commutator", Gate::none, [](const FoliationContext& ctx, Rng& rng) {
    const Form phi = random_transverse_form(rng, ctx.symp, rand_degree(rng, 0, 2 * ctx.n()));
    const Multivector x = random_transverse_vector(rng, ctx.symp);
    return check_one(phi,
                     [&](const Form& f) {
                       return sl2::L(ctx.symp, contract(x, f)) - contract(x, sl2::L(ctx.symp, f)) ==
                              -wedge(flat(ctx.symp, x), f);
                     },
                     "[L, i(X)]phi == −flat(X)∧phi");
  });

  add("lambda_wedge_commutator", Gate::none, [](const FoliationContext& ctx, Rng& rng) {
    const Form phi = random_transverse_form(rng, ctx.symp, rand_degree(rng, 0, 2 * ctx.n()));
    const Multivector x = random_transverse_vector(rng, ctx.symp);
    const Form xf = flat(ctx.symp, x);
    return check_one(phi,
                     [&](const Form& f) {
                       return sl2::Lambda(ctx.symp, wedge(xf, f)) -
                                  wedge(xf, sl2::Lambda(ctx.symp, f)) ==
                              -contract(x, f);
                     },
                     "[Lambda, flat(X)∧]phi == −i(X)phi");
  });

  add("primitivity_criterion", Gate::none, [](const FoliationContext& ctx, Rng& rng) {
    const int n = ctx.n();
    const int r = rand_degree(rng, 0, n);
    const Form phi = random_transverse_form(rng, ctx.symp, r);
    return check_one(phi,
                     [&](const Form& f) {
                       const bool primitive = sl2::Lambda(ctx.symp, f).is_zero();
                       const bool killed =
                           sl2::L_power(ctx.symp, f, n - (f.is_zero() ? r : f.degree()) + 1)
                               .is_zero();
                       return primitive == killed;
                     },
                     "Lambda(phi) == 0  ⇔  L^{n−r+1}(phi) == 0");
  });

  add("primitive_decomposition_roundtrip", Gate::none, [](const FoliationContext& ctx, Rng& rng) {
    const Form phi = random_transverse_form(rng, ctx.symp, rand_degree(rng, 0, 2 * ctx.n()));
    return check_one(phi,
                     [&](const Form& f) {
                       const auto dec = sl2::primitive_decompose(ctx.symp, f);
                       Form sum(ctx.frame(), 0);
                       for (const auto& [k, beta] : dec.components) {
                         if (!sl2::Lambda(ctx.symp, beta).is_zero()) return false;
                         sum += sl2::L_power(ctx.symp, beta, k);
                       }
                       return sum == f;
                     },
                     "phi == Σ L^k β_k with Λβ_k == 0");
  });

  // ----- differential identities on random basic forms -----

  auto basic_form = [](const FoliationContext& ctx, Rng& rng, int lo, int hi) {
    return random_basic_form(rng, ctx.complex, rand_degree(rng, lo, hi));
  };

  add("dB_squares_to_zero", Gate::none, [basic_form](const FoliationContext& ctx, Rng& rng) {
    const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
    return check_one(phi, [&](const Form& f) { return d_B(ctx, d_B(ctx, f)).is_zero(); },
                     "d_B(d_B(phi)) == 0");
  });

  add("dB_lambda_commutator_is_deltaT", Gate::none,
      [basic_form](const FoliationContext& ctx, Rng& rng) {
        const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
        return check_one(phi,
                         [&](const Form& f) {
                           return d_B(ctx, sl2::Lambda(ctx.symp, f)) -
                                      sl2::Lambda(ctx.symp, d_B(ctx, f)) ==
                                  delta_T(ctx, f);
                         },
                         "[d_B, Lambda]phi == delta_T(phi)");
      });

  add("L_dB_commute", Gate::none, [basic_form](const FoliationContext& ctx, Rng& rng) {
    const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
    return check_one(phi,
                     [&](const Form& f) {
                       return sl2::L(ctx.symp, d_B(ctx, f)) == d_B(ctx, sl2::L(ctx.symp, f));
                     },
                     "[L, d_B]phi == 0");
  });

  add("lambda_deltaT_commute", Gate::none, [basic_form](const FoliationContext& ctx, Rng& rng) {
    const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
    return check_one(phi,
                     [&](const Form& f) {
                       return sl2::Lambda(ctx.symp, delta_T(ctx, f)) ==
                              delta_T(ctx, sl2::Lambda(ctx.symp, f));
                     },
                     "[Lambda, delta_T]phi == 0");
  });

  add("L_kappa_wedge_commute", Gate::isoparametric,
      [basic_form](const FoliationContext& ctx, Rng& rng) {
        const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
        return check_one(phi,
                         [&](const Form& f) {
                           return sl2::L(ctx.symp, epsilon_kappa(ctx, f)) ==
                                  epsilon_kappa(ctx, sl2::L(ctx.symp, f));
                         },
                         "[L, kappa∧]phi == 0");
      });

  add("lambda_kappa_contract_commute", Gate::isoparametric,
      [basic_form](const FoliationContext& ctx, Rng& rng) {
        const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
        return check_one(phi,
                         [&](const Form& f) {
                           return sl2::Lambda(ctx.symp, i_kappa_sharp(ctx, f)) ==
                                  i_kappa_sharp(ctx, sl2::Lambda(ctx.symp, f));
                         },
                         "[Lambda, i(sharp(kappa))]phi == 0");
      });

  add("A_deltaB_commutator", Gate::isoparametric,
      [basic_form](const FoliationContext& ctx, Rng& rng) {
        const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
        return check_one(phi,
                         [&](const Form& f) {
                           return sl2::A(ctx.symp, delta_B(ctx, f)) -
                                      delta_B(ctx, sl2::A(ctx.symp, f)) ==
                                  delta_B(ctx, f);
                         },
                         "[A, delta_B]phi == delta_B(phi)");
      });

  add("L_deltaT_commutator", Gate::none, [basic_form](const FoliationContext& ctx, Rng& rng) {
    const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
    return check_one(phi,
                     [&](const Form& f) {
                       return sl2::L(ctx.symp, delta_T(ctx, f)) -
                                  delta_T(ctx, sl2::L(ctx.symp, f)) ==
                              -d_B(ctx, f);
                     },
                     "[L, delta_T]phi == −d_B(phi)");
  });

  add("A_dB_commutator", Gate::none, [basic_form](const FoliationContext& ctx, Rng& rng) {
    const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
    return check_one(phi,
                     [&](const Form& f) {
                       return sl2::A(ctx.symp, d_B(ctx, f)) - d_B(ctx, sl2::A(ctx.symp, f)) ==
                              -d_B(ctx, f);
                     },
                     "[A, d_B]phi == −d_B(phi)");
  });

  add("deltaB_is_deltaT_minus_contraction", Gate::isoparametric,
      [basic_form](const FoliationContext& ctx, Rng& rng) {
        const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
        return check_one(phi,
                         [&](const Form& f) {
                           return delta_B(ctx, f) == delta_T(ctx, f) - i_kappa_sharp(ctx, f);
                         },
                         "delta_B(phi) == delta_T(phi) − i(sharp(kappa))phi");
      });

  add("deltaT_kappa_wedge_conjugation", Gate::isoparametric,
      [basic_form](const FoliationContext& ctx, Rng& rng) {
        const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
        return check_one(
            phi,
            [&](const Form& f) {
              return delta_T(ctx, epsilon_kappa(ctx, f)) ==
                     -star(ctx.symp, d_B(ctx, i_kappa_sharp(ctx, star(ctx.symp, f))));
            },
            "delta_T(kappa∧phi) == −star(d_B(i(sharp(kappa)) star(phi)))");
      });

  add("kappa_wedge_deltaT_conjugation", Gate::isoparametric,
      [basic_form](const FoliationContext& ctx, Rng& rng) {
        const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
        return check_one(
            phi,
            [&](const Form& f) {
              return epsilon_kappa(ctx, delta_T(ctx, f)) ==
                     -star(ctx.symp, i_kappa_sharp(ctx, d_B(ctx, star(ctx.symp, f))));
            },
            "kappa∧delta_T(phi) == −star(i(sharp(kappa)) d_B(star(phi)))");
      });

  add("deltaT_kappa_contract_anticommute", Gate::isoparametric_closed,
      [basic_form](const FoliationContext& ctx, Rng& rng) {
        const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
        return check_one(phi,
                         [&](const Form& f) {
                           return (delta_T(ctx, i_kappa_sharp(ctx, f)) +
                                   i_kappa_sharp(ctx, delta_T(ctx, f)))
                               .is_zero();
                         },
                         "delta_T i(sharp(kappa)) + i(sharp(kappa)) delta_T == 0");
      });

  add("deltaB_squares_to_zero", Gate::isoparametric_closed,
      [basic_form](const FoliationContext& ctx, Rng& rng) {
        const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
        return check_one(phi,
                         [&](const Form& f) { return delta_B(ctx, delta_B(ctx, f)).is_zero(); },
                         "delta_B(delta_B(phi)) == 0");
      });

  add("theta_kappa_star_conjugation", Gate::isoparametric,
      [basic_form](const FoliationContext& ctx, Rng& rng) {
        const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
        return check_one(
            phi,
            [&](const Form& f) {
              return delta_T(ctx, epsilon_kappa(ctx, f)) + epsilon_kappa(ctx, delta_T(ctx, f)) ==
                     -star(ctx.symp, theta_kappa_sharp(ctx, star(ctx.symp, f)));
            },
            "delta_T ε(kappa) + ε(kappa) delta_T == −star θ(sharp(kappa)) star");
      });

  add("dB_deltaT_anticommute", Gate::none, [basic_form](const FoliationContext& ctx, Rng& rng) {
    const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
    return check_one(
        phi,
        [&](const Form& f) {
          return (d_B(ctx, delta_T(ctx, f)) + delta_T(ctx, d_B(ctx, f))).is_zero();
        },
        "d_B delta_T + delta_T d_B == 0");
  });

  add("basic_laplacian_is_minus_theta", Gate::isoparametric,
      [basic_form](const FoliationContext& ctx, Rng& rng) {
        const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
        return check_one(phi,
                         [&](const Form& f) {
                           return d_B(ctx, delta_B(ctx, f)) + delta_B(ctx, d_B(ctx, f)) ==
                                  -theta_kappa_sharp(ctx, f);
                         },
                         "d_B delta_B + delta_B d_B == −θ(sharp(kappa))");
      });

  add("modified_sl2_commutators", Gate::isoparametric,
      [basic_form](const FoliationContext& ctx, Rng& rng) {
        const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
        const auto& s = ctx.symp;
        return check_one(
            phi,
            [&](const Form& f) {
              const Form dk = d_kappa(ctx, f);
              const Form del = delta_kappa(ctx, f);
              const bool c1 = sl2::A(s, d_kappa(ctx, f)) - d_kappa(ctx, sl2::A(s, f)) == -dk;
              const bool c2 =
                  sl2::L(s, delta_kappa(ctx, f)) - delta_kappa(ctx, sl2::L(s, f)) == -dk;
              const bool c3 =
                  sl2::A(s, delta_kappa(ctx, f)) - delta_kappa(ctx, sl2::A(s, f)) == del;
              const bool c4 =
                  d_kappa(ctx, sl2::Lambda(s, f)) - sl2::Lambda(s, d_kappa(ctx, f)) == del;
              const bool c5 =
                  sl2::L(s, d_kappa(ctx, f)) == d_kappa(ctx, sl2::L(s, f));
              const bool c6 =
                  sl2::Lambda(s, delta_kappa(ctx, f)) == delta_kappa(ctx, sl2::Lambda(s, f));
              return c1 && c2 && c3 && c4 && c5 && c6;
            },
            "modified commutators [A,d_κ], [L,δ_κ], [A,δ_κ], [d_κ,Λ], [L,d_κ], [Λ,δ_κ]");
      });

  add("d_kappa_squares_to_zero", Gate::isoparametric_closed,
      [basic_form](const FoliationContext& ctx, Rng& rng) {
        const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
        return check_one(phi,
                         [&](const Form& f) { return d_kappa(ctx, d_kappa(ctx, f)).is_zero(); },
                         "d_kappa(d_kappa(phi)) == 0");
      });

  add("delta_kappa_squares_to_zero", Gate::isoparametric_closed,
      [basic_form](const FoliationContext& ctx, Rng& rng) {
        const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
        return check_one(
            phi, [&](const Form& f) { return delta_kappa(ctx, delta_kappa(ctx, f)).is_zero(); },
            "delta_kappa(delta_kappa(phi)) == 0");
      });

  add("modified_laplacian_vanishes", Gate::isoparametric_closed,
      [basic_form](const FoliationContext& ctx, Rng& rng) {
        const Form phi = basic_form(ctx, rng, 0, 2 * ctx.n());
        return check_one(phi,
                         [&](const Form& f) {
                           return (d_kappa(ctx, delta_kappa(ctx, f)) +
                                   delta_kappa(ctx, d_kappa(ctx, f)))
                               .is_zero();
                         },
                         "d_kappa delta_kappa + delta_kappa d_kappa == 0");
      });

  add("dB_deltaB_adjoint_pairing", Gate::unimodular_isoparametric,
      [basic_form](const FoliationContext& ctx, Rng& rng) {
        const int r = rand_degree(rng, 1, 2 * ctx.n());
        const Form phi = random_basic_form(rng, ctx.complex, r - 1);
        const Form psi = random_basic_form(rng, ctx.complex, r);
        const Form mu = wedge(ctx.symp.volume, ctx.mc.chi);
        return check_two(
            phi, psi,
            [&](const Form& f, const Form& g) {
              const Rational lhs =
                  integrate(wedge(wedge(d_B(ctx, f), star(ctx.symp, g)), ctx.mc.chi), mu);
              const Rational rhs =
                  integrate(wedge(wedge(f, star(ctx.symp, delta_B(ctx, g))), ctx.mc.chi), mu);
              return lhs == rhs;
            },
            "∫ omega(d_B phi, psi) μ == ∫ omega(phi, delta_B psi) μ");
      });

  add("d_kappa_adjoint_pairing", Gate::unimodular_isoparametric,
      [basic_form](const FoliationContext& ctx, Rng& rng) {
        const int r = rand_degree(rng, 1, 2 * ctx.n());
        const Form phi = random_basic_form(rng, ctx.complex, r - 1);
        const Form psi = random_basic_form(rng, ctx.complex, r);
        const Form mu = wedge(ctx.symp.volume, ctx.mc.chi);
        return check_two(
            phi, psi,
            [&](const Form& f, const Form& g) {
              const Rational lhs =
                  integrate(wedge(wedge(d_kappa(ctx, f), star(ctx.symp, g)), ctx.mc.chi), mu);
              const Rational rhs =
                  integrate(wedge(wedge(f, star(ctx.symp, delta_kappa(ctx, g))), ctx.mc.chi), mu);
              return lhs == rhs;
            },
            "∫ omega(d_kappa phi, psi) μ == ∫ omega(phi, delta_kappa psi) μ");
      });

  add("basic_complex_operator_closure", Gate::none,
      [basic_form](const FoliationContext& ctx, Rng& rng) {
        const int r = rand_degree(rng, 0, 2 * ctx.n());
        const Form phi = random_basic_form(rng, ctx.complex, r);
        return check_one(phi,
                         [&](const Form& f) {
                           const int deg = f.is_zero() ? r : f.degree();
                           if (!basic_coordinates(ctx.complex, deg + 1, d_B(ctx, f))) return false;
                           if (!basic_coordinates(ctx.complex, 2 * ctx.n() - deg,
                                                  star(ctx.symp, f)))
                             return false;
                           if (!basic_coordinates(ctx.complex, deg + 2, sl2::L(ctx.symp, f)))
                             return false;
                           const Form low = sl2::Lambda(ctx.symp, f);
                           if (!low.is_zero() && !basic_coordinates(ctx.complex, deg - 2, low))
                             return false;
                           return true;
                         },
                         "Omega_B closed under d, star, L, Lambda");
      });

  return checks;
}

} // namespace

IdentitySuiteSummary run_identity_suite(const FoliationContext& ctx, std::uint64_t seed,
                                        int count) {
  IdentitySuiteSummary summary;
  summary.seed = seed;
  summary.count = count;

  const auto checks = build_checks();
  for (std::size_t idx = 0; idx < checks.size(); ++idx) {
    const auto& check = checks[idx];
    IdentityResult result;
    result.name = check.name;

    if (const auto reason = gate_reason(ctx, check.gate)) {
      result.status = IdentityStatus::skipped;
      result.detail = *reason;
      summary.results.push_back(std::move(result));
      continue;
    }

    Rng rng(seed + 0x51ed2701u * static_cast<std::uint64_t>(idx + 1));
    result.status = IdentityStatus::passed;
    for (int i = 0; i < count; ++i) {
      if (auto failure = check.run(ctx, rng)) {
        result.status = IdentityStatus::failed;
        result.detail = *failure;
        break;
      }
      ++result.checked;
    }
    summary.results.push_back(std::move(result));
  }
  return summary;
}

} // namespace lefschetz
